#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wilsonline {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// cpp_rational keeps gcd(|num|, den) = 1 and den > 0 after every operation,
// which is exactly the canonical form the rest of the library assumes.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct NotDivisible : std::domain_error {
    using std::domain_error::domain_error;
};

struct Unsupported : std::domain_error {
    using std::domain_error::domain_error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// Prints "p" for integers and "p/q" otherwise.
std::string rat_to_string(const Rat& q);

// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    long n = e < 0 ? -e : e;
    Rat r(1);
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

} // namespace wilsonline
