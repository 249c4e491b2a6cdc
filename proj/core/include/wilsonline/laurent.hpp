#pragma once

#include "wilsonline/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace wilsonline {

// Multivariate Laurent polynomial over Q. Exponent vectors are held in a
// lexicographically ordered map and zero coefficients are never stored, so
// equal values always have identical representations.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Rat& c);
    static LaurentPoly one(int nvars) { return constant(nvars, Rat(1)); }
    // The variable A_{i+1} (0-based index i).
    static LaurentPoly variable(int nvars, int i);
    static LaurentPoly monomial(int nvars, const Exponents& e, const Rat& c = Rat(1));

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Value at the constant term; only meaningful together with is_constant().
    Rat constant_value() const;

    void add_term(const Exponents& e, const Rat& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Rat& c) const;
    LaurentPoly pow(int e) const;
    // Multiplies by the monomial with exponent vector e.
    LaurentPoly shifted(const Exponents& e) const;

    // Exact substitution at a point with all coordinates nonzero.
    Rat eval(const std::vector<Rat>& point) const;

    // Exact quotient q with q*b == *this; throws NotDivisible otherwise.
    LaurentPoly exact_div(const LaurentPoly& b) const;
    bool divides_exactly(const LaurentPoly& b, LaurentPoly* quotient = nullptr) const;

    // Per-variable minimum and maximum exponents over the support.
    Exponents min_exponents() const;
    Exponents max_exponents() const;

    // Text form: sum of terms `c * A1^e1 * ... * Ak^ek`, highest term first.
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text, int nvars);

private:
    void check_same_vars(const LaurentPoly& o) const;

    int nvars_;
    TermMap terms_;
};

} // namespace wilsonline
