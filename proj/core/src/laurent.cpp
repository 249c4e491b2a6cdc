#include "wilsonline/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wilsonline {

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << '/' << rat_den(q);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("rat_from_string: empty input");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(t));
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("rat_from_string: ") + e.what());
    }
}

LaurentPoly LaurentPoly::constant(int nvars, const Rat& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("LaurentPoly::variable: index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e);
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("LaurentPoly::monomial: exponent length mismatch");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Exponents(nvars_, 0));
    if (it == terms_.end() || terms_.size() != 1)
        throw std::domain_error("LaurentPoly::constant_value: not a constant");
    return it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::add_term: exponent length mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("LaurentPoly: mismatched variable count");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("LaurentPoly::pow: negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        Exponents inv(nvars_);
        for (int i = 0; i < nvars_; ++i) inv[i] = -ex[i];
        return monomial(nvars_, inv, Rat(1) / c).pow(-e);
    }
    LaurentPoly r = one(nvars_);
    LaurentPoly b = *this;
    int n = e;
    while (n > 0) {
        if (n & 1) r *= b;
        if (n >>= 1) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if (static_cast<int>(shift.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::shifted: exponent length mismatch");
    LaurentPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + shift[i];
        r.terms_[e] = c;
    }
    return r;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::eval: point length mismatch");
    for (const Rat& x : point)
        if (x == 0) throw std::domain_error("LaurentPoly::eval: zero coordinate");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= rat_pow(point[i], e[i]);
        total += t;
    }
    return total;
}

LaurentPoly::Exponents LaurentPoly::min_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (int i = 0; i < nvars_; ++i)
            m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

LaurentPoly::Exponents LaurentPoly::max_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (int i = 0; i < nvars_; ++i)
            m[i] = first ? e[i] : std::max(m[i], e[i]);
        first = false;
    }
    return m;
}

bool LaurentPoly::divides_exactly(const LaurentPoly& b, LaurentPoly* quotient) const {
    check_same_vars(b);
    if (b.is_zero()) throw std::domain_error("LaurentPoly division by zero");
    if (is_zero()) {
        if (quotient) *quotient = zero(nvars_);
        return true;
    }

    // Normalize the divisor so it has no monomial factor; in the Laurent ring a
    // monomial is a unit, so exact divisibility then reduces to polynomial
    // division with lex leading-term reduction.
    Exponents bmin = b.min_exponents();
    Exponents amin = min_exponents();
    LaurentPoly r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] - amin[i];
        r.terms_[e] = c;
    }
    LaurentPoly d(nvars_);
    for (const auto& [eb, c] : b.terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = eb[i] - bmin[i];
        d.terms_[e] = c;
    }

    const auto dlead = std::prev(d.terms_.end());
    LaurentPoly q(nvars_);
    while (!r.is_zero()) {
        auto rlead = std::prev(r.terms_.end());
        Exponents t(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            t[i] = rlead->first[i] - dlead->first[i];
            if (t[i] < 0) return false;
        }
        Rat coef = rlead->second / dlead->second;
        q.add_term(t, coef);
        r -= d.shifted(t).scaled(coef);
    }
    if (quotient) {
        Exponents shift(nvars_);
        for (int i = 0; i < nvars_; ++i) shift[i] = amin[i] - bmin[i];
        *quotient = q.shifted(shift);
    }
    return true;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& b) const {
    LaurentPoly q;
    if (!divides_exactly(b, &q))
        throw NotDivisible("laurent_exact_div: no exact Laurent quotient");
    return q;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest lex term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << '*';
            any_var = true;
            vars << 'A' << (i + 1);
            if (e[i] != 1) vars << '^' << e[i];
        }
        if (!any_var) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << vars.str();
        } else {
            os << rat_to_string(a) << '*' << vars.str();
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("LaurentPoly::parse: " + msg + " at position " + std::to_string(pos));
    }

    Int parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return Int(s.substr(start, pos - start));
    }

    int parse_int() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        Int v = parse_uint();
        if (v > 1000000) fail("exponent too large");
        int r = static_cast<int>(v.convert_to<long>());
        return neg ? -r : r;
    }

    // factor := rational | A<k> [^int]
    // term   := factor (* factor)*
    void parse_term(LaurentPoly& out, int nvars, int sign) {
        Rat coef(sign);
        LaurentPoly::Exponents e(nvars, 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (peek() == 'A') {
                ++pos;
                Int idx = parse_uint();
                if (idx < 1 || idx > nvars) fail("variable index out of range");
                int i = static_cast<int>(idx.convert_to<long>()) - 1;
                int ex = 1;
                if (accept('^')) ex = parse_int();
                e[i] += ex;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Int num = parse_uint();
                if (accept('/')) {
                    Int den = parse_uint();
                    if (den == 0) fail("zero denominator");
                    coef *= Rat(num, den);
                } else {
                    coef *= Rat(num);
                }
            } else {
                fail("expected coefficient or variable");
            }
            expect_factor = accept('*');
        }
        out.add_term(e, coef);
    }
};

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int nvars) {
    Parser p(text);
    LaurentPoly out(nvars);
    p.skip_ws();
    if (p.eof()) throw std::invalid_argument("LaurentPoly::parse: empty input");
    if (p.peek() == '0') {
        size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return out;
        p.pos = save;
    }
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        if (p.accept('-')) {
            sign = -1;
        } else if (p.accept('+')) {
            sign = 1;
        } else if (!first) {
            p.fail("expected '+' or '-'");
        }
        p.parse_term(out, nvars, sign);
        first = false;
    }
    return out;
}

} // namespace wilsonline
