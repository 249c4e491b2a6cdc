#include "wilsonline/cluster.hpp"

#include "wilsonline/matrix.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wilsonline {

Seed Seed::initial(IntMat eps, std::vector<std::string> labels) {
    Seed s;
    s.m = static_cast<int>(eps.size());
    s.n = s.m > 0 ? static_cast<int>(eps[0].size()) : static_cast<int>(labels.size());
    s.eps = std::move(eps);
    if (labels.empty()) {
        for (int i = 0; i < s.n; ++i) labels.push_back("A" + std::to_string(i + 1));
    }
    s.labels = std::move(labels);
    for (int i = 0; i < s.n; ++i) s.vars.push_back(LaurentPoly::variable(s.n, i));
    s.validate();
    return s;
}

void Seed::validate() const {
    if (m < 0 || n <= 0 || m > n) throw std::invalid_argument("Seed: bad sizes");
    if (static_cast<int>(eps.size()) != m) throw std::invalid_argument("Seed: eps row count != m");
    for (const auto& row : eps)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Seed: eps column count != n");
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("Seed: label count != n");
    if (static_cast<int>(vars.size()) != n) throw std::invalid_argument("Seed: variable count != n");
    for (const auto& v : vars) {
        if (v.nvars() != n) throw std::invalid_argument("Seed: variable over wrong ambient ring");
        if (v.is_zero()) throw std::invalid_argument("Seed: zero cluster variable");
    }
    if (m > 0 && !is_skew_symmetrizable(eps, m))
        throw std::invalid_argument("Seed: leading block not skew-symmetrizable");
}

bool Seed::same_cluster(const Seed& o) const {
    return n == o.n && m == o.m && eps == o.eps && vars == o.vars;
}

IntMat mutate_matrix(const IntMat& eps, int k) {
    int m = static_cast<int>(eps.size());
    if (m == 0) return eps;
    int n = static_cast<int>(eps[0].size());
    if (k < 0 || k >= m) throw std::out_of_range("mutate_matrix: direction must be mutable");
    IntMat out(m, std::vector<int>(n, 0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out[i][j] = -eps[i][j];
            } else if (eps[i][k] * eps[k][j] > 0) {
                out[i][j] = eps[i][j] + std::abs(eps[i][k]) * eps[k][j];
            } else {
                out[i][j] = eps[i][j];
            }
        }
    }
    return out;
}

Seed mutate_seed(const Seed& seed, int k) {
    if (k < 0 || k >= seed.m) throw std::out_of_range("mutate_seed: direction must be mutable");
    Seed out = seed;
    LaurentPoly plus = LaurentPoly::one(seed.n);
    LaurentPoly minus = LaurentPoly::one(seed.n);
    for (int j = 0; j < seed.n; ++j) {
        int e = seed.eps[k][j];
        if (e > 0) plus *= seed.vars[j].pow(e);
        if (e < 0) minus *= seed.vars[j].pow(-e);
    }
    // The exchange always divides for seeds reachable from an initial chart
    // (Laurent phenomenon); failure here signals an implementation bug.
    out.vars[k] = (plus + minus).exact_div(seed.vars[k]);
    out.eps = mutate_matrix(seed.eps, k);
    out.history.push_back(k);
    return out;
}

Seed mutate_seed(const Seed& seed, const MutationSequence& ks) {
    Seed out = seed;
    for (int k : ks) out = mutate_seed(out, k);
    return out;
}

LaurentPoly x_from_a(const Seed& seed, int i) {
    if (i < 0 || i >= seed.m) throw std::out_of_range("x_from_a: index must be mutable");
    LaurentPoly::Exponents e(seed.n);
    for (int j = 0; j < seed.n; ++j) e[j] = seed.eps[i][j];
    return LaurentPoly::monomial(seed.n, e);
}

bool rank_check(const IntMat& eps) {
    int m = static_cast<int>(eps.size());
    if (m == 0) return true;
    int n = static_cast<int>(eps[0].size());
    RatMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = eps[i][j];
    return a.rank() == m;
}

std::optional<std::vector<Int>> skew_symmetrizer(const IntMat& eps, int m) {
    // Propagate d_j / d_i = -eps_ij / eps_ji over the support graph.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if ((eps[i][j] == 0) != (eps[j][i] == 0)) return std::nullopt;
            if (eps[i][j] != 0 && eps[i][j] * eps[j][i] > 0) return std::nullopt;
            if (i == j && eps[i][j] != 0) return std::nullopt;
        }
    std::vector<Rat> d(m, Rat(0));
    for (int start = 0; start < m; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < m; ++j) {
                if (eps[i][j] == 0) continue;
                // d_j = d_i * (-eps_ij / eps_ji); signs were screened above,
                // so numerator and denominator are both positive here.
                Rat ratio(std::abs(eps[i][j]), std::abs(eps[j][i]));
                Rat dj = d[i] * ratio;
                if (d[j] == 0) {
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    return std::nullopt;
                }
            }
        }
    }
    Int denom(1);
    for (const Rat& x : d) denom = boost::multiprecision::lcm(denom, rat_den(x));
    std::vector<Int> out;
    for (const Rat& x : d) {
        Int v = rat_num(x) * (denom / rat_den(x));
        if (v <= 0) return std::nullopt;
        out.push_back(v);
    }
    return out;
}

bool is_skew_symmetrizable(const IntMat& eps, int m) {
    return skew_symmetrizer(eps, m).has_value();
}

RationalExpr RationalExpr::laurent(LaurentPoly p) {
    RationalExpr e;
    e.den = LaurentPoly::one(p.nvars());
    e.num = std::move(p);
    return e;
}

RationalExpr RationalExpr::quotient(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw std::domain_error("RationalExpr: zero denominator");
    if (num.nvars() != den.nvars()) throw std::invalid_argument("RationalExpr: mismatched variable count");
    RationalExpr e;
    e.num = std::move(num);
    e.den = std::move(den);
    return e;
}

bool is_laurent_in_cluster(const RationalExpr& f, const Seed& seed) {
    if (f.num.nvars() != seed.n)
        throw std::invalid_argument("is_laurent_in_cluster: expression over wrong ambient ring");

    bool identity_chart = true;
    for (int i = 0; i < seed.n; ++i)
        if (seed.vars[i] != LaurentPoly::variable(seed.n, i)) identity_chart = false;
    if (!identity_chart && seed.history.empty())
        throw Unsupported(
            "is_laurent_in_cluster: seed has non-initial variables and no mutation history");

    // Track f = num/den while rewriting ambient coordinates into the seed's
    // chart one mutation at a time. The exchange matrix at each step is
    // recovered by unwinding the history (mutation is an involution).
    LaurentPoly num = f.num, den = f.den;
    IntMat eps = seed.eps;
    for (auto it = seed.history.rbegin(); it != seed.history.rend(); ++it)
        eps = mutate_matrix(eps, *it);

    for (int k : seed.history) {
        LaurentPoly plus = LaurentPoly::one(seed.n);
        LaurentPoly minus = LaurentPoly::one(seed.n);
        for (int j = 0; j < seed.n; ++j) {
            int e = eps[k][j];
            if (e > 0) plus *= LaurentPoly::variable(seed.n, j).pow(e);
            if (e < 0) minus *= LaurentPoly::variable(seed.n, j).pow(-e);
        }
        LaurentPoly B = plus + minus;  // old A_k = B / new A_k in the new chart

        auto rewrite = [&](const LaurentPoly& p) {
            // p(..., A_k, ...) with A_k = B/A'. Returns (q, bpow, apow):
            // p = q * B^{bpow} * A'^{apow}.
            int dmin = 0, dmax = 0;
            bool first = true;
            for (const auto& [e, c] : p.terms()) {
                (void)c;
                dmin = first ? e[k] : std::min(dmin, e[k]);
                dmax = first ? e[k] : std::max(dmax, e[k]);
                first = false;
            }
            LaurentPoly q(seed.n);
            for (const auto& [e, c] : p.terms()) {
                LaurentPoly::Exponents rest = e;
                rest[k] = dmax - e[k];
                q += B.pow(e[k] - dmin) * LaurentPoly::monomial(seed.n, rest, c);
            }
            return std::tuple<LaurentPoly, int, int>(q, dmin, -dmax);
        };

        auto [qn, bn, an] = rewrite(num);
        auto [qd, bd, ad] = rewrite(den);
        num = qn;
        den = qd;
        int bpow = bn - bd;
        if (bpow >= 0)
            num *= B.pow(bpow);
        else
            den *= B.pow(-bpow);
        LaurentPoly::Exponents shift(seed.n, 0);
        shift[k] = an - ad;
        num = num.shifted(shift);

        eps = mutate_matrix(eps, k);
    }

    return num.divides_exactly(den) ? true : false;
}

bool upper_bound_member(const RationalExpr& f, const Seed& seed) {
    if (!is_laurent_in_cluster(f, seed)) return false;
    for (int k = 0; k < seed.m; ++k)
        if (!is_laurent_in_cluster(f, mutate_seed(seed, k))) return false;
    return true;
}

void Quiver::validate() const {
    if (n <= 0 || m < 0 || m > n) throw std::invalid_argument("Quiver: bad sizes");
    if (static_cast<int>(eps2.size()) != n) throw std::invalid_argument("Quiver: eps2 must be n x n");
    for (const auto& row : eps2)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Quiver: eps2 must be n x n");
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("Quiver: label count != n");
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("Quiver: weight count != n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if ((i < m || j < m) && eps2[i][j] % 2 != 0)
                throw std::invalid_argument("Quiver: half arrow touching a mutable vertex");
        }
}

int Quiver::eps(int i, int j) const {
    if (eps2[i][j] % 2 != 0) throw std::domain_error("Quiver::eps: entry is a half");
    return eps2[i][j] / 2;
}

Quiver Quiver::mutated(int k) const {
    if (k < 0 || k >= m) throw std::out_of_range("Quiver::mutated: direction must be mutable");
    Quiver out = *this;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                out.eps2[i][j] = -eps2[i][j];
            } else if (eps2[i][k] * eps2[k][j] > 0) {
                // eps2[i][k] is even (k mutable), so the product of true
                // entries |eps_ik| * eps_kj doubles exactly once.
                out.eps2[i][j] = eps2[i][j] + std::abs(eps2[i][k]) * eps2[k][j] / 2;
            } else {
                out.eps2[i][j] = eps2[i][j];
            }
        }
    return out;
}

Quiver Quiver::mutated(const MutationSequence& ks) const {
    Quiver out = *this;
    for (int k : ks) out = out.mutated(k);
    return out;
}

Seed Quiver::to_seed() const {
    IntMat eps(m, std::vector<int>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (eps2[i][j] % 2 != 0) throw std::domain_error("Quiver::to_seed: half arrow on a mutable row");
            eps[i][j] = eps2[i][j] / 2;
        }
    return Seed::initial(std::move(eps), labels);
}

bool Quiver::is_skew_symmetrizable() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (weights[i] * eps2[i][j] != -weights[j] * eps2[j][i]) return false;
    return true;
}

bool Quiver::full_rank() const {
    if (m == 0) return true;
    RatMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Rat(eps2[i][j], 2);
    return a.rank() == m;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

void dot_arrow(std::ostringstream& os, int from, int to, const Rat& mult, bool dashed) {
    os << "  v" << from << " -> v" << to;
    os << " [label=\"" << rat_to_string(mult) << "\"";
    if (dashed) os << ", style=dashed";
    os << "];\n";
}

} // namespace

std::string quiver_dot(const Quiver& q) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < q.n; ++i) {
        os << "  v" << i << " [label=\"" << dot_escape(q.labels[i]) << "\"";
        if (i >= q.m) os << ", shape=box";
        os << "];\n";
    }
    // Arrow i -> j is recorded as eps2[j][i] > 0; each drawn arrow appears
    // exactly once this way.
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) {
            if (q.eps2[j][i] <= 0) continue;
            bool dashed = (q.eps2[j][i] % 2 != 0) || (q.eps2[i][j] % 2 != 0);
            dot_arrow(os, i, j, Rat(q.eps2[j][i], 2), dashed);
        }
    os << "}\n";
    return os.str();
}

std::string export_quiver_dot(const Seed& seed) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (int i = 0; i < seed.n; ++i) {
        os << "  v" << i << " [label=\"" << dot_escape(seed.labels[i]) << "\"";
        if (i >= seed.m) os << ", shape=box";
        os << "];\n";
    }
    // Only mutable-incident arrows are part of an m x n seed. Arrow j -> i
    // where eps[i][j] > 0; skip the mirrored mutable-mutable duplicate.
    for (int i = 0; i < seed.m; ++i)
        for (int j = 0; j < seed.n; ++j) {
            if (seed.eps[i][j] > 0) {
                os << "  v" << j << " -> v" << i << " [label=\"" << seed.eps[i][j] << "\"];\n";
            } else if (seed.eps[i][j] < 0 && j >= seed.m) {
                os << "  v" << i << " -> v" << j << " [label=\"" << -seed.eps[i][j] << "\"];\n";
            }
        }
    os << "}\n";
    return os.str();
}

} // namespace wilsonline
