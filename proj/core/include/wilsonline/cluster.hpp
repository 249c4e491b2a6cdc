#pragma once

#include "wilsonline/laurent.hpp"
#include "wilsonline/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wilsonline {

using IntMat = std::vector<std::vector<int>>;
using MutationSequence = std::vector<int>;

// Seed: n cluster coordinates, the first m mutable, with an m x n exchange
// matrix. Variables are Laurent polynomials in a fixed ambient initial
// cluster; `history` records the mutations that led here from the seed whose
// variables are the ambient coordinates themselves.
struct Seed {
    int n = 0;
    int m = 0;
    IntMat eps;  // m rows, n columns
    std::vector<std::string> labels;
    std::vector<LaurentPoly> vars;
    MutationSequence history;

    static Seed initial(IntMat eps, std::vector<std::string> labels);
    void validate() const;
    bool same_cluster(const Seed& o) const;  // epsilon and variables agree
};

// Exchange-matrix mutation in direction k (0-based, k < m).
IntMat mutate_matrix(const IntMat& eps, int k);

// Seed mutation: exchange-binomial replacement at k plus matrix mutation.
Seed mutate_seed(const Seed& seed, int k);
Seed mutate_seed(const Seed& seed, const MutationSequence& ks);

// The monomial prod_j A_j^{eps_ij} in the seed's own coordinates.
LaurentPoly x_from_a(const Seed& seed, int i);

// True iff the m x n matrix has rank m over Q.
bool rank_check(const IntMat& eps);

// Positive symmetrizer for the leading m x m block, if one exists.
std::optional<std::vector<Int>> skew_symmetrizer(const IntMat& eps, int m);
bool is_skew_symmetrizable(const IntMat& eps, int m);

// f = num/den over the ambient cluster of a seed.
struct RationalExpr {
    LaurentPoly num;
    LaurentPoly den;

    static RationalExpr laurent(LaurentPoly p);
    static RationalExpr quotient(LaurentPoly num, LaurentPoly den);
};

// Membership of f in the Laurent ring of the seed's cluster. The seed must
// either be in the initial chart (identity variables) or carry its mutation
// history, through which f is rewritten step by step.
bool is_laurent_in_cluster(const RationalExpr& f, const Seed& seed);

// Membership in L_i and in all m one-step mutations of the seed.
bool upper_bound_member(const RationalExpr& f, const Seed& seed);

// Full quiver on n vertices: entries are stored doubled (eps2 = 2*eps) so
// that the half-weight arrows joining frozen vertices stay integral. Rows of
// mutable vertices are always even.
struct Quiver {
    int n = 0;
    int m = 0;
    std::vector<std::string> labels;
    std::vector<int> weights;  // per-vertex symmetrizer d_v
    IntMat eps2;               // n x n

    void validate() const;
    Quiver mutated(int k) const;
    Quiver mutated(const MutationSequence& ks) const;
    int eps(int i, int j) const;  // eps2/2; throws if the entry is a half
    Seed to_seed() const;
    bool is_skew_symmetrizable() const;  // against `weights`
    bool full_rank() const;              // mutable rows over Q
};

// Deterministic DOT rendering; frozen vertices boxed, arrow multiplicities
// labelled, half arrows dashed.
std::string quiver_dot(const Quiver& q);
std::string export_quiver_dot(const Seed& seed);

} // namespace wilsonline
