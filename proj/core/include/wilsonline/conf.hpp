#pragma once

#include "wilsonline/group.hpp"
#include "wilsonline/rng.hpp"

#include <utility>
#include <vector>

namespace wilsonline {

// Decorated flag g.[U+], stored through a representative of the coset.
struct DecoratedFlag {
    GroupElement rep;

    DecoratedFlag translated(const GroupElement& g) const { return {g * rep}; }
    DecoratedFlag torus(const HElement& h) const { return {rep * h.element()}; }
};

// Standard-form quadruple (A^L, A_L, A_R, A^R) =
// (g h.[U+], [U+], w0bar^{-1} h'.[U+], g w0bar.[U+]).
struct QuadConfig {
    const GroupModel* model = nullptr;
    HElement h;
    HElement hprime;
    GroupElement g;

    DecoratedFlag upper_left() const;   // A^L
    DecoratedFlag lower_left() const;   // A_L
    DecoratedFlag lower_right() const;  // A_R
    DecoratedFlag upper_right() const;  // A^R
};

// Chain of decorated flags with its torus bookkeeping. `letters` are the
// letters actually used for the reflections (already starred for lower
// chains); flags[k] is the k-th flag, c[k-1] the coefficient of step k.
struct FlagChain {
    WeylWord letters;
    std::vector<DecoratedFlag> flags;
    std::vector<Rat> c;
    std::vector<HElement> torus_corrections;  // h_0 .. h_N of the recursion
};

// Unique chain between a generic pair: w(A_k, A_{k-1}) = r_{s_k}
// and h(A_k, A_{k-1}) = alpha_{s_k}^vee(c_k) with c_k read from hInv at the
// positions where the coroot sequence becomes simple. If hInv is supplied it
// must equal the h-invariant of (right, left).
FlagChain chain(const GroupModel& model, const DecoratedFlag& left, const DecoratedFlag& right,
                const WeylWord& word, const HElement* hInv = nullptr);

// Chains of a standard-form quadruple, via the closed-form flags.
FlagChain upper_chain(const QuadConfig& cfg, const WeylWord& word);
// The lower chain stars the word internally (chain letters s_k^*).
FlagChain lower_chain(const QuadConfig& cfg, const WeylWord& word);

// Delta_s(A1, A2): coefficient of the highest basis vector of the s-th
// fundamental carrier in (w0bar * rep(A2)^{-1} * rep(A1)) applied to it.
Rat delta_pair(const GroupModel& model, int s, const DecoratedFlag& A1, const DecoratedFlag& A2);

struct FrozenInvariants {
    std::vector<Rat> in;   // A_in^s  = h(A_R, A_L)^{pi_s^*}
    std::vector<Rat> out;  // A_out^s = h(A^L, A^R)^{pi_s}
};
FrozenInvariants frozen_invariants(const QuadConfig& cfg);

// Entry formula: Delta_s(A^k, A_l) divided by
// h'^{ [u_{>l} pi_s]^*_+ } * h^{ [v_{>k} pi_s]_+ }, where u_{>l}, v_{>k} are
// suffixes of the (unstarred) lower/upper words.
Rat wilson_minor(const QuadConfig& cfg, const FlagChain& upper, const FlagChain& lower,
                 const WeylWord& upper_word, const WeylWord& lower_word, int k, int l, int s);

// Entry-by-entry Wilson line matrix in the defining representation; equals
// g * s_G for every generic configuration.
GroupElement wilson_matrix(const QuadConfig& cfg);

// Per-model layout of wilson_matrix: which chain (hatted or not for SP4) and
// which index feeds each row / column, plus the words used.
struct WilsonLayout {
    WeylWord word;         // primary word (upper and lower)
    WeylWord word_hat;     // secondary word (SP4 only; empty otherwise)
    // (use_hat, chain index) per matrix row (l) and column (k):
    std::vector<std::pair<bool, int>> rows;
    std::vector<std::pair<bool, int>> cols;
};
WilsonLayout wilson_layout(const GroupModel& model);

// w-distance and h-invariant of a pair: the unique (w, h) with
// (A1, A2) ~ (h.[U+], wbar.[U+]).
std::pair<WeylWord, HElement> pair_invariants(const GroupModel& model, const DecoratedFlag& A1,
                                              const DecoratedFlag& A2);

// Bruhat factorization x = u1 * wbar(v) * t * u2 in the defining matrix model.
struct BruhatFactorization {
    WeylWord v;
    HElement t;
    RatMatrix u1, u2;
};
BruhatFactorization bruhat_factor(const GroupModel& model, const RatMatrix& x);

struct TriangleInvariants {
    GroupElement boundary_out;  // w0(h1) = w0bar h1 w0bar^{-1}
    GroupElement boundary_in;   // w0(h1) * s_G
    GroupElement corner;        // u * w0bar
    GroupElement simple;        // u * h2^{-1} * s_G
    std::vector<Rat> potentials;  // W_s = Delta_{pi_s, r_s pi_s}(u)
};
TriangleInvariants triangle_invariants(const GroupModel& model, const HElement& h1,
                                       const HElement& h2, const GroupElement& u);

GroupElement twisted_compose(const GroupElement& g1, const GroupElement& g2);
GroupElement reverse_wilson(const GroupElement& g);

// g = h'' * prod_k e_k with e_k = y(t_k) for barred letters and x(t_k) for
// unbarred ones; resamples until the element is generic enough for chain
// construction on the standard quadruple.
GroupElement sample_cell_element(const GroupModel& model, const DoubleWord& word, RatSampler& rng);
DoubleWord default_double_word(const GroupModel& model);
QuadConfig sample_quad_config(const GroupModel& model, RatSampler& rng);

bool is_upper_unipotent(const RatMatrix& m);

} // namespace wilsonline
