#include "wilsonline/conf.hpp"

#include <algorithm>
#include <stdexcept>

namespace wilsonline {

DecoratedFlag QuadConfig::upper_left() const { return {g * h.element()}; }
DecoratedFlag QuadConfig::lower_left() const { return {model->identity()}; }
DecoratedFlag QuadConfig::lower_right() const {
    return {model->w0bar().inverse() * hprime.element()};
}
DecoratedFlag QuadConfig::upper_right() const { return {g * model->w0bar()}; }

namespace {

HElement coroot_h(const GroupModel& model, int s, const Rat& c) {
    std::vector<Rat> coords(model.rank(), Rat(1));
    coords[s] = c;
    return model.h(coords);
}

// Torus coordinates from a diagonal matrix: a_s is the product of the first
// s+1 diagonal entries (the eigenvalue of the highest vector of the s-th
// fundamental carrier).
HElement h_from_diagonal(const GroupModel& model, const RatMatrix& d) {
    for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0)
                throw std::domain_error("h_from_diagonal: matrix is not diagonal");
    std::vector<Rat> coords(model.rank());
    Rat acc(1);
    for (int s = 0; s < model.rank(); ++s) {
        acc *= d.at(s, s);
        coords[s] = acc;
    }
    HElement h = model.h(coords);
    if (h.element().m != d) throw std::domain_error("h_from_diagonal: diagonal not in the torus image");
    return h;
}

struct LDU {
    RatMatrix L, D, U;
};

// Gauss factorization z = L D U with L lower unitriangular, D diagonal,
// U upper unitriangular; throws when a leading principal minor vanishes.
LDU ldu_factor(const RatMatrix& z) {
    int n = z.rows();
    RatMatrix a = z;
    RatMatrix L = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) throw std::domain_error("ldu_factor: vanishing principal minor");
        for (int i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            if (f == 0) continue;
            L.at(i, k) = f;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    RatMatrix D(n, n), U = RatMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
        D.at(i, i) = a.at(i, i);
        for (int j = i + 1; j < n; ++j) U.at(i, j) = a.at(i, j) / a.at(i, i);
    }
    return {L, D, U};
}

Rat top_minor(const GroupModel& model, const RatMatrix& m, int s) {
    int k = model.fund_rep(s).exterior_power;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return mat_minor(m, idx, idx);
}

WeylWord reversed(const WeylWord& w) { return WeylWord(w.rbegin(), w.rend()); }

// Flags of the chain in standard position (A_r, A_l) = (t_std.[U+], w0bar.[U+]):
// A_k = rbar_{s_N} ... rbar_{s_{k+1}} h_k.[U+]. Returns the chain without the
// final translation applied.
FlagChain standard_chain(const GroupModel& model, const WeylWord& letters, const HElement& h_target) {
    const CartanData& c = model.cartan();
    int N = static_cast<int>(letters.size());
    FlagChain out;
    out.letters = letters;

    auto steps = coroot_sequence(c, letters);
    out.c.resize(N);
    for (int j = 0; j < N; ++j)
        out.c[j] = steps[j].simple ? h_coeval(h_target, steps[j].t) : Rat(1);

    out.torus_corrections.clear();
    out.torus_corrections.push_back(model.h_identity());
    for (int k = 1; k <= N; ++k) {
        HElement prev = out.torus_corrections.back();
        HElement next = h_weyl_reflect(prev, letters[k - 1]) * coroot_h(model, letters[k - 1], out.c[k - 1]);
        out.torus_corrections.push_back(next);
    }
    if (!(out.torus_corrections.back() == h_target))
        throw std::logic_error("standard_chain: torus recursion did not close up");

    std::vector<GroupElement> suffix(N + 1, model.identity());
    for (int k = N - 1; k >= 0; --k) suffix[k] = suffix[k + 1] * model.rbar(letters[k]);

    out.flags.clear();
    for (int k = 0; k <= N; ++k)
        out.flags.push_back(DecoratedFlag{suffix[k] * out.torus_corrections[k].element()});
    return out;
}

} // namespace

BruhatFactorization bruhat_factor(const GroupModel& model, const RatMatrix& x) {
    const CartanData& c = model.cartan();
    const auto& words = c.element_words();
    std::vector<int> order(words.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return words[a].size() > words[b].size();
    });

    for (int idx : order) {
        const WeylWord& vw = words[idx];
        RatMatrix core = model.wbar(vw).m.inverse() * x;
        bool all_nonzero = true;
        for (int s = 0; s < c.rank() && all_nonzero; ++s)
            if (top_minor(model, core, s) == 0) all_nonzero = false;
        if (!all_nonzero) continue;

        LDU f = ldu_factor(core);
        BruhatFactorization out;
        out.v = vw;
        RatMatrix vbar = model.wbar(vw).m;
        out.u1 = vbar * f.L * vbar.inverse();
        if (!is_upper_unipotent(out.u1))
            throw std::logic_error("bruhat_factor: conjugated Gauss factor not unipotent upper");
        out.t = h_from_diagonal(model, f.D);
        out.u2 = f.U;
        return out;
    }
    throw std::domain_error("bruhat_factor: element outside all Bruhat strata");
}

std::pair<WeylWord, HElement> pair_invariants(const GroupModel& model, const DecoratedFlag& A1,
                                              const DecoratedFlag& A2) {
    RatMatrix x = A2.rep.m.inverse() * A1.rep.m;
    BruhatFactorization f = bruhat_factor(model, x);
    WeylWord w_word = reversed(f.v);  // w = v^{-1}
    RatMatrix torus = model.wbar(w_word).m * model.wbar(f.v).m * f.t.element().m;
    return {w_word, h_from_diagonal(model, torus)};
}

FlagChain chain(const GroupModel& model, const DecoratedFlag& left, const DecoratedFlag& right,
                const WeylWord& word, const HElement* hInv) {
    const CartanData& c = model.cartan();
    if (!c.is_reduced(word) || static_cast<int>(word.size()) != c.w0_length())
        throw std::invalid_argument("chain: word must be a reduced word of w0");

    RatMatrix x = left.rep.m.inverse() * right.rep.m;
    RatMatrix z = model.w0bar().m.inverse() * x;
    LDU f = ldu_factor(z);  // throws when the pair is not generic
    RatMatrix w0m = model.w0bar().m;
    RatMatrix u1 = w0m * f.L * w0m.inverse();
    if (!is_upper_unipotent(u1)) throw std::domain_error("chain: pair is not generic");
    HElement t = h_from_diagonal(model, f.D);
    HElement h_std = h_from_diagonal(model, model.s_G().m * t.element().m);
    if (hInv && !(*hInv == h_std)) throw std::invalid_argument("chain: supplied h-invariant mismatch");

    FlagChain std_chain = standard_chain(model, word, h_std);
    GroupElement translate{&model, left.rep.m * u1 * w0m.inverse()};
    FlagChain out = std_chain;
    for (auto& flag : out.flags) flag = flag.translated(translate);
    return out;
}

FlagChain upper_chain(const QuadConfig& cfg, const WeylWord& word) {
    const GroupModel& model = *cfg.model;
    FlagChain out = standard_chain(model, word, cfg.h);
    for (auto& flag : out.flags) flag = flag.translated(cfg.g);
    return out;
}

FlagChain lower_chain(const QuadConfig& cfg, const WeylWord& word) {
    const GroupModel& model = *cfg.model;
    const CartanData& c = model.cartan();
    WeylWord starred;
    for (int s : word) starred.push_back(c.star(s));
    FlagChain out = standard_chain(model, starred, cfg.hprime);
    GroupElement w0inv = model.w0bar().inverse();
    for (auto& flag : out.flags) flag = flag.translated(w0inv);
    return out;
}

Rat delta_pair(const GroupModel& model, int s, const DecoratedFlag& A1, const DecoratedFlag& A2) {
    RatMatrix m = model.w0bar().m * A2.rep.m.inverse() * A1.rep.m;
    return top_minor(model, m, s);
}

FrozenInvariants frozen_invariants(const QuadConfig& cfg) {
    const GroupModel& model = *cfg.model;
    FrozenInvariants out;
    for (int s = 0; s < model.rank(); ++s) {
        Weight pi = Weight::fundamental(model.rank(), s);
        out.in.push_back(h_eval(cfg.hprime, star_weight(model.cartan(), pi)));
        out.out.push_back(h_eval(cfg.h, pi));
    }
    return out;
}

namespace {

WeylWord suffix_word(const WeylWord& word, int from) {
    // (s_N, ..., s_{from+1}) as a composable word: highest index first.
    WeylWord out;
    for (int i = static_cast<int>(word.size()) - 1; i >= from; --i) out.push_back(word[i]);
    return out;
}

} // namespace

Rat wilson_minor(const QuadConfig& cfg, const FlagChain& upper, const FlagChain& lower,
                 const WeylWord& upper_word, const WeylWord& lower_word, int k, int l, int s) {
    const GroupModel& model = *cfg.model;
    const CartanData& c = model.cartan();
    int N = c.w0_length();
    if (k < 0 || k > N || l < 0 || l > N) throw std::out_of_range("wilson_minor: bad chain index");

    Rat num = delta_pair(model, s, upper.flags[k], lower.flags[l]);
    Weight pi = Weight::fundamental(c.rank(), s);
    Weight u_weight = weyl_act(c, suffix_word(lower_word, l), pi);
    Weight v_weight = weyl_act(c, suffix_word(upper_word, k), pi);
    Rat den_in = h_eval(cfg.hprime, star_weight(c, positive_part(u_weight)));
    Rat den_out = h_eval(cfg.h, positive_part(v_weight));
    return num / (den_in * den_out);
}

WilsonLayout wilson_layout(const GroupModel& model) {
    WilsonLayout lay;
    const std::string& name = model.name();
    if (name == "SL2") {
        lay.word = {0};
        lay.rows = {{false, 1}, {false, 0}};
    } else if (name == "SL3") {
        lay.word = {0, 1, 0};
        lay.rows = {{false, 3}, {false, 2}, {false, 0}};
    } else if (name == "SP4") {
        lay.word = {0, 1, 0, 1};
        lay.word_hat = {1, 0, 1, 0};
        lay.rows = {{false, 4}, {true, 3}, {false, 2}, {false, 0}};
    } else {
        throw Unsupported("wilson_layout: no layout for " + name);
    }
    lay.cols = lay.rows;
    return lay;
}

GroupElement wilson_matrix(const QuadConfig& cfg) {
    const GroupModel& model = *cfg.model;
    const CartanData& c = model.cartan();
    WilsonLayout lay = wilson_layout(model);

    // Row/column order must list the pi_1 weight basis: basis vector i has
    // weight u_i . pi_1 where u_i is the suffix Weyl element of row i.
    Weight pi1 = Weight::fundamental(c.rank(), 0);
    for (size_t i = 0; i < lay.rows.size(); ++i) {
        const auto& [hat, l] = lay.rows[i];
        const WeylWord& word = hat ? lay.word_hat : lay.word;
        Weight wt = weyl_act(c, suffix_word(word, l), pi1);
        if (wt != model.basis_weight(static_cast<int>(i)))
            throw std::logic_error("wilson_matrix: row-to-weight correspondence failed");
    }

    FlagChain upperU = upper_chain(cfg, lay.word);
    FlagChain lowerU = lower_chain(cfg, lay.word);
    FlagChain upperH, lowerH;
    if (!lay.word_hat.empty()) {
        upperH = upper_chain(cfg, lay.word_hat);
        lowerH = lower_chain(cfg, lay.word_hat);
    }

    RatMatrix out(model.dim(), model.dim());
    for (size_t i = 0; i < lay.rows.size(); ++i) {
        const auto& [row_hat, l] = lay.rows[i];
        const FlagChain& lower = row_hat ? lowerH : lowerU;
        const WeylWord& lower_word = row_hat ? lay.word_hat : lay.word;
        for (size_t j = 0; j < lay.cols.size(); ++j) {
            const auto& [col_hat, k] = lay.cols[j];
            const FlagChain& upper = col_hat ? upperH : upperU;
            const WeylWord& upper_word = col_hat ? lay.word_hat : lay.word;
            out.at(static_cast<int>(i), static_cast<int>(j)) =
                wilson_minor(cfg, upper, lower, upper_word, lower_word, k, l, 0);
        }
    }
    return model.element(std::move(out));
}

bool is_upper_unipotent(const RatMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        if (m.at(i, i) != 1) return false;
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    }
    return true;
}

TriangleInvariants triangle_invariants(const GroupModel& model, const HElement& h1,
                                       const HElement& h2, const GroupElement& u) {
    if (!is_upper_unipotent(u.m)) throw std::invalid_argument("triangle_invariants: u is not unipotent upper");
    TriangleInvariants out;
    const GroupElement& w0 = model.w0bar();
    out.boundary_out = {&model, w0.m * h1.element().m * w0.m.inverse()};
    out.boundary_in = out.boundary_out * model.s_G();
    out.corner = u * w0;
    out.simple = {&model, u.m * h2.element().m.inverse() * model.s_G().m};
    for (int s = 0; s < model.rank(); ++s)
        out.potentials.push_back(generalized_minor(u, s, {}, {s}));
    return out;
}

GroupElement twisted_compose(const GroupElement& g1, const GroupElement& g2) {
    return {g1.model, g1.m * g1.model->w0bar().m.inverse() * g2.m};
}

GroupElement reverse_wilson(const GroupElement& g) { return dynkin_star(transpose_T(g)); }

DoubleWord default_double_word(const GroupModel& model) {
    const std::string& name = model.name();
    if (name == "SL2") return {{0, true}, {0, false}};
    if (name == "SL3")
        return {{0, true}, {1, true}, {0, true}, {0, false}, {1, false}, {0, false}};
    if (name == "SP4")
        return {{0, true}, {1, true}, {0, true}, {1, true},
                {1, false}, {0, false}, {1, false}, {0, false}};
    // Fallback: all barred letters of a w0 word, then all unbarred.
    DoubleWord out;
    for (int s : model.cartan().w0_word()) out.push_back({s, true});
    for (int s : model.cartan().w0_word()) out.push_back({s, false});
    return out;
}

GroupElement sample_cell_element(const GroupModel& model, const DoubleWord& word, RatSampler& rng) {
    split_double_word(model.cartan(), word);  // validates both subwords
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Rat> coords;
        for (int s = 0; s < model.rank(); ++s) coords.push_back(rng.nonzero_rational());
        GroupElement g = model.h(coords).element();
        for (const auto& letter : word) {
            Rat t = rng.nonzero_rational();
            g = g * (letter.barred ? model.y(letter.s, t) : model.x(letter.s, t));
        }
        bool ok = true;
        for (int s = 0; s < model.rank() && ok; ++s) {
            for (const WeylWord& v : {WeylWord{}, model.cartan().w0_word()}) {
                if (generalized_minor(g, s, v, {}) == 0 || generalized_minor(g, s, {}, v) == 0) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return g;
    }
    throw std::runtime_error("sample_cell_element: resample budget exhausted");
}

QuadConfig sample_quad_config(const GroupModel& model, RatSampler& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        QuadConfig cfg;
        cfg.model = &model;
        std::vector<Rat> hc, hpc;
        for (int s = 0; s < model.rank(); ++s) {
            hc.push_back(rng.nonzero_rational());
            hpc.push_back(rng.nonzero_rational());
        }
        cfg.h = model.h(hc);
        cfg.hprime = model.h(hpc);
        cfg.g = sample_cell_element(model, default_double_word(model), rng);

        try {
            auto generic = [&](const DecoratedFlag& a, const DecoratedFlag& b) {
                WeylWord w = pair_invariants(model, a, b).first;
                return model.cartan().word_length_of_element(w) == model.cartan().w0_length();
            };
            if (generic(cfg.upper_left(), cfg.lower_left()) &&
                generic(cfg.lower_left(), cfg.lower_right()) &&
                generic(cfg.lower_right(), cfg.upper_right()) &&
                generic(cfg.upper_right(), cfg.upper_left()))
                return cfg;
        } catch (const std::domain_error&) {
            // resample
        }
    }
    throw std::runtime_error("sample_quad_config: resample budget exhausted");
}

} // namespace wilsonline
