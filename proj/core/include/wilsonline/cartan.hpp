#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wilsonline {

// Weight in the fundamental-weight basis: lambda = sum_s a[s] * w_s.
struct Weight {
    std::vector<int> a;

    bool operator==(const Weight& o) const { return a == o.a; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    bool is_zero() const;
    bool is_dominant() const;
    static Weight zero(int rank) { return Weight{std::vector<int>(rank, 0)}; }
    static Weight fundamental(int rank, int s);
    std::string to_string() const;
};

// Coweight in the simple-coroot basis: beta = sum_s b[s] * alpha_s^vee.
struct Coweight {
    std::vector<int> b;

    bool operator==(const Coweight& o) const { return b == o.b; }
    bool operator!=(const Coweight& o) const { return !(*this == o); }
    static Coweight simple(int rank, int s);
    std::string to_string() const;
};

// Word in the simple reflections; letters are 0-based indices into S.
using WeylWord = std::vector<int>;

// Letter of a double word: (index, barred?).
struct DoubleLetter {
    int s;
    bool barred;
    bool operator==(const DoubleLetter& o) const { return s == o.s && barred == o.barred; }
};
using DoubleWord = std::vector<DoubleLetter>;

struct CorootStep {
    Coweight beta;
    bool simple;
    int t;  // valid when simple
};

// Cartan data plus precomputed Weyl-group tables (the groups here have at
// most 24 elements, so everything is enumerated on construction).
class CartanData {
public:
    // typeLabel: "A1", "A2", ..., "An" (any n >= 1) or "C2".
    static const CartanData& of(const std::string& typeLabel);
    static const CartanData& A(int n);
    static const CartanData& C2();

    const std::string& label() const { return label_; }
    int rank() const { return rank_; }
    // C[s][t] = <alpha_s^vee, alpha_t>.
    int cartan(int s, int t) const { return C_[s][t]; }
    int symmetrizer(int s) const { return d_[s]; }
    int star(int s) const { return star_[s]; }
    // Coxeter exponent m_st from the product C_st * C_ts.
    int coxeter_m(int s, int t) const;

    int w0_length() const { return w0_length_; }
    const WeylWord& w0_word() const { return w0_word_; }
    const std::vector<WeylWord>& all_w0_words() const { return w0_words_; }
    // One reduced word per Weyl-group element, in BFS order from the identity.
    const std::vector<WeylWord>& element_words() const { return element_words_; }
    int group_order() const { return static_cast<int>(element_words_.size()); }

    bool is_reduced(const WeylWord& w) const;
    int word_length_of_element(const WeylWord& w) const;

    const std::vector<Coweight>& positive_coroots() const { return positive_coroots_; }

private:
    explicit CartanData(std::string label, std::vector<std::vector<int>> C, std::vector<int> d);
    void build_weyl_tables();

    std::string label_;
    int rank_;
    std::vector<std::vector<int>> C_;
    std::vector<int> d_;
    std::vector<int> star_;
    int w0_length_ = 0;
    WeylWord w0_word_;
    std::vector<WeylWord> w0_words_;
    std::vector<WeylWord> element_words_;
    std::vector<Coweight> positive_coroots_;
    // Weyl elements keyed by their action matrix on fundamental-weight coords.
    std::map<std::vector<int>, int> element_length_;

    std::vector<int> word_matrix(const WeylWord& w) const;
    friend struct CartanAccess;
};

Weight reflect(const CartanData& c, int s, const Weight& mu);
Weight weyl_act(const CartanData& c, const WeylWord& w, const Weight& mu);
Weight positive_part(const Weight& mu);
Weight star_weight(const CartanData& c, const Weight& mu);

Coweight coweight_reflect(const CartanData& c, int s, const Coweight& beta);
Coweight coweight_act(const CartanData& c, const WeylWord& w, const Coweight& beta);

// beta_j = r_{s_N} ... r_{s_{j+1}} (alpha_{s_j}^vee) for j = 1..N (0-based output
// index j-1). Requires a reduced word of w0.
std::vector<CorootStep> coroot_sequence(const CartanData& c, const WeylWord& word);

// (barred subword, unbarred subword); both must be reduced words of w0.
std::pair<WeylWord, WeylWord> split_double_word(const CartanData& c, const DoubleWord& w);

// Text form: comma list, trailing '*' marks barred letters, e.g. "1*,2*,2,1".
std::string double_word_to_string(const DoubleWord& w);
DoubleWord double_word_parse(const std::string& text, int rank);
std::string weyl_word_to_string(const WeylWord& w);
WeylWord weyl_word_parse(const std::string& text, int rank);

} // namespace wilsonline
