#include "wilsonline/cartan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wilsonline {

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

Weight Weight::fundamental(int rank, int s) {
    Weight w = zero(rank);
    w.a[s] = 1;
    return w;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

Coweight Coweight::simple(int rank, int s) {
    Coweight c{std::vector<int>(rank, 0)};
    c.b[s] = 1;
    return c;
}

std::string Coweight::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) os << ',';
        os << b[i];
    }
    os << ')';
    return os.str();
}

Weight reflect(const CartanData& c, int s, const Weight& mu) {
    if (s < 0 || s >= c.rank()) throw std::out_of_range("reflect: bad letter");
    Weight r = mu;
    int pairing = mu.a[s];  // <alpha_s^vee, mu>
    for (int u = 0; u < c.rank(); ++u) r.a[u] -= pairing * c.cartan(u, s);
    return r;
}

Weight weyl_act(const CartanData& c, const WeylWord& w, const Weight& mu) {
    Weight r = mu;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(c, *it, r);
    return r;
}

Weight positive_part(const Weight& mu) {
    Weight r = mu;
    for (auto& x : r.a) x = std::max(0, x);
    return r;
}

Weight star_weight(const CartanData& c, const Weight& mu) {
    Weight r = Weight::zero(c.rank());
    for (int s = 0; s < c.rank(); ++s) r.a[c.star(s)] = mu.a[s];
    return r;
}

Coweight coweight_reflect(const CartanData& c, int s, const Coweight& beta) {
    if (s < 0 || s >= c.rank()) throw std::out_of_range("coweight_reflect: bad letter");
    int pairing = 0;  // <beta, alpha_s>
    for (int u = 0; u < c.rank(); ++u) pairing += beta.b[u] * c.cartan(u, s);
    Coweight r = beta;
    r.b[s] -= pairing;
    return r;
}

Coweight coweight_act(const CartanData& c, const WeylWord& w, const Coweight& beta) {
    Coweight r = beta;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = coweight_reflect(c, *it, r);
    return r;
}

std::vector<CorootStep> coroot_sequence(const CartanData& c, const WeylWord& word) {
    if (!c.is_reduced(word) || static_cast<int>(word.size()) != c.w0_length())
        throw std::invalid_argument("coroot_sequence: word is not a reduced word of w0");
    int N = static_cast<int>(word.size());
    std::vector<CorootStep> out;
    out.reserve(N);
    for (int j = 0; j < N; ++j) {
        Coweight beta = Coweight::simple(c.rank(), word[j]);
        for (int k = j + 1; k < N; ++k) beta = coweight_reflect(c, word[k], beta);
        CorootStep step{beta, false, -1};
        for (int t = 0; t < c.rank(); ++t) {
            if (beta == Coweight::simple(c.rank(), t)) {
                step.simple = true;
                step.t = t;
                break;
            }
        }
        out.push_back(std::move(step));
    }
    return out;
}

std::pair<WeylWord, WeylWord> split_double_word(const CartanData& c, const DoubleWord& w) {
    WeylWord barred, unbarred;
    for (const auto& l : w) (l.barred ? barred : unbarred).push_back(l.s);
    auto check = [&](const WeylWord& v, const char* side) {
        if (static_cast<int>(v.size()) != c.w0_length() || !c.is_reduced(v))
            throw std::invalid_argument(std::string("split_double_word: ") + side +
                                        " subword is not a reduced word of w0");
    };
    check(barred, "barred");
    check(unbarred, "unbarred");
    return {barred, unbarred};
}

std::string double_word_to_string(const DoubleWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << (w[i].s + 1);
        if (w[i].barred) os << '*';
    }
    return os.str();
}

DoubleWord double_word_parse(const std::string& text, int rank) {
    DoubleWord out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::string t;
        for (char ch : tok)
            if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
        if (t.empty()) throw std::invalid_argument("double_word_parse: empty letter");
        bool barred = t.back() == '*';
        if (barred) t.pop_back();
        int v = std::stoi(t);
        if (v < 1 || v > rank) throw std::invalid_argument("double_word_parse: letter out of range");
        out.push_back({v - 1, barred});
    }
    return out;
}

std::string weyl_word_to_string(const WeylWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << (w[i] + 1);
    }
    return os.str();
}

WeylWord weyl_word_parse(const std::string& text, int rank) {
    WeylWord out;
    if (text.empty()) return out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1 || v > rank) throw std::invalid_argument("weyl_word_parse: letter out of range");
        out.push_back(v - 1);
    }
    return out;
}

CartanData::CartanData(std::string label, std::vector<std::vector<int>> C, std::vector<int> d)
    : label_(std::move(label)), rank_(static_cast<int>(C.size())), C_(std::move(C)), d_(std::move(d)) {
    for (int s = 0; s < rank_; ++s) {
        if (C_[s][s] != 2) throw std::invalid_argument("CartanData: diagonal must be 2");
        for (int t = 0; t < rank_; ++t) {
            if (s != t && C_[s][t] > 0) throw std::invalid_argument("CartanData: off-diagonal must be <= 0");
            if (d_[s] * C_[s][t] != d_[t] * C_[t][s])
                throw std::invalid_argument("CartanData: symmetrizer does not symmetrize C");
        }
    }
    build_weyl_tables();
}

int CartanData::coxeter_m(int s, int t) const {
    if (s == t) return 1;
    switch (C_[s][t] * C_[t][s]) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw std::domain_error("coxeter_m: not a finite-type pair");
    }
}

std::vector<int> CartanData::word_matrix(const WeylWord& w) const {
    // Matrix of the action on fundamental-weight coordinates, row-major.
    std::vector<Weight> cols;
    for (int v = 0; v < rank_; ++v) cols.push_back(weyl_act(*this, w, Weight::fundamental(rank_, v)));
    std::vector<int> m(static_cast<size_t>(rank_) * rank_);
    for (int u = 0; u < rank_; ++u)
        for (int v = 0; v < rank_; ++v) m[static_cast<size_t>(u) * rank_ + v] = cols[v].a[u];
    return m;
}

namespace {

std::vector<int> int_mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
    std::vector<int> r(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int x = a[static_cast<size_t>(i) * n + k];
            if (x == 0) continue;
            for (int j = 0; j < n; ++j) r[static_cast<size_t>(i) * n + j] += x * b[static_cast<size_t>(k) * n + j];
        }
    return r;
}

} // namespace

void CartanData::build_weyl_tables() {
    // BFS over the Cayley graph; depth equals Coxeter length.
    std::vector<std::vector<int>> gen;
    for (int s = 0; s < rank_; ++s) gen.push_back(word_matrix({s}));
    std::vector<int> id = word_matrix({});

    std::map<std::vector<int>, WeylWord> word_of;
    element_length_.clear();
    element_words_.clear();
    element_length_[id] = 0;
    word_of[id] = {};
    element_words_.push_back({});
    std::deque<std::vector<int>> queue{id};
    while (!queue.empty()) {
        std::vector<int> m = queue.front();
        queue.pop_front();
        const WeylWord& w = word_of[m];
        for (int s = 0; s < rank_; ++s) {
            std::vector<int> m2 = int_mat_mul(m, gen[s], rank_);
            if (!element_length_.count(m2)) {
                WeylWord w2 = w;
                w2.push_back(s);
                element_length_[m2] = static_cast<int>(w2.size());
                word_of[m2] = w2;
                element_words_.push_back(w2);
                queue.push_back(m2);
            }
        }
    }
    w0_length_ = 0;
    for (const auto& [m, l] : element_length_) {
        if (l > w0_length_) {
            w0_length_ = l;
            w0_word_ = word_of[m];
        }
    }

    // All reduced words of w0: DFS peeling left descents.
    w0_words_.clear();
    WeylWord cur;
    std::vector<int> w0m = word_matrix(w0_word_);
    std::function<void(const std::vector<int>&)> dfs = [&](const std::vector<int>& m) {
        int len = element_length_.at(m);
        if (len == 0) {
            w0_words_.push_back(cur);
            return;
        }
        for (int s = 0; s < rank_; ++s) {
            std::vector<int> m2 = int_mat_mul(gen[s], m, rank_);
            if (element_length_.at(m2) == len - 1) {
                cur.push_back(s);
                dfs(m2);
                cur.pop_back();
            }
        }
    };
    dfs(w0m);

    // star map: alpha_{s*} = -w0 . alpha_s.
    star_.assign(rank_, -1);
    for (int s = 0; s < rank_; ++s) {
        Weight alpha = Weight::zero(rank_);
        for (int u = 0; u < rank_; ++u) alpha.a[u] = C_[u][s];
        Weight img = -weyl_act(*this, w0_word_, alpha);
        for (int t = 0; t < rank_; ++t) {
            Weight alpha_t = Weight::zero(rank_);
            for (int u = 0; u < rank_; ++u) alpha_t.a[u] = C_[u][t];
            if (img == alpha_t) {
                star_[s] = t;
                break;
            }
        }
        if (star_[s] < 0) throw std::logic_error("CartanData: failed to compute star map");
    }

    // Positive coroots: Weyl orbit of the simple coroots intersected with the
    // positive cone.
    std::set<std::vector<int>> pos;
    std::set<std::vector<int>> seen;
    std::deque<Coweight> frontier;
    for (int s = 0; s < rank_; ++s) {
        frontier.push_back(Coweight::simple(rank_, s));
        seen.insert(frontier.back().b);
    }
    while (!frontier.empty()) {
        Coweight b = frontier.front();
        frontier.pop_front();
        bool positive = std::all_of(b.b.begin(), b.b.end(), [](int x) { return x >= 0; });
        if (positive) pos.insert(b.b);
        for (int s = 0; s < rank_; ++s) {
            Coweight nb = coweight_reflect(*this, s, b);
            if (seen.insert(nb.b).second) frontier.push_back(nb);
        }
    }
    positive_coroots_.clear();
    for (const auto& b : pos) positive_coroots_.push_back(Coweight{b});
}

bool CartanData::is_reduced(const WeylWord& w) const {
    for (int s : w)
        if (s < 0 || s >= rank_) throw std::out_of_range("is_reduced: bad letter");
    return word_length_of_element(w) == static_cast<int>(w.size());
}

int CartanData::word_length_of_element(const WeylWord& w) const {
    return element_length_.at(word_matrix(w));
}

const CartanData& CartanData::of(const std::string& typeLabel) {
    if (typeLabel == "C2") return C2();
    if (typeLabel.size() >= 2 && typeLabel[0] == 'A') {
        int n = std::stoi(typeLabel.substr(1));
        return A(n);
    }
    throw std::invalid_argument("CartanData::of: unknown type " + typeLabel);
}

const CartanData& CartanData::A(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("CartanData::A: rank out of supported range");
    static std::map<int, std::unique_ptr<CartanData>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            C[i][i] = 2;
            if (i + 1 < n) {
                C[i][i + 1] = -1;
                C[i + 1][i] = -1;
            }
        }
        it = cache.emplace(n, std::unique_ptr<CartanData>(new CartanData(
                                  "A" + std::to_string(n), C, std::vector<int>(n, 1))))
                 .first;
    }
    return *it->second;
}

const CartanData& CartanData::C2() {
    static std::unique_ptr<CartanData> instance(new CartanData(
        "C2", {{2, -2}, {-1, 2}}, {1, 2}));
    return *instance;
}

} // namespace wilsonline
