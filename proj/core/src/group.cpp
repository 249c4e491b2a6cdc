#include "wilsonline/group.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>

namespace wilsonline {

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (model != o.model) throw std::invalid_argument("GroupElement: mixed models");
    return {model, m * o.m};
}

GroupElement GroupElement::inverse() const { return {model, m.inverse()}; }

GroupElement HElement::element() const {
    GroupElement g = model->identity();
    for (int s = 0; s < model->rank(); ++s) g = g * model->coroot(s, coords[s]);
    return g;
}

HElement HElement::operator*(const HElement& o) const {
    if (model != o.model) throw std::invalid_argument("HElement: mixed models");
    HElement r = *this;
    for (size_t i = 0; i < coords.size(); ++i) r.coords[i] *= o.coords[i];
    return r;
}

HElement HElement::inverse() const {
    HElement r = *this;
    for (auto& a : r.coords) a = Rat(1) / a;
    return r;
}

GroupModel::GroupModel(std::string name, const CartanData& cartan, int dim)
    : name_(std::move(name)), cartan_(&cartan), dim_(dim) {}

void GroupModel::finish() {
    w0bar_ = wbar(cartan_->w0_word());
    sG_ = w0bar_ * w0bar_;
}

bool GroupModel::in_group(const RatMatrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_) return false;
    if (m.det() != 1) return false;
    if (J_ && m.transpose() * (*J_) * m != *J_) return false;
    return true;
}

GroupElement GroupModel::element(RatMatrix m) const {
    if (!in_group(m)) throw std::invalid_argument("GroupModel::element: matrix not in " + name_);
    return {this, std::move(m)};
}

GroupElement GroupModel::x(int s, const Rat& t) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("GroupModel::x: bad letter");
    RatMatrix m = RatMatrix::identity(dim_);
    if (!J_) {
        m.at(s, s + 1) = t;
    } else if (s == 0) {
        m.at(0, 1) = t;
        m.at(2, 3) = t;
    } else {
        m.at(1, 2) = t;
    }
    return {this, std::move(m)};
}

GroupElement GroupModel::y(int s, const Rat& t) const {
    GroupElement g = x(s, t);
    g.m = g.m.transpose();
    return g;
}

GroupElement GroupModel::coroot(int s, const Rat& a) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("GroupModel::coroot: bad letter");
    if (a == 0) throw std::domain_error("GroupModel::coroot: parameter must be nonzero");
    RatMatrix m = RatMatrix::identity(dim_);
    for (int i = 0; i < dim_; ++i) m.at(i, i) = rat_pow(a, weight_exp_[s][i]);
    return {this, std::move(m)};
}

GroupElement GroupModel::rbar(int s) const {
    // phi_s of [[0,-1],[1,0]] = x_s(-1) y_s(1) x_s(-1).
    return x(s, Rat(-1)) * y(s, Rat(1)) * x(s, Rat(-1));
}

GroupElement GroupModel::wbar(const WeylWord& word) const {
    if (!cartan_->is_reduced(word)) throw std::invalid_argument("GroupModel::wbar: word not reduced");
    GroupElement g = identity();
    for (int s : word) g = g * rbar(s);
    return g;
}

HElement GroupModel::h(std::vector<Rat> coords) const {
    if (static_cast<int>(coords.size()) != rank())
        throw std::invalid_argument("GroupModel::h: coordinate count mismatch");
    for (const Rat& a : coords)
        if (a == 0) throw std::domain_error("GroupModel::h: zero coordinate");
    return {this, std::move(coords)};
}

Weight GroupModel::basis_weight(int i) const {
    Weight w = Weight::zero(rank());
    for (int s = 0; s < rank(); ++s) w.a[s] = weight_exp_[s][i];
    return w;
}

FundRepModel GroupModel::fund_rep(int s) const {
    if (s < 0 || s >= rank()) throw std::out_of_range("GroupModel::fund_rep: bad index");
    FundRepModel r;
    r.model = this;
    r.s = s;
    if (!J_) {
        r.exterior_power = s + 1;
    } else {
        r.exterior_power = s + 1;  // s=0: defining; s=1: Lambda^2 of it
    }
    // C(dim, k)
    int k = r.exterior_power;
    long dim = 1;
    for (int i = 0; i < k; ++i) dim = dim * (dim_ - i) / (i + 1);
    r.carrier_dim = static_cast<int>(dim);
    r.highest_index = 0;
    return r;
}

namespace {

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

RatMatrix FundRepModel::lift(const GroupElement& g) const {
    int k = exterior_power;
    auto subsets = subsets_lex(model->dim(), k);
    RatMatrix out(static_cast<int>(subsets.size()), static_cast<int>(subsets.size()));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = 0; j < subsets.size(); ++j)
            out.at(static_cast<int>(i), static_cast<int>(j)) = mat_minor(g.m, subsets[i], subsets[j]);
    return out;
}

Weight FundRepModel::basis_weight(int index) const {
    auto subsets = subsets_lex(model->dim(), exterior_power);
    Weight w = Weight::zero(model->rank());
    for (int i : subsets[index]) w = w + model->basis_weight(i);
    return w;
}

Rat h_eval(const HElement& h, const Weight& mu) {
    if (static_cast<int>(mu.a.size()) != h.model->rank())
        throw std::invalid_argument("h_eval: weight rank mismatch");
    Rat r(1);
    for (size_t s = 0; s < h.coords.size(); ++s) r *= rat_pow(h.coords[s], mu.a[s]);
    return r;
}

Rat h_coeval(const HElement& h, int t) {
    if (t < 0 || t >= h.model->rank()) throw std::out_of_range("h_coeval: bad index");
    return h.coords[t];
}

HElement h_weyl_reflect(const HElement& h, int s) {
    const CartanData& c = h.model->cartan();
    // r_s(alpha_u^vee) = alpha_u^vee - C_{us} alpha_s^vee, so only the s-th
    // coordinate changes: a_s -> a_s * prod_u a_u^{-C_{us}}.
    HElement r = h;
    Rat f(1);
    for (int u = 0; u < c.rank(); ++u) f *= rat_pow(h.coords[u], -c.cartan(u, s));
    r.coords[s] = h.coords[s] * f;
    return r;
}

HElement h_weyl_act(const HElement& h, const WeylWord& w) {
    HElement r = h;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = h_weyl_reflect(r, *it);
    return r;
}

Weight simple_root_weight(const CartanData& c, int s) {
    Weight w = Weight::zero(c.rank());
    for (int u = 0; u < c.rank(); ++u) w.a[u] = c.cartan(u, s);
    return w;
}

GroupElement transpose_T(const GroupElement& g) { return {g.model, g.m.transpose()}; }

GroupElement dynkin_star(const GroupElement& g) {
    const GroupElement& w0 = g.model->w0bar();
    return {g.model, w0.m * g.m.inverse().transpose() * w0.m.inverse()};
}

Rat generalized_minor(const GroupElement& g, int s, const WeylWord& u, const WeylWord& v) {
    const GroupModel& model = *g.model;
    if (!model.cartan().is_reduced(u) || !model.cartan().is_reduced(v))
        throw std::invalid_argument("generalized_minor: words must be reduced");
    RatMatrix core = model.wbar(u).m.inverse() * g.m * model.wbar(v).m;
    int k = model.fund_rep(s).exterior_power;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    return mat_minor(core, idx, idx);
}

const GroupModel& GroupModel::SL(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("GroupModel::SL: rank out of supported range");
    static std::map<int, std::unique_ptr<GroupModel>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto m = std::unique_ptr<GroupModel>(
            new GroupModel("SL" + std::to_string(n), CartanData::A(n - 1), n));
        m->weight_exp_.assign(n - 1, std::vector<int>(n, 0));
        for (int s = 0; s + 1 < n; ++s) {
            m->weight_exp_[s][s] = 1;
            m->weight_exp_[s][s + 1] = -1;
        }
        m->finish();
        it = cache.emplace(n, std::move(m)).first;
    }
    return *it->second;
}

const GroupModel& GroupModel::SL2() { return SL(2); }
const GroupModel& GroupModel::SL3() { return SL(3); }

const GroupModel& GroupModel::SP4() {
    static std::unique_ptr<GroupModel> instance;
    if (!instance) {
        instance.reset(new GroupModel("SP4", CartanData::C2(), 4));
        RatMatrix J(4, 4);
        J.at(0, 3) = 1;
        J.at(1, 2) = -1;
        J.at(2, 1) = 1;
        J.at(3, 0) = -1;
        instance->J_ = J;
        instance->weight_exp_ = {{1, -1, 1, -1}, {0, 1, -1, 0}};
        instance->finish();
    }
    return *instance;
}

const GroupModel& GroupModel::by_name(const std::string& name) {
    if (name == "SL2") return SL2();
    if (name == "SL3") return SL3();
    if (name == "SP4") return SP4();
    if (name.size() >= 3 && name.substr(0, 2) == "SL") return SL(std::stoi(name.substr(2)));
    throw std::invalid_argument("GroupModel::by_name: unknown model " + name);
}

} // namespace wilsonline
