#pragma once

#include "wilsonline/cartan.hpp"
#include "wilsonline/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wilsonline {

class GroupModel;

// Group element in the defining representation, tied to its model.
struct GroupElement {
    const GroupModel* model = nullptr;
    RatMatrix m;

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    bool operator==(const GroupElement& o) const { return m == o.m; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

// Torus element in simple-coroot coordinates: h = prod_s alpha_s^vee(a_s).
struct HElement {
    const GroupModel* model = nullptr;
    std::vector<Rat> coords;

    GroupElement element() const;
    HElement operator*(const HElement& o) const;
    HElement inverse() const;
    bool operator==(const HElement& o) const { return coords == o.coords; }
};

// Fundamental representation carrier: the defining rep or an exterior power
// of it. Basis = k-subsets of the defining basis in lex order, so index 0 is
// the highest-weight line.
struct FundRepModel {
    const GroupModel* model = nullptr;
    int s = 0;            // which fundamental weight (0-based)
    int exterior_power = 1;
    int carrier_dim = 0;
    int highest_index = 0;

    RatMatrix lift(const GroupElement& g) const;
    Weight basis_weight(int index) const;
};

// Concrete matrix models of SL_n and Sp_4 with Chevalley generators.
class GroupModel {
public:
    static const GroupModel& SL2();
    static const GroupModel& SL3();
    static const GroupModel& SL(int n);
    static const GroupModel& SP4();
    static const GroupModel& by_name(const std::string& name);  // "SL2" | "SL3" | "SP4"

    const std::string& name() const { return name_; }
    const CartanData& cartan() const { return *cartan_; }
    int rank() const { return cartan_->rank(); }
    int dim() const { return dim_; }
    bool is_symplectic() const { return J_.has_value(); }
    const RatMatrix& symplectic_form() const { return *J_; }

    bool in_group(const RatMatrix& m) const;
    GroupElement element(RatMatrix m) const;  // validates membership embedding
    GroupElement element_unchecked(RatMatrix m) const { return {this, std::move(m)}; }
    GroupElement identity() const { return {this, RatMatrix::identity(dim_)}; }

    GroupElement x(int s, const Rat& t) const;
    GroupElement y(int s, const Rat& t) const;
    GroupElement coroot(int s, const Rat& a) const;

    GroupElement rbar(int s) const;
    GroupElement wbar(const WeylWord& word) const;  // word must be reduced
    const GroupElement& w0bar() const { return w0bar_; }
    const GroupElement& s_G() const { return sG_; }

    HElement h(std::vector<Rat> coords) const;
    HElement h_identity() const { return {this, std::vector<Rat>(rank(), Rat(1))}; }

    // Weight of defining-basis vector i in fundamental-weight coordinates.
    Weight basis_weight(int i) const;
    FundRepModel fund_rep(int s) const;

private:
    GroupModel(std::string name, const CartanData& cartan, int dim);
    void finish();

    std::string name_;
    const CartanData* cartan_;
    int dim_;
    std::optional<RatMatrix> J_;
    // exponent of a_s on the diagonal of coroot(s, a): weight_exp_[s][i]
    std::vector<std::vector<int>> weight_exp_;
    GroupElement w0bar_{nullptr, RatMatrix(1, 1)};
    GroupElement sG_{nullptr, RatMatrix(1, 1)};

    friend struct GroupElement;
};

// h^mu = prod_s a_s^{<alpha_s^vee, mu>}.
Rat h_eval(const HElement& h, const Weight& mu);
// h^{pi_t^vee} = the t-th coroot coordinate.
Rat h_coeval(const HElement& h, int t);
// Conjugation action of the Weyl group on H, in coroot coordinates.
HElement h_weyl_reflect(const HElement& h, int s);
HElement h_weyl_act(const HElement& h, const WeylWord& w);

// alpha_s as a weight (fundamental-weight coordinates).
Weight simple_root_weight(const CartanData& c, int s);

GroupElement transpose_T(const GroupElement& g);
GroupElement dynkin_star(const GroupElement& g);

// Delta_{u pi_s, v pi_s}(g): coefficient of the highest basis vector of the
// s-th fundamental carrier in (wbar(u)^{-1} g wbar(v)) applied to it.
Rat generalized_minor(const GroupElement& g, int s, const WeylWord& u, const WeylWord& v);

} // namespace wilsonline
