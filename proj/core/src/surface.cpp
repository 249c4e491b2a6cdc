#include "wilsonline/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wilsonline {

int MarkedSurface::marked_total() const {
    return std::accumulate(boundary_marked.begin(), boundary_marked.end(), 0);
}

void MarkedSurface::validate() const {
    if (genus < 0) throw std::invalid_argument("MarkedSurface: negative genus");
    if (boundary_marked.empty()) throw std::invalid_argument("MarkedSurface: at least one boundary component");
    for (int k : boundary_marked)
        if (k < 1) throw std::invalid_argument("MarkedSurface: each boundary component needs a marked point");
    int n = -3 * euler_characteristic() + 2 * marked_total();
    if (n <= 0) throw std::invalid_argument("MarkedSurface: no ideal triangulation (n(Sigma) <= 0)");
    if (genus == 0 && boundary_components() == 1 && marked_total() <= 2)
        throw std::invalid_argument("MarkedSurface: disk needs at least three marked points");
}

TriangulationCounts counts(const MarkedSurface& surface) {
    surface.validate();
    long g = surface.genus;
    long b = surface.boundary_components();
    long M = surface.marked_total();
    return {4 * g - 4 + 2 * b + M, 6 * g - 6 + 3 * b + 2 * M};
}

SeedSizes seed_sizes(const MarkedSurface& surface, const CartanData& cartan) {
    TriangulationCounts c = counts(surface);
    long r = cartan.rank();
    long l = cartan.w0_length();
    long n = r * c.edges + (l - r) * c.triangles;
    long m = n - static_cast<long>(surface.boundary_components()) * r;
    return {n, m};
}

void IdealTriangulation::validate() const {
    if (triangles <= 0) throw std::invalid_argument("IdealTriangulation: no triangles");
    std::set<std::pair<int, int>> used;
    for (const auto& [a, b] : gluings) {
        for (const TriSide& ts : {a, b}) {
            if (ts.tri < 0 || ts.tri >= triangles || ts.side < 0 || ts.side > 2)
                throw std::invalid_argument("IdealTriangulation: bad triangle side");
            if (!used.insert({ts.tri, ts.side}).second)
                throw std::invalid_argument("IdealTriangulation: side glued twice");
        }
        if (a == b) throw std::invalid_argument("IdealTriangulation: side glued to itself");
    }
}

IdealTriangulation IdealTriangulation::polygon(int k) {
    if (k < 3) throw std::invalid_argument("IdealTriangulation::polygon: need k >= 3");
    IdealTriangulation t;
    t.triangles = k - 2;
    // Fan: triangle i has sides {0, 1, 2}; side 2 of i glues to side 0 of i+1.
    for (int i = 0; i + 1 < t.triangles; ++i) t.gluings.push_back({{i, 2}, {i + 1, 0}});
    t.validate();
    return t;
}

namespace {

std::string fn_label(const QuadVertexFn& fn) {
    std::ostringstream os;
    switch (fn.kind) {
        case QuadVertexFn::Kind::Delta:
            os << 'D' << (fn.s + 1) << "(A^" << fn.k << ",A_" << fn.l << ')';
            break;
        case QuadVertexFn::Kind::FrozenIn:
            os << "Ain" << (fn.s + 1);
            break;
        case QuadVertexFn::Kind::FrozenOut:
            os << "Aout" << (fn.s + 1);
            break;
    }
    return os.str();
}

QuadVertexFn delta_fn(int s, int k, int l) { return {QuadVertexFn::Kind::Delta, s, k, l}; }
QuadVertexFn in_fn(int s) { return {QuadVertexFn::Kind::FrozenIn, s, 0, 0}; }
QuadVertexFn out_fn(int s) { return {QuadVertexFn::Kind::FrozenOut, s, 0, 0}; }

struct Arrow {
    int from, to;
};

// eps2 increments of one drawn arrow; the endpoint of smaller weight carries
// the doubled entry, which keeps D * eps antisymmetric.
void add_arrow(Quiver& q, const Arrow& a, bool dashed) {
    int head = (q.weights[a.to] < q.weights[a.from]) ? 4 : 2;
    int tail = (q.weights[a.from] < q.weights[a.to]) ? 4 : 2;
    if (dashed) {
        head /= 2;
        tail /= 2;
    }
    q.eps2[a.to][a.from] += head;
    q.eps2[a.from][a.to] -= tail;
}

Quiver build_quiver(int n, int m, std::vector<QuadVertexFn> fns, std::vector<int> weights,
                    const std::vector<Arrow>& arrows, const std::vector<Arrow>& dashed) {
    Quiver q;
    q.n = n;
    q.m = m;
    q.weights = std::move(weights);
    q.eps2.assign(n, std::vector<int>(n, 0));
    for (const auto& fn : fns) q.labels.push_back(fn_label(fn));
    for (const Arrow& a : arrows) add_arrow(q, a, false);
    for (const Arrow& a : dashed) add_arrow(q, a, true);
    q.validate();
    return q;
}

// Exchange entries from the four mutable A2 vertices toward the frozen
// h-invariant vertices (A_in^1, A_in^2, A_out^1, A_out^2). The source figure
// omits these vertices; the entries are pinned by requiring the exchange
// relations along the flip sequence to hold as identities on configurations
// (see the figure-fit test).
// Rows: x11, x12, x13, x21 in this order; columns: Ain1, Ain2, Aout1, Aout2.
const int kA2Frozen[4][4][4] = {
    // A2-quad-1
    {{0, 0, -1, 1}, {1, 0, 1, 0}, {-1, 1, 0, 0}, {0, 0, 0, 0}},
    // A2-quad-2
    {{1, 0, 0, 1}, {-1, 0, -1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}},
    // A2-quad-3
    {{-1, 0, 0, -1}, {0, 1, 0, 1}, {0, -1, -1, 0}, {0, 0, 0, 0}},
    // A2-quad-4
    {{-1, 1, 0, 0}, {0, -1, 0, -1}, {0, 0, -1, 1}, {0, 0, 0, 0}},
};

FigureQuiver make_a1(bool left) {
    // Vertex order: diag, top, bottom, Ain1, Aout1.
    std::vector<QuadVertexFn> fns = {delta_fn(0, left ? 1 : 0, left ? 1 : 0), delta_fn(0, 1, 0),
                                     delta_fn(0, 0, 1), in_fn(0), out_fn(0)};
    std::vector<Arrow> arrows;
    if (left) {
        arrows = {{0, 1}, {1, 3}, {3, 0}, {0, 2}, {2, 4}, {4, 0}};
    } else {
        arrows = {{1, 0}, {3, 2}, {0, 3}, {2, 0}, {4, 1}, {0, 4}};
    }
    FigureQuiver f;
    f.name = left ? "A1-quad-left" : "A1-quad-right";
    f.quiver = build_quiver(5, 1, fns, std::vector<int>(5, 1), arrows, {});
    f.fn = fns;
    f.also.assign(5, {});
    return f;
}

FigureQuiver make_a2(int which) {
    // Vertex order: x11, x12, x13, x21, x10, x14, x20, x22, Ain1, Ain2,
    // Aout1, Aout2 (the last four omitted in the source figure).
    std::vector<QuadVertexFn> fns;
    std::vector<std::vector<QuadVertexFn>> also(12);
    switch (which) {
        case 1:
            fns = {delta_fn(0, 2, 3), delta_fn(0, 3, 3), delta_fn(0, 3, 1), delta_fn(1, 2, 3),
                   delta_fn(0, 0, 3), delta_fn(0, 3, 0), delta_fn(1, 1, 3), delta_fn(1, 3, 0)};
            also[0] = {delta_fn(0, 1, 3)};
            also[2] = {delta_fn(0, 3, 2)};
            also[3] = {delta_fn(1, 3, 3), delta_fn(1, 3, 2)};
            also[6] = {delta_fn(1, 0, 3)};
            also[7] = {delta_fn(1, 3, 1)};
            break;
        case 2:
            fns = {delta_fn(0, 2, 3), delta_fn(0, 2, 2), delta_fn(0, 3, 1), delta_fn(1, 2, 2),
                   delta_fn(0, 0, 3), delta_fn(0, 3, 0), delta_fn(1, 1, 3), delta_fn(1, 3, 0)};
            also[0] = {delta_fn(0, 1, 3)};
            also[2] = {delta_fn(0, 3, 2)};
            also[3] = {delta_fn(1, 2, 3)};
            also[6] = {delta_fn(1, 0, 3)};
            also[7] = {delta_fn(1, 3, 1)};
            break;
        case 3:
            fns = {delta_fn(0, 0, 1), delta_fn(0, 2, 2), delta_fn(0, 2, 0), delta_fn(1, 1, 1),
                   delta_fn(0, 0, 3), delta_fn(0, 3, 0), delta_fn(1, 0, 2), delta_fn(1, 3, 0)};
            also[0] = {delta_fn(0, 0, 2)};
            also[1] = {delta_fn(0, 1, 1)};
            also[2] = {delta_fn(0, 1, 0)};
            also[3] = {delta_fn(1, 0, 0)};
            also[6] = {delta_fn(1, 0, 3)};
            also[7] = {delta_fn(1, 2, 0)};
            break;
        case 4:
            fns = {delta_fn(0, 0, 1), delta_fn(0, 0, 0), delta_fn(0, 2, 0), delta_fn(1, 1, 0),
                   delta_fn(0, 0, 3), delta_fn(0, 3, 0), delta_fn(1, 0, 2), delta_fn(1, 3, 0)};
            also[0] = {delta_fn(0, 0, 2)};
            also[2] = {delta_fn(0, 1, 0)};
            also[3] = {delta_fn(1, 0, 0), delta_fn(1, 0, 1)};
            also[6] = {delta_fn(1, 0, 3)};
            also[7] = {delta_fn(1, 2, 0)};
            break;
        default:
            throw std::invalid_argument("make_a2: unknown quiver");
    }
    fns.push_back(in_fn(0));
    fns.push_back(in_fn(1));
    fns.push_back(out_fn(0));
    fns.push_back(out_fn(1));

    std::vector<Arrow> arrows, dashed;
    switch (which) {
        case 1:
            arrows = {{0, 4}, {1, 0}, {1, 2}, {2, 5}, {3, 6}, {3, 7}, {6, 0}, {0, 3}, {7, 2}, {2, 3}, {3, 1}};
            dashed = {{4, 6}, {5, 7}};
            break;
        case 2:
            arrows = {{0, 4}, {0, 1}, {2, 1}, {2, 5}, {3, 6}, {3, 7}, {6, 0}, {7, 2}, {1, 3}};
            dashed = {{4, 6}, {5, 7}};
            break;
        case 3:
            arrows = {{4, 0}, {1, 0}, {1, 2}, {5, 2}, {6, 3}, {7, 3}, {0, 6}, {2, 7}, {3, 1}};
            dashed = {{6, 4}, {7, 5}};
            break;
        case 4:
            arrows = {{4, 0}, {0, 1}, {2, 1}, {5, 2}, {6, 3}, {7, 3}, {0, 6}, {2, 7}, {1, 3}, {3, 0}, {3, 2}};
            dashed = {{6, 4}, {7, 5}};
            break;
    }

    FigureQuiver f;
    f.name = "A2-quad-" + std::to_string(which);
    f.quiver = build_quiver(12, 4, fns, std::vector<int>(12, 1), arrows, dashed);
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) {
            int e = kA2Frozen[which - 1][i][c];
            f.quiver.eps2[i][8 + c] = 2 * e;
            f.quiver.eps2[8 + c][i] = -2 * e;
        }
    f.quiver.validate();
    f.fn = fns;
    f.also = std::move(also);
    return f;
}

FigureQuiver make_c2() {
    // Vertex order: v11, v12, v13, v21, v22, v23 (mutable), then v10, v14,
    // v20, v24, Aout1, Ain1, Aout2, Ain2. The first six slots along each
    // letter line interleave with the frozen h-invariant vertices exactly as
    // drawn.
    std::vector<QuadVertexFn> fns = {
        delta_fn(0, 2, 4), delta_fn(0, 4, 3), delta_fn(0, 4, 1),
        delta_fn(1, 3, 4), delta_fn(1, 4, 4), delta_fn(1, 4, 2),
        delta_fn(0, 0, 4), delta_fn(0, 4, 0), delta_fn(1, 1, 4), delta_fn(1, 4, 0),
        out_fn(0), in_fn(0), out_fn(1), in_fn(1)};
    std::vector<int> weights = {1, 1, 1, 2, 2, 2, 1, 1, 2, 2, 1, 1, 2, 2};
    std::vector<Arrow> arrows = {
        // letter-1 line with Aout1 (10) between v10 (6) and v11 (0), and
        // Ain1 (11) between v13 (2) and v12 (1)
        {0, 6}, {1, 0}, {1, 2}, {2, 7}, {6, 10}, {10, 0}, {2, 11}, {11, 1},
        // letter-2 line with Aout2 (12) between v21 (3) and v22 (4), and
        // Ain2 (13) between v24 (9) and v23 (5)
        {3, 8}, {4, 3}, {4, 5}, {5, 9}, {3, 12}, {12, 4}, {9, 13}, {13, 5},
        // crossings between the two lines
        {8, 0}, {0, 3}, {3, 1}, {7, 5}, {5, 2}, {2, 4}};
    std::vector<Arrow> dashed = {{6, 8}, {9, 7}, {12, 10}, {11, 13}};

    FigureQuiver f;
    f.name = "C2-quad";
    f.quiver = build_quiver(14, 6, fns, weights, arrows, dashed);
    f.fn = fns;
    f.also.assign(14, {});
    f.also[0] = {delta_fn(0, 1, 4)};
    f.also[1] = {delta_fn(0, 4, 4), delta_fn(0, 3, 4)};
    f.also[2] = {delta_fn(0, 4, 2)};
    f.also[3] = {delta_fn(1, 2, 4)};
    f.also[5] = {delta_fn(1, 4, 3)};
    f.also[8] = {delta_fn(1, 0, 4)};
    f.also[9] = {delta_fn(1, 4, 1)};
    return f;
}

const std::map<std::string, FigureQuiver>& figure_table() {
    static const std::map<std::string, FigureQuiver> table = [] {
        std::map<std::string, FigureQuiver> t;
        for (bool left : {true, false}) {
            FigureQuiver f = make_a1(left);
            t.emplace(f.name, std::move(f));
        }
        for (int i = 1; i <= 4; ++i) {
            FigureQuiver f = make_a2(i);
            t.emplace(f.name, std::move(f));
        }
        FigureQuiver c2 = make_c2();
        t.emplace(c2.name, std::move(c2));
        return t;
    }();
    return table;
}

} // namespace

const FigureQuiver& figure_quiver(const std::string& name) {
    const auto& table = figure_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("figure_quiver: unknown name " + name);
    return it->second;
}

std::vector<std::string> figure_quiver_names() {
    std::vector<std::string> names;
    for (const auto& [name, f] : figure_table()) names.push_back(name);
    return names;
}

Rat eval_quad_fn(const QuadConfig& cfg, const FlagChain& upper, const FlagChain& lower,
                 const QuadVertexFn& fn) {
    switch (fn.kind) {
        case QuadVertexFn::Kind::Delta:
            return delta_pair(*cfg.model, fn.s, upper.flags[fn.k], lower.flags[fn.l]);
        case QuadVertexFn::Kind::FrozenIn:
            return frozen_invariants(cfg).in[fn.s];
        case QuadVertexFn::Kind::FrozenOut:
            return frozen_invariants(cfg).out[fn.s];
    }
    throw std::logic_error("eval_quad_fn: bad kind");
}

namespace {

struct CutSpec {
    // Vertices strictly in the left / right triangle, diagonal pair, and the
    // side slots (side 0, side 1, side 2 = diagonal) for both halves.
    std::vector<int> left_only, right_only, diag;
    std::array<std::vector<int>, 3> left_sides, right_sides;
    std::vector<int> left_mutable, right_mutable;  // interior vertices
};

CutSpec cut_spec(const std::string& name) {
    CutSpec s;
    if (name == "A1-quad-left" || name == "A1-quad-right") {
        s.diag = {0};
        s.left_only = {1, 3};   // top, Ain1
        s.right_only = {2, 4};  // bottom, Aout1
        s.left_sides = {{{1}, {3}, {0}}};
        s.right_sides = {{{2}, {4}, {0}}};
    } else if (name.rfind("A2-quad-", 0) == 0) {
        s.diag = {1, 3};                 // x12, x21
        s.left_only = {2, 5, 7, 8, 9};   // x13, x14, x22, Ain1, Ain2
        s.right_only = {0, 4, 6, 10, 11};  // x11, x10, x20, Aout1, Aout2
        s.left_sides = {{{5, 7}, {8, 9}, {1, 3}}};
        s.right_sides = {{{4, 6}, {10, 11}, {3, 1}}};
        s.left_mutable = {2};
        s.right_mutable = {0};
    } else if (name == "C2-quad") {
        s.diag = {1, 4};                    // v12, v22
        s.left_only = {2, 5, 7, 9, 11, 13};   // v13, v23, v14, v24, Ain1, Ain2
        s.right_only = {0, 3, 6, 8, 10, 12};  // v11, v21, v10, v20, Aout1, Aout2
        s.left_sides = {{{7, 9}, {11, 13}, {1, 4}}};
        s.right_sides = {{{6, 8}, {10, 12}, {4, 1}}};
        s.left_mutable = {2, 5};
        s.right_mutable = {0, 3};
    } else {
        throw std::invalid_argument("cut_quad_figure: unsupported figure " + name);
    }
    return s;
}

TriangleQuiverData make_piece(const Quiver& quad, const std::vector<int>& own,
                              const std::vector<int>& diag, const std::vector<int>& own_mutable,
                              const std::array<std::vector<int>, 3>& sides) {
    // Piece vertices: mutable interior first, then the rest of `own`, then the
    // frozen diagonal copies.
    std::vector<int> order;
    for (int v : own_mutable) order.push_back(v);
    for (int v : own)
        if (std::find(own_mutable.begin(), own_mutable.end(), v) == own_mutable.end())
            order.push_back(v);
    for (int v : diag) order.push_back(v);

    std::map<int, int> to_local;
    for (size_t i = 0; i < order.size(); ++i) to_local[order[i]] = static_cast<int>(i);

    TriangleQuiverData piece;
    piece.q.n = static_cast<int>(order.size());
    piece.q.m = static_cast<int>(own_mutable.size());
    piece.q.eps2.assign(piece.q.n, std::vector<int>(piece.q.n, 0));
    for (int v : order) {
        piece.q.labels.push_back(quad.labels[v]);
        piece.q.weights.push_back(quad.weights[v]);
    }
    auto in_diag = [&](int v) { return std::find(diag.begin(), diag.end(), v) != diag.end(); };
    for (int a : order)
        for (int b : order) {
            if (quad.eps2[a][b] == 0) continue;
            int value = quad.eps2[a][b];
            if (in_diag(a) && in_diag(b)) {
                // The diagonal pair splits evenly between the two halves.
                if (value % 2 != 0)
                    throw std::logic_error("cut_quad_figure: odd entry on the diagonal pair");
                value /= 2;
            }
            piece.q.eps2[to_local[a]][to_local[b]] = value;
        }
    for (int side = 0; side < 3; ++side)
        for (int v : sides[side]) piece.side_slots[side].push_back(to_local.at(v));
    piece.q.validate();
    return piece;
}

} // namespace

std::pair<TriangleQuiverData, TriangleQuiverData> cut_quad_figure(const std::string& name) {
    const FigureQuiver& fig = figure_quiver(name);
    CutSpec spec = cut_spec(name);

    // No exchange entry may join the two open halves.
    for (int a : spec.left_only)
        for (int b : spec.right_only)
            if (fig.quiver.eps2[a][b] != 0 || fig.quiver.eps2[b][a] != 0)
                throw std::logic_error("cut_quad_figure: arrow crosses the diagonal in " + name);

    TriangleQuiverData left =
        make_piece(fig.quiver, spec.left_only, spec.diag, spec.left_mutable, spec.left_sides);
    TriangleQuiverData right =
        make_piece(fig.quiver, spec.right_only, spec.diag, spec.right_mutable, spec.right_sides);
    return {left, right};
}

Quiver amalgamate_quiver(const IdealTriangulation& tri, const CartanData& cartan,
                         const std::vector<TriangleQuiverData>& pieces) {
    tri.validate();
    if (static_cast<int>(pieces.size()) != tri.triangles)
        throw std::invalid_argument("amalgamate: need one triangle quiver per triangle");
    int r = cartan.rank();
    for (const auto& p : pieces)
        for (const auto& side : p.side_slots)
            if (static_cast<int>(side.size()) != r)
                throw std::invalid_argument("amalgamate: side slot count != rank");

    // Union-find over (piece, vertex).
    std::vector<int> offset(pieces.size() + 1, 0);
    for (size_t p = 0; p < pieces.size(); ++p) offset[p + 1] = offset[p] + pieces[p].q.n;
    int total = offset.back();
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };

    std::vector<bool> glued(total, false);
    for (const auto& [a, b] : tri.gluings) {
        for (int p = 0; p < r; ++p) {
            int va = offset[a.tri] + pieces[a.tri].side_slots[a.side][p];
            int vb = offset[b.tri] + pieces[b.tri].side_slots[b.side][r - 1 - p];
            glued[va] = glued[vb] = true;
            parent[find(va)] = find(vb);
        }
    }

    // Merged vertex is mutable if it was mutable in its piece (interior) or
    // sits on an internal (glued) edge.
    std::map<int, int> root_to_class;
    std::vector<int> class_root;
    for (int v = 0; v < total; ++v) {
        int root = find(v);
        if (!root_to_class.count(root)) {
            root_to_class[root] = static_cast<int>(class_root.size());
            class_root.push_back(root);
        }
    }
    int classes = static_cast<int>(class_root.size());
    std::vector<bool> is_mutable(classes, false);
    std::vector<std::string> labels(classes);
    std::vector<int> weights(classes, 0);
    for (size_t p = 0; p < pieces.size(); ++p) {
        for (int v = 0; v < pieces[p].q.n; ++v) {
            int g = offset[p] + v;
            int cls = root_to_class[find(g)];
            if (v < pieces[p].q.m || glued[g]) is_mutable[cls] = true;
            if (labels[cls].empty()) labels[cls] = pieces[p].q.labels[v];
            if (weights[cls] == 0)
                weights[cls] = pieces[p].q.weights[v];
            else if (weights[cls] != pieces[p].q.weights[v])
                throw std::invalid_argument("amalgamate: incompatible vertex weights on a glued edge");
        }
    }

    // Order: mutable classes first.
    std::vector<int> class_order(classes);
    std::iota(class_order.begin(), class_order.end(), 0);
    std::stable_sort(class_order.begin(), class_order.end(),
                     [&](int a, int b) { return is_mutable[a] > is_mutable[b]; });
    std::vector<int> class_pos(classes);
    for (int i = 0; i < classes; ++i) class_pos[class_order[i]] = i;

    Quiver out;
    out.n = classes;
    out.m = static_cast<int>(std::count(is_mutable.begin(), is_mutable.end(), true));
    out.labels.resize(classes);
    out.weights.resize(classes);
    for (int cls = 0; cls < classes; ++cls) {
        out.labels[class_pos[cls]] = labels[cls];
        out.weights[class_pos[cls]] = weights[cls];
    }
    out.eps2.assign(classes, std::vector<int>(classes, 0));
    for (size_t p = 0; p < pieces.size(); ++p)
        for (int a = 0; a < pieces[p].q.n; ++a)
            for (int b = 0; b < pieces[p].q.n; ++b) {
                if (pieces[p].q.eps2[a][b] == 0) continue;
                int ca = class_pos[root_to_class[find(offset[p] + a)]];
                int cb = class_pos[root_to_class[find(offset[p] + b)]];
                out.eps2[ca][cb] += pieces[p].q.eps2[a][b];
            }
    out.validate();
    return out;
}

Seed amalgamate(const IdealTriangulation& tri, const CartanData& cartan,
                const std::vector<TriangleQuiverData>& pieces) {
    return amalgamate_quiver(tri, cartan, pieces).to_seed();
}

MutationSequence flip_sequence(const std::string& type) {
    if (type == "A1") return {0};
    if (type == "A2") return {1, 0, 3, 2, 1};
    if (type == "C2")
        throw Unsupported("flip_sequence: the C2 flip sequence is not pinned down");
    throw std::invalid_argument("flip_sequence: unknown type " + type);
}

} // namespace wilsonline
