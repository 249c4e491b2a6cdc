#pragma once

#include "wilsonline/cartan.hpp"
#include "wilsonline/cluster.hpp"
#include "wilsonline/conf.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace wilsonline {

// Compact oriented surface with marked points on the boundary; no punctures.
struct MarkedSurface {
    int genus = 0;
    std::vector<int> boundary_marked;  // marked points per boundary component

    int boundary_components() const { return static_cast<int>(boundary_marked.size()); }
    int marked_total() const;
    int euler_characteristic() const { return 2 - 2 * genus - boundary_components(); }
    // n(Sigma) = -3 chi + 2 |M|; must be positive, and a disk needs >= 3 marked
    // points, for an ideal triangulation to exist.
    void validate() const;
};

struct TriangulationCounts {
    long triangles;
    long edges;
};
TriangulationCounts counts(const MarkedSurface& surface);

struct SeedSizes {
    long n;
    long m;
};
SeedSizes seed_sizes(const MarkedSurface& surface, const CartanData& cartan);

struct TriSide {
    int tri;
    int side;  // 0..2
    bool operator==(const TriSide& o) const { return tri == o.tri && side == o.side; }
};

// Purely combinatorial ideal triangulation: triangles with side gluings.
struct IdealTriangulation {
    int triangles = 0;
    std::vector<std::pair<TriSide, TriSide>> gluings;

    void validate() const;
    int internal_edges() const { return static_cast<int>(gluings.size()); }
    int edge_count() const { return 3 * triangles - internal_edges(); }
    int boundary_edges() const { return 3 * triangles - 2 * internal_edges(); }

    // Fan triangulation of a disk with k marked points (k >= 3).
    static IdealTriangulation polygon(int k);
};

// Function attached to a quadrilateral quiver vertex.
struct QuadVertexFn {
    enum class Kind { Delta, FrozenIn, FrozenOut };
    Kind kind = Kind::Delta;
    int s = 0;  // fundamental index
    int k = 0;  // upper chain index (Delta only)
    int l = 0;  // lower chain index (Delta only)
};

struct FigureQuiver {
    std::string name;
    Quiver quiver;
    std::vector<QuadVertexFn> fn;                 // primary function per vertex
    std::vector<std::vector<QuadVertexFn>> also;  // equal alternates, per vertex
};

// Encoded quadrilateral quivers: A1-quad-left, A1-quad-right, A2-quad-1..4,
// C2-quad. The A2 quivers include the four frozen h-invariant vertices that
// the source figure omits.
const FigureQuiver& figure_quiver(const std::string& name);
std::vector<std::string> figure_quiver_names();

// Evaluate a vertex function at a configuration, given the standard chains.
Rat eval_quad_fn(const QuadConfig& cfg, const FlagChain& upper, const FlagChain& lower,
                 const QuadVertexFn& fn);

// Triangle quiver with its side slots (r vertices per side, in order).
struct TriangleQuiverData {
    Quiver q;
    std::array<std::vector<int>, 3> side_slots;
};

// Halves of a quadrilateral quiver cut along its diagonal; gluing them back
// along side 2 reproduces the quadrilateral.
std::pair<TriangleQuiverData, TriangleQuiverData> cut_quad_figure(const std::string& name);

// Glue triangle quivers along the triangulation: identified vertices become
// one vertex (mutable on internal edges) and exchange entries add.
Quiver amalgamate_quiver(const IdealTriangulation& tri, const CartanData& cartan,
                         const std::vector<TriangleQuiverData>& pieces);
Seed amalgamate(const IdealTriangulation& tri, const CartanData& cartan,
                const std::vector<TriangleQuiverData>& pieces);

// Mutation sequence realizing the diagonal flip on the quadrilateral seed.
// Supported for A1 and A2; the C2 sequence is not pinned down and throws
// Unsupported.
MutationSequence flip_sequence(const std::string& type);

} // namespace wilsonline
