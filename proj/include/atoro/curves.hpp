#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "atoro/genmap.hpp"
#include "atoro/planemap.hpp"

namespace atoro {

// One transversal intersection of a curve with the graph: `rank` orders the
// intersection points along the edge, counted from the end at the smaller
// dart of the edge.
struct CurvePoint {
    int edge = 0;
    int rank = 0;

    auto operator<=>(const CurvePoint&) const = default;
};

// Isotopy class of a simple closed curve meeting the graph transversally.
// crossings[t] and crossings[t+1] are joined by an arc inside the face
// passages[t]; the last passage closes the cycle. A curve with no crossings
// either sits inside one face (passages = {face}) or, on a disconnected map,
// separates the components in `component_mask` from the rest.
struct CurveCode {
    std::vector<CurvePoint> crossings;
    std::vector<int> passages;
    std::uint64_t component_mask = 0;

    int n() const { return static_cast<int>(crossings.size()); }
    bool is_separator() const { return crossings.empty() && passages.empty(); }

    auto operator<=>(const CurveCode&) const = default;

    // Least representative over cyclic rotation and orientation reversal.
    CurveCode normalized() const;
};

enum class SidePattern {
    Empty,
    SingleArc,
    TwoDisjointArcs,
    TwoArcsCrossingAtVertex,
    VertexNeighborhood,
    TwoParallelArcs,
    SixTrivialType1, // three arcs, all side by side
    SixTrivialType2, // three arcs, one pair nested
    SixTrivialType3, // vertex with four legs plus a separate arc
    SixTrivialType4, // two vertices joined by an edge, six legs
    NonTrivial,
};

const char* side_pattern_name(SidePattern p);

// One side of a curve, with the boundary circle collapsed to vertex 0 of
// `disk` (degree n, darts in curve order). Interior vertices follow in the
// order of `vertex_ids`; each keeps its original slot order.
struct SideGraphData {
    int n = 0;
    GenMap disk;
    std::vector<int> vertex_ids; // original vertex of disk vertex i+1
    std::vector<int> germ_of_crossing; // crossing t -> dart position at vertex 0
    int free_loops = 0;
};

// All taut isotopy classes of simple curves crossing the graph n times,
// n in {0,2,4,6}, normalized and deduplicated. Crossing enumeration for
// n >= 2 requires a connected map.
std::set<CurveCode> enumerate_curves(const PlaneMap& g, int n);

std::pair<SideGraphData, SideGraphData> split_sides(const PlaneMap& g, const CurveCode& c);

SidePattern classify_side(const SideGraphData& side, int n);

// For n <= 4 a curve is trivial when one side matches an elementary pattern;
// for n = 6 when it bounds a vertex neighborhood or admits a compression.
bool is_trivial(const PlaneMap& g, const CurveCode& c);

// Compression-based route, defined for n >= 4: the curve bounds a vertex
// neighborhood, or an arc meeting the graph at most once splits it into two
// arcs each carrying at least two intersection points.
bool is_trivial_by_compression(const PlaneMap& g, const CurveCode& c);

bool is_irreducible(const PlaneMap& g);
bool is_atoroidal(const PlaneMap& g);
bool is_hyperbolic(const PlaneMap& g);

// Slow reference routes that walk every enumerated curve. Used by tests to
// pin the cut-based implementations above.
bool is_irreducible_by_curves(const PlaneMap& g);
bool is_atoroidal_by_curves(const PlaneMap& g);

std::optional<ExceptionKind> as_exception(const PlaneMap& g);

// Least non-trivial curve of minimal degree <= n_max, if any.
std::optional<std::pair<int, CurveCode>> find_nontrivial_curve(const PlaneMap& g, int n_max = 4);

// All vertex bipartitions with both sides >= min_side vertices and exactly
// `cut_size` edges across. Masks include vertex 0's side complemented away.
std::vector<std::uint64_t> vertex_cuts(const PlaneMap& g, int cut_size, int min_side);

// The curve crossing each edge of a minimal 4-edge cut once. Helper shared
// by find_nontrivial_curve and the decomposition.
CurveCode curve_from_cut(const PlaneMap& g, const std::vector<int>& cut_edges);

} // namespace atoro
