#pragma once

#include <array>
#include <memory>

#include "atoro/curves.hpp"
#include "atoro/planemap.hpp"

namespace atoro {

// Everything needed to undo one cut. For degree 2 the pieces carry a scar
// edge each (darts aligned by crossing); for degree 4 each piece gained a
// collapse vertex whose slot s on the left matches slot perm4[s] on the
// right. Degree 0 splits are plain disjoint unions.
struct GluingRecord {
    int n = 0;
    std::array<Dart, 2> left_scar{kNoDart, kNoDart};
    std::array<Dart, 2> right_scar{kNoDart, kNoDart};
    int left_vertex = -1;
    int right_vertex = -1;
    std::array<int, 4> perm4{0, 1, 2, 3};

    bool operator==(const GluingRecord&) const = default;
};

struct CutResult {
    PlaneMap left;
    PlaneMap right;
    GluingRecord glue;
};

// Cut the sphere along a non-trivial curve of degree 0, 2 or 4 and collapse
// each boundary to a point. Degree 2 collapse points are smoothed away;
// degree 4 collapse points become new 4-valent vertices (last index).
CutResult cut_along(const PlaneMap& g, const CurveCode& c);

// Inverse of cut_along on its own output.
PlaneMap glue_back(const PlaneMap& left, const PlaneMap& right, const GluingRecord& record);

struct DecompositionTree {
    bool leaf = true;
    PlaneMap graph; // leaves only
    int cut_n = 0;
    CurveCode curve;
    GluingRecord glue;
    std::unique_ptr<DecompositionTree> left;
    std::unique_ptr<DecompositionTree> right;
};

// Repeatedly cut along a least non-trivial curve of minimal degree until
// every piece is atoroidal.
DecompositionTree decompose(const PlaneMap& g);

PlaneMap reassemble(const DecompositionTree& tree);

// Leaves in order.
std::vector<const PlaneMap*> leaves(const DecompositionTree& tree);

} // namespace atoro
