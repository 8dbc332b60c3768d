#pragma once

#include <vector>

#include "atoro/planemap.hpp"

namespace atoro {

// Pinch data: on face `face` (size > 3), `edge1` and `edge2` are the two
// boundary edges adjacent to `edge`. `anchor` is the dart of `edge` on the
// face walk; `swapped` records the listing order of edge1/edge2 only.
struct SurgeryMove {
    int face = 0;
    int edge = 0;
    int edge1 = 0;
    int edge2 = 0;
    Dart anchor = kNoDart;
    bool swapped = false;

    auto operator<=>(const SurgeryMove&) const = default;
};

struct SplitMove {
    int vertex = 0;

    auto operator<=>(const SplitMove&) const = default;
};

// Every (face, edge, adjacent-pair) choice on faces with more than 3
// vertices, in both listing orders.
std::vector<SurgeryMove> legal_surgeries(const PlaneMap& g);

// Pinch edge1 and edge2 together across the face; the new vertex (index V)
// closes a triangle with `edge`. The result has one more vertex.
PlaneMap apply_surgery(const PlaneMap& g, const SurgeryMove& m);

// Vertices of a triangle whose two neighboring faces across the triangle's
// edges at that vertex both have more than 3 sides.
std::vector<std::pair<int, int>> simple_vertices(const PlaneMap& g);

// Undo the pinch at a simple vertex. The removed vertex's slot is filled by
// the last vertex. Inverse of apply_surgery up to isomorphism.
PlaneMap split_at(const PlaneMap& g, SplitMove s);

// All simple-vertex splits whose result is atoroidal; each has one vertex
// fewer than g.
std::vector<std::pair<SplitMove, PlaneMap>> atoroidal_predecessors(const PlaneMap& g);

} // namespace atoro
