#include "atoro/surgery.hpp"

#include <algorithm>

#include "atoro/curves.hpp"

namespace atoro {

std::vector<SurgeryMove> legal_surgeries(const PlaneMap& g) {
    std::vector<SurgeryMove> out;
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& walk = g.faces()[static_cast<std::size_t>(f)];
        const int k = static_cast<int>(walk.size());
        if (k <= 3) continue;
        for (int i = 0; i < k; ++i) {
            Dart d = walk[static_cast<std::size_t>(i)];
            int e = g.edge_of(d);
            int e1 = g.edge_of(walk[static_cast<std::size_t>((i + k - 1) % k)]);
            int e2 = g.edge_of(walk[static_cast<std::size_t>((i + 1) % k)]);
            out.push_back({f, e, e1, e2, d, false});
            out.push_back({f, e, e2, e1, d, true});
        }
    }
    return out;
}

namespace {

// Locate the face-walk position of the move and check its stated edges.
Dart validate_move(const PlaneMap& g, const SurgeryMove& m) {
    if (m.face < 0 || m.face >= g.face_count()) fail(errc::illegal_move, "no such face");
    const auto& walk = g.faces()[static_cast<std::size_t>(m.face)];
    const int k = static_cast<int>(walk.size());
    if (k <= 3) fail(errc::illegal_move, "face has at most 3 vertices");
    for (int i = 0; i < k; ++i) {
        Dart d = walk[static_cast<std::size_t>(i)];
        if (m.anchor != kNoDart && d != m.anchor) continue;
        if (g.edge_of(d) != m.edge) continue;
        int prev = g.edge_of(walk[static_cast<std::size_t>((i + k - 1) % k)]);
        int next = g.edge_of(walk[static_cast<std::size_t>((i + 1) % k)]);
        if ((m.edge1 == prev && m.edge2 == next) || (m.edge1 == next && m.edge2 == prev)) return d;
    }
    fail(errc::illegal_move, "edges are not adjacent on the face");
}

} // namespace

PlaneMap apply_surgery(const PlaneMap& g, const SurgeryMove& m) {
    Dart d = validate_move(g, m);
    const auto& walk = g.faces()[static_cast<std::size_t>(m.face)];
    const int k = static_cast<int>(walk.size());
    int i = static_cast<int>(std::find(walk.begin(), walk.end(), d) - walk.begin());
    Dart d_prev = walk[static_cast<std::size_t>((i + k - 1) % k)]; // along edge1 side
    Dart d_next = walk[static_cast<std::size_t>((i + 1) % k)];    // along edge2 side

    // New vertex w with ccw slots: 0 toward edge1's start, 1 toward its end,
    // 2 toward edge2's start, 3 toward its end. Slots 1,2 close the triangle
    // with `edge`.
    const int w = g.vertex_count();
    std::vector<Dart> mate(g.mates());
    mate.resize(static_cast<std::size_t>(4 * (w + 1)), kNoDart);
    auto link = [&mate](Dart a, Dart b) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
    };
    Dart m1 = g.mate(d_prev);
    Dart m2 = g.mate(d_next);
    link(d_prev, PlaneMap::dart_at(w, 0));
    link(PlaneMap::dart_at(w, 1), m1);
    link(d_next, PlaneMap::dart_at(w, 2));
    link(PlaneMap::dart_at(w, 3), m2);
    return PlaneMap::from_mates(std::move(mate), g.free_loops());
}

std::vector<std::pair<int, int>> simple_vertices(const PlaneMap& g) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int s = 0; s < 4; ++s) {
            Dart x = PlaneMap::dart_at(v, s);
            int t = g.face_of(x); // face at the corner between x and rot(x)
            if (g.face_size(t) != 3) continue;
            int f1 = g.face_of(g.mate(x));
            int f2 = g.face_of(PlaneMap::rot(x));
            if (g.face_size(f1) > 3 && g.face_size(f2) > 3) out.push_back({v, t});
        }
    }
    return out;
}

PlaneMap split_at(const PlaneMap& g, SplitMove s) {
    if (s.vertex < 0 || s.vertex >= g.vertex_count()) fail(errc::not_simple_vertex, "no such vertex");
    Dart corner = kNoDart;
    for (int slot = 0; slot < 4; ++slot) {
        Dart x = PlaneMap::dart_at(s.vertex, slot);
        if (g.face_size(g.face_of(x)) != 3) continue;
        if (g.face_size(g.face_of(g.mate(x))) > 3 && g.face_size(g.face_of(PlaneMap::rot(x))) > 3) {
            corner = x;
            break;
        }
    }
    if (corner == kNoDart) fail(errc::not_simple_vertex, "vertex is not simple");

    // Strand pairing: each triangle-flanking dart reconnects with its
    // neighbor away from the triangle.
    Dart x0 = PlaneMap::rot_inv(corner);
    Dart x1 = corner;
    Dart x2 = PlaneMap::rot(corner);
    Dart x3 = PlaneMap::rot(x2);
    Dart a = g.mate(x0), b = g.mate(x1), c = g.mate(x2), e = g.mate(x3);
    if (PlaneMap::vertex_of(a) == s.vertex || PlaneMap::vertex_of(b) == s.vertex ||
        PlaneMap::vertex_of(c) == s.vertex || PlaneMap::vertex_of(e) == s.vertex)
        fail(errc::not_simple_vertex, "vertex carries a loop");

    std::vector<Dart> mate(g.mates());
    auto link = [&mate](Dart p, Dart q) {
        mate[static_cast<std::size_t>(p)] = q;
        mate[static_cast<std::size_t>(q)] = p;
    };
    link(a, b);
    link(c, e);

    // move the last vertex into the removed slot
    const int last = g.vertex_count() - 1;
    if (s.vertex != last) {
        for (int slot = 0; slot < 4; ++slot) {
            Dart from = PlaneMap::dart_at(last, slot);
            Dart to = PlaneMap::dart_at(s.vertex, slot);
            Dart fm = mate[static_cast<std::size_t>(from)];
            link(to, fm);
        }
    }
    mate.resize(static_cast<std::size_t>(4 * last));
    return PlaneMap::from_mates(std::move(mate), g.free_loops());
}

std::vector<std::pair<SplitMove, PlaneMap>> atoroidal_predecessors(const PlaneMap& g) {
    std::vector<std::pair<SplitMove, PlaneMap>> out;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& [v, t] : simple_vertices(g)) {
        (void)t;
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        PlaneMap h = split_at(g, {v});
        if (is_atoroidal(h)) out.push_back({SplitMove{v}, std::move(h)});
    }
    return out;
}

} // namespace atoro
