#include "atoro/decompose.hpp"

#include <algorithm>

namespace atoro {

namespace {

// piece dart of a disk dart; the collapse vertex comes after the interiors
Dart piece_dart(const SideGraphData& side, int disk_dart) {
    const int n = side.n;
    const int interior = static_cast<int>(side.vertex_ids.size());
    if (disk_dart < n) return PlaneMap::dart_at(interior, disk_dart);
    return static_cast<Dart>(disk_dart - n);
}

// piece with the collapse vertex kept (degree must be 4)
PlaneMap side_to_map_keep(const SideGraphData& side) {
    const int n = side.n;
    const int interior = static_cast<int>(side.vertex_ids.size());
    std::vector<Dart> mate(static_cast<std::size_t>(4 * (interior + 1)), kNoDart);
    for (int dd = 0; dd < side.disk.dart_count(); ++dd)
        mate[static_cast<std::size_t>(piece_dart(side, dd))] =
            piece_dart(side, side.disk.mate[static_cast<std::size_t>(dd)]);
    (void)n;
    return PlaneMap::from_mates(std::move(mate), 0);
}

// piece with the degree-2 collapse point smoothed away
PlaneMap side_to_map_smooth(const SideGraphData& side, std::array<Dart, 2>& scar) {
    const int interior = static_cast<int>(side.vertex_ids.size());
    int m0 = side.disk.mate[0];
    int m1 = side.disk.mate[1];
    if (m0 < 2 || m1 < 2) fail(errc::trivial_curve, "a degree-2 side is a bare arc");
    std::vector<Dart> mate(static_cast<std::size_t>(4 * interior), kNoDart);
    for (int dd = 2; dd < side.disk.dart_count(); ++dd) {
        int md = side.disk.mate[static_cast<std::size_t>(dd)];
        if (md < 2) continue;
        mate[static_cast<std::size_t>(dd - 2)] = static_cast<Dart>(md - 2);
    }
    Dart a = static_cast<Dart>(m0 - 2);
    Dart b = static_cast<Dart>(m1 - 2);
    mate[static_cast<std::size_t>(a)] = b;
    mate[static_cast<std::size_t>(b)] = a;
    // scar[t] = the end that was attached to crossing t
    for (int t = 0; t < 2; ++t)
        scar[static_cast<std::size_t>(t)] = side.germ_of_crossing[static_cast<std::size_t>(t)] == 0 ? a : b;
    return PlaneMap::from_mates(std::move(mate), 0);
}

PlaneMap component_submap(const PlaneMap& g, std::uint64_t mask, bool in_mask, int& loops_out) {
    std::vector<int> new_id(static_cast<std::size_t>(g.vertex_count()), -1);
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool take = ((mask >> g.component_of(v)) & 1) != 0;
        if (take == in_mask) new_id[static_cast<std::size_t>(v)] = count++;
    }
    std::vector<Dart> mate(static_cast<std::size_t>(4 * count), kNoDart);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (new_id[static_cast<std::size_t>(v)] < 0) continue;
        for (int s = 0; s < 4; ++s) {
            Dart m = g.mate(PlaneMap::dart_at(v, s));
            mate[static_cast<std::size_t>(PlaneMap::dart_at(new_id[static_cast<std::size_t>(v)], s))] =
                PlaneMap::dart_at(new_id[static_cast<std::size_t>(PlaneMap::vertex_of(m))],
                                  PlaneMap::slot_of(m));
        }
    }
    loops_out = 0;
    for (int j = 0; j < g.free_loops(); ++j) {
        bool take = ((mask >> (g.vertex_component_count() + j)) & 1) != 0;
        if (take == in_mask) ++loops_out;
    }
    return PlaneMap::from_mates(std::move(mate), loops_out);
}

} // namespace

CutResult cut_along(const PlaneMap& g, const CurveCode& c) {
    const int n = c.n();
    if (n != 0 && n != 2 && n != 4) fail(errc::bad_degree, "cuts run along curves of degree 0, 2 or 4");
    if (is_trivial(g, c)) fail(errc::trivial_curve, "refusing to cut along a trivial curve");

    CutResult out;
    out.glue.n = n;
    if (n == 0) {
        int l1 = 0, l2 = 0;
        out.left = component_submap(g, c.component_mask, true, l1);
        out.right = component_submap(g, c.component_mask, false, l2);
        return out;
    }

    auto [left, right] = split_sides(g, c);
    if (n == 2) {
        out.left = side_to_map_smooth(left, out.glue.left_scar);
        out.right = side_to_map_smooth(right, out.glue.right_scar);
        return out;
    }
    out.left = side_to_map_keep(left);
    out.right = side_to_map_keep(right);
    out.glue.left_vertex = static_cast<int>(left.vertex_ids.size());
    out.glue.right_vertex = static_cast<int>(right.vertex_ids.size());
    for (int t = 0; t < 4; ++t)
        out.glue.perm4[static_cast<std::size_t>(left.germ_of_crossing[static_cast<std::size_t>(t)])] =
            right.germ_of_crossing[static_cast<std::size_t>(t)];
    return out;
}

namespace {

PlaneMap disjoint_union(const PlaneMap& a, const PlaneMap& b) {
    const int shift = a.vertex_count();
    std::vector<Dart> mate(static_cast<std::size_t>(4 * (shift + b.vertex_count())), kNoDart);
    for (Dart d = 0; d < a.dart_count(); ++d) mate[static_cast<std::size_t>(d)] = a.mate(d);
    for (Dart d = 0; d < b.dart_count(); ++d)
        mate[static_cast<std::size_t>(d + 4 * shift)] = b.mate(d) + 4 * shift;
    return PlaneMap::from_mates(std::move(mate), a.free_loops() + b.free_loops());
}

} // namespace

PlaneMap glue_back(const PlaneMap& left, const PlaneMap& right, const GluingRecord& record) {
    if (record.n == 0) return disjoint_union(left, right);

    if (record.n == 2) {
        for (Dart d : record.left_scar)
            if (d < 0 || d >= left.dart_count()) fail(errc::inconsistent_gluing, "scar dart out of range");
        for (Dart d : record.right_scar)
            if (d < 0 || d >= right.dart_count()) fail(errc::inconsistent_gluing, "scar dart out of range");
        if (left.mate(record.left_scar[0]) != record.left_scar[1] ||
            right.mate(record.right_scar[0]) != record.right_scar[1])
            fail(errc::inconsistent_gluing, "scar darts do not form an edge");
        const int shift = 4 * left.vertex_count();
        std::vector<Dart> mate(static_cast<std::size_t>(4 * (left.vertex_count() + right.vertex_count())),
                               kNoDart);
        for (Dart d = 0; d < left.dart_count(); ++d) mate[static_cast<std::size_t>(d)] = left.mate(d);
        for (Dart d = 0; d < right.dart_count(); ++d)
            mate[static_cast<std::size_t>(d + shift)] = right.mate(d) + shift;
        auto link = [&mate](Dart a, Dart b) {
            mate[static_cast<std::size_t>(a)] = b;
            mate[static_cast<std::size_t>(b)] = a;
        };
        link(record.left_scar[0], record.right_scar[0] + shift);
        link(record.left_scar[1], record.right_scar[1] + shift);
        try {
            return PlaneMap::from_mates(std::move(mate), left.free_loops() + right.free_loops());
        } catch (const error&) {
            fail(errc::inconsistent_gluing, "regluing produced an invalid map");
        }
    }

    if (record.n != 4) fail(errc::inconsistent_gluing, "unknown gluing degree");
    if (record.left_vertex < 0 || record.left_vertex >= left.vertex_count() ||
        record.right_vertex < 0 || record.right_vertex >= right.vertex_count())
        fail(errc::inconsistent_gluing, "collapse vertex out of range");
    {
        std::array<char, 4> seen{};
        for (int s = 0; s < 4; ++s) {
            int p = record.perm4[static_cast<std::size_t>(s)];
            if (p < 0 || p >= 4 || seen[static_cast<std::size_t>(p)])
                fail(errc::inconsistent_gluing, "slot matching is not a permutation");
            seen[static_cast<std::size_t>(p)] = 1;
        }
    }

    // Vertex numbering: left interiors, then right interiors. The collapse
    // vertices are dropped; their strands chain through crossings.
    const int lv = left.vertex_count(), rv = right.vertex_count();
    auto map_left = [&](Dart d) {
        int v = PlaneMap::vertex_of(d);
        if (v > record.left_vertex) v -= 1;
        return PlaneMap::dart_at(v, PlaneMap::slot_of(d));
    };
    auto map_right = [&](Dart d) {
        int v = PlaneMap::vertex_of(d);
        if (v > record.right_vertex) v -= 1;
        return PlaneMap::dart_at(lv - 1 + v, PlaneMap::slot_of(d));
    };

    std::vector<Dart> mate(static_cast<std::size_t>(4 * (lv + rv - 2)), kNoDart);
    auto link = [&mate](Dart a, Dart b) {
        if (a < 0 || b < 0 || a == b) fail(errc::inconsistent_gluing, "strand chain collapsed");
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
    };
    for (Dart d = 0; d < left.dart_count(); ++d) {
        if (PlaneMap::vertex_of(d) == record.left_vertex) continue;
        Dart m = left.mate(d);
        if (PlaneMap::vertex_of(m) == record.left_vertex) continue;
        mate[static_cast<std::size_t>(map_left(d))] = map_left(m);
    }
    for (Dart d = 0; d < right.dart_count(); ++d) {
        if (PlaneMap::vertex_of(d) == record.right_vertex) continue;
        Dart m = right.mate(d);
        if (PlaneMap::vertex_of(m) == record.right_vertex) continue;
        mate[static_cast<std::size_t>(map_right(d))] = map_right(m);
    }

    // hooks: 2*s = crossing slot s on the left, 2*s+1 on the right
    auto left_hook_attachment = [&](int s) { return left.mate(PlaneMap::dart_at(record.left_vertex, s)); };
    auto right_hook_attachment = [&](int s) {
        return right.mate(PlaneMap::dart_at(record.right_vertex, record.perm4[static_cast<std::size_t>(s)]));
    };
    std::array<char, 8> used{};
    for (int s0 = 0; s0 < 4; ++s0) {
        for (int side0 = 0; side0 < 2; ++side0) {
            if (used[static_cast<std::size_t>(2 * s0 + side0)]) continue;
            // walk one chain end; ends terminate at interior darts
            int s = s0, side = side0;
            Dart first = kNoDart;
            // find the attachment at this end
            Dart att = side == 0 ? left_hook_attachment(s) : right_hook_attachment(s);
            bool att_is_collapse =
                side == 0 ? PlaneMap::vertex_of(att) == record.left_vertex
                          : PlaneMap::vertex_of(att) == record.right_vertex;
            if (att_is_collapse) continue; // handled from the other end of the through-segment
            first = side == 0 ? map_left(att) : map_right(att);
            // cross to the partner side repeatedly until an interior attachment
            Dart final_dart = kNoDart;
            int guard = 0;
            while (true) {
                if (++guard > 16) fail(errc::inconsistent_gluing, "strand chain does not terminate");
                used[static_cast<std::size_t>(2 * s + side)] = 1;
                int other_side = 1 - side;
                Dart o = other_side == 0 ? left_hook_attachment(s) : right_hook_attachment(s);
                used[static_cast<std::size_t>(2 * s + other_side)] = 1;
                bool through = other_side == 0 ? PlaneMap::vertex_of(o) == record.left_vertex
                                               : PlaneMap::vertex_of(o) == record.right_vertex;
                if (!through) {
                    final_dart = other_side == 0 ? map_left(o) : map_right(o);
                    break;
                }
                // o is a collapse-vertex dart: continue at its slot
                if (other_side == 0) {
                    s = PlaneMap::slot_of(o);
                } else {
                    int slot = PlaneMap::slot_of(o);
                    s = -1;
                    for (int k = 0; k < 4; ++k)
                        if (record.perm4[static_cast<std::size_t>(k)] == slot) s = k;
                    if (s < 0) fail(errc::inconsistent_gluing, "slot matching broke a chain");
                }
                side = other_side;
            }
            link(first, final_dart);
        }
    }
    for (char u : used)
        if (!u) fail(errc::inconsistent_gluing, "strand chain closed into a circle");

    try {
        return PlaneMap::from_mates(std::move(mate), left.free_loops() + right.free_loops());
    } catch (const error&) {
        fail(errc::inconsistent_gluing, "regluing produced an invalid map");
    }
}

DecompositionTree decompose(const PlaneMap& g) {
    auto found = find_nontrivial_curve(g, 4);
    DecompositionTree t;
    if (!found) {
        t.leaf = true;
        t.graph = g;
        return t;
    }
    CutResult r = cut_along(g, found->second);
    if (r.left.vertex_count() > g.vertex_count() || r.right.vertex_count() > g.vertex_count())
        fail(errc::invariant_violation, "cut did not shrink the graph");
    t.leaf = false;
    t.cut_n = found->first;
    t.curve = found->second;
    t.glue = r.glue;
    t.left = std::make_unique<DecompositionTree>(decompose(r.left));
    t.right = std::make_unique<DecompositionTree>(decompose(r.right));
    return t;
}

PlaneMap reassemble(const DecompositionTree& tree) {
    if (tree.leaf) return tree.graph;
    PlaneMap l = reassemble(*tree.left);
    PlaneMap r = reassemble(*tree.right);
    return glue_back(l, r, tree.glue);
}

std::vector<const PlaneMap*> leaves(const DecompositionTree& tree) {
    std::vector<const PlaneMap*> out;
    std::vector<const DecompositionTree*> stack{&tree};
    while (!stack.empty()) {
        const DecompositionTree* t = stack.back();
        stack.pop_back();
        if (t->leaf) {
            out.push_back(&t->graph);
            continue;
        }
        stack.push_back(t->right.get());
        stack.push_back(t->left.get());
    }
    return out;
}

} // namespace atoro
