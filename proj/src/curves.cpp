#include "atoro/curves.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "atoro/canon.hpp"

namespace atoro {

// ---------------------------------------------------------------------------
// GenMap

GenMap GenMap::build(std::vector<int> degrees, std::vector<int> mates) {
    GenMap m;
    m.degree = std::move(degrees);
    m.mate = std::move(mates);
    m.first.resize(m.degree.size());
    int at = 0;
    for (std::size_t v = 0; v < m.degree.size(); ++v) {
        m.first[v] = at;
        at += m.degree[v];
    }
    if (at != static_cast<int>(m.mate.size()))
        fail(errc::invariant_violation, "side map dart count mismatch");
    m.dart_vertex.resize(m.mate.size());
    for (std::size_t v = 0; v < m.degree.size(); ++v)
        for (int k = 0; k < m.degree[v]; ++k)
            m.dart_vertex[static_cast<std::size_t>(m.first[v] + k)] = static_cast<int>(v);
    for (int d = 0; d < m.dart_count(); ++d) {
        int md = m.mate[static_cast<std::size_t>(d)];
        if (md < 0 || md >= m.dart_count() || md == d || m.mate[static_cast<std::size_t>(md)] != d)
            fail(errc::invariant_violation, "side map mate is not an involution");
    }

    if (!m.degree.empty()) {
        std::vector<char> seen(m.degree.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k = 0; k < m.degree[static_cast<std::size_t>(v)]; ++k) {
                int w = m.dart_vertex[static_cast<std::size_t>(
                    m.mate[static_cast<std::size_t>(m.first[static_cast<std::size_t>(v)] + k)])];
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != m.vertex_count())
            fail(errc::invariant_violation, "side map is disconnected");
    }

    int f = static_cast<int>(m.faces().size());
    int euler = m.vertex_count() - m.dart_count() / 2 + f;
    if (euler != 2) fail(errc::invariant_violation, "side map is not spherical");
    return m;
}

std::vector<std::vector<int>> GenMap::faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(mate.size(), 0);
    for (int d0 = 0; d0 < dart_count(); ++d0) {
        if (seen[static_cast<std::size_t>(d0)]) continue;
        std::vector<int> cycle;
        int d = d0;
        do {
            seen[static_cast<std::size_t>(d)] = 1;
            cycle.push_back(d);
            d = face_next(d);
        } while (d != d0);
        out.push_back(std::move(cycle));
    }
    return out;
}

namespace {

std::vector<int> gen_face_of(const GenMap& m, const std::vector<std::vector<int>>& faces) {
    std::vector<int> face_of(m.mate.size(), -1);
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (int d : faces[f]) face_of[static_cast<std::size_t>(d)] = static_cast<int>(f);
    return face_of;
}

// ---------------------------------------------------------------------------
// Overlay: the curve inserted into the map as real structure. Crossing t
// becomes a vertex with slot 0 pointing along its edge toward the
// smaller-dart end, slot 2 toward the larger, and slots 1/3 carrying the
// curve. Realizability of a code is exactly sphericity of the overlay.

struct Overlay {
    PlaneMap map;
    std::vector<Dart> curve_out;   // per crossing: dart of the arc to the next crossing
    std::vector<int> side_of_face; // 0/1 per overlay face
    int left_side = 0;             // side left of the arc leaving crossing 0
};

void check_curve_shape(const PlaneMap& g, const CurveCode& c) {
    const int n = c.n();
    if (n % 2 != 0 || n > 6) fail(errc::bad_degree, "curve degree must be 0, 2, 4 or 6");
    if (n == 0) {
        if (c.is_separator()) {
            if (g.connected()) fail(errc::unrealizable_code, "separator on a connected map");
            std::uint64_t all = (std::uint64_t{1} << g.component_count()) - 1;
            if (c.component_mask == 0 || (c.component_mask & ~all) != 0 || c.component_mask == all)
                fail(errc::unrealizable_code, "bad separator component mask");
            return;
        }
        if (c.passages.size() != 1 || c.passages[0] < 0 || c.passages[0] >= g.total_face_count())
            fail(errc::unrealizable_code, "degree-0 code must name one face");
        return;
    }
    if (static_cast<int>(c.passages.size()) != n)
        fail(errc::unrealizable_code, "passage count must equal crossing count");
    if (g.vertex_count() == 0) fail(errc::unrealizable_code, "no edges to cross");
    if (!g.connected()) fail(errc::disconnected, "crossing curves need a connected map");
}

Overlay build_overlay(const PlaneMap& g, const CurveCode& c) {
    check_curve_shape(g, c);
    const int n = c.n();
    const int nv = g.vertex_count();

    std::map<int, std::vector<int>> chains; // edge -> crossing index per rank
    for (int t = 0; t < n; ++t) {
        const CurvePoint& x = c.crossings[static_cast<std::size_t>(t)];
        if (x.edge < 0 || x.edge >= g.dart_count() || g.edge_of(x.edge) != x.edge)
            fail(errc::unrealizable_code, "bad edge id in curve code");
        auto& ch = chains[x.edge];
        if (x.rank < 0 || x.rank >= n) fail(errc::unrealizable_code, "rank out of range");
        if (static_cast<int>(ch.size()) <= x.rank) ch.resize(static_cast<std::size_t>(x.rank) + 1, -1);
        if (ch[static_cast<std::size_t>(x.rank)] != -1)
            fail(errc::unrealizable_code, "duplicate crossing point");
        ch[static_cast<std::size_t>(x.rank)] = t;
    }
    for (auto& [e, ch] : chains)
        for (int v : ch)
            if (v < 0) fail(errc::unrealizable_code, "ranks on an edge must be contiguous from 0");

    for (int t = 0; t < n; ++t) {
        const CurvePoint& x = c.crossings[static_cast<std::size_t>(t)];
        int fa = g.face_of(x.edge);
        int fb = g.face_of(g.mate(x.edge));
        int before = c.passages[static_cast<std::size_t>((t + n - 1) % n)];
        int after = c.passages[static_cast<std::size_t>(t)];
        if (!((before == fa && after == fb) || (before == fb && after == fa)))
            fail(errc::unrealizable_code, "passages do not match the sides of a crossed edge");
    }

    std::vector<Dart> mate(static_cast<std::size_t>(4 * (nv + n)), kNoDart);
    auto link = [&mate](Dart a, Dart b) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
    };
    for (Dart d = 0; d < g.dart_count(); ++d)
        mate[static_cast<std::size_t>(d)] = g.mate(d);

    for (const auto& [e, ch] : chains) {
        Dart lo = static_cast<Dart>(e);
        Dart hi = g.mate(lo);
        Dart prev = lo;
        for (int idx : ch) {
            link(prev, PlaneMap::dart_at(nv + idx, 0));
            prev = PlaneMap::dart_at(nv + idx, 2);
        }
        link(prev, hi);
    }
    std::vector<Dart> out_dart(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        const CurvePoint& x = c.crossings[static_cast<std::size_t>(t)];
        bool exits_left = c.passages[static_cast<std::size_t>(t)] == g.face_of(x.edge);
        out_dart[static_cast<std::size_t>(t)] = PlaneMap::dart_at(nv + t, exits_left ? 3 : 1);
    }
    for (int t = 0; t < n; ++t) {
        Dart out = out_dart[static_cast<std::size_t>(t)];
        int u = (t + 1) % n;
        Dart in = PlaneMap::dart_at(nv + u,
                                    PlaneMap::slot_of(out_dart[static_cast<std::size_t>(u)]) == 3 ? 1 : 3);
        link(out, in);
    }

    Overlay ov;
    try {
        ov.map = PlaneMap::from_mates(std::move(mate), g.free_loops());
    } catch (const error&) {
        fail(errc::unrealizable_code, "curve code is not embeddable in the sphere");
    }
    ov.curve_out = std::move(out_dart);

    auto is_curve_dart = [&](Dart d) {
        return PlaneMap::vertex_of(d) >= nv && (PlaneMap::slot_of(d) & 1) == 1;
    };
    ov.side_of_face.assign(static_cast<std::size_t>(ov.map.face_count()), -1);
    std::vector<int> stack{0};
    ov.side_of_face[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (Dart d : ov.map.faces()[static_cast<std::size_t>(f)]) {
            int f2 = ov.map.face_of(ov.map.mate(d));
            int want = is_curve_dart(d) || is_curve_dart(ov.map.mate(d))
                           ? 1 - ov.side_of_face[static_cast<std::size_t>(f)]
                           : ov.side_of_face[static_cast<std::size_t>(f)];
            int& got = ov.side_of_face[static_cast<std::size_t>(f2)];
            if (got == -1) {
                got = want;
                stack.push_back(f2);
            } else if (got != want) {
                fail(errc::invariant_violation, "curve does not two-color the sphere");
            }
        }
    }
    ov.left_side = ov.side_of_face[static_cast<std::size_t>(ov.map.face_of(ov.curve_out[0]))];
    return ov;
}

bool overlay_is_taut(const Overlay& ov, int orig_vertices) {
    auto is_curve_dart = [&](Dart d) {
        return PlaneMap::vertex_of(d) >= orig_vertices && (PlaneMap::slot_of(d) & 1) == 1;
    };
    for (const auto& f : ov.map.faces()) {
        if (f.size() != 2) continue;
        if (is_curve_dart(f[0]) != is_curve_dart(f[1])) return false; // arc hugging a segment
    }
    return true;
}

// Collapse one side of the curve to a single boundary vertex. The germ of
// crossing t is its along-edge overlay dart whose segment lies on that side.
SideGraphData make_side(const PlaneMap& g, const Overlay& ov, int side) {
    const int nv = g.vertex_count();
    const int n = static_cast<int>(ov.curve_out.size());

    SideGraphData out;
    out.n = n;
    out.free_loops = 0;
    out.germ_of_crossing.assign(static_cast<std::size_t>(n), -1);

    // Germ order around the collapsed point: reversed curve order on the
    // side left of the curve, forward order on the right side.
    bool reversed = side == ov.left_side;
    for (int t = 0; t < n; ++t)
        out.germ_of_crossing[static_cast<std::size_t>(t)] = reversed ? (n - t) % n : t;

    std::vector<Dart> germ_dart(static_cast<std::size_t>(n), kNoDart);
    for (int t = 0; t < n; ++t) {
        Dart s0 = PlaneMap::dart_at(nv + t, 0);
        Dart s2 = PlaneMap::dart_at(nv + t, 2);
        int side0 = ov.side_of_face[static_cast<std::size_t>(ov.map.face_of(s0))];
        germ_dart[static_cast<std::size_t>(t)] = side0 == side ? s0 : s2;
    }

    std::vector<int> local_of_vertex(static_cast<std::size_t>(nv), -1);
    for (int v = 0; v < nv; ++v) {
        int s = ov.side_of_face[static_cast<std::size_t>(ov.map.face_of(PlaneMap::dart_at(v, 0)))];
        if (s == side) {
            local_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(out.vertex_ids.size()) + 1;
            out.vertex_ids.push_back(v);
        }
    }

    const int interior = static_cast<int>(out.vertex_ids.size());
    std::vector<int> degrees(static_cast<std::size_t>(interior) + 1, 4);
    degrees[0] = n;
    std::vector<int> mates(static_cast<std::size_t>(n + 4 * interior), -1);

    auto gen_of_overlay = [&](Dart d) -> int {
        int v = PlaneMap::vertex_of(d);
        if (v < nv) {
            int loc = local_of_vertex[static_cast<std::size_t>(v)];
            if (loc <= 0) fail(errc::invariant_violation, "dart attaches across the curve");
            return n + 4 * (loc - 1) + PlaneMap::slot_of(d);
        }
        int t = v - nv;
        if (germ_dart[static_cast<std::size_t>(t)] != d)
            fail(errc::invariant_violation, "segment leads to the wrong side of a crossing");
        return out.germ_of_crossing[static_cast<std::size_t>(t)];
    };

    for (int t = 0; t < n; ++t) {
        Dart gd = germ_dart[static_cast<std::size_t>(t)];
        int self = out.germ_of_crossing[static_cast<std::size_t>(t)];
        mates[static_cast<std::size_t>(self)] = gen_of_overlay(ov.map.mate(gd));
    }
    for (int i = 0; i < interior; ++i) {
        int v = out.vertex_ids[static_cast<std::size_t>(i)];
        for (int s = 0; s < 4; ++s)
            mates[static_cast<std::size_t>(n + 4 * i + s)] =
                gen_of_overlay(ov.map.mate(PlaneMap::dart_at(v, s)));
    }
    out.disk = GenMap::build(std::move(degrees), std::move(mates));
    return out;
}

bool side_is_vertex_star(const SideGraphData& side) {
    if (side.n != 4 || side.vertex_ids.size() != 1 || side.free_loops != 0) return false;
    for (int p = 0; p < 4; ++p)
        if (side.disk.dart_vertex[static_cast<std::size_t>(side.disk.mate[static_cast<std::size_t>(p)])] == 0)
            return false;
    return true;
}

// An arc with endpoints on the curve, meeting the graph at most once and
// splitting the crossings at least 2 / at least 2.
bool side_has_compression(const SideGraphData& side) {
    const int n = side.n;
    if (n < 4) return false;
    auto faces = side.disk.faces();
    auto face_of = gen_face_of(side.disk, faces);

    // face at the boundary corner between germ positions j and j+1
    std::vector<int> corner_face(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) corner_face[static_cast<std::size_t>(j)] = face_of[static_cast<std::size_t>(j)];

    auto split_ok = [n](int j1, int j2) {
        int a = (j2 - j1 + n) % n;
        return a >= 2 && n - a >= 2;
    };

    for (int j1 = 0; j1 < n; ++j1)
        for (int j2 = j1 + 1; j2 < n; ++j2) {
            if (!split_ok(j1, j2)) continue;
            int fa = corner_face[static_cast<std::size_t>(j1)];
            int fb = corner_face[static_cast<std::size_t>(j2)];
            if (fa == fb) return true; // arc within one region
            for (int d = 0; d < side.disk.dart_count(); ++d) {
                int m = side.disk.mate[static_cast<std::size_t>(d)];
                if (m < d) continue;
                int f1 = face_of[static_cast<std::size_t>(d)];
                int f2 = face_of[static_cast<std::size_t>(m)];
                if ((f1 == fa && f2 == fb) || (f1 == fb && f2 == fa)) return true;
            }
        }
    return false;
}

std::uint64_t normalize_mask(std::uint64_t mask, int components) {
    std::uint64_t all = (std::uint64_t{1} << components) - 1;
    std::uint64_t other = all & ~mask;
    return std::min(mask, other);
}

bool pattern_is_trivial(SidePattern p) {
    switch (p) {
    case SidePattern::Empty:
    case SidePattern::SingleArc:
    case SidePattern::TwoDisjointArcs:
    case SidePattern::TwoArcsCrossingAtVertex:
    case SidePattern::VertexNeighborhood:
    case SidePattern::TwoParallelArcs:
        return true;
    default:
        return false;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// CurveCode

CurveCode CurveCode::normalized() const {
    const int k = n();
    if (k == 0) return *this;
    CurveCode best;
    bool have = false;
    for (int shift = 0; shift < k; ++shift) {
        for (int dir = 0; dir < 2; ++dir) {
            CurveCode cand;
            cand.crossings.resize(static_cast<std::size_t>(k));
            cand.passages.resize(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                if (dir == 0) {
                    cand.crossings[static_cast<std::size_t>(i)] =
                        crossings[static_cast<std::size_t>((shift + i) % k)];
                    cand.passages[static_cast<std::size_t>(i)] =
                        passages[static_cast<std::size_t>((shift + i) % k)];
                } else {
                    cand.crossings[static_cast<std::size_t>(i)] =
                        crossings[static_cast<std::size_t>(((shift - i) % k + k) % k)];
                    cand.passages[static_cast<std::size_t>(i)] =
                        passages[static_cast<std::size_t>(((shift - i - 1) % k + k) % k)];
                }
            }
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

const char* side_pattern_name(SidePattern p) {
    switch (p) {
    case SidePattern::Empty: return "Empty";
    case SidePattern::SingleArc: return "SingleArc";
    case SidePattern::TwoDisjointArcs: return "TwoDisjointArcs";
    case SidePattern::TwoArcsCrossingAtVertex: return "TwoArcsCrossingAtVertex";
    case SidePattern::VertexNeighborhood: return "VertexNeighborhood";
    case SidePattern::TwoParallelArcs: return "TwoParallelArcs";
    case SidePattern::SixTrivialType1: return "SixTrivialType1";
    case SidePattern::SixTrivialType2: return "SixTrivialType2";
    case SidePattern::SixTrivialType3: return "SixTrivialType3";
    case SidePattern::SixTrivialType4: return "SixTrivialType4";
    case SidePattern::NonTrivial: return "NonTrivial";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// split / classify / triviality

std::pair<SideGraphData, SideGraphData> split_sides(const PlaneMap& g, const CurveCode& c) {
    check_curve_shape(g, c);
    if (c.n() == 0) {
        SideGraphData a, b;
        if (c.is_separator()) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                bool in_a = (c.component_mask >> g.component_of(v)) & 1;
                (in_a ? a : b).vertex_ids.push_back(v);
            }
            for (int j = 0; j < g.free_loops(); ++j) {
                bool in_a = (c.component_mask >> (g.vertex_component_count() + j)) & 1;
                ++(in_a ? a : b).free_loops;
            }
        } else {
            for (int v = 0; v < g.vertex_count(); ++v) b.vertex_ids.push_back(v);
            b.free_loops = g.free_loops();
        }
        return {std::move(a), std::move(b)};
    }
    Overlay ov = build_overlay(g, c);
    SideGraphData left = make_side(g, ov, ov.left_side);
    SideGraphData right = make_side(g, ov, 1 - ov.left_side);
    return {std::move(left), std::move(right)};
}

SidePattern classify_side(const SideGraphData& side, int n) {
    const int vtx = static_cast<int>(side.vertex_ids.size());
    if (n == 0) return vtx == 0 && side.free_loops == 0 ? SidePattern::Empty : SidePattern::NonTrivial;
    if (side.free_loops > 0) return SidePattern::NonTrivial;
    if (n == 2) return vtx == 0 ? SidePattern::SingleArc : SidePattern::NonTrivial;
    if (n == 4) {
        if (vtx == 0) return SidePattern::TwoParallelArcs;
        if (side_is_vertex_star(side)) return SidePattern::VertexNeighborhood;
        return SidePattern::NonTrivial;
    }
    if (n != 6) fail(errc::bad_degree, "side classification needs degree 0, 2, 4 or 6");

    if (vtx == 0) {
        // three chords at the boundary vertex; cyclic spans 1/1/1 mean all
        // three arcs sit side by side
        std::array<int, 3> span{};
        int found = 0;
        std::array<char, 6> used{};
        for (int p = 0; p < 6; ++p) {
            if (used[static_cast<std::size_t>(p)]) continue;
            int q = side.disk.mate[static_cast<std::size_t>(p)];
            if (q < 0 || q >= 6) return SidePattern::NonTrivial;
            used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(q)] = 1;
            int d = (q - p + 6) % 6;
            span[static_cast<std::size_t>(found++)] = std::min(d, 6 - d);
        }
        std::sort(span.begin(), span.end());
        return span == std::array<int, 3>{1, 1, 1} ? SidePattern::SixTrivialType1
                                                   : SidePattern::SixTrivialType2;
    }
    if (vtx == 1) {
        int at_vertex = 0, chords = 0;
        for (int p = 0; p < 6; ++p) {
            int m = side.disk.mate[static_cast<std::size_t>(p)];
            if (m < 6)
                ++chords;
            else
                ++at_vertex;
        }
        return at_vertex == 4 && chords == 2 ? SidePattern::SixTrivialType3 : SidePattern::NonTrivial;
    }
    if (vtx == 2) {
        int legs[2] = {0, 0};
        int bars = 0;
        for (int i = 0; i < 2; ++i)
            for (int s = 0; s < 4; ++s) {
                int m = side.disk.mate[static_cast<std::size_t>(6 + 4 * i + s)];
                if (m < 6)
                    ++legs[i];
                else if (side.disk.dart_vertex[static_cast<std::size_t>(m)] != i + 1)
                    ++bars;
            }
        return legs[0] == 3 && legs[1] == 3 && bars == 2 ? SidePattern::SixTrivialType4
                                                         : SidePattern::NonTrivial;
    }
    return SidePattern::NonTrivial;
}

bool is_trivial(const PlaneMap& g, const CurveCode& c) {
    const int n = c.n();
    if (n == 0) {
        check_curve_shape(g, c);
        return !c.is_separator();
    }
    if (n == 6) return is_trivial_by_compression(g, c);
    auto [a, b] = split_sides(g, c);
    return pattern_is_trivial(classify_side(a, n)) || pattern_is_trivial(classify_side(b, n));
}

bool is_trivial_by_compression(const PlaneMap& g, const CurveCode& c) {
    if (c.n() < 4) fail(errc::bad_degree, "compression route is defined for degree >= 4");
    auto [a, b] = split_sides(g, c);
    if (side_is_vertex_star(a) || side_is_vertex_star(b)) return true;
    return side_has_compression(a) || side_has_compression(b);
}

// ---------------------------------------------------------------------------
// cut-based predicates

std::vector<std::uint64_t> vertex_cuts(const PlaneMap& g, int cut_size, int min_side) {
    const int nv = g.vertex_count();
    std::vector<std::uint64_t> out;
    if (nv < 2 * min_side || nv < 2) return out;
    if (nv > 62) fail(errc::limit_exceeded, "cut search supports at most 62 vertices");

    std::vector<char> in_s(static_cast<std::size_t>(nv), 0);
    std::uint64_t mask = 0;
    int cut = 0;
    int size = 0;

    auto flip = [&](int v) {
        for (int s = 0; s < 4; ++s) {
            int u = PlaneMap::vertex_of(g.mate(PlaneMap::dart_at(v, s)));
            if (u == v) continue;
            cut += in_s[static_cast<std::size_t>(u)] != in_s[static_cast<std::size_t>(v)] ? -1 : 1;
        }
        in_s[static_cast<std::size_t>(v)] ^= 1;
        mask ^= std::uint64_t{1} << v;
        size += in_s[static_cast<std::size_t>(v)] ? 1 : -1;
    };

    // Gray code over vertices 1..nv-1; vertex 0 stays outside.
    std::uint64_t total = std::uint64_t{1} << (nv - 1);
    for (std::uint64_t i = 1; i < total; ++i) {
        flip(1 + std::countr_zero(i));
        if (cut == cut_size && size >= min_side && nv - size >= min_side) out.push_back(mask);
    }
    return out;
}

namespace {

std::vector<int> cut_edges_of_mask(const PlaneMap& g, std::uint64_t mask) {
    std::vector<int> edges;
    for (Dart d = 0; d < g.dart_count(); ++d) {
        Dart m = g.mate(d);
        if (d > m) continue;
        bool a = (mask >> PlaneMap::vertex_of(d)) & 1;
        bool b = (mask >> PlaneMap::vertex_of(m)) & 1;
        if (a != b) edges.push_back(d);
    }
    return edges;
}

} // namespace

CurveCode curve_from_cut(const PlaneMap& g, const std::vector<int>& cut_edges) {
    const int k = static_cast<int>(cut_edges.size());
    if (k != 2 && k != 4) fail(errc::bad_argument, "cuts of size 2 or 4 only");

    std::map<int, std::vector<int>> edges_at_face;
    for (int e : cut_edges) {
        edges_at_face[g.face_of(e)].push_back(e);
        edges_at_face[g.face_of(g.mate(e))].push_back(e);
    }
    for (auto& [f, es] : edges_at_face)
        if (es.size() != 2) fail(errc::invariant_violation, "cut is not a simple cocycle");

    CurveCode code;
    int e = cut_edges[0];
    int f = g.face_of(e);
    for (int step = 0; step < k; ++step) {
        code.crossings.push_back({e, 0});
        code.passages.push_back(f);
        const auto& pair = edges_at_face[f];
        int next = pair[0] == e ? pair[1] : pair[0];
        int f2 = g.face_of(next) == f ? g.face_of(g.mate(next)) : g.face_of(next);
        e = next;
        f = f2;
    }
    if (e != cut_edges[0]) fail(errc::invariant_violation, "cut walk did not close");
    return code.normalized();
}

bool is_irreducible(const PlaneMap& g) {
    if (g.vertex_count() == 0) return g.free_loops() == 1;
    if (!g.connected()) return false;
    return vertex_cuts(g, 2, 1).empty();
}

bool is_atoroidal(const PlaneMap& g) {
    if (!is_irreducible(g)) return false;
    return vertex_cuts(g, 4, 2).empty();
}

std::optional<ExceptionKind> as_exception(const PlaneMap& g) {
    if (g.vertex_count() == 0)
        return g.free_loops() == 1 ? std::optional(ExceptionKind::UnknotProjection) : std::nullopt;
    if (g.free_loops() > 0 || !g.connected() || g.vertex_count() > 3) return std::nullopt;
    static const std::array<std::pair<ExceptionKind, CanonicalCode>, 3> table = {
        std::pair{ExceptionKind::FigureEight, canonical_code(exception(ExceptionKind::FigureEight))},
        std::pair{ExceptionKind::HopfProjection, canonical_code(exception(ExceptionKind::HopfProjection))},
        std::pair{ExceptionKind::TrefoilProjection, canonical_code(exception(ExceptionKind::TrefoilProjection))},
    };
    CanonicalCode code = canonical_code(g);
    for (const auto& [kind, known] : table)
        if (code == known) return kind;
    return std::nullopt;
}

bool is_hyperbolic(const PlaneMap& g) {
    bool atoroidal = is_atoroidal(g);
    bool by_exception = atoroidal && !as_exception(g).has_value();
    int min_face = 1 << 30;
    for (const auto& f : g.faces()) min_face = std::min(min_face, static_cast<int>(f.size()));
    if (g.vertex_count() == 0) min_face = 0;
    bool by_faces = atoroidal && g.vertex_count() > 0 && min_face >= 3;
    if (by_exception != by_faces)
        fail(errc::invariant_violation, "exception list disagrees with the face-size route");
    return by_exception;
}

// ---------------------------------------------------------------------------
// enumeration

std::set<CurveCode> enumerate_curves(const PlaneMap& g, int n) {
    if (n != 0 && n != 2 && n != 4 && n != 6) fail(errc::bad_degree, "degree must be 0, 2, 4 or 6");
    std::set<CurveCode> out;
    if (n == 0) {
        for (int f = 0; f < g.total_face_count(); ++f) {
            CurveCode c;
            c.passages = {f};
            out.insert(std::move(c));
        }
        if (!g.connected()) {
            int nc = g.component_count();
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << nc); ++mask) {
                CurveCode c;
                c.component_mask = normalize_mask(mask, nc);
                if (c.component_mask != 0) out.insert(std::move(c));
            }
        }
        return out;
    }
    if (g.vertex_count() == 0) return out;
    if (!g.connected()) fail(errc::disconnected, "crossing curves need a connected map");

    // walk: dart d_t is crossed from face_of(d_t) into face_of(mate(d_t))
    std::vector<Dart> seq(static_cast<std::size_t>(n));
    std::vector<int> edge_uses(static_cast<std::size_t>(g.dart_count()), 0);

    auto emit = [&]() {
        CurveCode base;
        base.crossings.resize(static_cast<std::size_t>(n));
        base.passages.resize(static_cast<std::size_t>(n));
        std::map<int, std::vector<int>> positions; // edge -> crossing indices
        for (int t = 0; t < n; ++t) {
            int e = g.edge_of(seq[static_cast<std::size_t>(t)]);
            base.crossings[static_cast<std::size_t>(t)] = {e, -1};
            base.passages[static_cast<std::size_t>(t)] = g.face_of(g.mate(seq[static_cast<std::size_t>(t)]));
            positions[e].push_back(t);
        }
        std::vector<const std::vector<int>*> groups;
        std::vector<std::vector<int>> perms;
        for (auto& [e, ts] : positions) {
            groups.push_back(&ts);
            perms.emplace_back(ts.size());
            auto& p = perms.back();
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
        }

        std::function<void(std::size_t)> rec = [&](std::size_t gi) {
            if (gi == perms.size()) {
                CurveCode cand = base;
                for (std::size_t k = 0; k < perms.size(); ++k)
                    for (std::size_t i = 0; i < groups[k]->size(); ++i)
                        cand.crossings[static_cast<std::size_t>((*groups[k])[i])].rank = perms[k][i];
                try {
                    Overlay ov = build_overlay(g, cand);
                    if (!overlay_is_taut(ov, g.vertex_count())) return;
                } catch (const error& e) {
                    if (e.code() == errc::unrealizable_code) return;
                    throw;
                }
                out.insert(cand.normalized());
                return;
            }
            std::sort(perms[gi].begin(), perms[gi].end());
            do {
                rec(gi + 1);
            } while (std::next_permutation(perms[gi].begin(), perms[gi].end()));
        };
        rec(0);
    };

    std::function<void(int)> dfs = [&](int t) {
        if (t == n) {
            if (g.face_of(g.mate(seq[static_cast<std::size_t>(n - 1)])) == g.face_of(seq[0])) emit();
            return;
        }
        if (t == 0) {
            for (Dart d = 0; d < g.dart_count(); ++d) {
                seq[0] = d;
                ++edge_uses[static_cast<std::size_t>(g.edge_of(d))];
                dfs(1);
                --edge_uses[static_cast<std::size_t>(g.edge_of(d))];
            }
            return;
        }
        int face = g.face_of(g.mate(seq[static_cast<std::size_t>(t - 1)]));
        for (Dart d : g.faces()[static_cast<std::size_t>(face)]) {
            int e = g.edge_of(d);
            if (edge_uses[static_cast<std::size_t>(e)] >= n) continue;
            seq[static_cast<std::size_t>(t)] = d;
            ++edge_uses[static_cast<std::size_t>(e)];
            dfs(t + 1);
            --edge_uses[static_cast<std::size_t>(e)];
        }
    };
    dfs(0);
    return out;
}

bool is_irreducible_by_curves(const PlaneMap& g) {
    if (g.vertex_count() == 0) return g.free_loops() == 1;
    if (!g.connected()) return false;
    for (const CurveCode& c : enumerate_curves(g, 2))
        if (!is_trivial(g, c)) return false;
    return true;
}

bool is_atoroidal_by_curves(const PlaneMap& g) {
    if (!is_irreducible_by_curves(g)) return false;
    if (g.vertex_count() == 0) return true;
    for (const CurveCode& c : enumerate_curves(g, 4))
        if (!is_trivial(g, c)) return false;
    return true;
}

std::optional<std::pair<int, CurveCode>> find_nontrivial_curve(const PlaneMap& g, int n_max) {
    if (g.vertex_count() == 0 && g.free_loops() <= 1) return std::nullopt;
    if (!g.connected()) {
        CurveCode c;
        c.component_mask = normalize_mask(2, g.component_count());
        return std::pair{0, c};
    }
    if (g.vertex_count() == 0 || n_max < 2) return std::nullopt;

    std::optional<CurveCode> best;
    for (std::uint64_t mask : vertex_cuts(g, 2, 1)) {
        CurveCode c = curve_from_cut(g, cut_edges_of_mask(g, mask));
        if (!best || c < *best) best = std::move(c);
    }
    if (best) return std::pair{2, *best};
    if (n_max < 4) return std::nullopt;

    for (std::uint64_t mask : vertex_cuts(g, 4, 2)) {
        CurveCode c = curve_from_cut(g, cut_edges_of_mask(g, mask));
        if (!best || c < *best) best = std::move(c);
    }
    if (best) return std::pair{4, *best};
    return std::nullopt;
}

} // namespace atoro
