#include "atoro/planemap.hpp"

#include <algorithm>
#include <numeric>

namespace atoro {

const char* errc_name(errc c) {
    switch (c) {
    case errc::not_involution: return "NotInvolution";
    case errc::bad_rotation_orbit: return "BadRotationOrbit";
    case errc::not_spherical: return "NotSpherical";
    case errc::disconnected: return "Disconnected";
    case errc::unrealizable_code: return "UnrealizableCode";
    case errc::trivial_curve: return "TrivialCurve";
    case errc::bad_degree: return "BadDegree";
    case errc::illegal_move: return "IllegalMove";
    case errc::not_simple_vertex: return "NotSimpleVertex";
    case errc::inconsistent_gluing: return "InconsistentGluing";
    case errc::forbidden_piece: return "ForbiddenPiece";
    case errc::limit_exceeded: return "LimitExceeded";
    case errc::parse_error: return "ParseError";
    case errc::invariant_violation: return "InvariantViolation";
    case errc::bad_argument: return "BadArgument";
    }
    return "UnknownError";
}

PlaneMap PlaneMap::build(int vertex_count, std::span<const Dart> mate_table,
                         std::span<const Dart> rotation_table, int free_loops) {
    if (vertex_count < 0 || free_loops < 0)
        fail(errc::bad_argument, "negative vertex or free-loop count");
    const std::size_t n = static_cast<std::size_t>(4 * vertex_count);
    if (mate_table.size() != n || rotation_table.size() != n)
        fail(errc::bad_argument, "tables must have 4*vertex_count entries");

    // The rotation must act on each vertex's dart block as a single 4-cycle.
    // Relabel darts so the cycle becomes slot order, starting at slot 0.
    std::vector<Dart> new_of(n, kNoDart);
    for (int v = 0; v < vertex_count; ++v) {
        Dart d = dart_at(v, 0);
        for (int k = 0; k < 4; ++k) {
            if (d < 4 * v || d >= 4 * v + 4)
                fail(errc::bad_rotation_orbit, "rotation leaves the dart block of vertex " + std::to_string(v));
            if (new_of[static_cast<std::size_t>(d)] != kNoDart)
                fail(errc::bad_rotation_orbit, "rotation orbit at vertex " + std::to_string(v) + " is shorter than 4");
            new_of[static_cast<std::size_t>(d)] = dart_at(v, k);
            d = rotation_table[static_cast<std::size_t>(d)];
        }
        if (d != dart_at(v, 0))
            fail(errc::bad_rotation_orbit, "rotation orbit at vertex " + std::to_string(v) + " does not close");
    }

    std::vector<Dart> mate(n, kNoDart);
    for (std::size_t d = 0; d < n; ++d) {
        Dart m = mate_table[d];
        if (m < 0 || static_cast<std::size_t>(m) >= n)
            fail(errc::not_involution, "mate out of range at dart " + std::to_string(d));
        mate[static_cast<std::size_t>(new_of[d])] = new_of[static_cast<std::size_t>(m)];
    }
    PlaneMap g;
    g.mate_ = std::move(mate);
    g.free_loops_ = free_loops;
    g.finish();
    return g;
}

PlaneMap PlaneMap::from_mates(std::vector<Dart> mate_table, int free_loops) {
    if (free_loops < 0 || mate_table.size() % 4 != 0)
        fail(errc::bad_argument, "bad mate table size or free-loop count");
    PlaneMap g;
    g.mate_ = std::move(mate_table);
    g.free_loops_ = free_loops;
    g.finish();
    return g;
}

void PlaneMap::finish() {
    const std::size_t n = mate_.size();
    for (std::size_t d = 0; d < n; ++d) {
        Dart m = mate_[d];
        if (m < 0 || static_cast<std::size_t>(m) >= n)
            fail(errc::not_involution, "mate out of range at dart " + std::to_string(d));
        if (static_cast<std::size_t>(m) == d)
            fail(errc::not_involution, "mate has a fixed point at dart " + std::to_string(d));
        if (static_cast<std::size_t>(mate_[static_cast<std::size_t>(m)]) != d)
            fail(errc::not_involution, "mate is not an involution at dart " + std::to_string(d));
    }

    // Face orbits of face_next.
    face_of_.assign(n, -1);
    faces_.clear();
    for (std::size_t d0 = 0; d0 < n; ++d0) {
        if (face_of_[d0] >= 0) continue;
        std::vector<Dart> cycle;
        Dart d = static_cast<Dart>(d0);
        do {
            face_of_[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(faces_.size());
            cycle.push_back(d);
            d = face_next(d);
        } while (static_cast<std::size_t>(d) != d0);
        faces_.push_back(std::move(cycle));
    }

    // Vertex components.
    const int nv = vertex_count();
    comp_of_.assign(static_cast<std::size_t>(nv), -1);
    vertex_components_ = 0;
    for (int v0 = 0; v0 < nv; ++v0) {
        if (comp_of_[static_cast<std::size_t>(v0)] >= 0) continue;
        std::vector<int> stack{v0};
        comp_of_[static_cast<std::size_t>(v0)] = vertex_components_;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int w = vertex_of(mate(dart_at(v, s)));
                if (comp_of_[static_cast<std::size_t>(w)] < 0) {
                    comp_of_[static_cast<std::size_t>(w)] = vertex_components_;
                    stack.push_back(w);
                }
            }
        }
        ++vertex_components_;
    }

    // Genus 0 per vertex component: V - E + F = 2 with E = 2V.
    std::vector<int> cv(static_cast<std::size_t>(vertex_components_), 0);
    std::vector<int> cf(static_cast<std::size_t>(vertex_components_), 0);
    for (int v = 0; v < nv; ++v) ++cv[static_cast<std::size_t>(comp_of_[static_cast<std::size_t>(v)])];
    for (const auto& f : faces_)
        ++cf[static_cast<std::size_t>(comp_of_[static_cast<std::size_t>(vertex_of(f[0]))])];
    for (int c = 0; c < vertex_components_; ++c) {
        int V = cv[static_cast<std::size_t>(c)];
        int F = cf[static_cast<std::size_t>(c)];
        if (V - 2 * V + F != 2)
            fail(errc::not_spherical, "component " + std::to_string(c) + " has V=" + std::to_string(V) +
                                          " F=" + std::to_string(F));
    }
}

std::vector<int> PlaneMap::edges() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (Dart d = 0; d < dart_count(); ++d)
        if (d < mate(d)) out.push_back(d);
    return out;
}

FaceVector PlaneMap::face_vector() const {
    FaceVector fv;
    for (const auto& f : faces_) ++fv.counts[static_cast<int>(f.size())];
    if (vertex_count() == 0 && free_loops_ > 0) fv.counts[0] = 2 * free_loops_;
    return fv;
}

PlaneMap exception(ExceptionKind kind) {
    switch (kind) {
    case ExceptionKind::UnknotProjection:
        return PlaneMap::from_mates({}, 1);
    case ExceptionKind::FigureEight:
        // One vertex, two loops on opposite sides: two monogons and a bigon.
        return PlaneMap::from_mates({1, 0, 3, 2}, 0);
    case ExceptionKind::HopfProjection: {
        // Two vertices joined by four edges, all faces bigons.
        std::vector<Dart> m(8, kNoDart);
        for (int i = 0; i < 4; ++i) {
            Dart a = PlaneMap::dart_at(0, i);
            Dart b = PlaneMap::dart_at(1, (4 - i) & 3);
            m[static_cast<std::size_t>(a)] = b;
            m[static_cast<std::size_t>(b)] = a;
        }
        return PlaneMap::from_mates(std::move(m), 0);
    }
    case ExceptionKind::TrefoilProjection: {
        // Closed 2-braid with three crossings: three bigons, two triangles.
        std::vector<Dart> m(12, kNoDart);
        auto link = [&m](Dart a, Dart b) {
            m[static_cast<std::size_t>(a)] = b;
            m[static_cast<std::size_t>(b)] = a;
        };
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3;
            link(PlaneMap::dart_at(i, 0), PlaneMap::dart_at(j, 1));
            link(PlaneMap::dart_at(i, 3), PlaneMap::dart_at(j, 2));
        }
        return PlaneMap::from_mates(std::move(m), 0);
    }
    }
    fail(errc::bad_argument, "unknown exception kind");
}

PlaneMap torus_graph(int n) {
    if (n < 3) fail(errc::bad_argument, "torus_graph requires n >= 3");
    // Antiprism: outer ring o_0..o_{n-1} = vertices 0..n-1, inner ring
    // i_0..i_{n-1} = vertices n..2n-1.
    // Rotation at o_k: [o_{k+1}, o_{k-1}, i_{k-1}, i_k]
    // Rotation at i_k: [i_{k+1}, o_{k+1}, o_k, i_{k-1}]
    std::vector<Dart> m(static_cast<std::size_t>(8 * n), kNoDart);
    auto link = [&m](Dart a, Dart b) {
        m[static_cast<std::size_t>(a)] = b;
        m[static_cast<std::size_t>(b)] = a;
    };
    auto O = [n](int k, int s) { return PlaneMap::dart_at(((k % n) + n) % n, s); };
    auto I = [n](int k, int s) { return PlaneMap::dart_at(n + ((k % n) + n) % n, s); };
    for (int k = 0; k < n; ++k) {
        link(O(k, 0), O(k + 1, 1)); // outer ring
        link(I(k, 0), I(k + 1, 3)); // inner ring
        link(O(k, 3), I(k, 2));     // spoke o_k -- i_k
        link(O(k, 2), I(k - 1, 1)); // spoke o_k -- i_{k-1}
    }
    return PlaneMap::from_mates(std::move(m), 0);
}

PlaneMap mirror(const PlaneMap& g) {
    std::vector<Dart> m(static_cast<std::size_t>(g.dart_count()), kNoDart);
    for (Dart d = 0; d < g.dart_count(); ++d) {
        Dart md = g.mate(d);
        Dart a = PlaneMap::dart_at(PlaneMap::vertex_of(d), 3 - PlaneMap::slot_of(d));
        Dart b = PlaneMap::dart_at(PlaneMap::vertex_of(md), 3 - PlaneMap::slot_of(md));
        m[static_cast<std::size_t>(a)] = b;
    }
    return PlaneMap::from_mates(std::move(m), g.free_loops());
}

PlaneMap relabeled(const PlaneMap& g, std::span<const int> vertex_perm,
                   std::span<const int> slot_rot) {
    const int nv = g.vertex_count();
    if (static_cast<int>(vertex_perm.size()) != nv || static_cast<int>(slot_rot.size()) != nv)
        fail(errc::bad_argument, "permutation size mismatch");
    auto img = [&](Dart d) {
        int v = PlaneMap::vertex_of(d);
        return PlaneMap::dart_at(vertex_perm[static_cast<std::size_t>(v)],
                                 (PlaneMap::slot_of(d) + slot_rot[static_cast<std::size_t>(v)]) & 3);
    };
    std::vector<Dart> m(static_cast<std::size_t>(g.dart_count()), kNoDart);
    for (Dart d = 0; d < g.dart_count(); ++d)
        m[static_cast<std::size_t>(img(d))] = img(g.mate(d));
    return PlaneMap::from_mates(std::move(m), g.free_loops());
}

} // namespace atoro
