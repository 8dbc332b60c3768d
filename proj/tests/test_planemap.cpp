#include "doctest.h"

#include <numeric>
#include <random>

#include "atoro/planemap.hpp"

using namespace atoro;

namespace {

// Explicit octahedron tables, independent of torus_graph: vertices 0..5,
// 0/5 poles, 1..4 equator. Rotation at each vertex lists neighbors ccw.
PlaneMap octahedron_from_tables() {
    // neighbor lists in ccw order
    const int nbr[6][4] = {
        {1, 2, 3, 4}, // 0 (north pole)
        {0, 4, 5, 2}, // 1
        {0, 1, 5, 3}, // 2
        {0, 2, 5, 4}, // 3
        {0, 3, 5, 1}, // 4
        {1, 4, 3, 2}, // 5 (south pole)
    };
    std::vector<Dart> mate(24, kNoDart);
    for (int v = 0; v < 6; ++v)
        for (int s = 0; s < 4; ++s) {
            int w = nbr[v][s];
            // find the slot of v in w's list
            int t = -1;
            for (int k = 0; k < 4; ++k)
                if (nbr[w][k] == v) t = k;
            mate[static_cast<std::size_t>(PlaneMap::dart_at(v, s))] = PlaneMap::dart_at(w, t);
        }
    return PlaneMap::from_mates(std::move(mate), 0);
}

std::vector<Dart> identity_rotation(int nv) {
    std::vector<Dart> rot(static_cast<std::size_t>(4 * nv));
    for (int d = 0; d < 4 * nv; ++d) rot[static_cast<std::size_t>(d)] = PlaneMap::rot(d);
    return rot;
}

} // namespace

TEST_CASE("octahedron builds with 8 triangular faces") {
    PlaneMap g = octahedron_from_tables();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK(g.face_count() == 8);
    for (const auto& f : g.faces()) CHECK(f.size() == 3);
    CHECK(g.connected());
    // V - E + F = 2
    CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
}

TEST_CASE("build accepts general rotation tables") {
    PlaneMap oct = octahedron_from_tables();
    std::vector<Dart> rot = identity_rotation(6);
    PlaneMap g = PlaneMap::build(6, oct.mates(), rot, 0);
    CHECK(g == oct);

    // rotate vertex 3's cycle: same map after normalization
    std::vector<Dart> rot2(24);
    for (int d = 0; d < 24; ++d) rot2[static_cast<std::size_t>(d)] = PlaneMap::rot(d);
    PlaneMap g2 = PlaneMap::build(6, oct.mates(), rot2, 0);
    CHECK(g2.face_count() == 8);
}

TEST_CASE("unknot projection is a single free loop") {
    PlaneMap g = exception(ExceptionKind::UnknotProjection);
    CHECK(g.vertex_count() == 0);
    CHECK(g.free_loops() == 1);
    CHECK(g.connected());
    FaceVector fv = g.face_vector();
    CHECK(fv.counts.at(0) == 2);
}

TEST_CASE("build rejects a mate fixed point") {
    std::vector<Dart> mate = {0, 1, 3, 2}; // darts 0 and 1 fixed
    std::vector<Dart> rot = identity_rotation(1);
    CHECK_THROWS_AS(PlaneMap::build(1, mate, rot, 0), error);
    try {
        PlaneMap::build(1, mate, rot, 0);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_involution);
    }
}

TEST_CASE("build rejects non-spherical rotation systems") {
    // one vertex, two interleaved loops: torus embedding
    std::vector<Dart> mate = {2, 3, 0, 1};
    CHECK_THROWS_AS(PlaneMap::from_mates(std::move(mate), 0), error);
}

TEST_CASE("figure-eight graph has two monogons and one bigon") {
    PlaneMap g = exception(ExceptionKind::FigureEight);
    CHECK(g.vertex_count() == 1);
    FaceVector fv = g.face_vector();
    CHECK(fv.counts == std::map<int, int>{{1, 2}, {2, 1}});
}

TEST_CASE("hopf projection has four bigons") {
    PlaneMap g = exception(ExceptionKind::HopfProjection);
    CHECK(g.vertex_count() == 2);
    CHECK(g.face_vector().counts == std::map<int, int>{{2, 4}});
}

TEST_CASE("trefoil projection has three bigons and two triangles") {
    PlaneMap g = exception(ExceptionKind::TrefoilProjection);
    CHECK(g.vertex_count() == 3);
    CHECK(g.face_vector().counts == std::map<int, int>{{2, 3}, {3, 2}});
}

TEST_CASE("torus_graph(3) is the octahedron face-wise") {
    PlaneMap g = torus_graph(3);
    CHECK(g.vertex_count() == 6);
    CHECK(g.face_vector().counts == std::map<int, int>{{3, 8}});
}

TEST_CASE("torus_graph(4) face vector") {
    PlaneMap g = torus_graph(4);
    CHECK(g.vertex_count() == 8);
    CHECK(g.face_vector().counts == std::map<int, int>{{3, 8}, {4, 2}});
}

TEST_CASE("torus_graph(5) counts") {
    PlaneMap g = torus_graph(5);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 20);
    CHECK(g.face_count() == 12);
}

TEST_CASE("torus_graph structure up to n=64") {
    for (int n = 3; n <= 64; ++n) {
        PlaneMap g = torus_graph(n);
        CHECK(g.vertex_count() == 2 * n);
        CHECK(g.face_count() == 2 * n + 2);
        CHECK(g.connected());
    }
}

TEST_CASE("torus_graph rejects n < 3") {
    CHECK_THROWS_AS(torus_graph(2), error);
}

TEST_CASE("face vector mass identity") {
    for (const PlaneMap& g :
         {torus_graph(3), torus_graph(5), exception(ExceptionKind::TrefoilProjection),
          exception(ExceptionKind::FigureEight)}) {
        int mass = 0;
        for (auto [k, c] : g.face_vector().counts) mass += k * c;
        CHECK(mass == 4 * g.vertex_count());
    }
}

TEST_CASE("relabeling preserves face structure") {
    std::mt19937 rng(7);
    PlaneMap g = torus_graph(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> rots(perm.size());
        for (auto& r : rots) r = static_cast<int>(rng() & 3);
        PlaneMap h = relabeled(g, perm, rots);
        CHECK(h.face_vector() == g.face_vector());
    }
}

TEST_CASE("mirror preserves the face vector") {
    PlaneMap g = torus_graph(5);
    CHECK(mirror(g).face_vector() == g.face_vector());
    CHECK(mirror(exception(ExceptionKind::TrefoilProjection)).face_vector() ==
          exception(ExceptionKind::TrefoilProjection).face_vector());
}
