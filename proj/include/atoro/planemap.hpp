#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "atoro/error.hpp"

namespace atoro {

// A dart is a half-edge. Vertex v owns darts 4v..4v+3; slot order is the
// counterclockwise rotation around the vertex.
using Dart = std::int32_t;

inline constexpr Dart kNoDart = -1;

enum class ExceptionKind {
    UnknotProjection,
    FigureEight,
    HopfProjection,
    TrefoilProjection,
};

// Face-size census: counts[k] = number of faces with k vertices on the
// boundary (counted with multiplicity).
struct FaceVector {
    std::map<int, int> counts;

    bool operator==(const FaceVector&) const = default;
};

// 4-valent multigraph embedded in the sphere, encoded as a rotation system.
// The rotation is normalized so that the successor of dart d around its
// vertex is the next slot; the edge involution `mate` carries the whole
// structure. Vertexless circle components are tracked by `free_loops`.
// Immutable after construction.
class PlaneMap {
public:
    PlaneMap() = default;

    // Validates and normalizes a general rotation table (any 4-cycle per
    // vertex block). Throws errc::not_involution / bad_rotation_orbit /
    // not_spherical.
    static PlaneMap build(int vertex_count, std::span<const Dart> mate_table,
                          std::span<const Dart> rotation_table, int free_loops);

    // Mate table already in slot order.
    static PlaneMap from_mates(std::vector<Dart> mate_table, int free_loops);

    int vertex_count() const { return static_cast<int>(mate_.size()) / 4; }
    int dart_count() const { return static_cast<int>(mate_.size()); }
    int edge_count() const { return dart_count() / 2; }
    int free_loops() const { return free_loops_; }

    Dart mate(Dart d) const { return mate_[static_cast<std::size_t>(d)]; }
    const std::vector<Dart>& mates() const { return mate_; }

    static Dart rot(Dart d) { return (d & ~3) | ((d + 1) & 3); }
    static Dart rot_inv(Dart d) { return (d & ~3) | ((d + 3) & 3); }
    static int vertex_of(Dart d) { return d >> 2; }
    static int slot_of(Dart d) { return d & 3; }
    static Dart dart_at(int vertex, int slot) { return 4 * vertex + slot; }

    // Walk along the face lying to the left of d.
    Dart face_next(Dart d) const { return rot_inv(mate(d)); }

    // Faces are dart orbits of face_next, ordered by smallest dart, each
    // listed starting at its smallest dart.
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    // Vertexless circles have no darts; their two disk faces get formal ids
    // face_count() + 2j and face_count() + 2j + 1 for loop j.
    int total_face_count() const { return face_count() + 2 * free_loops_; }
    int face_of(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }
    int face_size(int face) const { return static_cast<int>(faces_[static_cast<std::size_t>(face)].size()); }

    // Edge id = smaller dart of the pair.
    int edge_of(Dart d) const { return std::min(d, mate(d)); }
    std::vector<int> edges() const;

    FaceVector face_vector() const;

    // Vertex components only; free loops each count as one further component.
    int component_of(int vertex) const { return comp_of_[static_cast<std::size_t>(vertex)]; }
    int component_count() const { return vertex_components_ + free_loops_; }
    int vertex_component_count() const { return vertex_components_; }
    bool connected() const { return component_count() == 1; }

    bool operator==(const PlaneMap&) const = default;

private:
    void finish(); // compute faces and components, check sphericity

    std::vector<Dart> mate_;
    std::int32_t free_loops_ = 0;
    std::vector<std::vector<Dart>> faces_;
    std::vector<std::int32_t> face_of_;
    std::vector<std::int32_t> comp_of_;
    std::int32_t vertex_components_ = 0;
};

// The four graphs that are atoroidal but have a face smaller than a triangle.
PlaneMap exception(ExceptionKind kind);

// The n-antiprism: 2n vertices, 2n triangles and two n-gons. Requires n >= 3.
PlaneMap torus_graph(int n);

// Reverse the rotation at every vertex (slot k -> 3-k).
PlaneMap mirror(const PlaneMap& g);

// Relabel vertices by `vertex_perm` (new index of old vertex v) and rotate
// each vertex's slots by `slot_rot[v]`. Produces an isomorphic map.
PlaneMap relabeled(const PlaneMap& g, std::span<const int> vertex_perm,
                   std::span<const int> slot_rot);

} // namespace atoro
