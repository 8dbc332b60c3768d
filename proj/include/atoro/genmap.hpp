#pragma once

#include <vector>

#include "atoro/error.hpp"

namespace atoro {

// Map on the sphere with arbitrary even vertex degrees. Used for the disks a
// curve cuts out of a graph, with the disk boundary collapsed to one vertex.
// Within a vertex the rotation is index order over its dart range.
struct GenMap {
    std::vector<int> first;  // vertex -> first dart index
    std::vector<int> degree; // vertex -> dart count
    std::vector<int> mate;   // dart -> dart
    std::vector<int> dart_vertex;

    int vertex_count() const { return static_cast<int>(degree.size()); }
    int dart_count() const { return static_cast<int>(mate.size()); }

    int rot(int d) const {
        int v = dart_vertex[static_cast<std::size_t>(d)];
        int f = first[static_cast<std::size_t>(v)];
        return f + (d - f + 1) % degree[static_cast<std::size_t>(v)];
    }
    int rot_inv(int d) const {
        int v = dart_vertex[static_cast<std::size_t>(d)];
        int f = first[static_cast<std::size_t>(v)];
        int deg = degree[static_cast<std::size_t>(v)];
        return f + (d - f + deg - 1) % deg;
    }
    int face_next(int d) const { return rot_inv(mate[static_cast<std::size_t>(d)]); }

    // Orbits of face_next, ordered by smallest dart.
    std::vector<std::vector<int>> faces() const;

    // Builds the dart index; validates the involution and Euler formula.
    static GenMap build(std::vector<int> degrees, std::vector<int> mates);
};

} // namespace atoro
