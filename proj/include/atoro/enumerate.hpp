#pragma once

#include <map>
#include <set>
#include <vector>

#include "atoro/canon.hpp"
#include "atoro/planemap.hpp"
#include "atoro/surgery.hpp"

namespace atoro {

inline constexpr int kMaxEnumerationVertices = 16;
inline constexpr int kMaxOracleVertices = 9;

// How the four strand ends of two vertex complements are matched.
struct GluingChoice {
    int rotation = 0; // 0..3
    bool reflected = false;

    auto operator<=>(const GluingChoice&) const = default;
};

struct PredecessorRecord {
    CanonicalCode parent;
    SurgeryMove move;
};

struct GraphMeta {
    PlaneMap graph;
    bool exception = false;
    int torus_n = 0; // n when the graph is the 2n-vertex antiprism seed, else 0
    bool hyperbolic = false;
    std::vector<PredecessorRecord> predecessors;
};

// Atoroidal graphs keyed by canonical code, grouped by vertex count.
struct EnumerationStore {
    Chirality mode = Chirality::ModReflection;
    int max_v = 0;
    std::map<int, std::map<CanonicalCode, GraphMeta>> levels;

    std::size_t level_size(int v) const {
        auto it = levels.find(v);
        return it == levels.end() ? 0 : it->second.size();
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [v, m] : levels) t += m.size();
        return t;
    }
};

// The four exceptional graphs plus every antiprism with at most max_v
// vertices.
std::vector<PlaneMap> initial_objects(int max_v);

// Close the initial objects under surgery, level by level, deduplicating by
// canonical code. Every surgery result is checked to be atoroidal.
EnumerationStore enumerate_atoroidal(int max_v, Chirality mode = Chirality::ModReflection,
                                     int threads = 0);

// Proper descendants of the 2n-vertex antiprism under repeated surgery.
std::set<CanonicalCode> descendant_set(int n, int max_v,
                                       Chirality mode = Chirality::ModReflection);

// Replace a neighborhood of each chosen vertex by the other graph's
// complement, matching strands by `choice`. Rejects the vertexless, the
// one-vertex and the two-vertex exceptional pieces.
PlaneMap recombine(const PlaneMap& g1, int v1, const PlaneMap& g2, int v2, GluingChoice choice);

enum class RecombineMode {
    PrimeProjections, // trefoil allowed as a piece
    BasicPolyhedra,   // bigon-free pieces only
};

// Closure of the store's eligible graphs under recombine, up to max_v
// vertices, including the eligible pieces themselves.
std::set<CanonicalCode> enumerate_recombinations(const EnumerationStore& store, int max_v,
                                                 RecombineMode mode);

// Exhaustive generation of all connected 4-valent sphere maps with up to
// max_v vertices, filtered by is_atoroidal, with no use of surgery or the
// initial objects. Independent check of enumerate_atoroidal.
std::map<int, std::set<CanonicalCode>> oracle_enumerate(int max_v,
                                                        Chirality mode = Chirality::ModReflection);

// Reference variant without the boundary-circle planarity pruning; only
// viable for very small vertex counts. Used to validate the pruned search.
std::map<int, std::set<CanonicalCode>> oracle_enumerate_unpruned(int max_v,
                                                                 Chirality mode = Chirality::ModReflection);

} // namespace atoro
