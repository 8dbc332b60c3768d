#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "atoro/planemap.hpp"

namespace atoro {

enum class Chirality : std::uint8_t {
    ModReflection, // codes identify maps up to any sphere homeomorphism
    Oriented,      // orientation-preserving homeomorphisms only
};

// Labeling-independent identifier of an embedded graph: the minimum over all
// root darts (and both reading directions under ModReflection) of a
// breadth-first dart encoding. Losslessly decodable.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalCode&) const = default;

    std::string hex() const;
    static CanonicalCode from_hex(const std::string& text);

    Chirality mode() const;
    int vertex_count() const;
};

CanonicalCode canonical_code(const PlaneMap& g, Chirality mode = Chirality::ModReflection);
bool is_isomorphic(const PlaneMap& a, const PlaneMap& b, Chirality mode = Chirality::ModReflection);

// Rebuild a representative map from its code.
PlaneMap decode(const CanonicalCode& code);

} // namespace atoro
