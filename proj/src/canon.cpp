#include "atoro/canon.hpp"

#include <algorithm>

namespace atoro {

namespace {

constexpr std::uint8_t kFormatVersion = 1;

// One BFS dart encoding: vertices are labeled in discovery order from the
// root dart; each vertex's four darts are read from its reference dart in
// the chosen direction. Tokens are (mate vertex label, mate slot relative to
// that vertex's reference dart).
void encode_from(const PlaneMap& g, Dart root, bool clockwise, std::vector<std::uint8_t>& out) {
    const int nv = g.vertex_count();
    out.clear();
    out.reserve(static_cast<std::size_t>(8 * nv));
    std::vector<int> label(static_cast<std::size_t>(nv), -1);
    std::vector<Dart> ref(static_cast<std::size_t>(nv), kNoDart);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(nv));

    auto advance = [clockwise](Dart d, int k) {
        int s = PlaneMap::slot_of(d);
        int t = clockwise ? (s - k) & 3 : (s + k) & 3;
        return PlaneMap::dart_at(PlaneMap::vertex_of(d), t);
    };
    auto rel_slot = [clockwise](Dart refd, Dart d) {
        int delta = PlaneMap::slot_of(d) - PlaneMap::slot_of(refd);
        return clockwise ? (-delta) & 3 : delta & 3;
    };

    int rv = PlaneMap::vertex_of(root);
    label[static_cast<std::size_t>(rv)] = 0;
    ref[static_cast<std::size_t>(rv)] = root;
    order.push_back(rv);

    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int k = 0; k < 4; ++k) {
            Dart m = g.mate(advance(ref[static_cast<std::size_t>(v)], k));
            int w = PlaneMap::vertex_of(m);
            if (label[static_cast<std::size_t>(w)] < 0) {
                label[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
                ref[static_cast<std::size_t>(w)] = m;
                order.push_back(w);
            }
            out.push_back(static_cast<std::uint8_t>(label[static_cast<std::size_t>(w)]));
            out.push_back(static_cast<std::uint8_t>(rel_slot(ref[static_cast<std::size_t>(w)], m)));
        }
    }
}

} // namespace

CanonicalCode canonical_code(const PlaneMap& g, Chirality mode) {
    if (!g.connected() && !(g.vertex_count() == 0 && g.free_loops() <= 1))
        fail(errc::disconnected, "canonical codes are defined for connected maps");
    if (g.vertex_count() > 255 || g.free_loops() > 255)
        fail(errc::limit_exceeded, "map too large for the code format");

    CanonicalCode code;
    code.bytes = {kFormatVersion, static_cast<std::uint8_t>(mode),
                  static_cast<std::uint8_t>(g.vertex_count()),
                  static_cast<std::uint8_t>(g.free_loops())};
    if (g.vertex_count() == 0) return code;

    std::vector<std::uint8_t> best, cur;
    for (Dart root = 0; root < g.dart_count(); ++root) {
        for (int dir = 0; dir < (mode == Chirality::ModReflection ? 2 : 1); ++dir) {
            encode_from(g, root, dir == 1, cur);
            if (best.empty() || cur < best) best.swap(cur);
        }
    }
    code.bytes.insert(code.bytes.end(), best.begin(), best.end());
    return code;
}

bool is_isomorphic(const PlaneMap& a, const PlaneMap& b, Chirality mode) {
    if (a.vertex_count() != b.vertex_count() || a.free_loops() != b.free_loops()) return false;
    return canonical_code(a, mode) == canonical_code(b, mode);
}

PlaneMap decode(const CanonicalCode& code) {
    const auto& b = code.bytes;
    if (b.size() < 4 || b[0] != kFormatVersion)
        fail(errc::parse_error, "bad canonical code header");
    int nv = b[2];
    int fl = b[3];
    if (b.size() != static_cast<std::size_t>(4 + 8 * nv))
        fail(errc::parse_error, "canonical code length mismatch");
    std::vector<Dart> mate(static_cast<std::size_t>(4 * nv), kNoDart);
    for (int v = 0; v < nv; ++v)
        for (int k = 0; k < 4; ++k) {
            std::size_t at = static_cast<std::size_t>(4 + 8 * v + 2 * k);
            int w = b[at];
            int j = b[at + 1];
            if (w >= nv || j >= 4) fail(errc::parse_error, "canonical code token out of range");
            mate[static_cast<std::size_t>(PlaneMap::dart_at(v, k))] = PlaneMap::dart_at(w, j);
        }
    return PlaneMap::from_mates(std::move(mate), fl);
}

Chirality CanonicalCode::mode() const {
    if (bytes.size() < 4) fail(errc::parse_error, "bad canonical code header");
    return static_cast<Chirality>(bytes[1]);
}

int CanonicalCode::vertex_count() const {
    if (bytes.size() < 4) fail(errc::parse_error, "bad canonical code header");
    return bytes[2];
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t v : bytes) {
        s.push_back(digits[v >> 4]);
        s.push_back(digits[v & 15]);
    }
    return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& text) {
    if (text.size() % 2 != 0) fail(errc::parse_error, "odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        fail(errc::parse_error, "bad hex digit");
    };
    CanonicalCode code;
    code.bytes.reserve(text.size() / 2);
    for (std::size_t i = 0; i < text.size(); i += 2)
        code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
    return code;
}

} // namespace atoro
