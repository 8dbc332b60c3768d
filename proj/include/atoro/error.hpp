#pragma once

#include <stdexcept>
#include <string>

namespace atoro {

enum class errc {
    not_involution,
    bad_rotation_orbit,
    not_spherical,
    disconnected,
    unrealizable_code,
    trivial_curve,
    bad_degree,
    illegal_move,
    not_simple_vertex,
    inconsistent_gluing,
    forbidden_piece,
    limit_exceeded,
    parse_error,
    invariant_violation,
    bad_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace atoro
