#pragma once

#include <stdexcept>
#include <string>

namespace bohrgap {

// Structured failure reasons. Mathematical infeasibility (the construction
// recipe does not go through for the given parameters) is kept distinct from
// precision problems so that callers and the CLI can tell them apart.
enum class errc {
    invalid_argument,          // bad input / parse error
    quotient_source_exhausted, // finite partial-quotient list ran out
    ladder_too_short,          // ladder does not witness the needed index
    precision_insufficient,    // approximant slack too large for the request
    boundary_ambiguous,        // decision falls within the recorded slack
    base_point_too_far,        // no base point within rho/10 at this scale
    degenerate_sides,          // progression side length underflows to zero
    properness_violation,      // duplicate members in a proper progression
    zero_distance,             // exact hit makes a reciprocal term infinite
    infinite_value,            // exact hit makes an auxiliary value infinite
    internal_invariant,        // self-check failed; indicates a bug
};

const char* errc_name(errc code);

class failure : public std::runtime_error {
public:
    failure(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw failure(code, std::string(errc_name(code)) + ": " + what);
}

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) raise(code, what);
}

} // namespace bohrgap
