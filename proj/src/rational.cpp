#include "bohrgap/rational.hpp"

#include "bohrgap/errors.hpp"

namespace bohrgap {

const char* errc_name(errc code) {
    switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::quotient_source_exhausted: return "QuotientSourceExhausted";
    case errc::ladder_too_short: return "LadderTooShort";
    case errc::precision_insufficient: return "PrecisionInsufficient";
    case errc::boundary_ambiguous: return "BoundaryAmbiguous";
    case errc::base_point_too_far: return "BasePointTooFar";
    case errc::degenerate_sides: return "DegenerateSides";
    case errc::properness_violation: return "PropernessViolation";
    case errc::zero_distance: return "ZeroDistance";
    case errc::infinite_value: return "InfiniteValue";
    case errc::internal_invariant: return "InternalInvariant";
    }
    return "Unknown";
}

BigRational parse_rational(std::string_view text) {
    mpq_class q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        raise(errc::invalid_argument, "expected rational 'p/q', got '" + std::string(text) + "'");
    if (q.get_den() == 0)
        raise(errc::invalid_argument, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string rational_text(const BigRational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

BigRational fractional_part(const BigRational& x) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return BigRational(r, x.get_den());
}

BigRational dist_to_nearest_int(const BigRational& x) {
    BigRational f = fractional_part(x);
    BigRational other = 1 - f;
    return f <= other ? f : other;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace bohrgap
