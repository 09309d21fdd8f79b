#include "bohrgap/numerics.hpp"

#include <charconv>
#include <cstdio>

#include "bohrgap/errors.hpp"

namespace bohrgap {

RealInterval::RealInterval() {
    mpfr_init2(lo_, precision);
    mpfr_init2(hi_, precision);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const BigRational& exact) : RealInterval() {
    mpfr_set_q(lo_, exact.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, exact.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const BigRational& lo, const BigRational& hi) : RealInterval() {
    require(lo <= hi, errc::internal_invariant, "inverted interval endpoints");
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& other) : RealInterval() {
    mpfr_set(lo_, other.lo_, MPFR_RNDN);
    mpfr_set(hi_, other.hi_, MPFR_RNDN);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : RealInterval() {
    swap(other);
}

RealInterval& RealInterval::operator=(RealInterval other) {
    swap(other);
    return *this;
}

RealInterval::~RealInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void RealInterval::swap(RealInterval& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

void RealInterval::add(const RealInterval& x) {
    mpfr_add(lo_, lo_, x.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, x.hi_, MPFR_RNDU);
}

void RealInterval::add(const BigRational& exact) {
    mpfr_t t;
    mpfr_init2(t, precision);
    mpfr_set_q(t, exact.get_mpq_t(), MPFR_RNDD);
    mpfr_add(lo_, lo_, t, MPFR_RNDD);
    mpfr_set_q(t, exact.get_mpq_t(), MPFR_RNDU);
    mpfr_add(hi_, hi_, t, MPFR_RNDU);
    mpfr_clear(t);
}

RealInterval RealInterval::operator+(const RealInterval& x) const {
    RealInterval r(*this);
    r.add(x);
    return r;
}

RealInterval RealInterval::operator*(const RealInterval& x) const {
    require(mpfr_sgn(lo_) >= 0 && mpfr_sgn(x.lo_) >= 0, errc::internal_invariant,
            "interval multiplication requires nonnegative operands");
    RealInterval r;
    mpfr_mul(r.lo_, lo_, x.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, x.hi_, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::sub_clamped(const RealInterval& x) const {
    RealInterval r;
    mpfr_sub(r.lo_, lo_, x.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, x.lo_, MPFR_RNDU);
    if (mpfr_sgn(r.lo_) < 0) mpfr_set_zero(r.lo_, 1);
    if (mpfr_sgn(r.hi_) < 0) mpfr_set_zero(r.hi_, 1);
    return r;
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::mid_double() const {
    return 0.5 * (lo_double() + hi_double());
}

static std::string mpfr_text(mpfr_srcptr x) {
    char buf[96];
    mpfr_snprintf(buf, sizeof buf, "%.32Re", x);
    return buf;
}

std::string RealInterval::lo_string() const { return mpfr_text(lo_); }
std::string RealInterval::hi_string() const { return mpfr_text(hi_); }

bool RealInterval::lo_geq(const RealInterval& x) const {
    return mpfr_cmp(lo_, x.hi_) >= 0;
}

bool RealInterval::hi_leq(const RealInterval& x) const {
    return mpfr_cmp(hi_, x.lo_) <= 0;
}

bool RealInterval::lo_leq_hi_of(const RealInterval& x) const {
    return mpfr_cmp(lo_, x.hi_) <= 0;
}

static BigRational mpfr_to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return BigRational(0);
    BigInt mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    BigRational r(mant);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(),
                     static_cast<mp_bitcnt_t>(e));
    } else {
        mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(),
                     static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

ValueBracket ln_bracket(unsigned long n) {
    require(n >= 1, errc::invalid_argument, "ln_bracket needs n >= 1");
    if (n == 1) return {BigRational(0), BigRational(0)};
    mpfr_t lo, hi;
    mpfr_init2(lo, RealInterval::precision);
    mpfr_init2(hi, RealInterval::precision);
    mpfr_set_ui(lo, n, MPFR_RNDN); // exact, n < 2^64
    mpfr_set(hi, lo, MPFR_RNDN);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_log(hi, hi, MPFR_RNDU);
    ValueBracket b{mpfr_to_rational(lo), mpfr_to_rational(hi)};
    mpfr_clear(lo);
    mpfr_clear(hi);
    return b;
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string fmt_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, p);
}

} // namespace bohrgap
