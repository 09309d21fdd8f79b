#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "bohrgap/rational.hpp"

namespace bohrgap {

// A closed interval [lo, hi] of 128-bit MPFR floats maintained with directed
// rounding, so every enclosed true value stays enclosed through arithmetic.
// Only nonnegative quantities flow through the series accumulators; the
// clamped subtraction below relies on that.
class RealInterval {
public:
    static constexpr mpfr_prec_t precision = 128;

    RealInterval();
    explicit RealInterval(const BigRational& exact);
    RealInterval(const BigRational& lo, const BigRational& hi);
    RealInterval(const RealInterval& other);
    RealInterval(RealInterval&& other) noexcept;
    RealInterval& operator=(RealInterval other);
    ~RealInterval();

    static RealInterval zero() { return RealInterval(); }

    void add(const RealInterval& x);
    void add(const BigRational& exact);

    RealInterval operator+(const RealInterval& x) const;
    RealInterval operator*(const RealInterval& x) const; // requires lo >= 0 both sides

    // max(0, *this - x), valid enclosure when the true difference is >= 0.
    RealInterval sub_clamped(const RealInterval& x) const;

    double lo_double() const;
    double hi_double() const;
    double mid_double() const;
    std::string lo_string() const; // %.32Re, deterministic
    std::string hi_string() const;

    // Endpoint comparisons for conservative inequality checks.
    bool lo_geq(const RealInterval& x) const; // this->lo >= x.hi
    bool hi_leq(const RealInterval& x) const; // this->hi <= x.lo
    bool lo_leq_hi_of(const RealInterval& x) const;

    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

private:
    mpfr_t lo_, hi_;
    void swap(RealInterval& other) noexcept;
};

// Rational bracket [lo, hi] enclosing a value that is not exactly
// representable (logarithms of integers, built-in psi values).
struct ValueBracket {
    BigRational lo;
    BigRational hi;
};

// Encloses ln(n) between two dyadic rationals; width ~2^-120 relative,
// far below the 1e-20 the inequality checks budget for.
ValueBracket ln_bracket(unsigned long n);

// Deterministic counter-based stream: value i of a run seeded with s is
// splitmix64_at(s, i) regardless of threading.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index);

// Locale-independent shortest round-trip formatting.
std::string fmt_double(double x);

} // namespace bohrgap
