#pragma once

#include "bohrgap/errors.hpp"
#include "bohrgap/ladder.hpp"
#include "bohrgap/rational.hpp"

namespace bohrgap::detail {

// Streams ||n * (p_K/q_K) - gamma|| for n = 1, 2, 3, ... as the centered
// residue c_n over the fixed denominator D = q_K * den(gamma):
//
//   value_n = c_n / D,  c_n = |((n p_K d - c q_K) mod D)| centered into
//   (-D/2, D/2].
//
// One bigint addition and a conditional subtraction per step; no per-step
// allocation.
class FracScanner {
public:
    FracScanner(const AlphaApproximant& approx, const BigRational& gamma)
        : q_(approx.value.get_den()), d_(gamma.get_den()) {
        D_ = q_ * d_;
        step_ = approx.value.get_num() * d_;
        mpz_fdiv_r(step_.get_mpz_t(), step_.get_mpz_t(), D_.get_mpz_t());
        base_ = -gamma.get_num() * q_;
        mpz_fdiv_r(base_.get_mpz_t(), base_.get_mpz_t(), D_.get_mpz_t());
        u_ = base_;
        // error_bound = 1/(q_K q_{K+1}); slack_n = n / (q_K q_{K+1}).
        err_den_ = approx.error_bound.get_den();
        require(approx.error_bound.get_num() == 1, errc::internal_invariant,
                "approximant error bound must be a unit fraction");
        half_D_ = D_ / 2;
        n_ = 0;
    }

    void advance() {
        ++n_;
        u_ += step_;
        if (u_ >= D_) u_ -= D_;
        recenter();
    }

    // Position the scanner at index n directly (centered() becomes valid).
    void seek(unsigned long n) {
        n_ = n;
        u_ = base_ + step_ * n;
        mpz_fdiv_r(u_.get_mpz_t(), u_.get_mpz_t(), D_.get_mpz_t());
        recenter();
    }

    unsigned long n() const { return n_; }
    const BigInt& denom() const { return D_; }
    const BigInt& centered() const { return centered_; } // valid after advance()
    const BigInt& err_den() const { return err_den_; }   // q_K * q_{K+1}

    bool is_zero() const { return centered_ == 0; }

    BigRational value() const {
        BigRational v(centered_, D_);
        v.canonicalize();
        return v;
    }

    BigRational slack() const { return BigRational(n_, err_den_); }

private:
    void recenter() {
        if (u_ <= half_D_) {
            centered_ = u_;
        } else {
            centered_ = D_;
            centered_ -= u_;
        }
    }

    BigInt q_, d_, D_, half_D_, step_, base_, u_, centered_, err_den_;
    unsigned long n_ = 0;
};

// Decides value <=> rho with the slack band |value - rho| <= n/err_den
// reported separately. All comparisons are exact integer comparisons.
class ThresholdGuard {
public:
    ThresholdGuard(const FracScanner& scan, const BigRational& rho)
        : rd_(rho.get_den()) {
        rnD_ = rho.get_num() * scan.denom();
        // ambiguity test: |c_n * rd - rn * D| * err_den <= n * D * rd
        Drd_e_num_ = scan.denom() * rd_;
    }

    // value <= rho (closed), ignoring slack.
    bool leq(const FracScanner& scan) const {
        BigInt lhs = scan.centered() * rd_;
        return lhs <= rnD_;
    }

    // |value - rho| <= slack_n.
    bool ambiguous(const FracScanner& scan) const {
        BigInt lhs = scan.centered() * rd_;
        lhs -= rnD_;
        mpz_abs(lhs.get_mpz_t(), lhs.get_mpz_t());
        lhs *= scan.err_den();
        BigInt rhs = Drd_e_num_ * scan.n();
        return lhs <= rhs;
    }

private:
    BigInt rd_, rnD_, Drd_e_num_;
};

// Exact comparison of value = c/D against n^{-x} for positive rational
// x = a/b via cross-powering: value < n^{-a/b}  <=>  c^b * n^a < D^b.
class PowerThreshold {
public:
    PowerThreshold(const BigRational& exponent, const BigInt& D) {
        require(exponent > 0, errc::invalid_argument, "exponent must be positive");
        require(exponent.get_num().fits_ulong_p() && exponent.get_den().fits_ulong_p(),
                errc::invalid_argument, "exponent components too large");
        a_ = mpz_get_ui(exponent.get_num().get_mpz_t());
        b_ = mpz_get_ui(exponent.get_den().get_mpz_t());
        mpz_pow_ui(Db_.get_mpz_t(), D.get_mpz_t(), b_);
    }

    // c/D < n^{-a/b}
    bool below(const BigInt& c, unsigned long n) const {
        BigInt lhs, na;
        mpz_pow_ui(lhs.get_mpz_t(), c.get_mpz_t(), b_);
        mpz_ui_pow_ui(na.get_mpz_t(), n, a_);
        lhs *= na;
        return lhs < Db_;
    }

    unsigned long num() const { return a_; }
    unsigned long den() const { return b_; }

private:
    unsigned long a_ = 0, b_ = 1;
    BigInt Db_;
};

// Membership in {n : value_n < n^{-4 eps}} decided at both ends of the
// slack band [value - n/E, value + n/E]; disagreement raises
// BoundaryAmbiguous. Immutable and shareable across threads.
class ExclusionDecider {
public:
    ExclusionDecider(const FracScanner& scan, const BigRational& four_eps)
        : thr_(four_eps, scan.denom() * scan.err_den()) {}

    bool decide(const FracScanner& scan) const {
        BigInt cE = scan.centered() * scan.err_den();
        BigInt nD = scan.denom() * scan.n();
        BigInt hi_num = cE + nD;
        bool dec_hi = thr_.below(hi_num, scan.n());
        BigInt lo_num = cE - nD;
        bool dec_lo = lo_num < 0 ? true : thr_.below(lo_num, scan.n());
        if (dec_lo != dec_hi)
            raise(errc::boundary_ambiguous,
                  "exclusion-set membership within slack at n=" + std::to_string(scan.n()));
        return dec_lo;
    }

private:
    PowerThreshold thr_;
};

} // namespace bohrgap::detail
