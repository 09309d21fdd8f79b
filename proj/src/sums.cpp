#include "bohrgap/sums.hpp"

#include <algorithm>

#include "bohrgap/detail/frac_scanner.hpp"
#include "bohrgap/detail/parallel.hpp"
#include "bohrgap/errors.hpp"

namespace bohrgap {

bool in_B(const AlphaApproximant& approx, const BigRational& gamma, const BigInt& n,
          const BigRational& epsilon) {
    require(epsilon > 0, errc::invalid_argument, "epsilon must be positive");
    require(n >= 1, errc::invalid_argument, "n must be positive");
    require(n.fits_ulong_p(), errc::invalid_argument, "n exceeds the supported range");
    require(BigRational(n) * approx.error_bound < BigRational(1, 4),
            errc::precision_insufficient, "approximant too coarse at n=" + n.get_str());
    detail::FracScanner scan(approx, gamma);
    scan.seek(mpz_get_ui(n.get_mpz_t()));
    detail::ExclusionDecider decider(scan, BigRational(4) * epsilon);
    return decider.decide(scan);
}

namespace {

bool interval_leq(const RealInterval& a, const RealInterval& b) {
    return mpfr_cmp(a.lo(), b.lo()) <= 0 && mpfr_cmp(a.hi(), b.hi()) <= 0;
}

struct BlockPartial {
    RealInterval R, T, T_star;
    unsigned long excluded = 0;
    std::vector<unsigned long> zeros;
};

} // namespace

SumSeries compute_sums(const AlphaApproximant& approx, const IrrationalSpec& alpha,
                       const BigRational& gamma, const BigRational& epsilon,
                       const TotientTable& totients,
                       const std::vector<unsigned long>& checkpoints, unsigned threads) {
    require(epsilon > 0, errc::invalid_argument, "epsilon must be positive");
    require(!checkpoints.empty(), errc::invalid_argument, "need at least one checkpoint");
    require(std::is_sorted(checkpoints.begin(), checkpoints.end()) &&
                std::adjacent_find(checkpoints.begin(), checkpoints.end()) == checkpoints.end(),
            errc::invalid_argument, "checkpoints must be strictly increasing");
    require(checkpoints.front() >= 1, errc::invalid_argument, "checkpoints must be positive");
    unsigned long n_max = checkpoints.back();
    require(totients.limit >= n_max, errc::precision_insufficient,
            "totient table shorter than the largest checkpoint");
    require(BigRational(n_max) * approx.error_bound < BigRational(1, 4),
            errc::precision_insufficient, "approximant too coarse for the largest checkpoint");

    detail::FracScanner proto(approx, gamma);
    const detail::ExclusionDecider decider(proto, BigRational(4) * epsilon);

    SumSeries out;
    out.alpha_text = alpha.text();
    out.gamma = gamma;
    out.epsilon = epsilon;

    RealInterval R, T, T_star;
    unsigned long excluded = 0;
    constexpr unsigned long block = 1u << 16;

    unsigned long prev = 0;
    for (unsigned long ckpt : checkpoints) {
        unsigned long first = prev + 1;
        if (first <= ckpt) {
            unsigned long nblocks = (ckpt - first) / block + 1;
            std::vector<BlockPartial> parts(nblocks);
            detail::for_blocks(first, ckpt, block, threads,
                               [&](unsigned long b, unsigned long lo, unsigned long hi) {
                BlockPartial& part = parts[b];
                detail::FracScanner scan(approx, gamma);
                scan.seek(lo - 1);
                BigRational term, ts;
                for (unsigned long n = lo; n <= hi; ++n) {
                    scan.advance();
                    if (scan.is_zero()) {
                        // exact surrogate hit: lies in B, reciprocal undefined
                        part.zeros.push_back(n);
                        part.excluded += 1;
                        continue;
                    }
                    term = BigRational(scan.denom(), scan.centered());
                    term.canonicalize();
                    part.R.add(term);
                    if (decider.decide(scan)) {
                        part.excluded += 1;
                    } else {
                        part.T.add(term);
                        ts = BigRational(scan.denom() * totients.phi[n],
                                         scan.centered() * n);
                        ts.canonicalize();
                        part.T_star.add(ts);
                    }
                }
            });
            for (const BlockPartial& part : parts) {
                R.add(part.R);
                T.add(part.T);
                T_star.add(part.T_star);
                excluded += part.excluded;
                out.zero_distance.insert(out.zero_distance.end(), part.zeros.begin(),
                                         part.zeros.end());
            }
        }
        SumCheckpoint snap;
        snap.N = ckpt;
        snap.T = T;
        snap.T_star = T_star;
        snap.R = R;
        snap.excluded_count = excluded;
        require(interval_leq(snap.T_star, snap.T) && interval_leq(snap.T, snap.R),
                errc::internal_invariant, "termwise domination T* <= T <= R broken");
        if (!out.checkpoints.empty()) {
            const SumCheckpoint& last = out.checkpoints.back();
            require(interval_leq(last.T, snap.T) && interval_leq(last.T_star, snap.T_star) &&
                        interval_leq(last.R, snap.R),
                    errc::internal_invariant, "series not monotone in N");
        }
        out.checkpoints.push_back(std::move(snap));
        prev = ckpt;
    }
    return out;
}

} // namespace bohrgap
