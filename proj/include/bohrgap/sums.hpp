#pragma once

#include <string>
#include <vector>

#include "bohrgap/ladder.hpp"
#include "bohrgap/numerics.hpp"
#include "bohrgap/rational.hpp"
#include "bohrgap/totient.hpp"

namespace bohrgap {

// Membership in the exclusion set {n : ||n alpha - gamma|| < n^{-4 eps}},
// decided exactly on the surrogate by cross-powering. Throws
// BoundaryAmbiguous when the slack band straddles the threshold.
bool in_B(const AlphaApproximant& approx, const BigRational& gamma, const BigInt& n,
          const BigRational& epsilon);

struct SumCheckpoint {
    unsigned long N = 0;
    RealInterval T;      // sum over n <= N, n not excluded, of 1/||n alpha - gamma||
    RealInterval T_star; // same with weight phi(n)/n
    RealInterval R;      // unrestricted sum
    unsigned long excluded_count = 0;
};

struct SumSeries {
    std::string alpha_text;
    BigRational gamma;
    BigRational epsilon;
    std::vector<SumCheckpoint> checkpoints;
    std::vector<unsigned long> zero_distance; // exact surrogate hits, skipped in R
};

// Streams n = 1..max(checkpoints) once, accumulating all three series in
// directed-rounding intervals. Block-parallel with a fixed reduction shape,
// so results are identical for any thread count.
SumSeries compute_sums(const AlphaApproximant& approx, const IrrationalSpec& alpha,
                       const BigRational& gamma, const BigRational& epsilon,
                       const TotientTable& totients,
                       const std::vector<unsigned long>& checkpoints, unsigned threads = 0);

} // namespace bohrgap
