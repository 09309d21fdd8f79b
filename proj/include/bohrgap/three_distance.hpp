#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bohrgap/ladder.hpp"
#include "bohrgap/rational.hpp"

namespace bohrgap {

// The unique representation M = r q_k + q_{k-1} + s with 1 <= r <= a_{k+1}
// and 0 <= s < q_k (seed convention q_{-1} = 0).
struct ThreeDistanceDecomposition {
    BigInt M;
    std::size_t k = 0;
    BigInt r;
    BigInt s;
};

ThreeDistanceDecomposition decompose(const ConvergentLadder& lad, const BigInt& M);

// Gap structure of {n alpha mod 1 : 1 <= n <= M} cut on [0,1] with the
// endpoints 0 and 1 included, so multiplicities sum to M+1.
struct GapProfile {
    unsigned long M = 0;
    std::vector<std::pair<BigRational, unsigned long>> distinct_gaps; // (length, multiplicity)
    BigRational d_max;
};

GapProfile gap_profile(const AlphaApproximant& approx, unsigned long M);

struct BasePoint {
    BigInt b0;        // in [1, M]
    BigRational dist; // ||b0 alpha - gamma||, <= d_max of the profile
};

// Endpoint of the partition gap containing frac(gamma) that is an actual
// multiple point, nearest to frac(gamma); left endpoint wins ties. Exact
// hits return dist = 0.
BasePoint find_base_point(const AlphaApproximant& approx, const BigRational& gamma,
                          unsigned long M);

} // namespace bohrgap
