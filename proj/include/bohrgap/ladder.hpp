#pragma once

#include <cstddef>
#include <vector>

#include "bohrgap/irrational.hpp"
#include "bohrgap/rational.hpp"

namespace bohrgap {

struct LadderEntry {
    std::size_t k = 0;
    unsigned long a = 0; // partial quotient a_k
    BigInt p;            // convergent numerator p_k
    BigInt q;            // convergent denominator q_k
};

// Convergents of alpha up to the first index K with q_K >= min_q, plus the
// entry K+1 so the error bound 1/(q_K q_{K+1}) is always available.
struct ConvergentLadder {
    std::vector<LadderEntry> entries;
    std::size_t K = 0;

    const LadderEntry& at(std::size_t k) const;
    // q_{k} with the seed convention q_{-1} = 0 (pass k+1 offset-free via
    // this helper so callers can write q(k-1) for k = 0).
    BigInt q_seed(long k) const;
};

ConvergentLadder ladder(const IrrationalSpec& spec, const BigInt& min_q);

// p_K/q_K with its proven error bound |alpha - p_K/q_K| <= 1/(q_K q_{K+1}).
struct AlphaApproximant {
    BigRational value;
    BigRational error_bound;
    std::size_t K = 0;
};

AlphaApproximant approximant(const ConvergentLadder& lad);

// Default precision policy: the smallest K with q_K >= 10^6 * ceil(sqrt(N)),
// which keeps every slack n * error_bound <= 1e-12 for n <= N.
AlphaApproximant approximant_for_horizon(const IrrationalSpec& spec, unsigned long n_max);
BigInt horizon_min_q(unsigned long n_max);

struct FracDist {
    BigRational value; // ||n * (p_K/q_K) - gamma||, exact
    BigRational slack; // bounds |value - ||n*alpha - gamma|||
};

// Requires n * error_bound < 1/4 so the nearest integer cannot flip.
FracDist frac_dist(const AlphaApproximant& approx, const BigInt& n, const BigRational& gamma);

// lambda for the spec: exact for named constants and user hints, otherwise
// estimated from the ladder as 1 + max_k log q_{k+1} / log q_k.
LambdaInfo lambda_for(const IrrationalSpec& spec, const ConvergentLadder& lad);

// Default exclusion exponent: 1/(10 * ceil(lambda)), rational by
// construction and <= 1/(10 lambda).
BigRational default_epsilon(const LambdaInfo& lambda);

} // namespace bohrgap
