#pragma once

#include <cstdint>
#include <vector>

#include "bohrgap/bohr.hpp"
#include "bohrgap/rational.hpp"

namespace bohrgap {

struct TotientTable {
    unsigned long limit = 0;
    std::vector<std::uint32_t> phi; // phi[n] for 1 <= n <= limit

    BigRational ratio(unsigned long n) const; // phi(n)/n, canonical
};

TotientTable totient_sieve(unsigned long limit);

// Box [-N1, N1] x [-N2, N2] intersected with A1 x + A2 y == 0 (mod p).
struct CongruenceBox {
    BigInt A1, A2;
    unsigned long p = 2;
    unsigned long N1 = 0, N2 = 0;

    void validate() const;
};

struct CongruenceCount {
    BigInt count;              // exact number of solutions in the box
    BigRational predicted_cells; // 1 + (2N1+1)(2N2+1)/p
    BigRational predicted_area;  // 1 + 4 N1 N2 / p
    bool lattice_path = false;   // p divides neither A1 nor A2
};

// Exact in every case; O(min(2N1+1, p)) when p divides neither coefficient,
// closed-form otherwise.
CongruenceCount count_congruence_points(const CongruenceBox& box);

// Proportion of progression members divisible by p, counted over the proper
// parameterization (never by expanding the member list).
BigRational alpha_p(const Gap2AP& gap, unsigned long p);

struct AmGmDiagnostic {
    double geometric_mean = 0.0; // X = (prod phi(n)/n)^(1/|P|), log-space
    double log_inverse = 0.0;    // Y = log(1/X)
    BigRational arithmetic_mean; // exact
};

AmGmDiagnostic amgm_diagnostic(const Gap2AP& gap, const TotientTable& totients);
AmGmDiagnostic amgm_diagnostic(const std::vector<BigInt>& members, const TotientTable& totients);

struct BohrTotientSum {
    BigRational sum_star; // exact sum of phi(n)/n over the restricted set
    double ratio = 0.0;   // sum_star / (rho N)
    unsigned long member_count = 0;
};

BohrTotientSum bohr_totient_sum(const BohrQuery& query, const TotientTable& totients,
                                unsigned threads = 0);

// Balanced pairwise reduction; keeps intermediate denominators small
// compared to left folds.
BigRational exact_sum(std::vector<BigRational> terms);

} // namespace bohrgap
