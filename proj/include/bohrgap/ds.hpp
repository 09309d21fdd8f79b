#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohrgap/ladder.hpp"
#include "bohrgap/numerics.hpp"
#include "bohrgap/rational.hpp"
#include "bohrgap/totient.hpp"

namespace bohrgap {

// The approximating function psi. Built-ins are c/(n ln(n+1)^2) (divergent
// weighted series) and c/(n ln(n+1)^3) (convergent); custom tables give
// psi(n) exactly for n up to the table length and 0 beyond it.
struct ApproxFunction {
    enum class Kind { gallagher, convergent, custom };

    Kind kind = Kind::gallagher;
    BigRational c = BigRational(1);
    std::vector<BigRational> table;

    static ApproxFunction gallagher_c(const BigRational& c);
    static ApproxFunction convergent_c(const BigRational& c);
    static ApproxFunction custom(std::vector<BigRational> table);

    // Enclosure of psi(n); exact (lo == hi) for custom tables.
    ValueBracket psi(unsigned long n) const;

    // Whether sum psi(n) log n diverges, by closed form; unknown for custom.
    std::optional<bool> divergent_type() const;

    std::string text() const;
};

// Phi(n) = psi(n)/||n alpha - gamma|| on the surrogate, as an exact
// rational bracket. Throws InfiniteValue on an exact hit.
ValueBracket phi_fn(const AlphaApproximant& approx, const BigRational& gamma,
                    const ApproxFunction& psi, unsigned long n);

// The modified function: 0 on the exclusion set, Phi elsewhere.
ValueBracket psi_fn_modified(const AlphaApproximant& approx, const BigRational& gamma,
                             const ApproxFunction& psi, const BigRational& epsilon,
                             unsigned long n);

struct HypCheckpoint {
    unsigned long N = 0;
    RealInterval lhs21; // sum (phi(n)/n) Psi(n)
    RealInterval lhs22; // sum Psi(n)
    RealInterval rhs;   // sum psi(n) ln n
    RealInterval chain_lower; // psi(N+1) T*_N + sum_{n>=N0} (psi(n)-psi(n+1)) T*_n
    RealInterval chain_upper; // psi(N+1) T_N + (psi(1)-psi(N0)) T_{N0-1} + ...
    RealInterval diag21; // unmodified: sum (phi(n)/n) Phi(n), diagnostic only
    RealInterval diag22; // unmodified: sum Phi(n), diagnostic only
    bool chain_lower_ok = false; // lhs21 >= chain_lower, endpoint-conservative
    bool chain_upper_ok = false; // lhs22 <= chain_upper, endpoint-conservative
    double ratio21 = 0.0; // lhs21 / rhs (midpoints)
    double ratio22 = 0.0;
};

struct HypothesisReport {
    enum class Verdict { bands_stable, bands_violated };

    std::string alpha_text;
    BigRational gamma, epsilon;
    std::string psi_text;
    unsigned long N0 = 100;
    double band_factor = 4.0;
    std::vector<HypCheckpoint> checkpoints;
    std::vector<unsigned long> zero_distance;
    bool degenerate = false; // psi identically zero over the horizon
    Verdict verdict = Verdict::bands_violated;
};

struct HypothesisOptions {
    unsigned long N0 = 100;
    double band_factor = 4.0;
};

// Requires checkpoints >= N0; the partial-summation chains are checked with
// conservative interval endpoints at every checkpoint.
HypothesisReport hypothesis_report(const AlphaApproximant& approx, const IrrationalSpec& alpha,
                                   const BigRational& gamma, const ApproxFunction& psi,
                                   const BigRational& epsilon, const TotientTable& totients,
                                   const std::vector<unsigned long>& checkpoints,
                                   const HypothesisOptions& opts = {});

struct Window {
    unsigned long lo = 0, hi = 0;
};

struct WindowStat {
    Window window;
    unsigned long hits = 0;     // samples with >= 1 solution inside the window
    double fraction = 0.0;
};

struct DichotomyRun {
    std::string alpha_text;
    BigRational gamma, delta;
    std::string psi_text;
    unsigned long N = 0;
    unsigned long samples = 0;
    std::uint64_t seed = 0;
    unsigned long hit_count = 0; // samples with >= 1 solution for n <= N
    double hit_fraction = 0.0;
    std::vector<WindowStat> window_hits;
};

// For each beta = k/2^64 (k from the seeded counter stream), scans n <= N
// testing ||n alpha - gamma|| * ||n beta - delta|| < psi(n) with the product
// comparison exact on the surrogate (hits are decided against the
// conservative lower bracket of psi). Identical seed gives identical output
// for any thread count.
DichotomyRun dichotomy_mc(const AlphaApproximant& approx, const IrrationalSpec& alpha,
                          const BigRational& gamma, const ApproxFunction& psi,
                          unsigned long N, unsigned long samples, std::uint64_t seed,
                          const std::vector<Window>& windows,
                          const BigRational& delta = BigRational(0), unsigned threads = 0);

} // namespace bohrgap
