#include "bohrgap/ladder.hpp"

#include <cmath>

#include "bohrgap/errors.hpp"

namespace bohrgap {

const LadderEntry& ConvergentLadder::at(std::size_t k) const {
    require(k < entries.size(), errc::ladder_too_short,
            "ladder has no entry k=" + std::to_string(k));
    return entries[k];
}

BigInt ConvergentLadder::q_seed(long k) const {
    if (k < 0) return BigInt(0);
    return at(static_cast<std::size_t>(k)).q;
}

ConvergentLadder ladder(const IrrationalSpec& spec, const BigInt& min_q) {
    require(min_q >= 1, errc::invalid_argument, "min_q must be positive");
    ConvergentLadder lad;
    // Seeds p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1 give
    // p_0 = a_0, q_0 = 1 from the uniform recurrence.
    BigInt p_prev1(1), p_prev2(0);
    BigInt q_prev1(0), q_prev2(1);
    bool found_K = false;
    for (std::size_t k = 0;; ++k) {
        unsigned long a = spec.quotient(k); // throws QuotientSourceExhausted
        if (k >= 1)
            require(a >= 1, errc::invalid_argument, "partial quotient a_k must be >= 1 for k >= 1");
        BigInt p = a * p_prev1 + p_prev2;
        BigInt q = a * q_prev1 + q_prev2;
        lad.entries.push_back({k, a, p, q});
        p_prev2 = p_prev1; p_prev1 = p;
        q_prev2 = q_prev1; q_prev1 = q;
        if (!found_K && q >= min_q) {
            lad.K = k;
            found_K = true;
        } else if (found_K) {
            break; // one extra entry K+1 recorded
        }
    }
    return lad;
}

AlphaApproximant approximant(const ConvergentLadder& lad) {
    const LadderEntry& eK = lad.at(lad.K);
    const LadderEntry& eK1 = lad.at(lad.K + 1);
    AlphaApproximant a;
    a.value = BigRational(eK.p, eK.q);
    a.error_bound = BigRational(1, eK.q * eK1.q);
    a.K = lad.K;
    return a;
}

BigInt horizon_min_q(unsigned long n_max) {
    require(n_max >= 1, errc::invalid_argument, "horizon must be positive");
    BigInt root;
    BigInt n(n_max);
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    if (root * root < n) root += 1; // ceil
    return BigInt(1000000) * root;
}

AlphaApproximant approximant_for_horizon(const IrrationalSpec& spec, unsigned long n_max) {
    return approximant(ladder(spec, horizon_min_q(n_max)));
}

FracDist frac_dist(const AlphaApproximant& approx, const BigInt& n, const BigRational& gamma) {
    require(n >= 1, errc::invalid_argument, "n must be positive");
    BigRational slack = BigRational(n) * approx.error_bound;
    require(slack < BigRational(1, 4), errc::precision_insufficient,
            "n * error_bound >= 1/4 at n=" + n.get_str());
    FracDist d;
    d.value = dist_to_nearest_int(BigRational(n) * approx.value - gamma);
    d.slack = slack;
    return d;
}

LambdaInfo lambda_for(const IrrationalSpec& spec, const ConvergentLadder& lad) {
    // golden, sqrt2, sqrt3 are quadratic irrationals (mu = 1); the same
    // exponent is classical for e.
    if (spec.kind != IrrationalSpec::Kind::list) return {BigRational(2), false};
    if (spec.lambda_hint) return {*spec.lambda_hint, false};
    double max_ratio = 2.0;
    for (std::size_t k = 1; k + 1 < lad.entries.size(); ++k) {
        double lq = std::log(lad.entries[k].q.get_d());
        double lq1 = std::log(lad.entries[k + 1].q.get_d());
        if (lq > 0) max_ratio = std::max(max_ratio, 1.0 + lq1 / lq);
    }
    // Round up to 1/1000 granularity to keep the estimate rational.
    auto scaled = static_cast<unsigned long>(std::ceil(max_ratio * 1000.0));
    BigRational est(scaled, 1000);
    est.canonicalize();
    return {est, true};
}

BigRational default_epsilon(const LambdaInfo& lambda) {
    BigInt ceil_lambda = lambda.value.get_num() / lambda.value.get_den();
    if (ceil_lambda * lambda.value.get_den() < lambda.value.get_num()) ceil_lambda += 1;
    return BigRational(1, 10 * ceil_lambda);
}

} // namespace bohrgap
