#include "bohrgap/three_distance.hpp"

#include <algorithm>
#include <map>

#include "bohrgap/errors.hpp"

namespace bohrgap {

ThreeDistanceDecomposition decompose(const ConvergentLadder& lad, const BigInt& M) {
    require(M >= 1, errc::invalid_argument, "M must be positive");
    // The admissible M for index k form [q_k + q_{k-1}, q_{k+1} + q_k - 1];
    // these ranges partition the positive integers.
    for (std::size_t k = 0;; ++k) {
        if (k + 1 >= lad.entries.size())
            raise(errc::ladder_too_short,
                  "ladder does not witness q_{k+1} + q_k > M for M=" + M.get_str());
        BigInt lo = lad.q_seed(static_cast<long>(k)) + lad.q_seed(static_cast<long>(k) - 1);
        BigInt hi = lad.q_seed(static_cast<long>(k) + 1) + lad.q_seed(static_cast<long>(k));
        if (M < lo) continue; // cannot happen for k = 0 since lo = 1
        if (M >= hi) continue;
        ThreeDistanceDecomposition dec;
        dec.M = M;
        dec.k = k;
        BigInt rem = M - lad.q_seed(static_cast<long>(k) - 1);
        const BigInt& qk = lad.at(k).q;
        dec.r = rem / qk;
        dec.s = rem - dec.r * qk;
        require(dec.r >= 1 && dec.r <= lad.at(k + 1).a, errc::internal_invariant,
                "r out of range in three-distance decomposition");
        require(dec.s >= 0 && dec.s < qk, errc::internal_invariant,
                "s out of range in three-distance decomposition");
        return dec;
    }
}

namespace {

// (numerator of frac(n alpha) over q, n) for n = 1..M, sorted by numerator.
std::vector<std::pair<BigInt, unsigned long>> sorted_points(const AlphaApproximant& approx,
                                                            unsigned long M) {
    require(M >= 1, errc::invalid_argument, "M must be positive");
    const BigInt& q = approx.value.get_den();
    require(q > M, errc::precision_insufficient,
            "approximant denominator must exceed M for distinct points");
    // Pairwise separation is at least 1/q; demand it exceeds twice the
    // worst slack M/(q_K q_{K+1}), i.e. q_{K+1} > 2M.
    BigInt err_den = approx.error_bound.get_den(); // q_K * q_{K+1}
    require(err_den > 2 * BigInt(M) * q, errc::precision_insufficient,
            "points not separated beyond twice the slack");

    BigInt step;
    mpz_fdiv_r(step.get_mpz_t(), approx.value.get_num().get_mpz_t(), q.get_mpz_t());
    std::vector<std::pair<BigInt, unsigned long>> pts;
    pts.reserve(M);
    BigInt u(0);
    for (unsigned long n = 1; n <= M; ++n) {
        u += step;
        if (u >= q) u -= q;
        pts.emplace_back(u, n);
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

} // namespace

GapProfile gap_profile(const AlphaApproximant& approx, unsigned long M) {
    auto pts = sorted_points(approx, M);
    const BigInt& q = approx.value.get_den();

    std::map<BigInt, unsigned long> gaps; // numerator of gap length -> multiplicity
    BigInt prev(0);
    for (const auto& [u, n] : pts) {
        gaps[u - prev] += 1;
        prev = u;
    }
    gaps[q - prev] += 1;

    GapProfile prof;
    prof.M = M;
    BigInt max_num(0);
    unsigned long total = 0;
    for (const auto& [num, mult] : gaps) {
        BigRational len(num, q);
        len.canonicalize();
        prof.distinct_gaps.emplace_back(len, mult);
        total += mult;
        if (num > max_num) max_num = num;
    }
    require(prof.distinct_gaps.size() <= 3, errc::internal_invariant,
            "more than three distinct gap lengths");
    require(total == M + 1, errc::internal_invariant, "gap multiplicities do not sum to M+1");
    prof.d_max = BigRational(max_num, q);
    prof.d_max.canonicalize();
    return prof;
}

BasePoint find_base_point(const AlphaApproximant& approx, const BigRational& gamma,
                          unsigned long M) {
    auto pts = sorted_points(approx, M);
    const BigInt& q = approx.value.get_den();
    BigInt err_den = approx.error_bound.get_den();

    BigRational g = fractional_part(gamma);
    const BigInt& gn = g.get_num();
    const BigInt& gd = g.get_den();

    // Position of frac(gamma) among the points, comparing u/q vs gn/gd
    // through the exact cross product u*gd vs gn*q.
    BigInt target = gn * q;
    auto it = std::lower_bound(pts.begin(), pts.end(), target,
                               [&](const auto& pt, const BigInt& t) { return pt.first * gd < t; });

    if (it != pts.end() && it->first * gd == target) {
        BasePoint bp;
        bp.b0 = it->second;
        bp.dist = 0;
        return bp;
    }

    // Candidate endpoints of the containing gap that are actual points.
    const std::pair<BigInt, unsigned long>* left = (it == pts.begin()) ? nullptr : &*(it - 1);
    const std::pair<BigInt, unsigned long>* right = (it == pts.end()) ? nullptr : &*it;

    auto within_slack = [&](const std::pair<BigInt, unsigned long>& pt) {
        // |gn/gd - u/q| <= n/err_den  <=>  |gn q - u gd| * err_den <= n q gd
        BigInt lhs = target - pt.first * gd;
        mpz_abs(lhs.get_mpz_t(), lhs.get_mpz_t());
        lhs *= err_den;
        BigInt rhs = q * gd * pt.second;
        return lhs <= rhs;
    };
    if ((left && within_slack(*left)) || (right && within_slack(*right)))
        raise(errc::boundary_ambiguous, "frac(gamma) within slack of a partition point");

    const std::pair<BigInt, unsigned long>* pick = nullptr;
    if (left && right) {
        BigInt dl = target - left->first * gd;
        BigInt dr = right->first * gd - target;
        pick = (dl <= dr) ? left : right;
    } else if (left) {
        pick = left;
    } else if (right) {
        pick = right;
    } else {
        raise(errc::internal_invariant, "no partition points available");
    }

    BasePoint bp;
    bp.b0 = pick->second;
    bp.dist = dist_to_nearest_int(BigRational(bp.b0) * approx.value - gamma);
    return bp;
}

} // namespace bohrgap
