#include "bohrgap/bohr.hpp"

#include <algorithm>
#include <numeric>

#include "bohrgap/detail/frac_scanner.hpp"
#include "bohrgap/detail/parallel.hpp"
#include "bohrgap/errors.hpp"
#include "bohrgap/three_distance.hpp"

namespace bohrgap {

void BohrQuery::validate() const {
    require(N >= 1, errc::invalid_argument, "N must be positive");
    require(rho > 0 && rho <= BigRational(1, 2), errc::invalid_argument,
            "rho must lie in (0, 1/2]");
}

BohrSet enumerate_bohr(const BohrQuery& query, bool restrict_star,
                       const AlphaApproximant* approx_in, unsigned threads) {
    query.validate();
    AlphaApproximant local;
    if (!approx_in) {
        local = approximant_for_horizon(query.alpha, query.N);
        approx_in = &local;
    }
    require(BigRational(query.N) * approx_in->error_bound < BigRational(1, 4),
            errc::precision_insufficient, "approximant too coarse for N");

    unsigned long first = 1;
    if (restrict_star) first = (query.N + 19) / 20; // ceil(N/20)
    if (first == 0) first = 1;

    BohrSet out;
    out.query = query;
    out.restricted = restrict_star;
    if (first > query.N) return out;

    constexpr unsigned long block = 1u << 16;
    unsigned long nblocks = (query.N - first) / block + 1;
    std::vector<std::vector<unsigned long>> mem(nblocks), amb(nblocks);

    detail::for_blocks(first, query.N, block, threads, [&](unsigned long b, unsigned long lo,
                                                           unsigned long hi) {
        detail::FracScanner scan(*approx_in, query.gamma);
        detail::ThresholdGuard guard(scan, query.rho);
        scan.seek(lo - 1);
        for (unsigned long n = lo; n <= hi; ++n) {
            scan.advance();
            if (guard.ambiguous(scan))
                amb[b].push_back(n);
            else if (guard.leq(scan))
                mem[b].push_back(n);
        }
    });

    for (unsigned long b = 0; b < nblocks; ++b) {
        out.members.insert(out.members.end(), mem[b].begin(), mem[b].end());
        out.ambiguous.insert(out.ambiguous.end(), amb[b].begin(), amb[b].end());
    }
    return out;
}

namespace {

unsigned long to_ulong(const BigInt& x, const char* what) {
    require(x.fits_ulong_p(), errc::invalid_argument, std::string(what) + " does not fit a machine word");
    return mpz_get_ui(x.get_mpz_t());
}

// rho >= N^{-2 eps} and rho <= N^{-eps}, checked by cross-powering
// rho = rn/rd against N^{-a/b}.
void check_epsilon_range(const BohrQuery& query, const BigRational& eps) {
    unsigned long a = to_ulong(eps.get_num(), "epsilon numerator");
    unsigned long b = to_ulong(eps.get_den(), "epsilon denominator");
    BigInt rn_b, rd_b, n_pow;
    mpz_pow_ui(rn_b.get_mpz_t(), query.rho.get_num().get_mpz_t(), b);
    mpz_pow_ui(rd_b.get_mpz_t(), query.rho.get_den().get_mpz_t(), b);
    mpz_ui_pow_ui(n_pow.get_mpz_t(), query.N, 2 * a);
    require(rn_b * n_pow >= rd_b, errc::invalid_argument,
            "rho below N^{-2 epsilon} in range-checked mode");
    mpz_ui_pow_ui(n_pow.get_mpz_t(), query.N, a);
    require(rn_b * n_pow <= rd_b, errc::invalid_argument,
            "rho above N^{-epsilon} in range-checked mode");
}

} // namespace

Gap2AP construct_gap(const BohrQuery& query, const ConstructOptions& opts,
                     const AlphaApproximant* approx_in) {
    query.validate();
    ConvergentLadder lad = ladder(query.alpha, horizon_min_q(query.N));
    AlphaApproximant local;
    if (!approx_in) {
        local = approximant(lad);
        approx_in = &local;
    }

    if (opts.enforce_epsilon_range) {
        BigRational eps = opts.epsilon ? *opts.epsilon
                                       : default_epsilon(lambda_for(query.alpha, lad));
        check_epsilon_range(query, eps);
    }

    unsigned long M = opts.base_search_m.value_or(query.N / 10);
    require(M >= 1, errc::base_point_too_far,
            "no room for a base point search below N=" + std::to_string(query.N));

    BasePoint bp = find_base_point(*approx_in, query.gamma, M);
    if (bp.dist * 10 > query.rho)
        raise(errc::base_point_too_far,
              "||b0 alpha - gamma|| = " + rational_text(bp.dist) + " exceeds rho/10 = " +
                  rational_text(query.rho / 10) + " at M=" + std::to_string(M));

    // t minimal with N < rho q_t^2; then rho q_{t-1}^2 <= N automatically.
    const BigInt& rn = query.rho.get_num();
    const BigInt& rd = query.rho.get_den();
    BigInt N_rd = BigInt(query.N) * rd;
    std::size_t t = 0;
    bool found = false;
    for (std::size_t i = 1; i < lad.entries.size(); ++i) {
        if (N_rd < rn * lad.entries[i].q * lad.entries[i].q) {
            t = i;
            found = true;
            break;
        }
    }
    require(found, errc::ladder_too_short, "no t with N < rho q_t^2 within the ladder");
    require(N_rd >= rn * lad.at(t - 1).q * lad.at(t - 1).q, errc::internal_invariant,
            "t selection lost minimality");
    // q_t > (N/rho)^{1/2}, equivalent to the defining inequality.
    require(rn * lad.at(t).q * lad.at(t).q > N_rd, errc::internal_invariant,
            "q_t fails the square-root lower bound");

    Gap2AP gap;
    gap.t = t;
    gap.base_point = bp.b0;
    bool small_case = N_rd < rn * lad.at(t - 1).q * lad.at(t).q;
    if (small_case) {
        require(t >= 2, errc::ladder_too_short,
                "small regime needs q_{t-2}; N is too small for this rho");
        gap.case_tag = Gap2AP::Case::small_regime;
        gap.A1 = lad.at(t - 2).q;
        gap.A2 = lad.at(t - 1).q;
    } else {
        gap.case_tag = Gap2AP::Case::large_regime;
        gap.A1 = lad.at(t - 1).q;
        gap.A2 = lad.at(t).q;
    }

    BigInt n1 = (rn * gap.A2) / (10 * rd);        // floor(rho A2 / 10)
    BigInt n2 = BigInt(query.N) / (10 * gap.A2);  // floor(N / (10 A2))
    if (n1 == 0 || n2 == 0)
        raise(errc::degenerate_sides, "N1=" + n1.get_str() + " N2=" + n2.get_str() +
                                          " (need both >= 1)");
    gap.N1 = to_ulong(n1, "N1");
    gap.N2 = to_ulong(n2, "N2");
    gap.b = bp.b0 + n2 * gap.A2;

    BigInt g;
    mpz_gcd(g.get_mpz_t(), gap.A1.get_mpz_t(), gap.A2.get_mpz_t());
    require(g == 1, errc::internal_invariant, "A1, A2 not coprime");
    require(gap.A2 > gap.N1, errc::internal_invariant, "A2 <= N1 breaks properness");
    require(20 * gap.b >= query.N && 2 * gap.b <= query.N, errc::internal_invariant,
            "b outside [N/20, N/2]");
    return gap;
}

std::vector<BigInt> gap_members(const Gap2AP& gap) {
    require(gap.b >= 1, errc::invalid_argument, "b must be positive");
    require(gap.A1 >= 1 && gap.A2 >= 1, errc::invalid_argument, "A1, A2 must be positive");
    require(gap.N1 >= 1 && gap.N2 >= 1, errc::invalid_argument, "N1, N2 must be positive");
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(gap.N1) * gap.N2);
    BigInt row = gap.b;
    for (unsigned long n2 = 1; n2 <= gap.N2; ++n2) {
        row += gap.A2;
        BigInt v = row;
        for (unsigned long n1 = 1; n1 <= gap.N1; ++n1) {
            v += gap.A1;
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end())
        raise(errc::properness_violation, "duplicate member " + dup->get_str());
    return out;
}

InclusionReport check_inclusion(const Gap2AP& gap, const BohrQuery& query,
                                const AlphaApproximant* approx_in) {
    query.validate();
    AlphaApproximant local;
    if (!approx_in) {
        local = approximant_for_horizon(query.alpha, query.N);
        approx_in = &local;
    }
    InclusionReport rep;
    for (const BigInt& n : gap_members(gap)) {
        if (n > query.N || n < 1) {
            rep.violations.push_back(n);
            continue;
        }
        FracDist d = frac_dist(*approx_in, n, query.gamma);
        BigRational diff = d.value - query.rho;
        BigRational mag = diff >= 0 ? diff : BigRational(-diff);
        if (mag <= d.slack)
            rep.ambiguous.push_back(n);
        else if (d.value > query.rho)
            rep.violations.push_back(n);
    }
    rep.included = rep.violations.empty();
    return rep;
}

json to_json(const BohrQuery& query) {
    return json{{"alpha", query.alpha.text()},
                {"gamma", rational_text(query.gamma)},
                {"N", query.N},
                {"rho", rational_text(query.rho)}};
}

json to_json(const BohrSet& set) {
    json j;
    j["query"] = to_json(set.query);
    j["restricted"] = set.restricted;
    j["members"] = set.members;
    j["ambiguous"] = set.ambiguous;
    return j;
}

json to_json(const Gap2AP& gap) {
    return json{{"b", to_ulong(gap.b, "b")},
                {"A1", to_ulong(gap.A1, "A1")},
                {"A2", to_ulong(gap.A2, "A2")},
                {"N1", gap.N1},
                {"N2", gap.N2},
                {"case", gap.case_tag == Gap2AP::Case::small_regime ? "small" : "large"},
                {"t", gap.t}};
}

json to_json(const InclusionReport& rep) {
    json j;
    j["included"] = rep.included;
    json v = json::array(), a = json::array();
    for (const auto& n : rep.violations) v.push_back(n.get_str());
    for (const auto& n : rep.ambiguous) a.push_back(n.get_str());
    j["violations"] = v;
    j["ambiguous"] = a;
    return j;
}

BohrQuery bohr_query_from_json(const json& j) {
    BohrQuery q;
    q.alpha = IrrationalSpec::parse(j.at("alpha").get<std::string>());
    q.gamma = parse_rational(j.at("gamma").get<std::string>());
    q.N = j.at("N").get<unsigned long>();
    q.rho = parse_rational(j.at("rho").get<std::string>());
    q.validate();
    return q;
}

Gap2AP gap_from_json(const json& j) {
    Gap2AP g;
    g.b = BigInt(j.at("b").get<unsigned long long>());
    g.A1 = BigInt(j.at("A1").get<unsigned long long>());
    g.A2 = BigInt(j.at("A2").get<unsigned long long>());
    g.N1 = j.at("N1").get<unsigned long>();
    g.N2 = j.at("N2").get<unsigned long>();
    std::string c = j.at("case").get<std::string>();
    require(c == "small" || c == "large", errc::invalid_argument, "case must be small|large");
    g.case_tag = c == "small" ? Gap2AP::Case::small_regime : Gap2AP::Case::large_regime;
    g.t = j.at("t").get<std::size_t>();
    return g;
}

} // namespace bohrgap
