#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bohrgap/irrational.hpp"
#include "bohrgap/ladder.hpp"
#include "bohrgap/rational.hpp"

namespace bohrgap {

// Parameters of the set {n <= N : ||n alpha - gamma|| <= rho}.
struct BohrQuery {
    IrrationalSpec alpha;
    BigRational gamma;
    unsigned long N = 0;
    BigRational rho;

    void validate() const; // N >= 1, 0 < rho <= 1/2
};

struct BohrSet {
    BohrQuery query;
    bool restricted = false; // intersected with [N/20, N]
    std::vector<unsigned long> members;
    std::vector<unsigned long> ambiguous; // |value - rho| within slack
};

// Exact enumeration (the oracle). Membership uses the closed comparison
// value <= rho; indices whose slack band straddles rho land in `ambiguous`
// and never in `members`. threads = 0 picks a hardware default.
BohrSet enumerate_bohr(const BohrQuery& query, bool restrict_star = false,
                       const AlphaApproximant* approx = nullptr, unsigned threads = 0);

// A proper two-dimensional progression {b + A1 n1 + A2 n2} contained in the
// Bohr set, produced by the base-point + convergent-pair construction.
struct Gap2AP {
    BigInt b;
    BigInt A1, A2;
    unsigned long N1 = 0, N2 = 0;
    enum class Case { small_regime, large_regime };
    Case case_tag = Case::small_regime;
    std::size_t t = 0;
    BigInt base_point; // witness b0
};

struct ConstructOptions {
    std::optional<unsigned long> base_search_m; // default floor(N/10)
    bool enforce_epsilon_range = false;         // demand N^{-2e} <= rho <= N^{-e}
    std::optional<BigRational> epsilon;         // used only by the range check
};

// Fails with BasePointTooFar / DegenerateSides / LadderTooShort when the
// recipe does not go through at this scale; never returns an unchecked
// progression.
Gap2AP construct_gap(const BohrQuery& query, const ConstructOptions& opts = {},
                     const AlphaApproximant* approx = nullptr);

// All N1*N2 members, sorted; throws PropernessViolation on duplicates.
std::vector<BigInt> gap_members(const Gap2AP& gap);

struct InclusionReport {
    bool included = false;
    std::vector<BigInt> violations;
    std::vector<BigInt> ambiguous;
};

InclusionReport check_inclusion(const Gap2AP& gap, const BohrQuery& query,
                                const AlphaApproximant* approx = nullptr);

using json = nlohmann::ordered_json;

json to_json(const BohrQuery& query);
json to_json(const BohrSet& set);
json to_json(const Gap2AP& gap);
json to_json(const InclusionReport& report);
BohrQuery bohr_query_from_json(const json& j);
Gap2AP gap_from_json(const json& j);

} // namespace bohrgap
