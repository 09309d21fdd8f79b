#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohrgap/rational.hpp"

namespace bohrgap {

// An irrational number given by its stream of partial quotients, plus the
// exponent lambda = 1 + mu(alpha) when known. Named constants carry their
// classical expansions; explicit lists may end (and then the stream is
// exhausted) or repeat a periodic tail forever.
struct IrrationalSpec {
    enum class Kind { golden, sqrt2, sqrt3, euler, list };

    Kind kind = Kind::golden;
    std::vector<unsigned long> initial; // a_0, a_1, ... for Kind::list
    std::vector<unsigned long> cycle;   // periodic tail; empty = finite list
    std::optional<BigRational> lambda_hint; // user-provided, >= 2

    // Accepted forms: "golden" | "sqrt2" | "sqrt3" | "e" |
    // "[a0;a1,...,an]" | "[a0;a1,...,(b1,...,bm)]".
    static IrrationalSpec parse(std::string_view text);

    static IrrationalSpec named(Kind k);
    static IrrationalSpec from_list(std::vector<unsigned long> initial,
                                    std::vector<unsigned long> cycle = {},
                                    std::optional<BigRational> lambda = {});

    // a_k; throws QuotientSourceExhausted for a finite list that ends.
    unsigned long quotient(std::size_t k) const;

    bool finite() const { return kind == Kind::list && cycle.empty(); }

    // Canonical text form (round-trips through parse).
    std::string text() const;
};

// lambda for this spec: exact 2 for the named constants (all have
// mu = 1), the user's hint when given. Estimated specs get
// 1 + max_k log q_{k+1} / log q_k over a ladder; see ladder.hpp.
struct LambdaInfo {
    BigRational value;
    bool estimated = false;
};

} // namespace bohrgap
