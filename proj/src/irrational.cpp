#include "bohrgap/irrational.hpp"

#include <charconv>
#include <sstream>

#include "bohrgap/errors.hpp"

namespace bohrgap {

IrrationalSpec IrrationalSpec::named(Kind k) {
    require(k != Kind::list, errc::invalid_argument, "named() needs a named kind");
    IrrationalSpec s;
    s.kind = k;
    return s;
}

IrrationalSpec IrrationalSpec::from_list(std::vector<unsigned long> initial,
                                         std::vector<unsigned long> cycle,
                                         std::optional<BigRational> lambda) {
    require(!initial.empty(), errc::invalid_argument, "quotient list is empty");
    for (std::size_t k = 1; k < initial.size(); ++k)
        require(initial[k] >= 1, errc::invalid_argument, "partial quotient a_k must be >= 1 for k >= 1");
    for (unsigned long b : cycle)
        require(b >= 1, errc::invalid_argument, "periodic tail entries must be >= 1");
    if (lambda)
        require(*lambda >= 2, errc::invalid_argument, "lambda must be >= 2");
    IrrationalSpec s;
    s.kind = Kind::list;
    s.initial = std::move(initial);
    s.cycle = std::move(cycle);
    s.lambda_hint = std::move(lambda);
    return s;
}

unsigned long IrrationalSpec::quotient(std::size_t k) const {
    switch (kind) {
    case Kind::golden:
        return 1;
    case Kind::sqrt2:
        return k == 0 ? 1 : 2;
    case Kind::sqrt3:
        // [1; 1, 2, 1, 2, ...]
        if (k == 0) return 1;
        return (k % 2 == 1) ? 1 : 2;
    case Kind::euler:
        // [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]: a_{3m-1} = 2m, all others 1.
        if (k == 0) return 2;
        return (k % 3 == 2) ? 2 * (k / 3 + 1) : 1;
    case Kind::list:
        if (k < initial.size()) return initial[k];
        if (cycle.empty())
            raise(errc::quotient_source_exhausted,
                  "finite quotient list of length " + std::to_string(initial.size()) +
                      " has no a_" + std::to_string(k));
        return cycle[(k - initial.size()) % cycle.size()];
    }
    raise(errc::internal_invariant, "unreachable quotient kind");
}

namespace {

unsigned long parse_quotient(std::string_view tok) {
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        raise(errc::invalid_argument, "bad partial quotient '" + std::string(tok) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

} // namespace

IrrationalSpec IrrationalSpec::parse(std::string_view text) {
    if (text == "golden") return named(Kind::golden);
    if (text == "sqrt2") return named(Kind::sqrt2);
    if (text == "sqrt3") return named(Kind::sqrt3);
    if (text == "e") return named(Kind::euler);

    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        raise(errc::invalid_argument,
              "alpha must be golden|sqrt2|sqrt3|e|[a0;...], got '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t semi = body.find(';');
    require(semi != std::string_view::npos, errc::invalid_argument,
            "missing ';' after a0 in '" + std::string(text) + "'");

    std::vector<unsigned long> initial{parse_quotient(body.substr(0, semi))};
    std::vector<unsigned long> cycle;
    std::string_view rest = body.substr(semi + 1);

    bool in_tail = false;
    for (std::string_view tok : split(rest, ',')) {
        if (tok.empty()) raise(errc::invalid_argument, "empty quotient in '" + std::string(text) + "'");
        bool opens = tok.front() == '(';
        bool closes = tok.back() == ')';
        if (opens) {
            require(!in_tail, errc::invalid_argument, "nested '(' in '" + std::string(text) + "'");
            in_tail = true;
            tok.remove_prefix(1);
        }
        if (closes) {
            require(in_tail, errc::invalid_argument, "stray ')' in '" + std::string(text) + "'");
            tok.remove_suffix(1);
        }
        unsigned long v = parse_quotient(tok);
        if (in_tail)
            cycle.push_back(v);
        else
            initial.push_back(v);
        if (closes) in_tail = false;
    }
    require(!in_tail, errc::invalid_argument, "unterminated '(' in '" + std::string(text) + "'");
    return from_list(std::move(initial), std::move(cycle));
}

std::string IrrationalSpec::text() const {
    switch (kind) {
    case Kind::golden: return "golden";
    case Kind::sqrt2: return "sqrt2";
    case Kind::sqrt3: return "sqrt3";
    case Kind::euler: return "e";
    case Kind::list: break;
    }
    std::ostringstream os;
    os << '[' << initial[0] << ';';
    for (std::size_t i = 1; i < initial.size(); ++i) {
        if (i > 1) os << ',';
        os << initial[i];
    }
    if (!cycle.empty()) {
        if (initial.size() > 1) os << ',';
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) os << ',';
            os << cycle[i];
        }
        os << ')';
    }
    os << ']';
    return os.str();
}

} // namespace bohrgap
