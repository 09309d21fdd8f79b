#include "bohrgap/totient.hpp"

#include <cmath>

#include "bohrgap/errors.hpp"

namespace bohrgap {

BigRational TotientTable::ratio(unsigned long n) const {
    require(n >= 1 && n <= limit, errc::invalid_argument,
            "totient table does not cover n=" + std::to_string(n));
    BigRational r(phi[n], n);
    r.canonicalize();
    return r;
}

TotientTable totient_sieve(unsigned long limit) {
    require(limit >= 1, errc::invalid_argument, "sieve limit must be positive");
    require(limit < (1ul << 32), errc::invalid_argument, "sieve limit exceeds 32-bit range");
    TotientTable t;
    t.limit = limit;
    t.phi.resize(limit + 1);
    for (unsigned long i = 0; i <= limit; ++i) t.phi[i] = static_cast<std::uint32_t>(i);
    for (unsigned long i = 2; i <= limit; ++i) {
        if (t.phi[i] != i) continue; // composite, already reduced
        for (unsigned long j = i; j <= limit; j += i) t.phi[j] -= t.phi[j] / i;
    }
    return t;
}

void CongruenceBox::validate() const {
    require(A1 >= 1 && A2 >= 1, errc::invalid_argument, "A1, A2 must be positive");
    require(N1 >= 1 && N2 >= 1, errc::invalid_argument, "box must be nonempty");
    require(N1 <= 1000000000ul && N2 <= 1000000000ul, errc::invalid_argument,
            "box sides exceed the supported range");
    require(p >= 2, errc::invalid_argument, "p must be prime (>= 2)");
}

namespace {

long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// #{x in [-L, L] : x == r (mod p)}, 0 <= r < p.
long long count_sym(long long L, long long r, long long p) {
    return floor_div_ll(L - r, p) - floor_div_ll(-L - 1 - r, p);
}

// #{x in [1, L] : x == r (mod p)}, 0 <= r < p.
long long count_pos(long long L, long long r, long long p) {
    if (r == 0) return L / p;
    if (r > L) return 0;
    return (L - r) / p + 1;
}

unsigned long mod_ui(const BigInt& x, unsigned long p) {
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

unsigned long inv_mod(unsigned long a, unsigned long p) {
    BigInt r, av(a), pv(p);
    int ok = mpz_invert(r.get_mpz_t(), av.get_mpz_t(), pv.get_mpz_t());
    require(ok != 0, errc::internal_invariant, "no modular inverse");
    return mpz_get_ui(r.get_mpz_t());
}

} // namespace

CongruenceCount count_congruence_points(const CongruenceBox& box) {
    box.validate();
    const long long p = static_cast<long long>(box.p);
    const long long N1 = static_cast<long long>(box.N1);
    const long long N2 = static_cast<long long>(box.N2);
    unsigned long a1 = mod_ui(box.A1, box.p);
    unsigned long a2 = mod_ui(box.A2, box.p);

    CongruenceCount out;
    BigRational vol_cells(BigInt(2 * N1 + 1) * BigInt(2 * N2 + 1), box.p);
    vol_cells.canonicalize();
    out.predicted_cells = 1 + vol_cells;
    BigRational vol_area(BigInt(4) * N1 * N2, box.p);
    vol_area.canonicalize();
    out.predicted_area = 1 + vol_area;

    long long total = 0;
    if (a1 == 0 && a2 == 0) {
        total = (2 * N1 + 1) * (2 * N2 + 1);
    } else if (a1 == 0) {
        // A2 y == 0 (mod p) with p coprime to A2: y == 0.
        total = (2 * N1 + 1) * count_sym(N2, 0, p);
    } else if (a2 == 0) {
        total = count_sym(N1, 0, p) * (2 * N2 + 1);
    } else {
        out.lattice_path = true;
        // y == -A1 x / A2 (mod p) for each x class.
        unsigned long slope = static_cast<unsigned long>(
            (static_cast<unsigned long long>(box.p - a1) * inv_mod(a2, box.p)) % box.p);
        if (p <= 2 * N1 + 1) {
            for (long long c = 0; c < p; ++c) {
                long long r = static_cast<long long>(
                    (static_cast<unsigned long long>(slope) * c) % box.p);
                total += count_sym(N1, c, p) * count_sym(N2, r, p);
            }
        } else {
            for (long long x = -N1; x <= N1; ++x) {
                long long c = x % p;
                if (c < 0) c += p;
                long long r = static_cast<long long>(
                    (static_cast<unsigned long long>(slope) * c) % box.p);
                total += count_sym(N2, r, p);
            }
        }
    }
    out.count = total;
    return out;
}

BigRational alpha_p(const Gap2AP& gap, unsigned long p) {
    require(p >= 2, errc::invalid_argument, "p must be prime (>= 2)");
    const long long N1 = static_cast<long long>(gap.N1);
    const long long N2 = static_cast<long long>(gap.N2);
    require(N1 >= 1 && N2 >= 1, errc::invalid_argument, "empty progression");
    unsigned long a1 = mod_ui(gap.A1, p);
    unsigned long a2 = mod_ui(gap.A2, p);
    unsigned long b = mod_ui(gap.b, p);
    const long long pl = static_cast<long long>(p);

    long long count = 0;
    if (a1 == 0 && a2 == 0) {
        count = (b == 0) ? N1 * N2 : 0;
    } else if (a1 == 0) {
        // A2 n2 == -b (mod p)
        unsigned long r = static_cast<unsigned long>(
            (static_cast<unsigned long long>((p - b) % p) * inv_mod(a2, p)) % p);
        count = N1 * count_pos(N2, static_cast<long long>(r), pl);
    } else if (a2 == 0) {
        unsigned long r = static_cast<unsigned long>(
            (static_cast<unsigned long long>((p - b) % p) * inv_mod(a1, p)) % p);
        count = count_pos(N1, static_cast<long long>(r), pl) * N2;
    } else {
        unsigned long inv2 = inv_mod(a2, p);
        if (pl <= N1) {
            for (long long c = 0; c < pl; ++c) {
                // n2 == -(b + A1 c)/A2 (mod p)
                unsigned long long num = (b + static_cast<unsigned long long>(a1) * c) % p;
                unsigned long r = static_cast<unsigned long>(
                    ((p - num) % p) * static_cast<unsigned long long>(inv2) % p);
                count += count_pos(N1, c, pl) * count_pos(N2, static_cast<long long>(r), pl);
            }
        } else {
            for (long long n1 = 1; n1 <= N1; ++n1) {
                unsigned long long num = (b + static_cast<unsigned long long>(a1) * (n1 % pl)) % p;
                unsigned long r = static_cast<unsigned long>(
                    ((p - num) % p) * static_cast<unsigned long long>(inv2) % p);
                count += count_pos(N2, static_cast<long long>(r), pl);
            }
        }
    }
    BigRational prop(count, BigInt(N1) * N2);
    prop.canonicalize();
    return prop;
}

BigRational exact_sum(std::vector<BigRational> terms) {
    if (terms.empty()) return BigRational(0);
    std::size_t n = terms.size();
    while (n > 1) {
        std::size_t out = 0;
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            terms[i] += terms[i + 1];
            terms[out++] = std::move(terms[i]);
        }
        if (n % 2) terms[out++] = std::move(terms[n - 1]);
        n = out;
    }
    return terms[0];
}

AmGmDiagnostic amgm_diagnostic(const std::vector<BigInt>& members, const TotientTable& totients) {
    require(!members.empty(), errc::invalid_argument, "empty member list");
    AmGmDiagnostic diag;
    double log_sum = 0.0;
    std::vector<BigRational> ratios;
    ratios.reserve(members.size());
    for (const BigInt& m : members) {
        unsigned long n = mpz_get_ui(m.get_mpz_t());
        require(m.fits_ulong_p() && n <= totients.limit, errc::invalid_argument,
                "totient table does not cover member " + m.get_str());
        BigRational r = totients.ratio(n);
        log_sum += std::log(r.get_d());
        ratios.push_back(std::move(r));
    }
    double inv = 1.0 / static_cast<double>(members.size());
    diag.geometric_mean = std::exp(log_sum * inv);
    diag.log_inverse = -log_sum * inv;
    diag.arithmetic_mean = exact_sum(std::move(ratios)) / BigRational(members.size());
    diag.arithmetic_mean.canonicalize();
    require(diag.arithmetic_mean.get_d() >= diag.geometric_mean - 1e-12,
            errc::internal_invariant, "AM-GM violated beyond log-space tolerance");
    return diag;
}

AmGmDiagnostic amgm_diagnostic(const Gap2AP& gap, const TotientTable& totients) {
    return amgm_diagnostic(gap_members(gap), totients);
}

BohrTotientSum bohr_totient_sum(const BohrQuery& query, const TotientTable& totients,
                                unsigned threads) {
    query.validate();
    require(totients.limit >= query.N, errc::precision_insufficient,
            "totient table shorter than N");
    BohrSet star = enumerate_bohr(query, /*restrict_star=*/true, nullptr, threads);
    BohrTotientSum out;
    out.member_count = static_cast<unsigned long>(star.members.size());
    std::vector<BigRational> terms;
    terms.reserve(star.members.size());
    for (unsigned long n : star.members) terms.push_back(totients.ratio(n));
    out.sum_star = exact_sum(std::move(terms));
    BigRational denom = query.rho * BigRational(query.N);
    out.ratio = BigRational(out.sum_star / denom).get_d();
    return out;
}

} // namespace bohrgap
