#include "fermatsha/verify.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <string>

#include "fermatsha/fpmat.hpp"
#include "fermatsha/rng.hpp"

namespace fermatsha {

std::vector<int64_t> primes_up_to(int64_t n) {
    std::vector<bool> composite(static_cast<size_t>(std::max<int64_t>(n + 1, 2)), false);
    std::vector<int64_t> primes;
    for (int64_t i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (int64_t j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return primes;
}

namespace {

// Γ_k determinant: Vandermonde rows x^0..x^{n-2} with last row x^{n-1+k}.
int64_t gamma_det(const std::vector<int64_t>& xs, int k, int64_t p) {
    const int n = static_cast<int>(xs.size());
    FpMatrix m(n, n, p);
    for (int j = 0; j < n; ++j) {
        int64_t pw = 1;
        for (int i = 0; i + 1 < n; ++i) {
            m.at(i, j) = pw;
            pw = (pw * xs[static_cast<size_t>(j)]) % p;
        }
        m.at(n - 1, j) =
            mod_pow(xs[static_cast<size_t>(j)], static_cast<uint64_t>(n - 1 + k), p);
    }
    return m.det();
}

struct ElemSym {
    int64_t e1, e2, e3;
};

ElemSym elementary_123(const std::vector<int64_t>& xs, int64_t p) {
    // incremental: adjoin one variable at a time
    int64_t e1 = 0, e2 = 0, e3 = 0;
    for (int64_t x : xs) {
        e3 = (e3 + e2 * x) % p;
        e2 = (e2 + e1 * x) % p;
        e1 = (e1 + x) % p;
    }
    return {e1, e2, e3};
}

bool schur_identity_holds(const std::vector<int64_t>& xs, int64_t p) {
    const ElemSym e = elementary_123(xs, p);
    const int64_t rhs_factor =
        mod_reduce(e.e1 * e.e1 % p * e.e1 - 2 * e.e1 * e.e2 % p + e.e3, p);
    const int64_t g0 = gamma_det(xs, 0, p);
    const int64_t g3 = gamma_det(xs, 3, p);
    return g3 == (g0 * rhs_factor) % p;
}

std::string tuple_to_string(const std::vector<int64_t>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

void schur_exhaustive(std::vector<int64_t>& xs, std::vector<bool>& used, int depth,
                      int n, int64_t p, VerificationOutcome& out) {
    if (depth == n) {
        ++out.trials;
        if (!schur_identity_holds(xs, p))
            out.record("p=" + std::to_string(p) + " tuple=" + tuple_to_string(xs));
        return;
    }
    for (int64_t x = 1; x < p; ++x) {
        if (used[static_cast<size_t>(x)]) continue;
        used[static_cast<size_t>(x)] = true;
        xs.push_back(x);
        schur_exhaustive(xs, used, depth + 1, n, p, out);
        xs.pop_back();
        used[static_cast<size_t>(x)] = false;
    }
}

}  // namespace

VerificationOutcome verify_schur_identity(int n, const OddPrime& prime,
                                          int64_t trials, uint64_t seed) {
    const int64_t p = prime.value();
    if (p <= n)
        throw InvalidDimension("verify_schur_identity: need p > n for distinct "
                               "nonzero points");
    VerificationOutcome out;
    out.name = "schur_identity";

    // ordered tuples of distinct elements of F_p^x
    long double count = 1;
    for (int i = 0; i < n; ++i) count *= static_cast<long double>(p - 1 - i);

    if (count <= static_cast<long double>(trials)) {
        std::vector<int64_t> xs;
        std::vector<bool> used(static_cast<size_t>(p), false);
        schur_exhaustive(xs, used, 0, n, p, out);
        return out;
    }

    SplitMix64 rng(seed);
    std::vector<int64_t> pool(static_cast<size_t>(p - 1));
    std::iota(pool.begin(), pool.end(), 1);
    for (int64_t t = 0; t < trials; ++t) {
        // partial Fisher-Yates draw of n distinct values
        for (int i = 0; i < n; ++i) {
            const size_t j =
                static_cast<size_t>(i) +
                static_cast<size_t>(rng.below(static_cast<uint64_t>(p - 1 - i)));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        std::vector<int64_t> xs(pool.begin(), pool.begin() + n);
        ++out.trials;
        if (!schur_identity_holds(xs, p))
            out.record("p=" + std::to_string(p) + " tuple=" + tuple_to_string(xs));
    }
    return out;
}

VerificationOutcome verify_bk_lemma(const QuotientTriple& t,
                                    const BernoulliTable& table) {
    const int64_t p = t.p();
    if (p < 7) throw InvalidDimension("verify_bk_lemma: need p >= 7");
    if (table.p != p) throw InternalError("verify_bk_lemma: table prime mismatch");

    VerificationOutcome out;
    out.name = "bk_lemma";
    out.trials = 1;

    const std::vector<int64_t>& h = cm_type(t).members;
    const int n = static_cast<int>(h.size());

    FpMatrix sys(n, n, p);
    for (int j = 0; j < n; ++j) {
        int64_t pw = 1;
        for (int i = 0; i < n; ++i) {
            sys.at(i, j) = pw;
            pw = (pw * h[static_cast<size_t>(j)]) % p;
        }
    }
    std::vector<int64_t> rhs(static_cast<size_t>(n), 0);
    rhs[0] = 1;  // F = 1
    const auto b = sys.solve(rhs);
    if (!b)
        throw InternalError("verify_bk_lemma: singular Vandermonde system (H has "
                            "repeated members?)");

    int64_t solved = 0;
    for (int j = 0; j < n; ++j) {
        const int64_t kinv = mod_inv(h[static_cast<size_t>(j)], p);
        const int64_t kinv3 = kinv * kinv % p * kinv % p;
        solved = (solved + (*b)[static_cast<size_t>(j)] * kinv3) % p;
    }
    solved = mod_reduce(-solved, p);

    const int64_t g = gamma_invariant(t, table);
    if (solved != g) {
        // Diagnostic: the solved value consistently matches
        // (q^3 + 2 abc B_{p-3}) / 6 instead of q^3 + abc B_{p-3}.
        const int64_t q = fermat_quotient_power_product(t.prime(), t.a(), t.b(), t.c());
        int64_t abc = mod_reduce(t.a(), p) * mod_reduce(t.b(), p) % p *
                      mod_reduce(t.c(), p) % p;
        const int64_t alt = mod_reduce(
            (q * q % p * q + 2 * abc % p * table.at(p - 3)) % p * mod_inv(6, p), p);
        out.record("p=" + std::to_string(p) + " a=" + std::to_string(t.a()) +
                   " b=" + std::to_string(t.b()) + " c=" + std::to_string(t.c()) +
                   " solved=" + std::to_string(solved) + " gamma=" + std::to_string(g) +
                   " q3_plus_2abcB_over_6=" + std::to_string(alt));
    }
    return out;
}

VerificationOutcome verify_vandiver(const OddPrime& prime,
                                    const BernoulliTable& table) {
    const int64_t p = prime.value();
    if (p < 7) throw InvalidDimension("verify_vandiver: need p >= 7");
    if (table.p != p) throw InternalError("verify_vandiver: table prime mismatch");

    VerificationOutcome out;
    out.name = "vandiver";

    // inverse table: inv[i] = i^{-1} mod p
    std::vector<int64_t> inv(static_cast<size_t>(p), 0);
    inv[1] = 1;
    for (int64_t i = 2; i < p; ++i)
        inv[static_cast<size_t>(i)] =
            mod_reduce(-(p / i) * inv[static_cast<size_t>(p % i)], p);

    const int64_t bp3 = table.at(p - 3);
    for (const QuotientTriple& t : enumerate_triples(prime, false)) {
        ++out.trials;
        int64_t s1 = 0, s2 = 0, s3 = 0;
        for (int64_t k : cm_type(t).members) {
            const int64_t x = inv[static_cast<size_t>(k)];
            s1 = (s1 + x) % p;
            s2 = (s2 + x * x) % p;
            s3 = (s3 + x * x % p * x) % p;
        }
        const int64_t q = fermat_quotient_power_product(prime, t.a(), t.b(), t.c());
        const int64_t abc = mod_reduce(t.a(), p) * mod_reduce(t.b(), p) % p *
                            mod_reduce(t.c(), p) % p;

        const std::string id = "p=" + std::to_string(p) + " a=" + std::to_string(t.a()) +
                               " b=" + std::to_string(t.b()) +
                               " c=" + std::to_string(t.c());
        if (s1 != mod_reduce(-q, p))
            out.record(id + " check=S1 got=" + std::to_string(s1) +
                       " want=" + std::to_string(mod_reduce(-q, p)));
        if (s2 != 0)
            out.record(id + " check=S2 got=" + std::to_string(s2) + " want=0");
        if (s3 != mod_reduce(-abc * bp3, p))
            out.record(id + " check=S3 got=" + std::to_string(s3) +
                       " want=" + std::to_string(mod_reduce(-abc * bp3, p)));

        using i128 = __int128;
        const i128 a = t.a(), b = t.b(), c = t.c();
        if (a * a * a + b * b * b + c * c * c != 3 * a * b * c)
            out.record(id + " check=cubes");
    }
    return out;
}

VerificationOutcome verify_tame_nonsimple(int64_t p_max, bool step_report) {
    if (p_max < 7)
        throw InvalidDimension("verify_tame_nonsimple: need p_max >= 7");
    VerificationOutcome out;
    out.name = "tame_nonsimple";

    for (int64_t p : primes_up_to(p_max)) {
        if (p < 7 || p % 3 != 1) continue;
        const OddPrime prime(p);
        const int64_t p2 = prime.squared();
        for (int64_t r = 1; r < p; ++r) {
            if (mod_reduce(r * r + r + 1, p) != 0) continue;
            ++out.trials;
            const std::string id = "p=" + std::to_string(p) + " r=" + std::to_string(r);
            const int64_t lhs = mod_pow(r + 1, static_cast<uint64_t>(6 * (r + 1)), p2);
            const int64_t rhs = mod_pow(r, static_cast<uint64_t>(6 * r), p2);
            if (lhs != rhs)
                out.record(id + " check=congruence lhs=" + std::to_string(lhs) +
                           " rhs=" + std::to_string(rhs));
            const ReductionResult red = reduction_type(make_triple(prime, 1, r));
            if (red.type != ReductionType::Tame)
                out.record(id + " check=reduction got=" + std::string(to_string(red.type)));
        }
        if (step_report)
            std::cerr << "tame_nonsimple: p=" << p << " done\n";
    }
    return out;
}

VerificationOutcome verify_b_half(int64_t p_max) {
    if (p_max < 7) throw InvalidDimension("verify_b_half: need p_max >= 7");
    VerificationOutcome out;
    out.name = "b_half";
    for (int64_t p : primes_up_to(p_max)) {
        if (p < 7 || p % 4 != 3) continue;
        ++out.trials;
        const OddPrime prime(p);
        const int64_t v = bernoulli_mod_single(prime, (p + 1) / 2);
        if (v == 0)
            out.record("p=" + std::to_string(p) + " check=B_(p+1)/2 value=0");
    }
    return out;
}

}  // namespace fermatsha
