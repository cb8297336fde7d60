#ifndef FERMATSHA_VERIFY_HPP
#define FERMATSHA_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fermatsha/curves.hpp"

namespace fermatsha {

// Independent identity verifiers. Each one is deterministic given its inputs
// and seed, and records machine-readable counterexamples (space-separated
// key=value tokens) on failure.

struct VerificationOutcome {
    std::string name;
    int64_t trials = 0;
    std::vector<std::string> failures;
    bool passed = true;

    void record(std::string failure) {
        failures.push_back(std::move(failure));
        passed = false;
    }
};

// Determinant identity Γ_3 = Γ_0 (S_1^3 - 2 S_1 S_2 + S_3) with S_i the
// elementary symmetric functions, on tuples of distinct nonzero values mod p.
// Exhaustive over all such tuples when their number is at most `trials`,
// seeded sampling otherwise. Throws InvalidDimension when p <= n.
VerificationOutcome verify_schur_identity(int n, const OddPrime& p, int64_t trials,
                                          uint64_t seed);

// Solves the (p-1)/2-square system sum_{k in H} b_k k^i = [i = 0] (the unit
// F normalized to 1) by exact elimination and compares -sum b_k k^{-3}
// against gamma_invariant(t). Also records, per triple, the closed form the
// solved value actually satisfies.
VerificationOutcome verify_bk_lemma(const QuotientTriple& t,
                                    const BernoulliTable& table);

// Power-sum congruences of the inverse CM-type, for every valid triple at p:
//     S_1(H^{-1}) ≡ -q(a^a b^b c^c)
//     S_2(H^{-1}) ≡ 0
//     S_3(H^{-1}) ≡ -abc B_{p-3}
// with S_i(X) = sum_{x in X} x^i, plus the exact integer identity
// a^3 + b^3 + c^3 = 3abc under a+b+c = 0.
VerificationOutcome verify_vandiver(const OddPrime& p, const BernoulliTable& table);

// For every prime p ≡ 1 mod 3 up to p_max and every root r of r^2+r+1 mod p:
// the congruence (r+1)^{6(r+1)} ≡ r^{6r} (mod p^2) holds and the triple
// (1, r, -(1+r)) has tame reduction.
VerificationOutcome verify_tame_nonsimple(int64_t p_max, bool step_report);

// For every prime p ≡ 3 mod 4 up to p_max: B_{(p+1)/2} is nonzero mod p
// (checked through the power-sum single-value route).
VerificationOutcome verify_b_half(int64_t p_max);

// Primes in [2, n] by sieve; helper shared by the sweep verifiers.
std::vector<int64_t> primes_up_to(int64_t n);

}  // namespace fermatsha

#endif
