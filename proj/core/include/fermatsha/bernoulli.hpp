#ifndef FERMATSHA_BERNOULLI_HPP
#define FERMATSHA_BERNOULLI_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fermatsha/modarith.hpp"

namespace fermatsha {

// Bernoulli numbers modulo p, prime regularity, and a small exact-rational
// oracle.
//
// The table is built by the classical recurrence
//     B_m = -(m+1)^{-1} * sum_{j<m} C(m+1, j) B_j
// carried out entirely in F_p, valid because B_j is p-integral for j <= p-3
// and m+1 < p stays invertible. That is O(p^2) field operations per prime,
// fine to p ~ 2*10^4 at desk scale; past that the power-sum route below wins
// (O(p log k) per index) and bulk tables would want a power-sum or
// multisectioning method instead.

struct BernoulliTable {
    int64_t p;
    // index (k-2)/2 holds B_k mod p for even k in [2, p-3]; (p-3)/2 entries.
    std::vector<int64_t> even_values;
    // even k in [2, p-3] with B_k ≡ 0 mod p, sorted ascending
    std::vector<int64_t> irregular_indices;
    bool is_regular = true;

    // B_k mod p for even k in [2, p-3].
    int64_t at(int64_t k) const;
};

BernoulliTable bernoulli_table(const OddPrime& p);

inline bool is_regular(const BernoulliTable& table) { return table.is_regular; }
bool is_regular(const OddPrime& p);

// Single value B_k mod p for even k in [2, p-3] without building the table,
// through the power sum S_k(p) = sum_{x=1}^{p-1} x^k ≡ p*B_k (mod p^2).
// Independent of the recurrence; used as a cross-check and for sweeps that
// need one index per prime.
int64_t bernoulli_mod_single(const OddPrime& p, int64_t k);

// Exact-rational oracle, capped at desk scale.
using ExactRational = mpq_class;

inline constexpr int kBernoulliExactCap = 60;

// Exact B_k for 0 <= k <= 60 via the same recurrence over exact rationals.
// Throws CapExceeded above the cap.
ExactRational bernoulli_exact(int k);

// Canonical residue of an exact rational mod p; the denominator must be
// prime to p (throws NotInvertible otherwise).
int64_t reduce_mod(const ExactRational& q, const OddPrime& p);

}  // namespace fermatsha

#endif
