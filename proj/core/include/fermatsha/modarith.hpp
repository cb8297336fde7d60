#ifndef FERMATSHA_MODARITH_HPP
#define FERMATSHA_MODARITH_HPP

#include <cstdint>

#include "fermatsha/errors.hpp"

namespace fermatsha {

// Exact modular arithmetic mod p and mod p^2: the substrate for every other
// module. Residues are plain int64_t values canonicalized to [0, m-1]; an
// OddPrime carries the modulus.
//
// All mod-p^2 products are taken in unsigned __int128. With p capped at
// 2^31 - 1 we have p^2 < 2^62, so a product of two mod-p^2 residues stays
// below 2^124 and never overflows the 128-bit intermediate. Larger primes
// would need explicit double-word multiplication and are rejected at
// OddPrime construction.

// A certified odd prime p >= 5. Primality is established at construction by
// a Miller-Rabin test with a fixed base set that is deterministic for the
// whole supported range.
class OddPrime {
public:
    static constexpr int64_t kMaxValue = (int64_t{1} << 31) - 1;

    explicit OddPrime(int64_t value);

    int64_t value() const noexcept { return p_; }
    int64_t squared() const noexcept { return p_ * p_; }

    friend bool operator==(const OddPrime& a, const OddPrime& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    int64_t p_;
};

// Deterministic primality test for 0 <= n <= OddPrime::kMaxValue.
bool is_prime(int64_t n);

// Canonical representative of x mod m in [0, m-1]; m >= 1.
int64_t mod_reduce(int64_t x, int64_t m);

// base^exp mod modulus, O(log exp) multiplications. Total: modulus 1 gives 0.
int64_t mod_pow(int64_t base, uint64_t exp, int64_t modulus);

// Inverse of x mod modulus. Throws NotInvertible when gcd(x, modulus) > 1.
int64_t mod_inv(int64_t x, int64_t modulus);

// Legendre symbol via Euler's criterion: +1 for a nonzero square mod p,
// 0 for x ≡ 0, -1 otherwise.
int legendre_symbol(int64_t x, const OddPrime& p);

// Fermat quotient q(x) = (x^(p-1) - 1)/p mod p, defined for p ∤ x.
// Negative x reduce through the canonical residue mod p^2; this agrees with
// q(|x|) because q(-1) = 0 for odd p. Throws DivisibleByP when p | x.
int64_t fermat_quotient(int64_t x, const OddPrime& p);

// q(a^a b^b c^c) for an exponent triple with a+b+c = 0 and p ∤ abc, via the
// homomorphism q(xy) = q(x) + q(y):
//     q(a^a b^b c^c) ≡ a·q(a) + b·q(b) + c·q(|c|)  (mod p).
// Throws InvalidTriple when a+b+c != 0 or p divides one of a, b, c.
int64_t fermat_quotient_power_product(const OddPrime& p, int64_t a, int64_t b,
                                      int64_t c);

// Same value computed without the homomorphism: forms a^a b^b |c|^c as an
// invertible element of Z/p^2 (mod_inv supplies the negative exponent) and
// applies the quotient to the residue. Kept as the second route of the
// dual-route check; the two must always agree.
int64_t fermat_quotient_power_product_direct(const OddPrime& p, int64_t a,
                                             int64_t b, int64_t c);

}  // namespace fermatsha

#endif
