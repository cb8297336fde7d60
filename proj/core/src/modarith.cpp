#include "fermatsha/modarith.hpp"

#include <string>

namespace fermatsha {

namespace {

using u128 = unsigned __int128;

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
    return static_cast<int64_t>((static_cast<u128>(a) * static_cast<u128>(b)) %
                                static_cast<u128>(m));
}

// Miller-Rabin witness loop for odd n > 2.
bool mr_witness(int64_t n, int64_t a, int64_t d, int r) {
    a %= n;
    if (a == 0) return true;
    int64_t x = mod_pow(a, static_cast<uint64_t>(d), n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    int64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // This base set is deterministic for all n < 3.3 * 10^24, far beyond the
    // supported cap.
    for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!mr_witness(n, a, d, r)) return false;
    }
    return true;
}

OddPrime::OddPrime(int64_t value) : p_(value) {
    if (value < 5)
        throw std::invalid_argument("OddPrime: value must be >= 5, got " +
                                    std::to_string(value));
    if (value > kMaxValue)
        throw std::invalid_argument("OddPrime: value exceeds supported cap " +
                                    std::to_string(kMaxValue));
    if (!is_prime(value))
        throw std::invalid_argument("OddPrime: " + std::to_string(value) +
                                    " is not prime");
}

int64_t mod_reduce(int64_t x, int64_t m) {
    int64_t r = x % m;
    if (r < 0) r += m;
    return r;
}

int64_t mod_pow(int64_t base, uint64_t exp, int64_t modulus) {
    if (modulus == 1) return 0;
    int64_t b = mod_reduce(base, modulus);
    int64_t result = 1;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, b, modulus);
        exp >>= 1;
        if (exp) b = mul_mod(b, b, modulus);
    }
    return result;
}

int64_t mod_inv(int64_t x, int64_t modulus) {
    // extended Euclid on (x mod m, m)
    int64_t a = mod_reduce(x, modulus), b = modulus;
    int64_t u = 1, v = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b;
        a = b;
        b = t;
        t = u - q * v;
        u = v;
        v = t;
    }
    if (a != 1)
        throw NotInvertible("mod_inv: gcd(" + std::to_string(x) + ", " +
                            std::to_string(modulus) + ") = " + std::to_string(a));
    return mod_reduce(u, modulus);
}

int legendre_symbol(int64_t x, const OddPrime& p) {
    int64_t r = mod_reduce(x, p.value());
    if (r == 0) return 0;
    int64_t e = mod_pow(r, static_cast<uint64_t>((p.value() - 1) / 2), p.value());
    return e == 1 ? +1 : -1;
}

namespace {

// Quotient of a unit residue class mod p^2: (u^(p-1) - 1)/p reduced mod p.
int64_t quotient_of_unit(int64_t u, const OddPrime& p) {
    int64_t t = mod_pow(u, static_cast<uint64_t>(p.value() - 1), p.squared());
    // Fermat: t ≡ 1 (mod p), so the division is exact.
    return ((t - 1) / p.value()) % p.value();
}

}  // namespace

int64_t fermat_quotient(int64_t x, const OddPrime& p) {
    int64_t u = mod_reduce(x, p.squared());
    if (u % p.value() == 0)
        throw DivisibleByP("fermat_quotient: p = " + std::to_string(p.value()) +
                           " divides " + std::to_string(x));
    return quotient_of_unit(u, p);
}

int64_t fermat_quotient_power_product(const OddPrime& p, int64_t a, int64_t b,
                                      int64_t c) {
    if (a + b + c != 0)
        throw InvalidTriple("fermat_quotient_power_product: a+b+c != 0");
    for (int64_t x : {a, b, c}) {
        if (mod_reduce(x, p.value()) == 0)
            throw InvalidTriple(
                "fermat_quotient_power_product: p divides an exponent");
    }
    const int64_t pp = p.value();
    int64_t s = 0;
    for (int64_t x : {a, b, c}) {
        int64_t coeff = mod_reduce(x, pp);
        s = (s + coeff * fermat_quotient(x, p)) % pp;
    }
    return s;
}

int64_t fermat_quotient_power_product_direct(const OddPrime& p, int64_t a,
                                             int64_t b, int64_t c) {
    if (a + b + c != 0)
        throw InvalidTriple("fermat_quotient_power_product_direct: a+b+c != 0");
    for (int64_t x : {a, b, c}) {
        if (mod_reduce(x, p.value()) == 0)
            throw InvalidTriple(
                "fermat_quotient_power_product_direct: p divides an exponent");
    }
    const int64_t p2 = p.squared();
    using u128 = unsigned __int128;
    int64_t u = 1;
    for (int64_t x : {a, b, c}) {
        int64_t base = mod_reduce(x, p2);
        int64_t powed = x >= 0 ? mod_pow(base, static_cast<uint64_t>(x), p2)
                               : mod_inv(mod_pow(base, static_cast<uint64_t>(-x), p2), p2);
        u = static_cast<int64_t>((static_cast<u128>(u) * powed) % static_cast<u128>(p2));
    }
    return quotient_of_unit(u, p);
}

}  // namespace fermatsha
