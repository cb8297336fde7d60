#include "fermatsha/bernoulli.hpp"

#include <string>

namespace fermatsha {

int64_t BernoulliTable::at(int64_t k) const {
    if (k < 2 || k > p - 3 || k % 2 != 0)
        throw InternalError("BernoulliTable::at: index " + std::to_string(k) +
                            " out of range for p = " + std::to_string(p));
    return even_values[static_cast<size_t>((k - 2) / 2)];
}

BernoulliTable bernoulli_table(const OddPrime& prime) {
    const int64_t p = prime.value();
    const int64_t top = p - 3;

    // b[m] = B_m mod p for 0 <= m <= p-3; odd entries are computed too and
    // must come out zero for odd m >= 3.
    std::vector<int64_t> b(static_cast<size_t>(top) + 1, 0);
    b[0] = 1;

    // Pascal row maintained incrementally: row holds C(m+1, 0..m+1).
    std::vector<int64_t> row = {1, 1};  // C(1, *)
    row.reserve(static_cast<size_t>(top) + 2);

    for (int64_t m = 1; m <= top; ++m) {
        // advance row from C(m, *) to C(m+1, *)
        row.push_back(1);
        for (size_t j = row.size() - 2; j >= 1; --j)
            row[j] = (row[j] + row[j - 1]) % p;

        int64_t s = 0;
        for (int64_t j = 0; j < m; ++j)
            s = (s + row[static_cast<size_t>(j)] * b[static_cast<size_t>(j)]) % p;
        b[static_cast<size_t>(m)] = mod_reduce(-mod_inv(m + 1, p) * s, p);
    }

    for (int64_t m = 3; m <= top; m += 2) {
        if (b[static_cast<size_t>(m)] != 0)
            throw InternalError("bernoulli_table: transient odd entry B_" +
                                std::to_string(m) + " nonzero mod " +
                                std::to_string(p));
    }

    BernoulliTable table;
    table.p = p;
    table.even_values.reserve(static_cast<size_t>((p - 3) / 2));
    for (int64_t k = 2; k <= top; k += 2) {
        int64_t v = b[static_cast<size_t>(k)];
        table.even_values.push_back(v);
        if (v == 0) table.irregular_indices.push_back(k);
    }
    table.is_regular = table.irregular_indices.empty();
    return table;
}

bool is_regular(const OddPrime& p) { return bernoulli_table(p).is_regular; }

int64_t bernoulli_mod_single(const OddPrime& prime, int64_t k) {
    const int64_t p = prime.value();
    if (k < 2 || k > p - 3 || k % 2 != 0)
        throw InvalidDimension("bernoulli_mod_single: need even k in [2, p-3]");
    const int64_t p2 = prime.squared();
    int64_t s = 0;
    for (int64_t x = 1; x < p; ++x) {
        s += mod_pow(x, static_cast<uint64_t>(k), p2);
        if (s >= p2) s -= p2;
    }
    // S_k(p) ≡ p*B_k (mod p^2): every other Faulhaber term carries p^2
    // because B_j is p-integral for j < p-1 and B_{k-1} vanishes or the
    // binomial weight is a p-unit.
    if (s % p != 0)
        throw InternalError("bernoulli_mod_single: power sum not divisible by p");
    return (s / p) % p;
}

ExactRational bernoulli_exact(int k) {
    if (k < 0 || k > kBernoulliExactCap)
        throw CapExceeded("bernoulli_exact: k = " + std::to_string(k) +
                          " exceeds cap " + std::to_string(kBernoulliExactCap));
    std::vector<ExactRational> b(static_cast<size_t>(k) + 1);
    b[0] = 1;
    for (int m = 1; m <= k; ++m) {
        ExactRational s = 0;
        for (int j = 0; j < m; ++j) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(m + 1),
                         static_cast<unsigned>(j));
            s += ExactRational(binom) * b[static_cast<size_t>(j)];
        }
        b[static_cast<size_t>(m)] = -s / (m + 1);
        b[static_cast<size_t>(m)].canonicalize();
    }
    return b[static_cast<size_t>(k)];
}

int64_t reduce_mod(const ExactRational& q, const OddPrime& prime) {
    const int64_t p = prime.value();
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    int64_t n = mod_reduce(num.get_si(), p);
    int64_t d = mod_reduce(den.get_si(), p);
    return mod_reduce(n * mod_inv(d, p), p);
}

}  // namespace fermatsha
