#include "fermatsha/curves.hpp"

#include <algorithm>
#include <string>

namespace fermatsha {

QuotientTriple::QuotientTriple(const OddPrime& p, int64_t a, int64_t b)
    : p_(p), a_(a), b_(b) {
    if (a <= 0 || b <= 0 || a + b >= p.value())
        throw InvalidTriple("QuotientTriple: need 0 < a, b and a+b < p, got a=" +
                            std::to_string(a) + " b=" + std::to_string(b) +
                            " p=" + std::to_string(p.value()));
}

const char* to_string(ReductionType r) {
    switch (r) {
        case ReductionType::Tame: return "tame";
        case ReductionType::WildSplit: return "wild split";
        case ReductionType::WildNonSplit: return "wild non-split";
    }
    return "?";
}

QuotientTriple make_triple(const OddPrime& p, int64_t a, int64_t b) {
    return QuotientTriple(p, a, b);
}

namespace {

// Valid (a', b') pairs obtainable from the residue triple (x, y, z),
// x+y+z ≡ 0 mod p, by choosing an ordered pair with sum < p.
void collect_valid_pairs(int64_t x, int64_t y, int64_t z, int64_t p,
                         std::vector<std::pair<int64_t, int64_t>>& out) {
    const int64_t v[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (v[i] + v[j] < p) out.emplace_back(v[i], v[j]);
        }
}

}  // namespace

QuotientTriple scale_triple(const QuotientTriple& t, int64_t u) {
    const int64_t p = t.p();
    const int64_t us = mod_reduce(u, p);
    if (us == 0)
        throw InvalidTriple("scale_triple: scaling factor divisible by p");

    const int64_t sa = mod_reduce(us * t.a(), p);
    const int64_t sb = mod_reduce(us * t.b(), p);
    if (sa + sb < p) return QuotientTriple(t.prime(), sa, sb);

    // The residues of (ua, ub, uc) sum to 2p here, so every valid
    // representative sits on the negated triple; normalize to the canonical
    // pair a' <= b'.
    const int64_t sc = mod_reduce(us * t.c(), p);
    std::vector<std::pair<int64_t, int64_t>> pairs;
    collect_valid_pairs(sa, sb, sc, p, pairs);
    collect_valid_pairs(p - sa, p - sb, p - sc, p, pairs);
    std::erase_if(pairs, [](const auto& ab) { return ab.first > ab.second; });
    if (pairs.empty())
        throw InternalError("scale_triple: no valid representative");
    auto best = *std::min_element(pairs.begin(), pairs.end());
    return QuotientTriple(t.prime(), best.first, best.second);
}

ReductionResult reduction_type(const QuotientTriple& t) {
    const int64_t p = t.p();
    const int64_t q = fermat_quotient_power_product(t.prime(), t.a(), t.b(), t.c());
    int64_t abc = mod_reduce(t.a(), p);
    abc = mod_reduce(abc * mod_reduce(t.b(), p), p);
    abc = mod_reduce(abc * mod_reduce(t.c(), p), p);
    const int64_t w = mod_reduce(-2 * abc % p * q, p);
    ReductionResult result{ReductionType::Tame, w};
    if (w != 0)
        result.type = legendre_symbol(w, t.prime()) == 1 ? ReductionType::WildSplit
                                                         : ReductionType::WildNonSplit;
    return result;
}

CmType cm_type(const QuotientTriple& t) {
    const int64_t p = t.p();
    CmType h;
    h.members.reserve(static_cast<size_t>((p - 1) / 2));
    int64_t ra = 0, rb = 0, rc = 0;
    const int64_t ca = mod_reduce(t.a(), p), cb = mod_reduce(t.b(), p),
                  cc = mod_reduce(t.c(), p);
    for (int64_t k = 1; k < p; ++k) {
        ra += ca;
        if (ra >= p) ra -= p;
        rb += cb;
        if (rb >= p) rb -= p;
        rc += cc;
        if (rc >= p) rc -= p;
        if (ra + rb + rc == 2 * p) h.members.push_back(k);
    }
    if (h.members.size() != static_cast<size_t>((p - 1) / 2))
        throw InternalError("cm_type: wrong cardinality");
    return h;
}

int64_t gamma_invariant(const QuotientTriple& t, const BernoulliTable& table) {
    const int64_t p = t.p();
    if (table.p != p) throw InternalError("gamma_invariant: table prime mismatch");
    const int64_t q = fermat_quotient_power_product(t.prime(), t.a(), t.b(), t.c());
    int64_t abc = mod_reduce(t.a(), p);
    abc = mod_reduce(abc * mod_reduce(t.b(), p), p);
    abc = mod_reduce(abc * mod_reduce(t.c(), p), p);
    const int64_t q3 = mod_reduce(q * q % p * q, p);
    return mod_reduce(q3 + abc * table.at(p - 3), p);
}

NonsimpleResult is_nonsimple(const QuotientTriple& t) {
    const int64_t p = t.p();
    NonsimpleResult result;
    if (p % 3 != 1) return result;

    // Orbit members with first exponent 1 are exactly (1, r, -(1+r)); scan
    // all scalings and permutations and keep the least quadratic root.
    const int64_t coords[3] = {mod_reduce(t.a(), p), mod_reduce(t.b(), p),
                               mod_reduce(t.c(), p)};
    int64_t best = 0;
    for (int i = 0; i < 3; ++i) {
        const int64_t u = mod_inv(coords[i], p);
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            const int64_t r = mod_reduce(u * coords[j], p);
            if (1 + r >= p) continue;  // (1, r) must itself be a valid triple
            if (mod_reduce(r * r + r + 1, p) == 0 && (best == 0 || r < best))
                best = r;
        }
    }
    if (best != 0) {
        result.nonsimple = true;
        result.r = best;
    }
    return result;
}

QuotientTriple canonical_representative(const QuotientTriple& t) {
    const int64_t p = t.p();
    std::vector<std::pair<int64_t, int64_t>> pairs;
    for (int64_t u = 1; u < p; ++u) {
        const int64_t x = mod_reduce(u * t.a(), p);
        const int64_t y = mod_reduce(u * t.b(), p);
        const int64_t z = mod_reduce(u * t.c(), p);
        collect_valid_pairs(x, y, z, p, pairs);
    }
    std::erase_if(pairs, [](const auto& ab) { return ab.first > ab.second; });
    if (pairs.empty())
        throw InternalError("canonical_representative: empty orbit");
    auto best = *std::min_element(pairs.begin(), pairs.end());
    return QuotientTriple(t.prime(), best.first, best.second);
}

std::vector<QuotientTriple> enumerate_triples(const OddPrime& p,
                                              bool up_to_isomorphism) {
    std::vector<QuotientTriple> out;
    for (int64_t a = 1; a < p.value(); ++a) {
        for (int64_t b = a; a + b < p.value(); ++b) {
            QuotientTriple t(p, a, b);
            if (up_to_isomorphism) {
                QuotientTriple rep = canonical_representative(t);
                if (!(rep == t)) continue;
            }
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace fermatsha
