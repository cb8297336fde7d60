#ifndef FERMATSHA_CURVES_HPP
#define FERMATSHA_CURVES_HPP

#include <cstdint>
#include <vector>

#include "fermatsha/bernoulli.hpp"
#include "fermatsha/modarith.hpp"

namespace fermatsha {

// Curve-side data for the quotients y^p = x^a (1-x)^b of the degree-p Fermat
// curve: exponent triples, reduction types of the special fiber over
// Z_p[zeta], CM-types, non-simplicity of the Jacobian, and the gamma
// obstruction residue.

// Exponent triple (a, b, c) with 0 < a, b, a+b < p and a+b+c = 0, so
// -p < c < 0. Construct through make_triple; the invariant always holds.
class QuotientTriple {
public:
    QuotientTriple(const OddPrime& p, int64_t a, int64_t b);

    const OddPrime& prime() const noexcept { return p_; }
    int64_t p() const noexcept { return p_.value(); }
    int64_t a() const noexcept { return a_; }
    int64_t b() const noexcept { return b_; }
    int64_t c() const noexcept { return -(a_ + b_); }

    friend bool operator==(const QuotientTriple& s, const QuotientTriple& t) noexcept {
        return s.p() == t.p() && s.a_ == t.a_ && s.b_ == t.b_;
    }

private:
    OddPrime p_;
    int64_t a_, b_;
};

enum class ReductionType { Tame, WildSplit, WildNonSplit };

const char* to_string(ReductionType r);  // "tame" / "wild split" / "wild non-split"

struct ReductionResult {
    ReductionType type;
    int64_t witness;  // -2*a*b*c*q(a^a b^b c^c) mod p; zero exactly when tame
};

// CM-type H_{a,b,c}: the (p-1)/2 indices k in [1, p-1] for which the
// differential x^[ka/p] (1-x)^[kb/p] y^{-k} dx is holomorphic. Exactly one of
// k, p-k is a member.
struct CmType {
    std::vector<int64_t> members;  // sorted ascending
};

// Validating constructor wrapper. Throws InvalidTriple unless
// 0 < a, b and a + b < p.
QuotientTriple make_triple(const OddPrime& p, int64_t a, int64_t b);

// The triple with exponents (u*a, u*b, u*c) mod p. When the scaled residues
// of (a, b) already satisfy a'+b' < p they are returned as-is; otherwise the
// unique valid representatives live on the negated triple and the canonical
// one (lexicographically least (a', b') with a' <= b') is returned.
// Throws InvalidTriple when u ≡ 0 mod p.
QuotientTriple scale_triple(const QuotientTriple& t, int64_t u);

// Reduction type of the special fiber: tame when the witness vanishes, wild
// split when it is a nonzero square mod p, wild non-split otherwise. The
// product abc uses the residues of the signed exponents.
ReductionResult reduction_type(const QuotientTriple& t);

// Membership rule: k is in H_{a,b,c} iff <ka> + <kb> + <kc> = 2p, where <x>
// is the representative of x mod p in [1, p-1]. Equivalent to holomorphy at
// the point over x = infinity (<ka> + <kb> > p); the points over x = 0, 1
// impose nothing.
CmType cm_type(const QuotientTriple& t);

// gamma(a,b,c) = q(a^a b^b c^c)^3 + abc * B_{p-3} mod p. Nonvanishing is the
// hypothesis that forces a nontrivial lambda^3-torsion obstruction.
int64_t gamma_invariant(const QuotientTriple& t, const BernoulliTable& table);

struct NonsimpleResult {
    bool nonsimple = false;
    int64_t r = 0;  // smallest r with r^2+r+1 ≡ 0 such that (1, r, -(1+r))
                    // lies in the isomorphism orbit; meaningful when nonsimple
};

// The Jacobian is non-simple iff p ≡ 1 mod 3 and some member of the
// isomorphism orbit (all permutations of (a,b,c) composed with all scalings
// mod p) has the form (1, r, -(1+r)) with r^2+r+1 ≡ 0 mod p. Searches the
// full orbit rather than solving the quadratic.
NonsimpleResult is_nonsimple(const QuotientTriple& t);

// All valid triples with a <= b ordered by (a, b); with up_to_isomorphism,
// one canonical representative per S3-times-scaling orbit (lexicographically
// least (a, b) with a <= b), still ordered by (a, b).
std::vector<QuotientTriple> enumerate_triples(const OddPrime& p,
                                              bool up_to_isomorphism);

// Canonical orbit representative of t (the same rule enumerate_triples uses).
QuotientTriple canonical_representative(const QuotientTriple& t);

}  // namespace fermatsha

#endif
