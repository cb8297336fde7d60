#ifndef FERMATSHA_LAMBDA_MODULES_HPP
#define FERMATSHA_LAMBDA_MODULES_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fermatsha/fpmat.hpp"
#include "fermatsha/rng.hpp"

namespace fermatsha {

// Finite lambda-primary modules over F_p[λ]/(λ^N) with compatible pairings:
// closed-form dimension counts, explicit matrix realizations, brute-force
// verification of the pairing lemmas, and the partition-deduction engine.
//
// The lab works over any odd prime >= 3 (the module theory does not need the
// curve-side p >= 5 restriction).

// Multiset of cyclic-factor lambda-lengths e_1 >= e_2 >= ... >= e_r.
struct LambdaPartition {
    std::vector<int> parts;  // sorted descending, all >= 1

    int total_dim() const;
    bool operator==(const LambdaPartition&) const = default;
    bool operator<(const LambdaPartition& o) const { return parts < o.parts; }
};

// F_p-dimension of M[λ^m] / λ^n M[λ^{n+m}] for M of the given partition:
//     sum_i [ min(e_i, m) - max(0, min(e_i, n+m) - n) ].
int quotient_dim(const LambdaPartition& parts, int m, int n);

inline constexpr int kRealizeDimCap = 64;

// Nilpotent lambda operator on F_p^total: block-diagonal shift blocks of
// sizes e_i. Throws CapExceeded past kRealizeDimCap.
FpMatrix realize_module(const LambdaPartition& parts, int64_t p);

// A finite module over F_p[λ] with a nondegenerate pairing <x, y> = x^T G y
// compatible with the adjoint λ̂ = -λ:
//     G·λ = -(λ^T·G),   i.e.  <λx, y> = -<x, λy>.
struct PairedLambdaModule {
    int64_t p = 3;
    int dim = 0;
    FpMatrix lambda_op;  // nilpotent
    FpMatrix gram;       // invertible
    static constexpr int adjoint_sign = -1;

    // Checks nilpotency, nondegeneracy and the compatibility identity;
    // throws InternalError on violation.
    void validate() const;
};

// M ⊕ M∨ with the evaluation form, signs arranged so compatibility holds
// exactly: λ acts as diag(N, -N^T) and G is the block antidiagonal
// [[0, I], [-I, 0]]. Dimension doubles. Throws CapExceeded past the cap.
PairedLambdaModule hyperbolic_pairing(const LambdaPartition& parts, int64_t p);

// Annihilator lemma: the orthogonal complement of ker(λ^m) under the pairing
// equals the column space of λ^m.
bool verify_annihilator(const PairedLambdaModule& mod, int m);

// Perfect-restriction lemma: the induced pairing between
// ker(λ^m)/(λ^n ker(λ^{n+m})) and ker(λ^n)/(λ^m ker(λ^{n+m})) has vanishing
// radicals on both sides.
bool verify_perfect_restriction(const PairedLambdaModule& mod, int m, int n);

// Congruence transforms of the gram matrix by random invertible matrices
// commuting with λ; they preserve compatibility and nondegeneracy. The
// commutant basis is solved for once at construction, so drawing many
// perturbations of one module stays cheap.
class CompatiblePerturber {
public:
    explicit CompatiblePerturber(const PairedLambdaModule& mod);

    PairedLambdaModule perturb(SplitMix64& rng) const;

private:
    PairedLambdaModule mod_;
    FpMatrix commutant_;  // columns = basis of {X : Xλ = λX}, flattened
};

PairedLambdaModule random_compatible_perturbation(const PairedLambdaModule& mod,
                                                  SplitMix64& rng);

struct StructureConstraint {
    enum class Kind { QuotientDimEq, QuotientDimGe, TorsionShape, PartCap };
    Kind kind;
    int m = 0;                // quotient_dim m; torsion_shape clip level k
    int n = 0;                // quotient_dim n
    int value = 0;            // quotient_dim target; part_cap K
    std::vector<int> shape;   // torsion_shape multiset, sorted descending
};

bool satisfies(const LambdaPartition& parts, const StructureConstraint& c);

inline constexpr int kDeducePartCapLimit = 16;
inline constexpr int kDeduceDimCapLimit = 48;

// All partitions with parts <= part_cap and total dimension <= dim_cap that
// satisfy every constraint, in lexicographic order (the empty partition
// first). Throws CapExceeded when the caps exceed the configured limits.
std::vector<LambdaPartition> deduce_partitions(
    const std::vector<StructureConstraint>& constraints, int part_cap, int dim_cap);

// Flat text constraint format, one per line, '#' comments allowed:
//     quotient_dim m n (=|>=) v
//     part_cap K
//     torsion_shape k e1,e2,...
std::vector<StructureConstraint> parse_constraints(std::istream& in);

}  // namespace fermatsha

#endif
