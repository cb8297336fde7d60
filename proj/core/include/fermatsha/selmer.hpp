#ifndef FERMATSHA_SELMER_HPP
#define FERMATSHA_SELMER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermatsha/curves.hpp"

namespace fermatsha {

// Eigenspace bookkeeping for the image of the global units U inside the
// local eigenspaces V(i), the local-image windows, Selmer dimension counts,
// and three-valued theorem verdicts about the structure of Sha.

// Status of the image of U in V(i). Unknown is returned whenever only the
// inapplicable direction of a criterion is available; it is never guessed.
enum class TriStatus { Nontrivial, Trivial, Unknown };

// Three-valued verdict for a theorem's hypotheses.
enum class Verdict { Holds, Fails, Unknown };

const char* to_string(TriStatus s);
const char* to_string(Verdict v);

// V[lo, hi] together with finitely many extra single eigenspace indices.
struct EigenspaceWindow {
    std::vector<int64_t> singles;
    int64_t lo = 0, hi = 0;

    bool contains(int64_t i) const;
};

// Image of U in V(i) for 1 <= i <= p.
//
// For regular p: i = 1 carries the root of unity (Nontrivial); odd i > 1 and
// i = p-1 carry no global units (Trivial); even i in [2, p-3] is Nontrivial
// when p does not divide B_i.
//
// For irregular p only the Bernoulli-based directions remain: odd i > 1 is
// Trivial when p does not divide B_{p-i}, even i in [2, p-3] is Nontrivial
// when p does not divide B_i, everything else is Unknown.
TriStatus u_image_status(const OddPrime& p, const BernoulliTable& table, int64_t i);

// Faddeev's local image of the descent map at the lambda-torsion point:
// V((p-1)/2) ∪ V[(p+3)/2, p] in the wild split case, V[(p+3)/2, p] otherwise.
EigenspaceWindow local_image_window(const OddPrime& p, ReductionType r);

// F_p-dimension of the lambda-Selmer group for regular p: the number of even
// i with 2 <= i <= p-3 inside the local image window (i = 1 is excluded by
// the local conditions; odd i and i = p-1 carry no global units).
// Throws IrregularPrime when the table is irregular.
int64_t selmer_lambda_dim(const OddPrime& p, const BernoulliTable& table,
                          ReductionType r);

struct TheoremReport {
    int64_t p = 0, a = 0, b = 0, c = 0;
    ReductionType reduction = ReductionType::Tame;
    int64_t witness = 0;
    bool regular = false;
    Verdict verdict_old = Verdict::Unknown;
    Verdict verdict_free = Verdict::Unknown;
    Verdict verdict_nontrivial = Verdict::Unknown;
    int64_t gamma = 0;
    std::optional<int64_t> selmer_dim;
    std::optional<int64_t> rank_bound;
    std::vector<std::string> conclusions;
    std::vector<std::string> external_facts_used;
    // Filled by hurwitz_klein_report: the ordered deduction steps.
    std::vector<std::string> chain;
};

// Evaluates the three theorem hypotheses on one triple:
//  - old:        wild split, p ≡ 1 mod 4, U nontrivial in V((p-1)/2) and
//                V((p+3)/2)
//  - free:       (a) wild split and p ≡ 3 mod 4, or (b) tame/wild non-split
//                and U trivial in V((p+1)/2) or V((p+3)/2)
//  - nontrivial: p >= 19 regular, p ≡ 3 mod 4, tame or wild non-split, and
//                gamma != 0
// Unknown absorbs indeterminacy. Conclusions about Sha are emitted only on
// Holds.
TheoremReport evaluate_theorems(const QuotientTriple& t, const BernoulliTable& table);

// max(0, selmer_lambda_dim - sha_lower_dim): the coarse Mordell-Weil rank
// bound. Callers pass sha_lower_dim = 2 when verdict_nontrivial holds and 0
// otherwise. Throws IrregularPrime.
int64_t mw_rank_bound(const QuotientTriple& t, const BernoulliTable& table,
                      int64_t sha_lower_dim);

// The full deduction chain for p = 19, (a, b, c) = (7, 1, -8): non-simple,
// hence tame; 19 regular; gamma != 0; Selmer dimension 3. With the external
// positive-rank input the chain closes: rank = 1, dim Sha[lambda] = 2,
// Sha[lambda^3] free of rank 2, and Sha[p^inf] = (Z[zeta]/(lambda^3))^2.
// Without it only the unconditional statements are emitted.
TheoremReport hurwitz_klein_report(bool external_rank_positive);

}  // namespace fermatsha

#endif
