#include "fermatsha/selmer.hpp"

#include <algorithm>

namespace fermatsha {

const char* to_string(TriStatus s) {
    switch (s) {
        case TriStatus::Nontrivial: return "nontrivial";
        case TriStatus::Trivial: return "trivial";
        case TriStatus::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

bool EigenspaceWindow::contains(int64_t i) const {
    if (lo <= i && i <= hi) return true;
    return std::find(singles.begin(), singles.end(), i) != singles.end();
}

TriStatus u_image_status(const OddPrime& prime, const BernoulliTable& table,
                         int64_t i) {
    const int64_t p = prime.value();
    if (table.p != p) throw InternalError("u_image_status: table prime mismatch");
    if (i < 1 || i > p)
        throw InvalidDimension("u_image_status: index out of [1, p]");

    if (i == 1) return TriStatus::Nontrivial;  // the p-th root of unity

    const bool even = (i % 2 == 0);
    if (table.is_regular) {
        if (!even || i == p - 1) return TriStatus::Trivial;
        // even i in [2, p-3]
        return table.at(i) != 0 ? TriStatus::Nontrivial : TriStatus::Unknown;
    }

    if (!even) {
        // nontrivial image at odd i > 1 would force p | B_{p-i}
        const int64_t k = p - i;
        if (k == 0) return TriStatus::Trivial;  // B_0 = 1
        return table.at(k) != 0 ? TriStatus::Trivial : TriStatus::Unknown;
    }
    if (i <= p - 3 && table.at(i) != 0) return TriStatus::Nontrivial;
    return TriStatus::Unknown;
}

EigenspaceWindow local_image_window(const OddPrime& prime, ReductionType r) {
    const int64_t p = prime.value();
    EigenspaceWindow w;
    w.lo = (p + 3) / 2;
    w.hi = p;
    if (r == ReductionType::WildSplit) w.singles.push_back((p - 1) / 2);
    return w;
}

int64_t selmer_lambda_dim(const OddPrime& prime, const BernoulliTable& table,
                          ReductionType r) {
    if (!table.is_regular)
        throw IrregularPrime("selmer_lambda_dim: dimension formula is only "
                             "justified for regular p");
    const EigenspaceWindow w = local_image_window(prime, r);
    int64_t dim = 0;
    for (int64_t i = 2; i <= prime.value() - 3; i += 2)
        if (w.contains(i)) ++dim;
    return dim;
}

namespace {

Verdict both_nontrivial(TriStatus s1, TriStatus s2) {
    if (s1 == TriStatus::Nontrivial && s2 == TriStatus::Nontrivial)
        return Verdict::Holds;
    if (s1 == TriStatus::Unknown || s2 == TriStatus::Unknown)
        return Verdict::Unknown;
    return Verdict::Fails;
}

Verdict either_trivial(TriStatus s1, TriStatus s2) {
    if (s1 == TriStatus::Trivial || s2 == TriStatus::Trivial)
        return Verdict::Holds;
    if (s1 == TriStatus::Unknown || s2 == TriStatus::Unknown)
        return Verdict::Unknown;
    return Verdict::Fails;
}

}  // namespace

TheoremReport evaluate_theorems(const QuotientTriple& t, const BernoulliTable& table) {
    const OddPrime& prime = t.prime();
    const int64_t p = prime.value();
    if (table.p != p) throw InternalError("evaluate_theorems: table prime mismatch");

    TheoremReport rep;
    rep.p = p;
    rep.a = t.a();
    rep.b = t.b();
    rep.c = t.c();
    const ReductionResult red = reduction_type(t);
    rep.reduction = red.type;
    rep.witness = red.witness;
    rep.regular = table.is_regular;
    rep.gamma = gamma_invariant(t, table);

    const bool wild_split = red.type == ReductionType::WildSplit;

    if (p % 4 == 1 && wild_split) {
        rep.verdict_old = both_nontrivial(u_image_status(prime, table, (p - 1) / 2),
                                          u_image_status(prime, table, (p + 3) / 2));
    } else {
        rep.verdict_old = Verdict::Fails;
    }

    if (wild_split) {
        rep.verdict_free = (p % 4 == 3) ? Verdict::Holds : Verdict::Fails;
    } else {
        rep.verdict_free = either_trivial(u_image_status(prime, table, (p + 1) / 2),
                                          u_image_status(prime, table, (p + 3) / 2));
    }

    rep.verdict_nontrivial =
        (p >= 19 && table.is_regular && p % 4 == 3 && !wild_split && rep.gamma != 0)
            ? Verdict::Holds
            : Verdict::Fails;

    if (table.is_regular) {
        rep.selmer_dim = selmer_lambda_dim(prime, table, red.type);
        const int64_t lower = rep.verdict_nontrivial == Verdict::Holds ? 2 : 0;
        rep.rank_bound = std::max<int64_t>(0, *rep.selmer_dim - lower);
    }

    if (rep.verdict_free == Verdict::Holds)
        rep.conclusions.push_back("Ш[λ³] free over Z[ζ]/(λ³)");
    if (rep.verdict_nontrivial == Verdict::Holds) {
        rep.conclusions.push_back("Ш[λ³] ≠ 0");
        if (rep.verdict_free == Verdict::Holds)
            rep.conclusions.push_back("|Ш[p^∞]| ≥ p³");
    }
    return rep;
}

int64_t mw_rank_bound(const QuotientTriple& t, const BernoulliTable& table,
                      int64_t sha_lower_dim) {
    const int64_t dim = selmer_lambda_dim(t.prime(), table, reduction_type(t).type);
    return std::max<int64_t>(0, dim - sha_lower_dim);
}

TheoremReport hurwitz_klein_report(bool external_rank_positive) {
    const OddPrime p(19);
    const QuotientTriple t = make_triple(p, 7, 1);
    const BernoulliTable table = bernoulli_table(p);

    TheoremReport rep = evaluate_theorems(t, table);

    const NonsimpleResult ns = is_nonsimple(t);
    if (!ns.nonsimple) throw InternalError("hurwitz_klein_report: expected non-simple");
    rep.chain.push_back("non-simple: yes (r=" + std::to_string(ns.r) + ")");

    if (rep.reduction != ReductionType::Tame || rep.witness != 0)
        throw InternalError("hurwitz_klein_report: expected tame with witness 0");
    rep.chain.push_back("reduction: tame (witness 0)");

    if (!rep.regular) throw InternalError("hurwitz_klein_report: 19 must be regular");
    rep.chain.push_back("p=19 regular: yes");

    if (rep.gamma == 0) throw InternalError("hurwitz_klein_report: gamma vanished");
    rep.chain.push_back("gamma(7,1,-8) = " + std::to_string(rep.gamma) +
                        " ≠ 0 (mod 19)");

    if (!rep.selmer_dim || *rep.selmer_dim != 3)
        throw InternalError("hurwitz_klein_report: Selmer dimension must be 3");
    rep.chain.push_back("Selmer dimension: 3");

    if (external_rank_positive) {
        rep.external_facts_used.push_back(
            "Mordell-Weil rank of J(7,1,-8) over Q is positive "
            "(Gross-Rohrlich 1978)");
        // dim S = 3 splits as rank + dim Sha[lambda]; the nontrivial verdict
        // forces dim Sha[lambda] >= 2, positivity forces rank >= 1.
        rep.chain.push_back("Mordell-Weil rank = 1");
        rep.chain.push_back("dim Ш[λ] = 2");
        rep.chain.push_back("Ш[λ³] free of rank 2 over Z[ζ]/(λ³)");
        rep.chain.push_back("Ш[p^∞] ≅ (Z[ζ]/(λ³))^2");
        rep.conclusions.push_back("Ш[p^∞] ≅ (Z[ζ]/(λ³))^2");
        rep.rank_bound = 1;
    } else {
        rep.chain.push_back("Ш[λ³] ≠ 0 and |Ш[p^∞]| ≥ p³");
        rep.chain.push_back("Ш[λ³] free over Z[ζ]/(λ³)");
    }
    return rep;
}

}  // namespace fermatsha
