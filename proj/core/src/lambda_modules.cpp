#include "fermatsha/lambda_modules.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "fermatsha/modarith.hpp"

namespace fermatsha {

int LambdaPartition::total_dim() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int quotient_dim(const LambdaPartition& parts, int m, int n) {
    if (m < 1 || n < 1) throw InvalidDimension("quotient_dim: need m, n >= 1");
    int dim = 0;
    for (int e : parts.parts) {
        const int torsion = std::min(e, m);
        const int killed = std::max(0, std::min(e, n + m) - n);
        dim += torsion - killed;
    }
    return dim;
}

FpMatrix realize_module(const LambdaPartition& parts, int64_t p) {
    const int n = parts.total_dim();
    if (n > kRealizeDimCap)
        throw CapExceeded("realize_module: dimension " + std::to_string(n) +
                          " exceeds cap " + std::to_string(kRealizeDimCap));
    FpMatrix m(n, n, p);
    int off = 0;
    for (int e : parts.parts) {
        if (e < 1) throw InvalidDimension("realize_module: part < 1");
        for (int i = 0; i + 1 < e; ++i) m.at(off + i + 1, off + i) = 1;
        off += e;
    }
    return m;
}

void PairedLambdaModule::validate() const {
    if (lambda_op.rows() != dim || gram.rows() != dim)
        throw InternalError("PairedLambdaModule: shape mismatch");
    if (!lambda_op.pow(dim).is_zero())
        throw InternalError("PairedLambdaModule: lambda not nilpotent");
    if (gram.det() == 0)
        throw InternalError("PairedLambdaModule: gram degenerate");
    if (!(gram * lambda_op == -(lambda_op.transpose() * gram)))
        throw InternalError("PairedLambdaModule: compatibility violated");
}

PairedLambdaModule hyperbolic_pairing(const LambdaPartition& parts, int64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw InvalidDimension("hyperbolic_pairing: need an odd prime p >= 3");
    const int n = parts.total_dim();
    if (2 * n > kRealizeDimCap)
        throw CapExceeded("hyperbolic_pairing: dimension cap exceeded");
    const FpMatrix shift = realize_module(parts, p);
    const FpMatrix neg_t = -shift.transpose();

    PairedLambdaModule mod;
    mod.p = p;
    mod.dim = 2 * n;
    mod.lambda_op = FpMatrix(2 * n, 2 * n, p);
    mod.gram = FpMatrix(2 * n, 2 * n, p);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            mod.lambda_op.at(i, j) = shift.at(i, j);
            mod.lambda_op.at(n + i, n + j) = neg_t.at(i, j);
        }
        mod.gram.at(i, n + i) = 1;
        mod.gram.at(n + i, i) = p - 1;
    }
    mod.validate();
    return mod;
}

bool verify_annihilator(const PairedLambdaModule& mod, int m) {
    const FpMatrix lm = mod.lambda_op.pow(m);
    const FpMatrix kernel = lm.kernel_basis();
    // right annihilator of ker(λ^m): {y : K^T G y = 0}
    const FpMatrix annihilator = (kernel.transpose() * mod.gram).kernel_basis();
    return span_equal(annihilator, lm);
}

bool verify_perfect_restriction(const PairedLambdaModule& mod, int m, int n) {
    const FpMatrix lam_m = mod.lambda_op.pow(m);
    const FpMatrix lam_n = mod.lambda_op.pow(n);
    const FpMatrix lam_nm = mod.lambda_op.pow(n + m);

    const FpMatrix a = lam_m.kernel_basis();            // ker λ^m
    const FpMatrix b = lam_n.kernel_basis();            // ker λ^n
    const FpMatrix a0 = lam_n * lam_nm.kernel_basis();  // λ^n ker λ^{n+m}
    const FpMatrix b0 = lam_m * lam_nm.kernel_basis();  // λ^m ker λ^{n+m}

    // Left radical: vectors of col(a) pairing to zero with all of col(b),
    // i.e. a * ker(b^T G^T a). It always contains col(a0); perfection is the
    // reverse containment, and symmetrically on the right.
    const FpMatrix rad_left =
        a * (b.transpose() * mod.gram.transpose() * a).kernel_basis();
    const FpMatrix rad_right = b * (a.transpose() * mod.gram * b).kernel_basis();
    return span_contains(a0, rad_left) && span_contains(b0, rad_right);
}

CompatiblePerturber::CompatiblePerturber(const PairedLambdaModule& mod)
    : mod_(mod) {
    const int n = mod.dim;
    const int64_t p = mod.p;

    // Basis of the commutant {X : Xλ = λX}: kernel of the n^2 x n^2 linear
    // map X -> Xλ - λX.
    FpMatrix sys(n * n, n * n, p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int row = i * n + j;
            for (int k = 0; k < n; ++k) {
                // + X[i][k] λ[k][j]
                sys.at(row, i * n + k) =
                    mod_reduce(sys.at(row, i * n + k) + mod.lambda_op.at(k, j), p);
                // - λ[i][k] X[k][j]
                sys.at(row, k * n + j) =
                    mod_reduce(sys.at(row, k * n + j) - mod.lambda_op.at(i, k), p);
            }
        }
    commutant_ = sys.kernel_basis();
}

PairedLambdaModule CompatiblePerturber::perturb(SplitMix64& rng) const {
    const int n = mod_.dim;
    const int64_t p = mod_.p;
    for (int attempt = 0; attempt < 200; ++attempt) {
        FpMatrix x(n, n, p);
        for (int v = 0; v < commutant_.cols(); ++v) {
            const int64_t coeff = static_cast<int64_t>(rng.below(static_cast<uint64_t>(p)));
            if (coeff == 0) continue;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    x.at(i, j) =
                        mod_reduce(x.at(i, j) + coeff * commutant_.at(i * n + j, v), p);
        }
        if (x.det() == 0) continue;
        PairedLambdaModule out = mod_;
        out.gram = x.transpose() * mod_.gram * x;
        out.validate();
        return out;
    }
    throw InternalError("CompatiblePerturber: no invertible commutant element "
                        "found");
}

PairedLambdaModule random_compatible_perturbation(const PairedLambdaModule& mod,
                                                  SplitMix64& rng) {
    return CompatiblePerturber(mod).perturb(rng);
}

bool satisfies(const LambdaPartition& parts, const StructureConstraint& c) {
    switch (c.kind) {
        case StructureConstraint::Kind::QuotientDimEq:
            return quotient_dim(parts, c.m, c.n) == c.value;
        case StructureConstraint::Kind::QuotientDimGe:
            return quotient_dim(parts, c.m, c.n) >= c.value;
        case StructureConstraint::Kind::PartCap:
            return std::all_of(parts.parts.begin(), parts.parts.end(),
                               [&](int e) { return e <= c.value; });
        case StructureConstraint::Kind::TorsionShape: {
            std::vector<int> clipped;
            clipped.reserve(parts.parts.size());
            for (int e : parts.parts) clipped.push_back(std::min(e, c.m));
            std::sort(clipped.begin(), clipped.end(), std::greater<>());
            return clipped == c.shape;
        }
    }
    return false;
}

namespace {

void enumerate_rec(std::vector<int>& acc, int max_part, int budget,
                   const std::vector<StructureConstraint>& constraints,
                   std::vector<LambdaPartition>& out) {
    LambdaPartition cand{acc};
    if (std::all_of(constraints.begin(), constraints.end(),
                    [&](const StructureConstraint& c) { return satisfies(cand, c); }))
        out.push_back(cand);
    for (int e = std::min(max_part, budget); e >= 1; --e) {
        acc.push_back(e);
        enumerate_rec(acc, e, budget - e, constraints, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<LambdaPartition> deduce_partitions(
    const std::vector<StructureConstraint>& constraints, int part_cap, int dim_cap) {
    if (part_cap < 1 || part_cap > kDeducePartCapLimit || dim_cap < 0 ||
        dim_cap > kDeduceDimCapLimit)
        throw CapExceeded("deduce_partitions: caps out of configured limits");
    std::vector<LambdaPartition> out;
    std::vector<int> acc;
    enumerate_rec(acc, part_cap, dim_cap, constraints, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StructureConstraint> parse_constraints(std::istream& in) {
    std::vector<StructureConstraint> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;

        StructureConstraint c;
        const std::string where = " at line " + std::to_string(lineno);
        if (head == "quotient_dim") {
            std::string rel;
            if (!(ls >> c.m >> c.n >> rel >> c.value) || (rel != "=" && rel != ">="))
                throw InvalidDimension("parse_constraints: bad quotient_dim" + where);
            c.kind = rel == "=" ? StructureConstraint::Kind::QuotientDimEq
                                : StructureConstraint::Kind::QuotientDimGe;
        } else if (head == "part_cap") {
            if (!(ls >> c.value))
                throw InvalidDimension("parse_constraints: bad part_cap" + where);
            c.kind = StructureConstraint::Kind::PartCap;
        } else if (head == "torsion_shape") {
            std::string list;
            if (!(ls >> c.m >> list))
                throw InvalidDimension("parse_constraints: bad torsion_shape" + where);
            c.kind = StructureConstraint::Kind::TorsionShape;
            std::istringstream es(list);
            std::string tok;
            while (std::getline(es, tok, ',')) c.shape.push_back(std::stoi(tok));
            std::sort(c.shape.begin(), c.shape.end(), std::greater<>());
        } else {
            throw InvalidDimension("parse_constraints: unknown keyword '" + head +
                                   "'" + where);
        }
        std::string extra;
        if (ls >> extra)
            throw InvalidDimension("parse_constraints: trailing tokens" + where);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace fermatsha
