#ifndef FERMATSHA_FPMAT_HPP
#define FERMATSHA_FPMAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fermatsha/errors.hpp"

namespace fermatsha {

// Small dense matrices over F_p with exact Gaussian elimination and explicit
// pivoting. No floating point anywhere. Entries are canonical residues in
// [0, p-1]; p must be prime (callers guarantee it) and small enough that
// p^2 fits int64, which holds for every prime this library accepts.
class FpMatrix {
public:
    FpMatrix() : rows_(0), cols_(0), p_(2) {}
    FpMatrix(int rows, int cols, int64_t p)
        : rows_(rows), cols_(cols), p_(p),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0) {}

    static FpMatrix identity(int n, int64_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int64_t modulus() const { return p_; }

    int64_t& at(int i, int j) {
        return data_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)];
    }
    int64_t at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + static_cast<size_t>(j)];
    }

    FpMatrix operator*(const FpMatrix& other) const;
    FpMatrix operator+(const FpMatrix& other) const;
    FpMatrix operator-() const;
    bool operator==(const FpMatrix& other) const = default;

    FpMatrix transpose() const;
    FpMatrix pow(int e) const;  // square matrices only
    bool is_zero() const;

    int rank() const;
    int64_t det() const;  // square matrices only

    // Columns form a basis of the null space {x : Ax = 0}; n x nullity.
    FpMatrix kernel_basis() const;

    // Solve Ax = rhs for square A. Returns nullopt when A is singular.
    std::optional<std::vector<int64_t>> solve(const std::vector<int64_t>& rhs) const;

    // Matrix whose columns are [A | B]'s columns.
    static FpMatrix hcat(const FpMatrix& a, const FpMatrix& b);

private:
    int rows_, cols_;
    int64_t p_;
    std::vector<int64_t> data_;
};

// Column-span predicates. col(A) ⊆ col(B) iff rank(B) == rank([B|A]).
bool span_contains(const FpMatrix& b, const FpMatrix& a);
bool span_equal(const FpMatrix& a, const FpMatrix& b);

}  // namespace fermatsha

#endif
