#include "fermatsha/fpmat.hpp"

#include "fermatsha/modarith.hpp"

namespace fermatsha {

FpMatrix FpMatrix::identity(int n, int64_t p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
    if (cols_ != other.rows_ || p_ != other.p_)
        throw InternalError("FpMatrix: incompatible product");
    FpMatrix r(rows_, other.cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            int64_t v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) = (r.at(i, j) + v * other.at(k, j)) % p_;
        }
    }
    return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_)
        throw InternalError("FpMatrix: incompatible sum");
    FpMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = (data_[i] + other.data_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-() const {
    FpMatrix r(rows_, cols_, p_);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] = data_[i] == 0 ? 0 : p_ - data_[i];
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(cols_, rows_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

FpMatrix FpMatrix::pow(int e) const {
    if (rows_ != cols_) throw InternalError("FpMatrix::pow: not square");
    FpMatrix result = identity(rows_, p_);
    FpMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool FpMatrix::is_zero() const {
    for (int64_t v : data_)
        if (v != 0) return false;
    return true;
}

namespace {

// In-place row echelon; returns pivot column of each eliminated row.
std::vector<int> echelonize(FpMatrix& m) {
    const int64_t p = m.modulus();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
        int64_t inv = mod_inv(m.at(row, col), p);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = (m.at(row, j) * inv) % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            int64_t f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = mod_reduce(m.at(i, j) - f * m.at(row, j), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int FpMatrix::rank() const {
    FpMatrix m = *this;
    return static_cast<int>(echelonize(m).size());
}

int64_t FpMatrix::det() const {
    if (rows_ != cols_) throw InternalError("FpMatrix::det: not square");
    FpMatrix m = *this;
    int64_t d = 1;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != row) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
            d = p_ - d;
        }
        d = (d * m.at(row, col)) % p_;
        int64_t inv = mod_inv(m.at(row, col), p_);
        for (int i = row + 1; i < rows_; ++i) {
            int64_t f = (m.at(i, col) * inv) % p_;
            if (f == 0) continue;
            for (int j = col; j < cols_; ++j)
                m.at(i, j) = mod_reduce(m.at(i, j) - f * m.at(row, j), p_);
        }
        ++row;
    }
    return d % p_;
}

FpMatrix FpMatrix::kernel_basis() const {
    FpMatrix m = *this;
    std::vector<int> pivots = echelonize(m);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    int nullity = cols_ - static_cast<int>(pivots.size());
    FpMatrix basis(cols_, nullity, p_);
    int bj = 0;
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        basis.at(free_col, bj) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            int64_t v = m.at(static_cast<int>(r), free_col);
            if (v != 0)
                basis.at(pivots[r], bj) = p_ - v;
        }
        ++bj;
    }
    return basis;
}

std::optional<std::vector<int64_t>> FpMatrix::solve(
    const std::vector<int64_t>& rhs) const {
    if (rows_ != cols_ || rhs.size() != static_cast<size_t>(rows_))
        throw InternalError("FpMatrix::solve: shape mismatch");
    FpMatrix aug(rows_, cols_ + 1, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = mod_reduce(rhs[static_cast<size_t>(i)], p_);
    }
    std::vector<int> pivots = echelonize(aug);
    if (static_cast<int>(pivots.size()) != cols_ ||
        (!pivots.empty() && pivots.back() == cols_))
        return std::nullopt;
    std::vector<int64_t> x(static_cast<size_t>(cols_));
    for (int i = 0; i < cols_; ++i) x[static_cast<size_t>(pivots[static_cast<size_t>(i)])] = aug.at(i, cols_);
    return x;
}

FpMatrix FpMatrix::hcat(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.modulus() != b.modulus())
        throw InternalError("FpMatrix::hcat: shape mismatch");
    FpMatrix r(a.rows(), a.cols() + b.cols(), a.modulus());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

bool span_contains(const FpMatrix& b, const FpMatrix& a) {
    return FpMatrix::hcat(b, a).rank() == b.rank();
}

bool span_equal(const FpMatrix& a, const FpMatrix& b) {
    int ra = a.rank();
    int rb = b.rank();
    return ra == rb && FpMatrix::hcat(a, b).rank() == ra;
}

}  // namespace fermatsha
