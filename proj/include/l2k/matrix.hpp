#pragma once

#include "l2k/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace l2k {

/// Dense row-major matrix of exact Gaussian rationals.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static ScalarMatrix identity(std::size_t n);
    static ScalarMatrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::vector<Scalar> column(std::size_t c) const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// X·Y; throws DimensionMismatch unless X.cols() == Y.rows().
ScalarMatrix matmul(const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix adjoint(const ScalarMatrix& x);
ScalarMatrix transpose(const ScalarMatrix& x);
ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& a);
Scalar trace(const ScalarMatrix& x);

ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix vstack(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix select_columns(const ScalarMatrix& x, std::span<const std::size_t> cols);
ScalarMatrix select_rows(const ScalarMatrix& x, std::span<const std::size_t> rows);

/// Rank over ℂ by fraction-free (Bareiss) elimination with full pivoting.
/// Rows are first scaled to Gaussian integers; every division is exact.
std::size_t rank(const ScalarMatrix& x);

struct RowEchelon {
    ScalarMatrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivot_columns;   // one per nonzero row, increasing
};

/// Gauss-Jordan reduction. `column_order`, when given, is the order in which
/// columns are considered for pivots (a permutation of 0..cols-1); the
/// returned pivot columns are original column indices.
RowEchelon rref(ScalarMatrix x, std::span<const std::size_t> column_order = {});

/// Some x with A·x = b, or nullopt when b is not in the column space.
/// Free variables are set to zero; `column_order` changes which particular
/// solution is returned (see rref).
std::optional<ScalarMatrix> solve_linear(const ScalarMatrix& a, const ScalarMatrix& b,
                                         std::span<const std::size_t> column_order = {});

/// Columns form a basis of {x : A·x = 0}; there are cols − rank(A) of them.
ScalarMatrix kernel_basis(const ScalarMatrix& a);

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a);

}  // namespace l2k
