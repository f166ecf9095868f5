#include "l2k/matrix.hpp"

#include "l2k/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace l2k {

namespace {

std::string shape(const ScalarMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

ScalarMatrix::ScalarMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n)
{
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

ScalarMatrix ScalarMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& columns)
{
    ScalarMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

std::vector<Scalar> ScalarMatrix::column(std::size_t c) const
{
    std::vector<Scalar> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool ScalarMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

ScalarMatrix matmul(const ScalarMatrix& x, const ScalarMatrix& y)
{
    if (x.cols() != y.rows())
        throw DimensionMismatch("matmul: " + shape(x) + " times " + shape(y));
    ScalarMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Scalar& a = x(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                const Scalar& b = y(k, j);
                if (!b.is_zero()) out(i, j) += a * b;
            }
        }
    }
    return out;
}

ScalarMatrix adjoint(const ScalarMatrix& x)
{
    ScalarMatrix out(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = x(i, j).conj();
    return out;
}

ScalarMatrix transpose(const ScalarMatrix& x)
{
    ScalarMatrix out(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = x(i, j);
    return out;
}

ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("add: " + shape(a) + " vs " + shape(b));
    ScalarMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b)
{
    return a + Scalar(-1) * b;
}

ScalarMatrix operator*(const Scalar& s, const ScalarMatrix& a)
{
    ScalarMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

Scalar trace(const ScalarMatrix& x)
{
    if (x.rows() != x.cols()) throw DimensionMismatch("trace of non-square " + shape(x));
    Scalar t;
    for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i);
    return t;
}

ScalarMatrix hstack(const ScalarMatrix& a, const ScalarMatrix& b)
{
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: " + shape(a) + " | " + shape(b));
    ScalarMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

ScalarMatrix vstack(const ScalarMatrix& a, const ScalarMatrix& b)
{
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: " + shape(a) + " / " + shape(b));
    ScalarMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

ScalarMatrix select_columns(const ScalarMatrix& x, std::span<const std::size_t> cols)
{
    ScalarMatrix out(x.rows(), cols.size());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = x(i, cols[j]);
    return out;
}

ScalarMatrix select_rows(const ScalarMatrix& x, std::span<const std::size_t> rows)
{
    ScalarMatrix out(rows.size(), x.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(rows[i], j);
    return out;
}

std::size_t rank(const ScalarMatrix& x)
{
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    if (m == 0 || n == 0) return 0;

    // Scale each row to Gaussian integers.
    ScalarMatrix a = x;
    for (std::size_t i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).re().denominator().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).im().denominator().get_mpz_t());
        }
        if (l != 1) {
            const Scalar f{Rational(mpq_class(l))};
            for (std::size_t j = 0; j < n; ++j) a(i, j) *= f;
        }
    }

    std::vector<std::size_t> col_perm(n);
    std::iota(col_perm.begin(), col_perm.end(), 0);
    Scalar prev(1);
    std::size_t k = 0;
    for (; k < std::min(m, n); ++k) {
        std::size_t pr = m, pc = n;
        for (std::size_t j = k; j < n && pr == m; ++j)
            for (std::size_t i = k; i < m; ++i)
                if (!a(i, col_perm[j]).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == m) break;
        if (pr != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pr, j), a(k, j));
        std::swap(col_perm[pc], col_perm[k]);

        const Scalar pivot = a(k, col_perm[k]);
        for (std::size_t i = k + 1; i < m; ++i) {
            const Scalar factor = a(i, col_perm[k]);
            for (std::size_t jj = k + 1; jj < n; ++jj) {
                const std::size_t j = col_perm[jj];
                Scalar v = pivot * a(i, j);
                if (!factor.is_zero()) v -= factor * a(k, j);
                a(i, j) = prev.is_one() ? std::move(v) : v / prev;
            }
            a(i, col_perm[k]) = Scalar();
        }
        prev = pivot;
    }
    return k;
}

RowEchelon rref(ScalarMatrix x, std::span<const std::size_t> column_order)
{
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    std::vector<std::size_t> order;
    if (column_order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    } else {
        if (column_order.size() != n) throw DimensionMismatch("rref: column order size");
        order.assign(column_order.begin(), column_order.end());
    }

    RowEchelon out;
    std::size_t r = 0;
    for (std::size_t oc = 0; oc < n && r < m; ++oc) {
        const std::size_t c = order[oc];
        std::size_t p = r;
        while (p < m && x(p, c).is_zero()) ++p;
        if (p == m) continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(x(p, j), x(r, j));
        const Scalar inv = x(r, c).inverse();
        for (std::size_t j = 0; j < n; ++j)
            if (!x(r, j).is_zero()) x(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || x(i, c).is_zero()) continue;
            const Scalar f = x(i, c);
            for (std::size_t j = 0; j < n; ++j)
                if (!x(r, j).is_zero()) x(i, j) -= f * x(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(x);
    return out;
}

std::optional<ScalarMatrix> solve_linear(const ScalarMatrix& a, const ScalarMatrix& b,
                                         std::span<const std::size_t> column_order)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve_linear: A is " + shape(a) + ", b is " + shape(b));
    const std::size_t n = a.cols();
    std::vector<std::size_t> order;
    if (!column_order.empty()) {
        if (column_order.size() != n) throw DimensionMismatch("solve_linear: column order size");
        order.assign(column_order.begin(), column_order.end());
    } else {
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
    }
    // Right-hand-side columns are never pivots: they come last and are only
    // inspected afterwards.
    for (std::size_t j = 0; j < b.cols(); ++j) order.push_back(n + j);

    RowEchelon e = rref(hstack(a, b), order);
    std::size_t rank_a = 0;
    for (std::size_t c : e.pivot_columns) {
        if (c >= n) return std::nullopt;  // pivot in b: inconsistent
        ++rank_a;
    }
    ScalarMatrix x(n, b.cols());
    for (std::size_t r = 0; r < rank_a; ++r) {
        const std::size_t c = e.pivot_columns[r];
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, n + j);
    }
    return x;
}

ScalarMatrix kernel_basis(const ScalarMatrix& a)
{
    const std::size_t n = a.cols();
    RowEchelon e = rref(a);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : e.pivot_columns) is_pivot[c] = 1;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);
    ScalarMatrix k(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = Scalar(1);
        for (std::size_t r = 0; r < e.pivot_columns.size(); ++r)
            k(e.pivot_columns[r], f) = -e.reduced(r, free[f]);
    }
    return k;
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& a)
{
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square " + shape(a));
    if (rref(a).pivot_columns.size() != a.rows()) return std::nullopt;
    return solve_linear(a, ScalarMatrix::identity(a.rows()));
}

}  // namespace l2k
