#include "l2k/dimension.hpp"
#include "l2k/errors.hpp"
#include "kernels/partition.hpp"

#include <Eigen/Dense>

#include <exception>

namespace l2k {

namespace {

using Mat = Eigen::MatrixXcd;

struct FloatBlock {
    std::complex<double> algebraic;
    std::complex<double> l2;
    std::size_t rank = 0;
    bool ill = false;
};

bool near_threshold(const Eigen::VectorXd& sigma, double eps)
{
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) >= eps / 10 && sigma(i) <= eps * 10) return true;
    return false;
}

FloatBlock solve_block(const ColumnSource& src, const detail::RowPartition& part, std::size_t b, double eps)
{
    const TracialAlgebra& alg = *src.algebra();
    const std::size_t d = alg.dim();
    const auto& rows = part.rows[b];
    const auto n = static_cast<Eigen::Index>(rows.size());
    const auto m = static_cast<Eigen::Index>(part.cols[b].size());
    Mat a = Mat::Zero(n, m);
    SparseVec col;
    for (Eigen::Index c = 0; c < m; ++c) {
        src.column(part.cols[b][static_cast<std::size_t>(c)], col);
        for (const auto& [g, v] : col) a(part.local_of_row[g], c) = v.to_complex();
    }
    FloatBlock out;
    Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeThinU);
    const Eigen::VectorXd& sigma = svd.singularValues();
    Eigen::Index r = 0;
    while (r < sigma.size() && sigma(r) > eps) ++r;
    out.rank = static_cast<std::size_t>(r);
    out.ill = near_threshold(sigma, eps);
    if (r == 0) return out;
    const Mat u = svd.matrixU().leftCols(r);

    Mat c = Mat::Zero(n, n), g = Mat::Zero(n, n);
    for (Eigen::Index loc = 0; loc < n; ++loc) {
        const std::uint32_t row = rows[static_cast<std::size_t>(loc)];
        const std::uint32_t base = row - row % static_cast<std::uint32_t>(d);
        for (const auto& [s, v] : alg.density_action()[row % d]) c(part.local_of_row[base + s], loc) = v.to_complex();
        for (const auto& [s, v] : alg.gram_rows()[row % d]) g(loc, part.local_of_row[base + s]) = v.to_complex();
    }
    out.algebraic = (u.adjoint() * c * u).trace();

    std::vector<std::uint32_t> slots;
    for (std::uint32_t row : rows) {
        const std::uint32_t j = row / static_cast<std::uint32_t>(d);
        if (slots.empty() || slots.back() != j) slots.push_back(j);
    }
    Mat units = Mat::Zero(n, static_cast<Eigen::Index>(slots.size()));
    for (std::size_t t = 0; t < slots.size(); ++t)
        for (const auto& [q, v] : alg.unit()) {
            const std::size_t row = static_cast<std::size_t>(slots[t]) * d + q;
            if (part.block_of_row[row] == b) units(part.local_of_row[row], static_cast<Eigen::Index>(t)) = v.to_complex();
        }
    const Mat k = u.adjoint() * g * u;
    const Mat v = u.adjoint() * g * units;
    out.l2 = (v.adjoint() * k.ldlt().solve(v)).trace();
    return out;
}

}  // namespace

FloatImageDimension image_dimension_float(const ColumnSource& columns, double epsilon)
{
    if (!(epsilon > 0)) throw std::invalid_argument("float tolerance must be positive");
    const detail::RowPartition part = detail::partition_rows(columns);
    const std::size_t nb = part.rows.size();
    std::vector<FloatBlock> results(nb);
    std::vector<std::exception_ptr> errors(nb);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
        try {
            results[static_cast<std::size_t>(b)] = solve_block(columns, part, static_cast<std::size_t>(b), epsilon);
        } catch (...) {
            errors[static_cast<std::size_t>(b)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    FloatImageDimension out;
    for (const auto& r : results) {
        out.algebraic += r.algebraic.real();
        out.l2 += r.l2.real();
        out.scalar_rank += r.rank;
        out.ill_conditioned = out.ill_conditioned || r.ill;
    }
    return out;
}

FloatRank float_rank(const ScalarMatrix& x, double epsilon)
{
    FloatRank out;
    if (x.rows() == 0 || x.cols() == 0) return out;
    Mat a(static_cast<Eigen::Index>(x.rows()), static_cast<Eigen::Index>(x.cols()));
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x(i, j).to_complex();
    Eigen::BDCSVD<Mat> svd(a);
    const Eigen::VectorXd& sigma = svd.singularValues();
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > epsilon) ++out.rank;
    out.ill_conditioned = near_threshold(sigma, epsilon);
    return out;
}

}  // namespace l2k
