#include "l2k/errors.hpp"
#include "l2k/matrix.hpp"
#include "l2k/random.hpp"

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include <complex>
#include <limits>

using namespace l2k;

namespace {

// Mixes small values with ones near the int64 boundary so both storage
// paths and the transitions between them get exercised.
mpq_class random_mpq(Rng& rng)
{
    switch (rng.below(4)) {
    case 0: {
        mpq_class q(rng.between(-9, 9), rng.between(1, 9));
        q.canonicalize();
        return q;
    }
    case 1: {
        mpz_class n = rng.between(std::numeric_limits<std::int64_t>::min() + 1, std::numeric_limits<std::int64_t>::max());
        mpz_class d = rng.between(1, std::numeric_limits<std::int64_t>::max());
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }
    case 2: {
        mpz_class n = mpz_class(rng.between(-1000, 1000)) << static_cast<unsigned>(rng.below(140));
        mpq_class q(n, mpz_class(rng.between(1, 1000)));
        q.canonicalize();
        return q;
    }
    default:
        return mpq_class(rng.between(-3, 3));
    }
}

std::size_t eigen_rank(const ScalarMatrix& m)
{
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    std::size_t r = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > 1e-8) ++r;
    return r;
}

ScalarMatrix random_matrix(Rng& rng, std::size_t m, std::size_t n, bool complex, std::int64_t bound = 3)
{
    ScalarMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rng.chance(2, 3)) a(i, j) = rng.small_scalar(bound, complex);
    return a;
}

// Product of an m×r and r×n factor: rank at most r.
ScalarMatrix low_rank_matrix(Rng& rng, std::size_t m, std::size_t n, std::size_t r, bool complex)
{
    return matmul(random_matrix(rng, m, r, complex), random_matrix(rng, r, n, complex));
}

}  // namespace

TEST(Rational, MatchesGmpOnRandomOperands)
{
    Rng rng(101);
    for (int t = 0; t < 3000; ++t) {
        const mpq_class a = random_mpq(rng);
        const mpq_class b = random_mpq(rng);
        const Rational ra(a), rb(b);
        ASSERT_EQ((ra + rb).to_mpq(), a + b);
        ASSERT_EQ((ra - rb).to_mpq(), a - b);
        ASSERT_EQ((ra * rb).to_mpq(), a * b);
        if (b != 0) ASSERT_EQ((ra / rb).to_mpq(), a / b);
        ASSERT_EQ(ra == rb, a == b);
        ASSERT_EQ(ra < rb, a < b);
        ASSERT_EQ(ra.sign(), sgn(a));
    }
}

TEST(Rational, RepresentationIsCanonical)
{
    const Rational big(mpq_class(mpz_class(1) << 100));
    EXPECT_TRUE(big.is_big());
    const Rational back = big / big;
    EXPECT_FALSE(back.is_big());
    EXPECT_TRUE(back.is_one());
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    const Rational m(std::numeric_limits<std::int64_t>::min());
    EXPECT_EQ(m.to_mpq(), mpq_class(mpz_class(std::numeric_limits<std::int64_t>::min())));
    EXPECT_EQ((-m).to_mpq(), -m.to_mpq());
}

TEST(Rational, ParseAndFormat)
{
    EXPECT_EQ(Rational::parse("1/3").str(), "1/3");
    EXPECT_EQ(Rational::parse("-4/6").str(), "-2/3");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Scalar, FieldAxiomsOnRandomValues)
{
    Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        const Scalar a{Rational(random_mpq(rng)), Rational(random_mpq(rng))};
        const Scalar b{Rational(random_mpq(rng)), Rational(random_mpq(rng))};
        const Scalar c = rng.small_scalar(5, true);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ(Scalar((a * a.conj()).re()), Scalar(a.norm()));
        if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
        // Componentwise product against a direct mpq evaluation.
        const mpq_class re = a.re().to_mpq() * b.re().to_mpq() - a.im().to_mpq() * b.im().to_mpq();
        const mpq_class im = a.re().to_mpq() * b.im().to_mpq() + a.im().to_mpq() * b.re().to_mpq();
        ASSERT_EQ((a * b).re().to_mpq(), re);
        ASSERT_EQ((a * b).im().to_mpq(), im);
    }
    EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).str(), "1/2-3i");
    EXPECT_EQ(Scalar::i().str(), "i");
}

TEST(SparseVec, AxpyMatchesDense)
{
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        std::vector<Scalar> a(12), b(12);
        for (auto& x : a)
            if (rng.chance(1, 2)) x = rng.small_scalar(3, true);
        for (auto& x : b)
            if (rng.chance(1, 2)) x = rng.small_scalar(3, true);
        const Scalar k = rng.small_scalar(2, true);
        const SparseVec s = sparse_axpy(dense_to_sparse(a), k, dense_to_sparse(b));
        std::vector<Scalar> expect(12);
        for (int i = 0; i < 12; ++i) expect[i] = a[i] + k * b[i];
        ASSERT_EQ(sparse_to_dense(s, 12), expect);
        for (const auto& [i, v] : s) ASSERT_FALSE(v.is_zero());
    }
}

TEST(Matrix, ComplexProductExample)
{
    const Scalar i = Scalar::i();
    const ScalarMatrix a{{1, i}, {0, 1}};
    const ScalarMatrix b{{1, 0}, {-i, 1}};
    const ScalarMatrix expect{{2, i}, {-i, 1}};
    EXPECT_EQ(matmul(a, b), expect);
    EXPECT_THROW(matmul(a, ScalarMatrix(3, 1)), DimensionMismatch);
}

TEST(Matrix, ProductAgreesWithFloatEvaluation)
{
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto m = 1 + rng.below(5), k = 1 + rng.below(5), n = 1 + rng.below(5);
        const ScalarMatrix a = random_matrix(rng, m, k, true);
        const ScalarMatrix b = random_matrix(rng, k, n, true);
        const ScalarMatrix c = matmul(a, b);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::complex<double> s = 0;
                for (std::size_t l = 0; l < k; ++l) s += a(i, l).to_complex() * b(l, j).to_complex();
                ASSERT_EQ(c(i, j).to_complex(), s);  // small integers: float is exact
            }
        ASSERT_EQ(adjoint(c), matmul(adjoint(b), adjoint(a)));
    }
}

TEST(Matrix, RankAgreesWithSvdAndEchelon)
{
    Rng rng(2024);
    for (int t = 0; t < 150; ++t) {
        const auto m = 1 + rng.below(7), n = 1 + rng.below(7), r = rng.below(5);
        const bool complex = rng.chance(1, 2);
        const ScalarMatrix a = rng.chance(1, 2) ? low_rank_matrix(rng, m, n, r, complex) : random_matrix(rng, m, n, complex);
        const std::size_t k = rank(a);
        ASSERT_EQ(k, eigen_rank(a)) << "trial " << t;
        ASSERT_EQ(k, rref(a).pivot_columns.size());
        ASSERT_EQ(k, rank(adjoint(a)));
        ASSERT_LE(k, std::min(m, n));
    }
}

TEST(Matrix, RankWithFractionalEntries)
{
    const ScalarMatrix a{{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}};
    EXPECT_EQ(rank(a), 1u);
    const ScalarMatrix b{{Rational(1, 2), Scalar(Rational(0), Rational(1, 3))}, {Rational(3, 2), 1}};
    EXPECT_EQ(rank(b), 2u);
}

TEST(Matrix, KernelBasisProperties)
{
    Rng rng(5);
    for (int t = 0; t < 120; ++t) {
        const auto m = 1 + rng.below(6), n = 1 + rng.below(7);
        const ScalarMatrix a = low_rank_matrix(rng, m, n, rng.below(5), rng.chance(1, 2));
        const ScalarMatrix k = kernel_basis(a);
        ASSERT_EQ(k.rows(), n);
        ASSERT_EQ(k.cols(), n - rank(a));
        ASSERT_TRUE(matmul(a, k).is_zero());
        ASSERT_EQ(rank(k), k.cols());
    }
}

TEST(Matrix, SolveConsistentAndInconsistent)
{
    Rng rng(9);
    for (int t = 0; t < 120; ++t) {
        const auto m = 1 + rng.below(6), n = 1 + rng.below(6);
        const ScalarMatrix a = low_rank_matrix(rng, m, n, 1 + rng.below(4), true);
        const ScalarMatrix x0 = random_matrix(rng, n, 2, true);
        const ScalarMatrix b = matmul(a, x0);
        const auto x = solve_linear(a, b);
        ASSERT_TRUE(x.has_value());
        ASSERT_EQ(matmul(a, *x), b);

        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
        const auto y = solve_linear(a, b, order);
        ASSERT_TRUE(y.has_value());
        ASSERT_EQ(matmul(a, *y), b);

        const ScalarMatrix c = random_matrix(rng, m, 1, true);
        const bool in_span = rank(hstack(a, c)) == rank(a);
        ASSERT_EQ(solve_linear(a, c).has_value(), in_span);
    }
}

TEST(Matrix, InverseRoundTrip)
{
    Rng rng(13);
    int invertible = 0;
    for (int t = 0; t < 100; ++t) {
        const auto n = 1 + rng.below(5);
        const ScalarMatrix a = random_matrix(rng, n, n, true);
        const auto inv = inverse(a);
        ASSERT_EQ(inv.has_value(), rank(a) == n);
        if (inv) {
            ++invertible;
            ASSERT_EQ(matmul(a, *inv), ScalarMatrix::identity(n));
            ASSERT_EQ(matmul(*inv, a), ScalarMatrix::identity(n));
        }
    }
    EXPECT_GT(invertible, 20);
}
