#pragma once

#include "l2k/rational.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace l2k {

/// Exact Gaussian rational re + i·im.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
    Scalar(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    [[nodiscard]] const Rational& re() const noexcept { return re_; }
    [[nodiscard]] const Rational& im() const noexcept { return im_; }

    [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }

    [[nodiscard]] Scalar conj() const { return {re_, -im_}; }
    /// |z|² = re² + im².
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    /// "p/q" for reals, otherwise "re+imi" style, e.g. "1/2-3i".
    [[nodiscard]] std::string str() const;

    Scalar operator-() const { return {-re_, -im_}; }
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    friend bool operator==(const Scalar& a, const Scalar& b) = default;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// out := a + coeff·b, both sorted sparse vectors.
SparseVec sparse_axpy(const SparseVec& a, const Scalar& coeff, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Scalar& coeff);
Scalar sparse_dot(const SparseVec& a, const SparseVec& b);  // Σ a_i b_i (no conjugation)
std::vector<Scalar> sparse_to_dense(const SparseVec& v, std::size_t n);
SparseVec dense_to_sparse(const std::vector<Scalar>& v);

/// Accumulates sparse contributions into a dense scratch row and emits a
/// sorted sparse vector. Reusable across calls; not thread-safe.
class SparseAccumulator {
public:
    explicit SparseAccumulator(std::size_t size = 0) { resize(size); }
    void resize(std::size_t size);
    void add(std::uint32_t index, const Scalar& value);
    void add(const SparseVec& v, const Scalar& coeff, std::uint32_t offset = 0);
    /// Moves out the accumulated vector (sorted, zeros dropped) and clears.
    SparseVec take();
    [[nodiscard]] bool empty() const { return touched_.empty(); }

private:
    std::vector<Scalar> values_;
    std::vector<char> used_;
    std::vector<std::uint32_t> touched_;
};

}  // namespace l2k
