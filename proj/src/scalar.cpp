#include "l2k/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace l2k {

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (im_.is_zero()) return Scalar(re_.inverse());
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b)
{
    if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
    if (a.im_.is_zero()) return {a.re_ * b.re_, a.re_ * b.im_};
    if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }
Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this / rhs; }

std::string Scalar::str() const
{
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.is_one() ? std::string() : (im_ == Rational(-1) ? std::string("-") : im_.str());
    if (re_.is_zero()) return imag + "i";
    return re_.str() + (im_.sign() > 0 ? "+" : "") + imag + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.str(); }

SparseVec sparse_axpy(const SparseVec& a, const Scalar& coeff, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            Scalar v = coeff * ib->second;
            if (!v.is_zero()) out.emplace_back(ib->first, std::move(v));
            ++ib;
        } else {
            Scalar v = ia->second + coeff * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& coeff)
{
    SparseVec out;
    if (coeff.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, v * coeff);
    return out;
}

Scalar sparse_dot(const SparseVec& a, const SparseVec& b)
{
    Scalar sum;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += ia->second * ib->second;
            ++ia;
            ++ib;
        }
    }
    return sum;
}

std::vector<Scalar> sparse_to_dense(const SparseVec& v, std::size_t n)
{
    std::vector<Scalar> out(n);
    for (const auto& [i, x] : v) out.at(i) = x;
    return out;
}

SparseVec dense_to_sparse(const std::vector<Scalar>& v)
{
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return out;
}

void SparseAccumulator::resize(std::size_t size)
{
    values_.assign(size, Scalar());
    used_.assign(size, 0);
    touched_.clear();
}

void SparseAccumulator::add(std::uint32_t index, const Scalar& value)
{
    if (!used_[index]) {
        used_[index] = 1;
        touched_.push_back(index);
        values_[index] = value;
    } else {
        values_[index] += value;
    }
}

void SparseAccumulator::add(const SparseVec& v, const Scalar& coeff, std::uint32_t offset)
{
    if (coeff.is_one()) {
        for (const auto& [i, x] : v) add(i + offset, x);
    } else {
        for (const auto& [i, x] : v) add(i + offset, x * coeff);
    }
}

SparseVec SparseAccumulator::take()
{
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (std::uint32_t i : touched_) {
        if (!values_[i].is_zero()) out.emplace_back(i, std::move(values_[i]));
        values_[i] = Scalar();
        used_[i] = 0;
    }
    touched_.clear();
    return out;
}

}  // namespace l2k
