#include "l2k/module_map.hpp"

#include "l2k/errors.hpp"

#include <algorithm>

namespace l2k {

ModuleMap::ModuleMap(AlgebraPtr algebra, std::size_t source_rank, std::size_t target_rank)
    : algebra_(std::move(algebra)), k_(source_rank), l_(target_rank), cols_(source_rank)
{
    if (!algebra_) throw std::invalid_argument("ModuleMap: null algebra");
}

ModuleMap ModuleMap::identity(const AlgebraPtr& algebra, std::size_t rank)
{
    ModuleMap m(algebra, rank, rank);
    for (std::size_t i = 0; i < rank; ++i) m.set(i, i, algebra->unit());
    return m;
}

ModuleMap ModuleMap::right_multiplication(const AlgebraPtr& algebra, const SparseVec& x)
{
    ModuleMap m(algebra, 1, 1);
    m.set(0, 0, x);
    return m;
}

SparseVec ModuleMap::at(std::size_t target, std::size_t source) const
{
    if (source >= k_ || target >= l_) throw DimensionMismatch("ModuleMap::at out of range");
    const auto& col = cols_[source];
    auto it = std::lower_bound(col.begin(), col.end(), target,
                               [](const auto& e, std::size_t j) { return e.first < j; });
    if (it != col.end() && it->first == target) return it->second;
    return {};
}

void ModuleMap::set(std::size_t target, std::size_t source, SparseVec value)
{
    if (source >= k_ || target >= l_) throw DimensionMismatch("ModuleMap::set out of range");
    auto& col = cols_[source];
    auto it = std::lower_bound(col.begin(), col.end(), target,
                               [](const auto& e, std::size_t j) { return e.first < j; });
    if (it != col.end() && it->first == target) {
        if (value.empty())
            col.erase(it);
        else
            it->second = std::move(value);
    } else if (!value.empty()) {
        col.insert(it, {static_cast<std::uint32_t>(target), std::move(value)});
    }
}

void ModuleMap::add_to(std::size_t target, std::size_t source, const SparseVec& value, const Scalar& coeff)
{
    set(target, source, sparse_axpy(at(target, source), coeff, value));
}

bool ModuleMap::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::vector<SparseVec> ModuleMap::apply(const std::vector<SparseVec>& x) const
{
    if (x.size() != k_) throw DimensionMismatch("ModuleMap::apply: vector has wrong rank");
    std::vector<SparseVec> y(l_);
    for (std::size_t i = 0; i < k_; ++i) {
        if (x[i].empty()) continue;
        for (const auto& [j, t] : cols_[i]) y[j] = sparse_axpy(y[j], Scalar(1), algebra_->multiply(x[i], t));
    }
    return y;
}

ModuleMap ModuleMap::then(const ModuleMap& g) const
{
    if (g.algebra_ != algebra_) throw DimensionMismatch("compose: maps over different algebras");
    if (g.k_ != l_) throw DimensionMismatch("compose: target rank does not match source rank");
    ModuleMap out(algebra_, k_, g.l_);
    SparseAccumulator acc(algebra_->dim());
    for (std::size_t i = 0; i < k_; ++i) {
        std::vector<std::pair<std::uint32_t, SparseVec>> parts;
        // Collect Σ_j f(j,i)·g(m,j) grouped by m.
        std::vector<std::pair<std::uint32_t, SparseVec>> terms;
        for (const auto& [j, fv] : cols_[i])
            for (const auto& [m, gv] : g.cols_[j]) terms.emplace_back(m, algebra_->multiply(fv, gv));
        std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t s = 0; s < terms.size();) {
            const std::uint32_t m = terms[s].first;
            for (; s < terms.size() && terms[s].first == m; ++s) acc.add(terms[s].second, Scalar(1));
            SparseVec v = acc.take();
            if (!v.empty()) parts.emplace_back(m, std::move(v));
        }
        out.cols_[i] = std::move(parts);
    }
    return out;
}

ModuleMap ModuleMap::operator+(const ModuleMap& other) const
{
    if (other.algebra_ != algebra_ || other.k_ != k_ || other.l_ != l_)
        throw DimensionMismatch("ModuleMap addition: shapes differ");
    ModuleMap out = *this;
    for (std::size_t i = 0; i < k_; ++i)
        for (const auto& [j, v] : other.cols_[i]) out.add_to(j, i, v);
    return out;
}

ModuleMap ModuleMap::scaled(const Scalar& s) const
{
    ModuleMap out(algebra_, k_, l_);
    if (s.is_zero()) return out;
    for (std::size_t i = 0; i < k_; ++i)
        for (const auto& [j, v] : cols_[i]) out.cols_[i].emplace_back(j, sparse_scale(v, s));
    return out;
}

SparseVec ModuleMap::realize_column(std::size_t column) const
{
    const std::size_t d = algebra_->dim();
    const std::size_t i = column / d;
    const std::size_t p = column % d;
    SparseVec out;
    SparseAccumulator acc(d);
    for (const auto& [j, t] : cols_[i]) {
        for (const auto& [q, v] : t) acc.add(algebra_->product(p, q), v);
        const auto base = static_cast<std::uint32_t>(j * d);
        for (auto& [r, v] : acc.take()) out.emplace_back(base + r, std::move(v));
    }
    return out;
}

ScalarMatrix ModuleMap::realize() const
{
    const std::size_t d = algebra_->dim();
    ScalarMatrix m(d * l_, d * k_);
    for (std::size_t c = 0; c < d * k_; ++c)
        for (const auto& [r, v] : realize_column(c)) m(r, c) = v;
    return m;
}

ModuleMap ModuleMap::transported(const AlgebraIsomorphism& iso) const
{
    if (iso.source != algebra_) throw DimensionMismatch("transported: isomorphism source is a different algebra");
    ModuleMap out(iso.target, k_, l_);
    for (std::size_t i = 0; i < k_; ++i)
        for (const auto& [j, v] : cols_[i]) out.cols_[i].emplace_back(j, iso.apply(v));
    return out;
}

bool operator==(const ModuleMap& a, const ModuleMap& b)
{
    return a.algebra_ == b.algebra_ && a.k_ == b.k_ && a.l_ == b.l_ && a.cols_ == b.cols_;
}

ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b)
{
    if (a.algebra() != b.algebra()) throw DimensionMismatch("direct_sum: maps over different algebras");
    ModuleMap out(a.algebra(), a.source_rank() + b.source_rank(), a.target_rank() + b.target_rank());
    for (std::size_t i = 0; i < a.source_rank(); ++i)
        for (const auto& [j, v] : a.source_entries(i)) out.set(j, i, v);
    for (std::size_t i = 0; i < b.source_rank(); ++i)
        for (const auto& [j, v] : b.source_entries(i)) out.set(a.target_rank() + j, a.source_rank() + i, v);
    return out;
}

ModuleMap generator_map(const AlgebraPtr& algebra, std::size_t target_rank,
                        const std::vector<std::vector<SparseVec>>& generators)
{
    ModuleMap out(algebra, generators.size(), target_rank);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].size() != target_rank) throw DimensionMismatch("generator_map: generator of wrong rank");
        for (std::size_t j = 0; j < target_rank; ++j) out.set(j, g, generators[g][j]);
    }
    return out;
}

ModuleMap restrict_source(const ModuleMap& t, const std::vector<std::size_t>& slots)
{
    ModuleMap out(t.algebra(), slots.size(), t.target_rank());
    for (std::size_t s = 0; s < slots.size(); ++s)
        for (const auto& [j, v] : t.source_entries(slots[s])) out.set(j, s, v);
    return out;
}

ModuleMap join_sources(const ModuleMap& a, const ModuleMap& b)
{
    if (a.algebra() != b.algebra()) throw DimensionMismatch("join_sources: maps over different algebras");
    if (a.target_rank() != b.target_rank()) throw DimensionMismatch("join_sources: targets differ");
    ModuleMap out(a.algebra(), a.source_rank() + b.source_rank(), a.target_rank());
    for (std::size_t i = 0; i < a.source_rank(); ++i)
        for (const auto& [j, v] : a.source_entries(i)) out.set(j, i, v);
    for (std::size_t i = 0; i < b.source_rank(); ++i)
        for (const auto& [j, v] : b.source_entries(i)) out.set(j, a.source_rank() + i, v);
    return out;
}

ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g, const AlgebraPtr& ab)
{
    const std::size_t db = g.algebra()->dim();
    if (ab->dim() != f.algebra()->dim() * db) throw DimensionMismatch("tensor_maps: algebra dimension mismatch");
    const std::size_t kg = g.source_rank(), lg = g.target_rank();
    ModuleMap out(ab, f.source_rank() * kg, f.target_rank() * lg);
    for (std::size_t i = 0; i < f.source_rank(); ++i)
        for (const auto& [j, x] : f.source_entries(i))
            for (std::size_t i2 = 0; i2 < kg; ++i2)
                for (const auto& [j2, y] : g.source_entries(i2))
                    out.set(j * lg + j2, i * kg + i2, tensor_coordinates(x, y, db));
    return out;
}

std::vector<Scalar> flatten(const std::vector<SparseVec>& x, std::size_t dim)
{
    std::vector<Scalar> v(x.size() * dim);
    for (std::size_t j = 0; j < x.size(); ++j)
        for (const auto& [q, s] : x[j]) v[j * dim + q] = s;
    return v;
}

std::vector<SparseVec> unflatten(std::span<const Scalar> v, std::size_t dim)
{
    if (dim == 0 || v.size() % dim != 0) throw DimensionMismatch("unflatten: length is not a multiple of dim");
    std::vector<SparseVec> x(v.size() / dim);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = dense_to_sparse(std::vector<Scalar>(v.begin() + j * dim, v.begin() + (j + 1) * dim));
    return x;
}

std::vector<SparseVec> image_of_basis(const ModuleMap& t, std::size_t i)
{
    std::vector<SparseVec> x(t.target_rank());
    for (const auto& [j, v] : t.source_entries(i)) x[j] = v;
    return x;
}

}  // namespace l2k
