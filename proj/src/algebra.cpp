#include "l2k/algebra.hpp"

#include "l2k/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace l2k {

namespace {

SparseVec outer(const SparseVec& x, const SparseVec& y, std::size_t dim_y)
{
    return tensor_coordinates(x, y, dim_y);
}

SparseVec sort_vec(SparseVec x)
{
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return x;
}

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

// Exact positive-definiteness of a Hermitian matrix by symmetric elimination:
// every pivot must be a positive real.
bool hermitian_positive_definite(ScalarMatrix a)
{
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (a(i, j) != a(j, i).conj()) return false;
    for (std::size_t k = 0; k < n; ++k) {
        const Scalar& d = a(k, k);
        if (!d.is_real() || d.re().sign() <= 0) return false;
        const Scalar inv = d.inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Scalar l = a(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a(k, j).is_zero()) a(i, j) -= l * a(k, j);
        }
    }
    return true;
}

void require(bool condition, const std::string& algebra, const std::string& what)
{
    if (!condition) throw ValidationError(algebra + ": " + what);
}

}  // namespace

Scalar TracialAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    for (const auto& [idx, v] : product(i, j))
        if (idx == k) return v;
    return {};
}

SparseVec TracialAlgebra::multiply(const SparseVec& x, const SparseVec& y) const
{
    if (x.size() == 1 && y.size() == 1) return sparse_scale(product(x[0].first, y[0].first), x[0].second * y[0].second);
    SparseAccumulator acc(dim_);
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) acc.add(product(i, j), a * b);
    return acc.take();
}

SparseVec TracialAlgebra::star(const SparseVec& x) const
{
    SparseAccumulator acc(dim_);
    for (const auto& [i, a] : x) acc.add(data_.star[i], a.conj());
    return acc.take();
}

Scalar TracialAlgebra::tau(const SparseVec& x) const
{
    Scalar s;
    for (const auto& [i, a] : x)
        if (!data_.trace[i].is_zero()) s += a * data_.trace[i];
    return s;
}

ScalarMatrix TracialAlgebra::gram_matrix() const
{
    ScalarMatrix g(dim_, dim_);
    for (std::size_t p = 0; p < dim_; ++p)
        for (const auto& [q, v] : gram_rows_[p]) g(p, q) = v;
    return g;
}

ScalarMatrix TracialAlgebra::left_regular(const SparseVec& x) const
{
    ScalarMatrix m(dim_, dim_);
    for (std::size_t p = 0; p < dim_; ++p)
        for (const auto& [r, v] : multiply(x, basis_vector(p))) m(r, p) = v;
    return m;
}

ScalarMatrix TracialAlgebra::right_regular(const SparseVec& x) const
{
    ScalarMatrix m(dim_, dim_);
    for (std::size_t p = 0; p < dim_; ++p)
        for (const auto& [r, v] : multiply(basis_vector(p), x)) m(r, p) = v;
    return m;
}

AlgebraPtr TracialAlgebra::create(Data data)
{
    auto alg = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
    const std::size_t d = data.trace.size();
    require(d > 0, data.name, "dimension must be positive");
    require(data.products.size() == d * d, data.name, "product table must have d*d entries");
    require(data.star.size() == d, data.name, "involution must have d columns");
    if (data.labels.size() != d) {
        data.labels.clear();
        for (std::size_t i = 0; i < d; ++i) data.labels.push_back("b" + std::to_string(i));
    }
    auto in_range = [d](const SparseVec& v) {
        return std::all_of(v.begin(), v.end(), [d](const auto& e) { return e.first < d && !e.second.is_zero(); });
    };
    for (auto& v : data.products) {
        v = sort_vec(std::move(v));
        require(in_range(v), data.name, "product coordinate out of range or zero");
    }
    for (auto& v : data.star) {
        v = sort_vec(std::move(v));
        require(in_range(v), data.name, "involution coordinate out of range or zero");
    }
    data.unit = sort_vec(std::move(data.unit));
    require(in_range(data.unit), data.name, "unit coordinate out of range or zero");

    alg->dim_ = d;
    alg->data_ = std::move(data);
    alg->kind_ = Kind::Base;
    alg->validate_full();

    alg->gram_rows_.resize(d);
    for (std::size_t p = 0; p < d; ++p) {
        std::vector<Scalar> row(d);
        const SparseVec ps = alg->data_.star[p];
        for (std::size_t q = 0; q < d; ++q) row[q] = alg->tau(alg->multiply(ps, alg->basis_vector(q)));
        alg->gram_rows_[p] = dense_to_sparse(row);
    }
    require(hermitian_positive_definite(alg->gram_matrix()), alg->name(),
            "trace is not faithful (Gram matrix not positive definite)");
    alg->solve_density();
    alg->finish_derived();
    return alg;
}

void TracialAlgebra::validate_full() const
{
    const std::size_t d = dim_;
    const std::string& n = data_.name;
    for (std::size_t i = 0; i < d; ++i) {
        const SparseVec e = basis_vector(i);
        require(multiply(data_.unit, e) == e && multiply(e, data_.unit) == e, n, "unit law fails at " + data_.labels[i]);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const SparseVec& ij = product(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const SparseVec lhs = multiply(ij, basis_vector(k));
                const SparseVec rhs = multiply(basis_vector(i), product(j, k));
                require(lhs == rhs, n, "associativity fails at (" + data_.labels[i] + "," + data_.labels[j] + "," +
                                           data_.labels[k] + ")");
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        require(star(data_.star[i]) == basis_vector(i), n, "involution is not an involution at " + data_.labels[i]);
        for (std::size_t j = 0; j < d; ++j)
            require(star(product(i, j)) == multiply(data_.star[j], data_.star[i]), n,
                    "(ab)* != b*a* at (" + data_.labels[i] + "," + data_.labels[j] + ")");
    }
    require(tau(data_.unit).is_one(), n, "trace is not normalized: tau(1) = " + tau(data_.unit).str());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            require(tau(product(i, j)) == tau(product(j, i)), n,
                    "trace is not tracial at (" + data_.labels[i] + "," + data_.labels[j] + ")");
}

void TracialAlgebra::validate_light() const
{
    for (std::size_t i = 0; i < dim_; ++i) {
        const SparseVec e = basis_vector(i);
        if (multiply(data_.unit, e) != e || multiply(e, data_.unit) != e)
            throw InvariantViolation(name() + ": unit law fails in derived algebra");
    }
    if (!tau(data_.unit).is_one()) throw InvariantViolation(name() + ": derived trace not normalized");
}

void TracialAlgebra::solve_density()
{
    const std::size_t d = dim_;
    // t_m = Tr(L_{b_m}); Q(j,k) = Tr(L_{b_k b_j}).
    std::vector<Scalar> lt(d);
    for (std::size_t m = 0; m < d; ++m)
        for (std::size_t i = 0; i < d; ++i) lt[m] += structure_constant(m, i, i);
    ScalarMatrix q(d, d), rhs(d, 1);
    for (std::size_t j = 0; j < d; ++j) {
        rhs(j, 0) = data_.trace[j];
        for (std::size_t k = 0; k < d; ++k)
            for (const auto& [m, v] : product(k, j)) q(j, k) += v * lt[m];
    }
    const auto c = solve_linear(q, rhs);
    require(c.has_value(), name(), "trace form is degenerate (algebra is not semisimple)");
    density_ = c->column(0);
}

void TracialAlgebra::finish_derived()
{
    const std::size_t d = dim_;
    const SparseVec c = dense_to_sparse(density_);
    density_action_.resize(d);
    for (std::size_t p = 0; p < d; ++p) density_action_[p] = multiply(c, basis_vector(p));

    std::vector<std::uint32_t> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](std::uint32_t a, std::uint32_t b) {
        a = find_root(parent, a);
        b = find_root(parent, b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (std::size_t p = 0; p < d; ++p) {
        for (const auto& [r, v] : density_action_[p]) unite(static_cast<std::uint32_t>(p), r);
        for (const auto& [q, v] : gram_rows_[p]) unite(static_cast<std::uint32_t>(p), q);
    }
    coupling_.resize(d);
    diagonal_ = true;
    for (std::size_t p = 0; p < d; ++p) {
        coupling_[p] = find_root(parent, static_cast<std::uint32_t>(p));
        if (coupling_[p] != p) diagonal_ = false;
    }
}

// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(AlgebraPtr parent, SparseVec coords) : parent_(std::move(parent)), coords_(std::move(coords))
{
    for (const auto& [i, v] : coords_)
        if (i >= parent_->dim()) throw DimensionMismatch("element coordinate out of range");
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& parent, std::size_t i)
{
    return {parent, parent->basis_vector(i)};
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& parent) { return {parent, parent->unit()}; }

namespace {

void same_parent(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.parent() != b.parent()) throw DimensionMismatch("elements of different algebras");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
{
    same_parent(a, b);
    return {a.parent_, sparse_axpy(a.coords_, Scalar(1), b.coords_)};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b)
{
    same_parent(a, b);
    return {a.parent_, sparse_axpy(a.coords_, Scalar(-1), b.coords_)};
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    same_parent(a, b);
    return {a.parent_, a.parent_->multiply(a.coords_, b.coords_)};
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) { return {a.parent_, sparse_scale(a.coords_, s)}; }

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
}

// ---------------------------------------------------------------------------

AlgebraPtr multi_matrix_algebra(const std::vector<std::size_t>& blocks, const std::vector<Rational>& weights)
{
    if (blocks.empty()) throw ValidationError("multi_matrix: no blocks");
    if (blocks.size() != weights.size()) throw ValidationError("multi_matrix: blocks and weights differ in length");
    Rational total;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] == 0) throw ValidationError("multi_matrix: block size must be positive");
        if (weights[b].sign() <= 0) throw ValidationError("multi_matrix: weights must be positive");
        total += weights[b] * Rational(static_cast<std::int64_t>(blocks[b]));
    }
    if (!total.is_one()) throw ValidationError("multi_matrix: sum of weight*size is " + total.str() + ", expected 1");

    std::vector<std::size_t> offset;
    std::size_t d = 0;
    for (std::size_t n : blocks) {
        offset.push_back(d);
        d += n * n;
    }
    TracialAlgebra::Data data;
    std::string name = "M";
    if (blocks.size() == 1) {
        name += std::to_string(blocks[0]);
    } else {
        name += "[";
        for (std::size_t b = 0; b < blocks.size(); ++b)
            name += (b ? "," : "") + std::to_string(blocks[b]) + ":" + weights[b].str();
        name += "]";
    }
    data.name = name;
    data.products.assign(d * d, {});
    data.star.resize(d);
    data.trace.resize(d);
    data.labels.resize(d);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const std::size_t n = blocks[b];
        auto idx = [&](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(offset[b] + i * n + j); };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto ij = idx(i, j);
                data.labels[ij] = "e" + (blocks.size() > 1 ? std::to_string(b + 1) + ":" : std::string()) +
                                  std::to_string(i + 1) + std::to_string(j + 1);
                data.star[ij] = {{idx(j, i), Scalar(1)}};
                for (std::size_t l = 0; l < n; ++l) data.products[ij * d + idx(j, l)] = {{idx(i, l), Scalar(1)}};
            }
        for (std::size_t i = 0; i < n; ++i) {
            data.unit.emplace_back(idx(i, i), Scalar(1));
            data.trace[idx(i, i)] = weights[b];
        }
    }
    return TracialAlgebra::create(std::move(data));
}

AlgebraPtr group_algebra(const CayleyTable& cayley, std::string name)
{
    validate_cayley(cayley);
    const std::size_t n = cayley.size();
    std::size_t e = 0;
    while (cayley[e][0] != 0) ++e;  // the row of the identity fixes 0
    TracialAlgebra::Data data;
    data.name = name.empty() ? "C[G" + std::to_string(n) + "]" : std::move(name);
    data.products.resize(n * n);
    data.star.resize(n);
    data.trace.resize(n);
    for (std::size_t g = 0; g < n; ++g) {
        data.labels.push_back(g == e ? "e" : "g" + std::to_string(g));
        for (std::size_t h = 0; h < n; ++h) {
            data.products[g * n + h] = {{cayley[g][h], Scalar(1)}};
            if (cayley[g][h] == e) data.star[g] = {{static_cast<std::uint32_t>(h), Scalar(1)}};
        }
    }
    data.unit = {{static_cast<std::uint32_t>(e), Scalar(1)}};
    data.trace[e] = Scalar(1);
    return TracialAlgebra::create(std::move(data));
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    auto alg = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
    const std::size_t da = a->dim(), db = b->dim(), d = da * db;
    auto& data = alg->data_;
    data.name = "(" + a->name() + " ⊗ " + b->name() + ")";
    data.products.resize(d * d);
    data.star.resize(d);
    data.trace.resize(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            const std::size_t x = i * db + j;
            data.labels.push_back(a->labels()[i] + "⊗" + b->labels()[j]);
            data.star[x] = outer(a->star_of(i), b->star_of(j), db);
            data.trace[x] = a->trace_vector()[i] * b->trace_vector()[j];
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    data.products[x * d + k * db + l] = outer(a->product(i, k), b->product(j, l), db);
        }
    data.unit = outer(a->unit(), b->unit(), db);
    alg->dim_ = d;
    alg->kind_ = TracialAlgebra::Kind::Tensor;
    alg->left_ = a;
    alg->right_ = b;
    alg->validate_light();

    alg->density_.resize(d);
    alg->gram_rows_.resize(d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            alg->density_[i * db + j] = a->density()[i] * b->density()[j];
            alg->gram_rows_[i * db + j] = outer(a->gram_rows()[i], b->gram_rows()[j], db);
        }
    alg->finish_derived();
    return alg;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a)
{
    auto alg = std::shared_ptr<TracialAlgebra>(new TracialAlgebra());
    const std::size_t d = a->dim();
    alg->data_ = a->data_;
    alg->data_.name = a->name() + "^op";
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) alg->data_.products[i * d + j] = a->product(j, i);
    alg->dim_ = d;
    alg->kind_ = TracialAlgebra::Kind::Opposite;
    alg->left_ = a;
    alg->validate_light();
    // Left and right regular traces agree on a semisimple algebra, and the
    // Gram matrix is unchanged by traciality.
    alg->density_ = a->density();
    alg->gram_rows_ = a->gram_rows();
    alg->finish_derived();
    return alg;
}

AlgebraPtr enveloping_algebra(const AlgebraPtr& a)
{
    AlgebraPtr t = tensor_algebra(a, opposite_algebra(a));
    auto alg = std::const_pointer_cast<TracialAlgebra>(t);
    alg->data_.name = a->name() + "^ev";
    alg->kind_ = TracialAlgebra::Kind::Enveloping;
    return alg;
}

AlgebraPtr change_basis(const AlgebraPtr& a, const ScalarMatrix& p)
{
    const std::size_t d = a->dim();
    if (p.rows() != d || p.cols() != d) throw DimensionMismatch("change_basis: matrix must be d x d");
    const auto q = inverse(p);
    if (!q) throw ValidationError("change_basis: matrix is singular");
    std::vector<SparseVec> cols(d);
    for (std::size_t j = 0; j < d; ++j) cols[j] = dense_to_sparse(p.column(j));
    auto to_new = [&](const SparseVec& old) {
        std::vector<Scalar> out(d);
        for (std::size_t r = 0; r < d; ++r)
            for (const auto& [i, v] : old) out[r] += (*q)(r, i) * v;
        return dense_to_sparse(out);
    };
    TracialAlgebra::Data data;
    data.name = a->name() + "'";
    data.products.resize(d * d);
    data.star.resize(d);
    data.trace.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        data.labels.push_back(a->labels()[i] + "'");
        data.star[i] = to_new(a->star(cols[i]));
        data.trace[i] = a->tau(cols[i]);
        for (std::size_t j = 0; j < d; ++j) data.products[i * d + j] = to_new(a->multiply(cols[i], cols[j]));
    }
    data.unit = to_new(a->unit());
    return TracialAlgebra::create(std::move(data));
}

SparseVec AlgebraIsomorphism::apply(const SparseVec& x) const
{
    SparseVec out;
    out.reserve(x.size());
    for (const auto& [i, v] : x) out.emplace_back(perm.at(i), v);
    return sort_vec(std::move(out));
}

SparseVec tensor_coordinates(const SparseVec& x, const SparseVec& y, std::size_t dim_y)
{
    SparseVec out;
    out.reserve(x.size() * y.size());
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.emplace_back(static_cast<std::uint32_t>(i * dim_y + j), a * b);
    return out;
}

AlgebraIsomorphism flip_iso(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return flip_iso_between(enveloping_algebra(a), enveloping_algebra(b));
}

AlgebraIsomorphism flip_iso_between(const AlgebraPtr& ea, const AlgebraPtr& eb)
{
    if (ea->kind() != TracialAlgebra::Kind::Enveloping || eb->kind() != TracialAlgebra::Kind::Enveloping)
        throw std::invalid_argument("flip_iso_between: both algebras must be enveloping algebras");
    const AlgebraPtr& a = ea->left_factor();
    const AlgebraPtr& b = eb->left_factor();
    AlgebraIsomorphism iso;
    iso.source = tensor_algebra(ea, eb);
    iso.target = enveloping_algebra(tensor_algebra(a, b));
    const std::size_t da = a->dim(), db = b->dim(), dab = da * db;
    iso.perm.resize(dab * dab);
    for (std::size_t pa = 0; pa < da; ++pa)
        for (std::size_t qa = 0; qa < da; ++qa)
            for (std::size_t pb = 0; pb < db; ++pb)
                for (std::size_t qb = 0; qb < db; ++qb) {
                    const std::size_t src = (pa * da + qa) * db * db + (pb * db + qb);
                    const std::size_t dst = (pa * db + pb) * dab + (qa * db + qb);
                    iso.perm[src] = static_cast<std::uint32_t>(dst);
                }
    return iso;
}

std::size_t center_dimension(const AlgebraPtr& a)
{
    const std::size_t d = a->dim();
    ScalarMatrix m(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            for (const auto& [r, v] : a->product(k, i)) m(i * d + r, k) += v;
            for (const auto& [r, v] : a->product(i, k)) m(i * d + r, k) -= v;
        }
    return d - rank(m);
}

void validate_cayley(const CayleyTable& t)
{
    const std::size_t n = t.size();
    if (n == 0) throw ValidationError("cayley table is empty");
    for (const auto& row : t) {
        if (row.size() != n) throw ValidationError("cayley table is not square");
        std::vector<char> seen(n, 0);
        for (auto v : row) {
            if (v >= n) throw ValidationError("cayley entry out of range");
            if (seen[v]) throw ValidationError("cayley row is not a permutation (missing inverses)");
            seen[v] = 1;
        }
    }
    for (std::size_t h = 0; h < n; ++h) {
        std::vector<char> seen(n, 0);
        for (std::size_t g = 0; g < n; ++g) {
            if (seen[t[g][h]]) throw ValidationError("cayley column is not a permutation (missing inverses)");
            seen[t[g][h]] = 1;
        }
    }
    bool has_identity = false;
    for (std::size_t e = 0; e < n && !has_identity; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = t[e][g] == g && t[g][e] == g;
        has_identity = ok;
    }
    if (!has_identity) throw ValidationError("cayley table has no identity");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (t[t[g][h]][k] != t[g][t[h][k]]) throw ValidationError("cayley table is not associative");
}

CayleyTable cyclic_group(std::size_t n)
{
    CayleyTable t(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<std::uint32_t>((i + j) % n);
    return t;
}

CayleyTable symmetric_group_3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CayleyTable t(6, std::vector<std::uint32_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
            t[i][j] = static_cast<std::uint32_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return t;
}

CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h)
{
    const std::size_t n = g.size(), m = h.size();
    CayleyTable t(n * m, std::vector<std::uint32_t>(n * m));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < m; ++d)
                    t[a * m + b][c * m + d] = static_cast<std::uint32_t>(g[a][c] * m + h[b][d]);
    return t;
}

}  // namespace l2k
