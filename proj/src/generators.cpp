#include "l2k/generators.hpp"

#include "l2k/errors.hpp"

#include <algorithm>

namespace l2k {

AlgebraSample sample_of(const AlgebraPtr& algebra)
{
    AlgebraSample s;
    s.algebra = algebra;
    const auto& a = *algebra;
    s.idempotents.push_back({});
    s.idempotents.push_back(a.unit());
    auto add = [&](SparseVec e) {
        if (std::find(s.idempotents.begin(), s.idempotents.end(), e) == s.idempotents.end())
            s.idempotents.push_back(std::move(e));
    };
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const SparseVec b = a.basis_vector(i);
        if (a.product(i, i) == b) add(b);
        SparseVec power = b;
        SparseVec sum = a.unit();
        for (std::size_t o = 1; o <= a.dim(); ++o) {
            if (power == a.unit()) {
                if (o > 1) add(sparse_scale(sum, Scalar(Rational(1, static_cast<std::int64_t>(o)))));
                break;
            }
            sum = sparse_axpy(sum, Scalar(1), power);
            power = a.multiply(power, b);
        }
    }
    return s;
}

namespace {

AlgebraSample rebase(Rng& rng, const AlgebraSample& s)
{
    const std::size_t d = s.algebra->dim();
    ScalarMatrix p;
    do {
        p = ScalarMatrix(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (i == j || rng.chance(1, 2)) p(i, j) = rng.small_scalar(2, rng.chance(1, 2));
    } while (rank(p) < d);
    const ScalarMatrix q = *inverse(p);
    AlgebraSample out;
    out.algebra = change_basis(s.algebra, p);
    for (const auto& e : s.idempotents) {
        std::vector<Scalar> v(d);
        for (std::size_t r = 0; r < d; ++r)
            for (const auto& [i, x] : e) v[r] += q(r, i) * x;
        out.idempotents.push_back(dense_to_sparse(v));
    }
    return out;
}

AlgebraSample tensor_sample(const AlgebraSample& a, const AlgebraSample& b)
{
    AlgebraSample out;
    out.algebra = tensor_algebra(a.algebra, b.algebra);
    const std::size_t db = b.algebra->dim();
    for (const auto& x : a.idempotents)
        for (const auto& y : b.idempotents) {
            SparseVec e;
            for (const auto& [i, u] : x)
                for (const auto& [j, v] : y) e.emplace_back(static_cast<std::uint32_t>(i * db + j), u * v);
            if (std::find(out.idempotents.begin(), out.idempotents.end(), e) == out.idempotents.end())
                out.idempotents.push_back(std::move(e));
        }
    return out;
}

Rational random_weight(Rng& rng)
{
    const auto q = rng.between(2, 7);
    return {rng.between(1, q - 1), q};
}

}  // namespace

AlgebraSample random_algebra(Rng& rng, std::size_t max_dim, bool rebased)
{
    if (max_dim == 0) throw std::invalid_argument("random_algebra: max_dim must be positive");
    for (;;) {
        AlgebraSample s;
        switch (rng.below(9)) {
        case 0:
            s = sample_of(multi_matrix_algebra({1}, {Rational(1)}));
            break;
        case 1: {
            const Rational t = random_weight(rng);
            s = sample_of(multi_matrix_algebra({1, 1}, {t, Rational(1) - t}));
            break;
        }
        case 2: {
            const Rational t = random_weight(rng) * Rational(1, 2);
            const Rational u = random_weight(rng) * (Rational(1) - t);
            s = sample_of(multi_matrix_algebra({1, 1, 1}, {t, u, Rational(1) - t - u}));
            break;
        }
        case 3:
            s = sample_of(multi_matrix_algebra({2}, {Rational(1, 2)}));
            break;
        case 4:
            s = sample_of(group_algebra(cyclic_group(2 + rng.below(3))));
            break;
        case 5:
            s = sample_of(group_algebra(direct_product(cyclic_group(2), cyclic_group(2))));
            break;
        case 6: {
            const Rational t = random_weight(rng);
            const auto c2 = sample_of(multi_matrix_algebra({1, 1}, {t, Rational(1) - t}));
            s = tensor_sample(c2, rng.chance(1, 2) ? c2 : sample_of(group_algebra(cyclic_group(2))));
            break;
        }
        case 7: {
            const Rational t = random_weight(rng);
            s = sample_of(multi_matrix_algebra({1, 1}, {t, Rational(1) - t}));
            break;
        }
        default:
            s = sample_of(multi_matrix_algebra({1, 1, 1, 1}, {Rational(1, 4), Rational(1, 8), Rational(1, 8), Rational(1, 2)}));
            break;
        }
        if (s.algebra->dim() > max_dim) continue;
        if (rebased && rng.chance(1, 4)) s = rebase(rng, s);
        return s;
    }
}

SparseVec random_element(Rng& rng, const TracialAlgebra& algebra, std::int64_t bound)
{
    std::vector<Scalar> v(algebra.dim());
    for (auto& x : v)
        if (rng.chance(1, 2)) x = rng.small_scalar(bound, rng.chance(1, 3));
    return dense_to_sparse(v);
}

SparseVec random_idempotent(Rng& rng, const AlgebraSample& sample)
{
    return sample.idempotents[rng.below(sample.idempotents.size())];
}

ModuleMap random_module_map(Rng& rng, const AlgebraSample& sample, std::size_t k, std::size_t l)
{
    const auto& alg = sample.algebra;
    auto dense_random = [&](std::size_t src, std::size_t dst) {
        ModuleMap m(alg, src, dst);
        for (std::size_t i = 0; i < src; ++i)
            for (std::size_t j = 0; j < dst; ++j)
                if (rng.chance(2, 3)) m.set(j, i, random_element(rng, *alg));
        return m;
    };
    if (rng.chance(1, 2) || k == 0 || l == 0) return dense_random(k, l);
    const std::size_t r = 1 + rng.below(std::max<std::size_t>(1, std::min(k, l)));
    ModuleMap e(alg, r, r);
    for (std::size_t i = 0; i < r; ++i) e.set(i, i, random_idempotent(rng, sample));
    return dense_random(k, r).then(e).then(dense_random(r, l));
}

PresentedModule random_presented(Rng& rng, const AlgebraSample& sample)
{
    return PresentedModule(random_module_map(rng, sample, rng.below(4), 1 + rng.below(3)));
}

PresentedMap random_presented_map(Rng& rng, const AlgebraSample& sample)
{
    const PresentedModule x = random_presented(rng, sample);
    const std::size_t ly = 1 + rng.below(3);
    const ModuleMap lift = random_module_map(rng, sample, x.ambient_rank(), ly);
    const ModuleMap ty = random_module_map(rng, sample, rng.below(3), ly);
    const ModuleMap moved = x.relations().then(lift);
    const ModuleMap rel = rng.chance(1, 2) ? join_sources(ty, moved) : join_sources(moved, ty);
    return {x, PresentedModule(rel), lift};
}

ModuleMap random_diagonal_idempotent(Rng& rng, const AlgebraSample& sample, std::size_t rank)
{
    ModuleMap e(sample.algebra, rank, rank);
    for (std::size_t i = 0; i < rank; ++i) e.set(i, i, random_idempotent(rng, sample));
    return e;
}

ChainComplex random_complex(Rng& rng, const AlgebraSample& sample, const std::vector<std::size_t>& ranks)
{
    const auto& alg = sample.algebra;
    std::vector<ModuleMap> e;
    for (std::size_t r : ranks) e.push_back(random_diagonal_idempotent(rng, sample, r));
    std::vector<ModuleMap> diffs;
    for (std::size_t n = 1; n < ranks.size(); ++n) {
        const ModuleMap complement = ModuleMap::identity(alg, ranks[n - 1]) + e[n - 1].scaled(Scalar(-1));
        diffs.push_back(e[n].then(random_module_map(rng, sample, ranks[n], ranks[n - 1])).then(complement));
    }
    return {alg, ranks, std::move(diffs)};
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& f, const ChainComplex& g)
{
    const auto& alg = f.algebra();
    const std::size_t d = alg->dim();
    const std::size_t top = f.length();
    if (g.length() != top) throw DimensionMismatch("random_chain_map: complexes of different length");

    std::vector<std::size_t> unknown_offset(top + 2, 0), equation_offset(top + 2, 0);
    for (std::size_t n = 0; n <= top; ++n) unknown_offset[n + 1] = unknown_offset[n] + f.rank(n) * g.rank(n) * d;
    for (std::size_t n = 1; n <= top; ++n)
        equation_offset[n + 1] = equation_offset[n] + f.rank(n) * g.rank(n - 1) * d;
    const std::size_t unknowns = unknown_offset[top + 1];

    // Column u holds g_n∘E_u − E_u∘f_{n+1} for the unit map E_u in degree n.
    ScalarMatrix system(equation_offset[top + 1], unknowns);
    auto write = [&](std::size_t n, const ModuleMap& m, std::size_t u, const Scalar& sign) {
        for (std::size_t i = 0; i < m.source_rank(); ++i)
            for (const auto& [j, v] : m.source_entries(i))
                for (const auto& [r, x] : v)
                    system(equation_offset[n] + (i * g.rank(n - 1) + j) * d + r, u) += sign * x;
    };
    for (std::size_t n = 0; n <= top; ++n)
        for (std::size_t i = 0; i < f.rank(n); ++i)
            for (std::size_t j = 0; j < g.rank(n); ++j)
                for (std::size_t q = 0; q < d; ++q) {
                    const std::size_t u = unknown_offset[n] + (i * g.rank(n) + j) * d + q;
                    ModuleMap unit(alg, f.rank(n), g.rank(n));
                    unit.set(j, i, SparseVec{{static_cast<std::uint32_t>(q), Scalar(1)}});
                    if (n >= 1) write(n, unit.then(g.differential(n)), u, Scalar(1));
                    if (n + 1 <= top) write(n + 1, f.differential(n + 1).then(unit), u, Scalar(-1));
                }
    const ScalarMatrix basis = kernel_basis(system);

    std::vector<Scalar> coeff(unknowns);
    const bool single = rng.chance(1, 4) && basis.cols() > 0;
    const std::size_t pick = single ? rng.below(basis.cols()) : 0;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        const Scalar c = single ? Scalar(b == pick ? 1 : 0) : Scalar(rng.between(-2, 2));
        if (c.is_zero()) continue;
        for (std::size_t u = 0; u < unknowns; ++u) coeff[u] += c * basis(u, b);
    }
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= top; ++n) {
        ModuleMap m(alg, f.rank(n), g.rank(n));
        for (std::size_t i = 0; i < f.rank(n); ++i)
            for (std::size_t j = 0; j < g.rank(n); ++j) {
                const std::size_t base = unknown_offset[n] + (i * g.rank(n) + j) * d;
                m.set(j, i, dense_to_sparse(std::vector<Scalar>(coeff.begin() + base, coeff.begin() + base + d)));
            }
        comps.push_back(std::move(m));
    }
    return {f, g, std::move(comps)};
}

}  // namespace l2k
