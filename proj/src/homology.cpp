#include "l2k/homology.hpp"

#include "l2k/errors.hpp"

#include <algorithm>
#include <string>

namespace l2k {

namespace {

bool maps_equal(const ModuleMap& a, const ModuleMap& b)
{
    return (a + b.scaled(Scalar(-1))).is_zero();
}

// Copies m into out at the given slot offsets, scaled by sign.
void place(ModuleMap& out, const ModuleMap& m, std::size_t target_offset, std::size_t source_offset, const Scalar& sign)
{
    for (std::size_t i = 0; i < m.source_rank(); ++i)
        for (const auto& [j, v] : m.source_entries(i)) out.add_to(target_offset + j, source_offset + i, v, sign);
}

ScalarMatrix gram_block(const TracialAlgebra& a, std::size_t rank)
{
    const std::size_t d = a.dim();
    const ScalarMatrix g = a.gram_matrix();
    ScalarMatrix out(rank * d, rank * d);
    for (std::size_t s = 0; s < rank; ++s)
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = 0; q < d; ++q) out(s * d + p, s * d + q) = g(p, q);
    return out;
}

Rational image_dim(const ModuleMap& d, Route route)
{
    const ImageDimension r = image_dimension(ModuleMapColumns(d), route);
    if (route == Route::L2) return r.l2;
    if (route == Route::Both && r.algebraic != r.l2)
        throw InvariantViolation("algebraic and L2 image dimensions disagree");
    return r.algebraic;
}

// Lift of φ_n between homology covers: K_G∘L = φ_n∘K_F.
ModuleMap lift_between(const ModuleMap& phi, const ModuleMap& cover_f, const ModuleMap& cover_g)
{
    const auto& alg = phi.algebra();
    const std::size_t d = alg->dim();
    const std::size_t gf = cover_f.source_rank();
    ScalarMatrix rhs(cover_g.target_rank() * d, gf);
    for (std::size_t a = 0; a < gf; ++a) {
        const std::vector<Scalar> v = flatten(phi.apply(image_of_basis(cover_f, a)), d);
        for (std::size_t r = 0; r < v.size(); ++r) rhs(r, a) = v[r];
    }
    const auto y = solve_linear(cover_g.realize(), rhs);
    if (!y) throw InvariantViolation("chain map does not send cycles to cycles");
    ModuleMap lift(alg, gf, cover_g.source_rank());
    for (std::size_t a = 0; a < gf; ++a) {
        const ModuleVector row = unflatten(y->column(a), d);
        for (std::size_t j = 0; j < row.size(); ++j) lift.set(j, a, row[j]);
    }
    return lift;
}

}  // namespace

ChainComplex::ChainComplex(AlgebraPtr algebra, std::vector<std::size_t> ranks, std::vector<ModuleMap> differentials)
    : algebra_(std::move(algebra)), ranks_(std::move(ranks)), diffs_(std::move(differentials))
{
    if (ranks_.empty()) throw ValidationError("chain complex needs at least degree 0");
    if (diffs_.size() != ranks_.size() - 1) throw ValidationError("chain complex: one differential per positive degree");
    for (std::size_t n = 1; n < ranks_.size(); ++n) {
        const ModuleMap& d = diffs_[n - 1];
        if (d.algebra() != algebra_) throw ValidationError("chain complex: differential over another algebra");
        if (d.source_rank() != ranks_[n] || d.target_rank() != ranks_[n - 1])
            throw ValidationError("chain complex: differential d_" + std::to_string(n) + " has the wrong shape");
    }
    for (std::size_t n = 1; n + 1 < ranks_.size(); ++n)
        if (!diffs_[n].then(diffs_[n - 1]).is_zero())
            throw ValidationError("chain complex: d_" + std::to_string(n) + " ∘ d_" + std::to_string(n + 1) + " ≠ 0");
}

ModuleMap ChainComplex::differential(std::size_t n) const
{
    if (n == 0) return ModuleMap::zero(algebra_, ranks_[0], 0);
    if (n > length()) return ModuleMap::zero(algebra_, 0, ranks_.back());
    return diffs_[n - 1];
}

ChainComplex ChainComplex::transported(const AlgebraIsomorphism& iso) const
{
    std::vector<ModuleMap> d;
    d.reserve(diffs_.size());
    for (const auto& m : diffs_) d.push_back(m.transported(iso));
    return {iso.target, ranks_, std::move(d)};
}

ChainComplex bar_complex(const AlgebraPtr& a, std::size_t depth, std::uint64_t ceiling)
{
    if (depth < 1) throw std::invalid_argument("bar_complex: depth must be at least 1");
    const std::size_t d = a->dim();
    unsigned __int128 scalar_dim = 1;
    for (std::size_t e = 0; e < depth + 2 && scalar_dim <= ceiling; ++e) scalar_dim *= d;
    if (scalar_dim > ceiling)
        throw DepthTooLarge("bar complex of " + a->name() + " at depth " + std::to_string(depth) +
                            " exceeds the ceiling of " + std::to_string(ceiling) + " scalar dimensions");

    const AlgebraPtr env = enveloping_algebra(a);
    std::vector<SparseVec> left(d), right(d);
    for (std::size_t i = 0; i < d; ++i) {
        const SparseVec bi{{static_cast<std::uint32_t>(i), Scalar(1)}};
        left[i] = tensor_coordinates(bi, a->unit(), d);
        right[i] = tensor_coordinates(a->unit(), bi, d);
    }

    std::vector<std::size_t> ranks{1};
    std::vector<ModuleMap> diffs;
    for (std::size_t n = 1; n <= depth; ++n) {
        const std::size_t src = ranks.back() * d, tgt = ranks.back();
        ModuleMap m(env, src, tgt);
        std::vector<std::size_t> digits(n);
        for (std::size_t s = 0; s < src; ++s) {
            for (std::size_t j = n, x = s; j-- > 0; x /= d) digits[j] = x % d;
            m.add_to(s % tgt, s, left[digits[0]]);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                const Scalar sign((j + 1) % 2 == 0 ? 1 : -1);
                for (const auto& [k, c] : a->product(digits[j], digits[j + 1])) {
                    std::size_t t = 0;
                    for (std::size_t u = 0; u < n; ++u) {
                        if (u == j + 1) continue;
                        t = t * d + (u == j ? k : digits[u]);
                    }
                    m.add_to(t, s, env->unit(), sign * c);
                }
            }
            m.add_to(s / d, s, right[digits[n - 1]], Scalar(n % 2 == 0 ? 1 : -1));
        }
        diffs.push_back(std::move(m));
        ranks.push_back(src);
    }
    return {env, std::move(ranks), std::move(diffs)};
}

ChainComplex tensor_complex_over(const ChainComplex& f, const ChainComplex& g, const AlgebraPtr& ab)
{
    const std::size_t nf = f.length(), ng = g.length(), n_top = nf + ng;
    if (ab->dim() != f.algebra()->dim() * g.algebra()->dim())
        throw DimensionMismatch("tensor_complex: algebra is not the tensor product");

    // offset[n][k]: first slot of the block F_k ⊙ G_{n-k} in E_n.
    std::vector<std::vector<std::size_t>> offset(n_top + 1, std::vector<std::size_t>(nf + 1, 0));
    std::vector<std::size_t> ranks(n_top + 1, 0);
    for (std::size_t n = 0; n <= n_top; ++n)
        for (std::size_t k = 0; k <= std::min(n, nf); ++k) {
            if (n - k > ng) continue;
            offset[n][k] = ranks[n];
            ranks[n] += f.rank(k) * g.rank(n - k);
        }

    std::vector<ModuleMap> diffs;
    for (std::size_t n = 1; n <= n_top; ++n) {
        ModuleMap e(ab, ranks[n], ranks[n - 1]);
        for (std::size_t k = 0; k <= std::min(n, nf); ++k) {
            const std::size_t l = n - k;
            if (l > ng) continue;
            if (k >= 1) {
                const ModuleMap part = tensor_maps(f.differential(k), ModuleMap::identity(g.algebra(), g.rank(l)), ab);
                place(e, part, offset[n - 1][k - 1], offset[n][k], Scalar(1));
            }
            if (l >= 1) {
                const ModuleMap part = tensor_maps(ModuleMap::identity(f.algebra(), f.rank(k)), g.differential(l), ab);
                place(e, part, offset[n - 1][k], offset[n][k], Scalar(k % 2 == 0 ? 1 : -1));
            }
        }
        diffs.push_back(std::move(e));
    }
    return {ab, std::move(ranks), std::move(diffs)};
}

ChainComplex tensor_complex(const ChainComplex& f, const ChainComplex& g)
{
    using Kind = TracialAlgebra::Kind;
    if (f.algebra()->kind() == Kind::Enveloping && g.algebra()->kind() == Kind::Enveloping) {
        const AlgebraIsomorphism iso = flip_iso_between(f.algebra(), g.algebra());
        return tensor_complex_over(f, g, iso.source).transported(iso);
    }
    return tensor_complex_over(f, g, tensor_algebra(f.algebra(), g.algebra()));
}

std::vector<Rational> homology_dimensions(const ChainComplex& c, std::size_t max_degree, Route route)
{
    const std::size_t top = std::min(max_degree, c.length());
    std::vector<Rational> im(top + 2);
    for (std::size_t n = 1; n <= top + 1; ++n) im[n] = image_dim(c.differential(n), route);
    std::vector<Rational> h(top + 1);
    for (std::size_t n = 0; n <= top; ++n) h[n] = Rational(static_cast<std::int64_t>(c.rank(n))) - im[n] - im[n + 1];
    return h;
}

FloatHomology homology_dimensions_float(const ChainComplex& c, std::size_t max_degree, double epsilon)
{
    const std::size_t top = std::min(max_degree, c.length());
    FloatHomology out;
    std::vector<double> im(top + 2);
    for (std::size_t n = 1; n <= top + 1; ++n) {
        const ModuleMap d = c.differential(n);
        const FloatImageDimension f = image_dimension_float(ModuleMapColumns(d), epsilon);
        im[n] = f.algebraic;
        out.ill_conditioned = out.ill_conditioned || f.ill_conditioned;
    }
    for (std::size_t n = 0; n <= top; ++n) out.values.push_back(static_cast<double>(c.rank(n)) - im[n] - im[n + 1]);
    return out;
}

BettiResult betti_numbers(const AlgebraPtr& a, std::size_t max_degree, std::uint64_t ceiling, bool recheck)
{
    BettiResult out;
    out.algebra = a->name();
    out.depth = max_degree + 1;
    out.values = homology_dimensions(bar_complex(a, out.depth, ceiling), max_degree);
    if (!recheck) return out;
    try {
        const ChainComplex deeper = bar_complex(a, out.depth + 1, ceiling);
        out.recomputed = homology_dimensions(deeper, max_degree);
        out.stabilization_checked = true;
        out.stabilized = out.recomputed == out.values;
    } catch (const DepthTooLarge&) {
        out.stabilization_checked = false;
    }
    return out;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (source_.algebra() != target_.algebra()) throw ValidationError("chain map between complexes over different algebras");
    if (source_.length() != target_.length()) throw ValidationError("chain map between complexes of different length");
    if (components_.size() != source_.length() + 1) throw ValidationError("chain map needs one component per degree");
    for (std::size_t n = 0; n < components_.size(); ++n) {
        const ModuleMap& p = components_[n];
        if (p.algebra() != source_.algebra() || p.source_rank() != source_.rank(n) || p.target_rank() != target_.rank(n))
            throw ValidationError("chain map component " + std::to_string(n) + " has the wrong shape");
        if (n >= 1 && !maps_equal(p.then(target_.differential(n)), source_.differential(n).then(components_[n - 1])))
            throw ValidationError("chain map does not commute with the differentials in degree " + std::to_string(n));
    }
}

ChainMap ChainMap::identity(const ChainComplex& c)
{
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= c.length(); ++n) comps.push_back(ModuleMap::identity(c.algebra(), c.rank(n)));
    return {c, c, std::move(comps)};
}

ChainMap ChainMap::zero(const ChainComplex& f, const ChainComplex& g)
{
    std::vector<ModuleMap> comps;
    for (std::size_t n = 0; n <= f.length(); ++n) comps.push_back(ModuleMap::zero(f.algebra(), f.rank(n), g.rank(n)));
    return {f, g, std::move(comps)};
}

HomologyModule homology_module(const ChainComplex& c, std::size_t n, bool reduced)
{
    const auto& alg = c.algebra();
    const std::size_t d = alg->dim();
    const ModuleMap cover = kernel_submodule(c.differential(n)).generator_map();
    const ModuleMap boundaries = reduced ? algebraic_closure(image_submodule(c.differential(n + 1))).generator_map()
                                         : c.differential(n + 1);
    // x ∈ M^g is a relation iff cover(x) is a boundary: project the kernel of
    // [cover, boundaries] onto its first g slots.
    const std::size_t g = cover.source_rank();
    const ScalarMatrix ker = kernel_basis(join_sources(cover, boundaries).realize());
    std::vector<ModuleVector> rel;
    for (std::size_t col = 0; col < ker.cols(); ++col) {
        std::vector<Scalar> v(g * d);
        for (std::size_t r = 0; r < g * d; ++r) v[r] = ker(r, col);
        if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        rel.push_back(unflatten(v, d));
    }
    return {PresentedModule(generator_map(alg, g, rel)), cover};
}

InducedHomologyMaps induced_homology_map(const ChainMap& phi, std::size_t n)
{
    const ChainComplex& f = phi.source();
    const ChainComplex& g = phi.target();
    if (n > f.length()) throw std::invalid_argument("induced_homology_map: degree out of range");
    const auto& alg = f.algebra();
    const std::size_t d = alg->dim();
    const ModuleMap& pn = phi.component(n);

    const HomologyModule hf = homology_module(f, n), hg = homology_module(g, n);
    PresentedMap ordinary{hf.module, hg.module, lift_between(pn, hf.cover, hg.cover)};
    const HomologyModule rf = homology_module(f, n, true), rg = homology_module(g, n, true);
    PresentedMap reduced{rf.module, rg.module, lift_between(pn, rf.cover, rg.cover)};
    if (!is_well_defined(ordinary) || !is_well_defined(reduced))
        throw InvariantViolation("induced homology map is not well defined");

    // Harmonic cycles of F_n, pushed forward and projected orthogonally off
    // the boundaries of G_n.
    const ScalarMatrix gf = gram_block(*alg, f.rank(n));
    const ScalarMatrix harmonic =
        kernel_basis(vstack(f.differential(n).realize(), matmul(adjoint(f.differential(n + 1).realize()), gf)));
    ScalarMatrix w = matmul(pn.realize(), harmonic);
    const ScalarMatrix bg_all = g.differential(n + 1).realize();
    const ScalarMatrix bg = select_columns(bg_all, rref(bg_all).pivot_columns);
    if (bg.cols() > 0 && w.cols() > 0) {
        const ScalarMatrix gg = gram_block(*alg, g.rank(n));
        const ScalarMatrix bh = matmul(adjoint(bg), gg);
        const auto coeff = solve_linear(matmul(bh, bg), matmul(bh, w));
        if (!coeff) throw InvariantViolation("GNS Gram matrix of the boundaries is singular");
        w = w - matmul(bg, *coeff);
    }
    const Rational dim_l2 = dim_image_l2(generator_map(alg, g.rank(n), columns_as_vectors(w, d)));

    InducedHomologyMaps out{std::move(ordinary), std::move(reduced), std::move(w), {}, {}, dim_l2};
    out.dim_ordinary = dim_image(out.ordinary);
    out.dim_reduced = dim_image(out.reduced);
    return out;
}

bool KuennethReport::passed() const
{
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& c) { return c.left == c.right; });
}

std::vector<Rational> convolve_finite(const std::vector<Rational>& s, const std::vector<Rational>& t)
{
    if (s.empty() || t.empty()) return {};
    std::vector<Rational> out(s.size() + t.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t l = 0; l < t.size(); ++l) out[k + l] += s[k] * t[l];
    return out;
}

KuennethReport kuenneth_chain_check(const ChainComplex& f, const ChainComplex& g)
{
    const std::vector<Rational> direct = homology_dimensions(tensor_complex(f, g));
    const std::vector<Rational> conv = convolve_finite(homology_dimensions(f), homology_dimensions(g));
    KuennethReport r;
    for (std::size_t n = 0; n < direct.size(); ++n) r.degrees.push_back({n, direct[n], conv[n]});
    return r;
}

KuennethReport kuenneth_betti_check(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t max_degree,
                                    std::uint64_t ceiling)
{
    const BettiResult direct = betti_numbers(tensor_algebra(a, b), max_degree, ceiling, false);
    const std::vector<Rational> conv =
        convolve_finite(betti_numbers(a, max_degree, ceiling, false).values, betti_numbers(b, max_degree, ceiling, false).values);
    KuennethReport r;
    for (std::size_t n = 0; n <= max_degree; ++n) r.degrees.push_back({n, direct.values[n], conv[n]});
    return r;
}

PresentedModule tensor_module(const PresentedModule& x, const PresentedModule& y, const AlgebraPtr& ab)
{
    const ModuleMap left = tensor_maps(x.relations(), ModuleMap::identity(y.algebra(), y.ambient_rank()), ab);
    const ModuleMap right = tensor_maps(ModuleMap::identity(x.algebra(), x.ambient_rank()), y.relations(), ab);
    return PresentedModule(join_sources(left, right));
}

Comparison dim_multiplicativity_check(const PresentedModule& x, const PresentedModule& y)
{
    using Kind = TracialAlgebra::Kind;
    Rational left;
    if (x.algebra()->kind() == Kind::Enveloping && y.algebra()->kind() == Kind::Enveloping) {
        const AlgebraIsomorphism iso = flip_iso_between(x.algebra(), y.algebra());
        left = dim_module(PresentedModule(tensor_module(x, y, iso.source).relations().transported(iso)));
    } else {
        left = dim_module(tensor_module(x, y, tensor_algebra(x.algebra(), y.algebra())));
    }
    return {left, dim_module(x) * dim_module(y)};
}

}  // namespace l2k
