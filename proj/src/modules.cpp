#include "l2k/modules.hpp"

#include "l2k/errors.hpp"

namespace l2k {

std::vector<ModuleVector> columns_as_vectors(const ScalarMatrix& m, std::size_t dim)
{
    std::vector<ModuleVector> out;
    out.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const std::vector<Scalar> col = m.column(c);
        out.push_back(unflatten(col, dim));
    }
    return out;
}

namespace {

Submodule kernel_in(const PresentedModule& ambient, const ModuleMap& t)
{
    return {ambient, columns_as_vectors(kernel_basis(t.realize()), t.algebra()->dim())};
}

}  // namespace

Rational dim_module(const PresentedModule& x)
{
    return Rational(static_cast<std::int64_t>(x.ambient_rank())) - dim_image(x.relations());
}

ModuleMap Submodule::generator_map() const
{
    return l2k::generator_map(ambient.algebra(), ambient.ambient_rank(), generators);
}

Rational dim_submodule(const Submodule& x)
{
    const ModuleMap& t = x.ambient.relations();
    return dim_image(join_sources(x.generator_map(), t)) - dim_image(t);
}

ScalarMatrix scalar_span(const Submodule& x)
{
    return hstack(x.generator_map().realize(), x.ambient.relations().realize());
}

bool contains(const Submodule& big, const Submodule& small)
{
    if (big.ambient.algebra() != small.ambient.algebra() || big.ambient.ambient_rank() != small.ambient.ambient_rank())
        throw DimensionMismatch("contains: submodules of different ambient modules");
    const ScalarMatrix b = scalar_span(big);
    return rank(b) == rank(hstack(b, scalar_span(small)));
}

bool same_submodule(const Submodule& a, const Submodule& b)
{
    return contains(a, b) && contains(b, a);
}

Submodule kernel_submodule(const ModuleMap& t)
{
    return kernel_in(PresentedModule::free(t.algebra(), t.source_rank()), t);
}

Submodule image_submodule(const ModuleMap& t)
{
    Submodule x{PresentedModule::free(t.algebra(), t.target_rank()), {}};
    for (std::size_t i = 0; i < t.source_rank(); ++i) x.generators.push_back(image_of_basis(t, i));
    return x;
}

std::vector<ModuleMap> hom_space(const PresentedModule& x, std::size_t target_rank)
{
    const auto& alg = x.algebra();
    const std::size_t d = alg->dim();
    const std::size_t l = x.ambient_rank();
    const ModuleMap& t = x.relations();
    const std::size_t cols = t.source_rank() * d;

    // Unknown (j, q): coordinate q of φ(0, j). Equation (c, r): coordinate r
    // of φ applied to relation column c, i.e. Σ w_{j,s} φ_{j,q} c_{sq}^r = 0.
    ScalarMatrix e(cols * d, l * d);
    for (std::size_t c = 0; c < cols; ++c)
        for (const auto& [row, w] : t.realize_column(c)) {
            const std::size_t j = row / d, s = row % d;
            for (std::size_t q = 0; q < d; ++q)
                for (const auto& [r, v] : alg->product(s, q)) e(c * d + r, j * d + q) += w * v;
        }
    const ScalarMatrix ker = kernel_basis(e);

    std::vector<ModuleMap> basis;
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        const ModuleVector phi = unflatten(ker.column(b), d);
        for (std::size_t slot = 0; slot < target_rank; ++slot) {
            ModuleMap m(alg, l, target_rank);
            for (std::size_t j = 0; j < l; ++j) m.set(slot, j, phi[j]);
            basis.push_back(std::move(m));
        }
    }
    return basis;
}

Submodule algebraic_closure(const Submodule& x)
{
    const auto& alg = x.ambient.algebra();
    const std::size_t d = alg->dim();
    const std::size_t l = x.ambient.ambient_rank();
    const std::vector<ModuleMap> hom = hom_space(x.ambient, 1);

    // Combinations Σ c_a φ_a vanishing on every generator.
    ScalarMatrix z(x.generators.size() * d, hom.size());
    for (std::size_t a = 0; a < hom.size(); ++a)
        for (std::size_t g = 0; g < x.generators.size(); ++g) {
            const ModuleVector value = hom[a].apply(x.generators[g]);
            for (const auto& [r, v] : value[0]) z(g * d + r, a) = v;
        }
    const ScalarMatrix coeffs = kernel_basis(z);

    ModuleMap psi(alg, l, coeffs.cols());
    for (std::size_t m = 0; m < coeffs.cols(); ++m)
        for (std::size_t a = 0; a < hom.size(); ++a) {
            if (coeffs(a, m).is_zero()) continue;
            for (std::size_t j = 0; j < l; ++j) psi.add_to(m, j, hom[a].at(0, j), coeffs(a, m));
        }
    return kernel_in(x.ambient, psi);
}

bool is_well_defined(const PresentedMap& f)
{
    if (f.lift.algebra() != f.source.algebra() || f.lift.algebra() != f.target.algebra())
        throw DimensionMismatch("PresentedMap: algebras differ");
    if (f.lift.source_rank() != f.source.ambient_rank() || f.lift.target_rank() != f.target.ambient_rank())
        throw DimensionMismatch("PresentedMap: lift has the wrong shape");
    const ScalarMatrix rel = f.target.relations().realize();
    const ScalarMatrix moved = f.source.relations().then(f.lift).realize();
    return rank(rel) == rank(hstack(rel, moved));
}

Rational dim_image(const PresentedMap& f)
{
    const ModuleMap& t = f.target.relations();
    return dim_image(join_sources(f.lift, t)) - dim_image(t);
}

ProjectivePart projective_part(const PresentedModule& x)
{
    const Submodule zero_closure = algebraic_closure(Submodule{x, {}});
    PresentedModule p(join_sources(x.relations(), zero_closure.generator_map()));
    PresentedMap pi{x, p, ModuleMap::identity(x.algebra(), x.ambient_rank())};
    return {p, pi};
}

PresentedMap projective_part_map(const PresentedMap& f, const ProjectivePart& px, const ProjectivePart& py)
{
    // Both projections are the identity on free covers, so P(f) has the same lift.
    PresentedMap pf{px.module, py.module, f.lift};
    if (!is_well_defined(pf)) throw InvariantViolation("P(f) is not well defined");
    return pf;
}

Comparison projective_part_image_check(const PresentedMap& f)
{
    const ProjectivePart px = projective_part(f.source);
    const ProjectivePart py = projective_part(f.target);
    return {dim_image(f), dim_image(projective_part_map(f, px, py))};
}

}  // namespace l2k
