#include "l2k/dimension.hpp"
#include "l2k/errors.hpp"

#include <string>

namespace l2k {

Rational require_real(const Scalar& s, const char* what)
{
    if (!s.is_real()) throw InvariantViolation(std::string(what) + " is not real: " + s.str());
    return s.re();
}

Rational module_trace(const ModuleMap& e)
{
    if (e.source_rank() != e.target_rank()) throw DimensionMismatch("module_trace: map is not an endomorphism");
    Scalar sum;
    for (std::size_t i = 0; i < e.source_rank(); ++i) sum += e.algebra()->tau(e.at(i, i));
    return require_real(sum, "module trace");
}

std::optional<ModuleMap> module_generalized_inverse(const ModuleMap& t, std::span<const std::size_t> unknown_order)
{
    const auto& alg = *t.algebra();
    const std::size_t d = alg.dim(), k = t.source_rank(), l = t.target_rank();
    const std::size_t unknowns = k * l * d;
    ScalarMatrix system(l * k * d, unknowns), rhs(l * k * d, 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& [m, tmi] : t.source_entries(i))
            for (const auto& [r, v] : tmi) rhs((m * k + i) * d + r, 0) = v;
        // (T∘s∘T)(m, i) = Σ_{j,a} T(j,i)·s(a,j)·T(m,a).
        for (const auto& [j, tji] : t.source_entries(i))
            for (std::size_t a = 0; a < k; ++a)
                for (const auto& [m, tma] : t.source_entries(a))
                    for (std::size_t q = 0; q < d; ++q) {
                        const SparseVec prod = alg.multiply(alg.multiply(tji, alg.basis_vector(q)), tma);
                        const std::size_t col = (a * l + j) * d + q;
                        for (const auto& [r, v] : prod) system((m * k + i) * d + r, col) += v;
                    }
    }
    const auto x = solve_linear(system, rhs, unknown_order);
    if (!x) return std::nullopt;
    ModuleMap s(t.algebra(), l, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<Scalar> coords(d);
            for (std::size_t q = 0; q < d; ++q) coords[q] = (*x)((a * l + j) * d + q, 0);
            s.set(a, j, dense_to_sparse(coords));
        }
    if (!(t.then(s).then(t) == t)) throw InvariantViolation("module generalized inverse fails T s T = T");
    return s;
}

Rational dim_image_by_module_inverse(const ModuleMap& t, std::span<const std::size_t> unknown_order)
{
    const auto s = module_generalized_inverse(t, unknown_order);
    if (!s) throw InvariantViolation("no module generalized inverse: algebra is not semisimple");
    return module_trace(t.then(*s));
}

}  // namespace l2k
