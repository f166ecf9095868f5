#include "l2k/dimension.hpp"
#include "l2k/errors.hpp"

namespace l2k::reference {

namespace {

// Block-diagonal scalar matrix acting on every slot of M^l by the given
// per-slot matrix.
ScalarMatrix slotwise(const ScalarMatrix& per_slot, std::size_t slots)
{
    const std::size_t d = per_slot.rows();
    ScalarMatrix out(d * slots, d * slots);
    for (std::size_t j = 0; j < slots; ++j)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) out(j * d + r, j * d + c) = per_slot(r, c);
    return out;
}

}  // namespace

Rational dim_image(const ModuleMap& t)
{
    const auto& alg = *t.algebra();
    const ScalarMatrix r = t.realize();
    const std::vector<std::size_t> j = rref(r).pivot_columns;
    if (j.empty()) return {};
    const ScalarMatrix rj = select_columns(r, j);
    const std::vector<std::size_t> p = rref(transpose(rj)).pivot_columns;
    const auto rpj_inv = inverse(select_rows(rj, p));
    if (!rpj_inv) throw InvariantViolation("reference: pivot block is singular");

    ScalarMatrix c(alg.dim(), alg.dim());
    for (std::size_t q = 0; q < alg.dim(); ++q)
        for (const auto& [row, v] : alg.density_action()[q]) c(row, q) = v;
    const ScalarMatrix crj = matmul(slotwise(c, t.target_rank()), rj);
    // Tr(C·R·S) with S = E_J·R_PJ⁻¹·E_Pᵀ, by cyclicity Tr(R_PJ⁻¹·(C·R_J)_P).
    return require_real(trace(matmul(*rpj_inv, select_rows(crj, p))), "reference algebraic dimension");
}

Rational dim_image_l2(const ModuleMap& t)
{
    const auto& alg = *t.algebra();
    const std::size_t d = alg.dim();
    const ScalarMatrix r = t.realize();
    const std::vector<std::size_t> j = rref(r).pivot_columns;
    if (j.empty()) return {};
    const ScalarMatrix w = select_columns(r, j);
    const ScalarMatrix g = slotwise(alg.gram_matrix(), t.target_rank());
    const ScalarMatrix wg = matmul(adjoint(w), g);
    const ScalarMatrix k = matmul(wg, w);
    ScalarMatrix u(d * t.target_rank(), t.target_rank());
    for (std::size_t slot = 0; slot < t.target_rank(); ++slot)
        for (const auto& [q, v] : alg.unit()) u(slot * d + q, slot) = v;
    const ScalarMatrix v = matmul(wg, u);
    const auto x = solve_linear(k, v);
    if (!x) throw InvariantViolation("reference: GNS Gram matrix of the image is singular");
    return require_real(trace(matmul(adjoint(v), *x)), "reference L2 dimension");
}

}  // namespace l2k::reference
