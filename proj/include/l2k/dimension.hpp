#pragma once

#include "l2k/module_map.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace l2k {

/// Columns of a realized module map, generated on demand. Row r of every
/// column is slot r / D, algebra coordinate r % D, where D = algebra()->dim().
/// column() must be safe to call concurrently.
class ColumnSource {
public:
    virtual ~ColumnSource() = default;
    [[nodiscard]] virtual const AlgebraPtr& algebra() const = 0;
    [[nodiscard]] virtual std::size_t target_rank() const = 0;
    [[nodiscard]] virtual std::size_t column_count() const = 0;
    virtual void column(std::size_t c, SparseVec& out) const = 0;
};

class ModuleMapColumns final : public ColumnSource {
public:
    explicit ModuleMapColumns(const ModuleMap& map) : map_(map) {}
    [[nodiscard]] const AlgebraPtr& algebra() const override { return map_.algebra(); }
    [[nodiscard]] std::size_t target_rank() const override { return map_.target_rank(); }
    [[nodiscard]] std::size_t column_count() const override { return map_.source_rank() * map_.algebra()->dim(); }
    void column(std::size_t c, SparseVec& out) const override { out = map_.realize_column(c); }

private:
    const ModuleMap& map_;
};

enum class Route { Algebraic = 1, L2 = 2, Both = 3 };

/// Dimension of the image computed by one or both routes.
///
/// algebraic: trace of left multiplication by the density element on the
///   image subspace, equal to (Tr⊗τ)(s∘T) for any module-map generalized
///   inverse s.
/// l2: Σ_j ⟨P ε_j, ε_j⟩ with P the orthogonal projection onto the image in
///   the GNS inner product and ε_j the unit in slot j.
struct ImageDimension {
    Rational algebraic;
    Rational l2;
    std::size_t scalar_rank = 0;
    std::size_t blocks = 0;
};

/// Blocked sparse kernel: rows are partitioned into independent blocks
/// (union of column supports and of the density/Gram coupling classes);
/// blocks are eliminated in parallel and summed in a fixed order, so the
/// result does not depend on the thread count.
ImageDimension image_dimension(const ColumnSource& columns, Route route = Route::Both);

Rational dim_image(const ModuleMap& t);
Rational dim_image_l2(const ModuleMap& t);

namespace reference {

/// Dense, unblocked, single-threaded counterparts of the blocked kernel,
/// written independently for cross-checking: the algebraic route builds a
/// scalar generalized inverse S = E_J·R_PJ⁻¹·E_Pᵀ and returns Tr(C·R·S);
/// the L² route forms the dense GNS projector.
Rational dim_image(const ModuleMap& t);
Rational dim_image_l2(const ModuleMap& t);

}  // namespace reference

/// (Tr⊗τ)(e) = Σ_i τ(e(i, i)) for an endomorphism e of M^k.
Rational module_trace(const ModuleMap& e);

/// Solves T∘s∘T = T for a module map s: M^l → M^k by a direct scalar linear
/// system over the D·k·l coordinates of s. `unknown_order` permutes the
/// pivoting order and so selects a different particular solution.
std::optional<ModuleMap> module_generalized_inverse(const ModuleMap& t,
                                                    std::span<const std::size_t> unknown_order = {});

/// (Tr⊗τ)(s∘T) with s from module_generalized_inverse; only for small maps.
Rational dim_image_by_module_inverse(const ModuleMap& t, std::span<const std::size_t> unknown_order = {});

/// Floating-point cross-check: per-block SVD, rank = #σ > epsilon.
struct FloatImageDimension {
    double algebraic = 0;
    double l2 = 0;
    std::size_t scalar_rank = 0;
    /// Some singular value fell in [ε/10, 10ε].
    bool ill_conditioned = false;
};

FloatImageDimension image_dimension_float(const ColumnSource& columns, double epsilon = 1e-9);

/// Rank of a scalar matrix by SVD in double precision.
struct FloatRank {
    std::size_t rank = 0;
    bool ill_conditioned = false;
};
FloatRank float_rank(const ScalarMatrix& x, double epsilon = 1e-9);

/// Interprets a Scalar that must be real (dimensions, traces of positive
/// elements); throws InvariantViolation otherwise.
Rational require_real(const Scalar& s, const char* what);

}  // namespace l2k
