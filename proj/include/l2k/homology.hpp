#pragma once

#include "l2k/modules.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace l2k {

/// Default bound on d^{depth+2}, the scalar dimension of the top bar module.
inline constexpr std::uint64_t kDefaultCeiling = 2'000'000;

/// Complex of free modules F_0 ← F_1 ← … ← F_N over one algebra.
/// Construction checks shapes and d_n∘d_{n+1} = 0 exactly.
class ChainComplex {
public:
    /// differentials[n-1] = d_n: F_n → F_{n-1}, n = 1..N.
    ChainComplex(AlgebraPtr algebra, std::vector<std::size_t> ranks, std::vector<ModuleMap> differentials);

    [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
    /// Top degree N.
    [[nodiscard]] std::size_t length() const noexcept { return ranks_.size() - 1; }
    [[nodiscard]] std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
    [[nodiscard]] const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
    /// d_n; the zero map F_0 → 0 for n = 0 and 0 → F_N for n = N+1.
    [[nodiscard]] ModuleMap differential(std::size_t n) const;

    /// Same complex over iso.target.
    [[nodiscard]] ChainComplex transported(const AlgebraIsomorphism& iso) const;

private:
    AlgebraPtr algebra_;
    std::vector<std::size_t> ranks_;
    std::vector<ModuleMap> diffs_;
};

/// The bar resolution of A with coefficients in A^ev: degree n is free of
/// rank d^n over A^ev on the basis [i_1|…|i_n], and
///   d[i_1|…|i_n] = (b_{i_1}⊗1)[i_2|…|i_n]
///                + Σ_{j<n} (-1)^j Σ_k c_{i_j i_{j+1}}^k […|k|…]
///                + (-1)^n (1⊗b_{i_n}°)[i_1|…|i_{n-1}].
/// Degrees 0..depth. Throws DepthTooLarge when d^{depth+2} > ceiling.
ChainComplex bar_complex(const AlgebraPtr& a, std::size_t depth, std::uint64_t ceiling = kDefaultCeiling);

/// E_n = ⊕_{k+l=n} F_k ⊙ G_l, e(x⊗y) = f(x)⊗y + (-1)^k x⊗g(y), over `ab`
/// (which must be tensor_algebra of the two algebras). Blocks are ordered by
/// increasing k, slots inside a block by i·rank(G_l) + j.
ChainComplex tensor_complex_over(const ChainComplex& f, const ChainComplex& g, const AlgebraPtr& ab);
/// Over A^ev and B^ev the result is transported through the flip onto
/// (A ⊙ B)^ev; otherwise it lives over tensor_algebra(A, B).
ChainComplex tensor_complex(const ChainComplex& f, const ChainComplex& g);

/// dim H_n = r_n − dim im d_n − dim im d_{n+1}, for n = 0..min(max_degree, N).
std::vector<Rational> homology_dimensions(const ChainComplex& c, std::size_t max_degree = SIZE_MAX,
                                          Route route = Route::Algebraic);

/// Same formula with image dimensions from the floating-point kernel
/// (singular values above epsilon). ill_conditioned is set when any block
/// had a singular value near epsilon.
struct FloatHomology {
    std::vector<double> values;
    bool ill_conditioned = false;
};
FloatHomology homology_dimensions_float(const ChainComplex& c, std::size_t max_degree = SIZE_MAX,
                                        double epsilon = 1e-9);

struct BettiResult {
    std::string algebra;
    std::vector<Rational> values;
    std::size_t depth = 0;
    /// The depth+1 recomputation ran (it needs d^{depth+3} ≤ ceiling).
    bool stabilization_checked = false;
    /// Checked and every value unchanged.
    bool stabilized = false;
    std::vector<Rational> recomputed;
};

/// β_0..β_max from the bar complex truncated at depth max+1, then recomputed
/// at depth max+2. DepthTooLarge from the first computation propagates; if
/// only the recomputation exceeds the ceiling it is reported as unchecked.
BettiResult betti_numbers(const AlgebraPtr& a, std::size_t max_degree, std::uint64_t ceiling = kDefaultCeiling,
                          bool recheck = true);

/// Degreewise maps φ_n: F_n → G_n with g_n∘φ_n = φ_{n-1}∘f_n (checked).
class ChainMap {
public:
    ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components);
    [[nodiscard]] const ChainComplex& source() const noexcept { return source_; }
    [[nodiscard]] const ChainComplex& target() const noexcept { return target_; }
    [[nodiscard]] const ModuleMap& component(std::size_t n) const { return components_.at(n); }
    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& f, const ChainComplex& g);

private:
    ChainComplex source_;
    ChainComplex target_;
    std::vector<ModuleMap> components_;
};

/// H_n presented on generators of ker d_n; `cover` sends them into F_n.
struct HomologyModule {
    PresentedModule module;
    ModuleMap cover;
};
/// ker d_n / im d_{n+1}, or with `reduced` the quotient by the algebraic
/// closure of im d_{n+1} in F_n.
HomologyModule homology_module(const ChainComplex& c, std::size_t n, bool reduced = false);

/// The three maps induced in degree n and the dimensions of their images.
/// ordinary: H_n(φ); reduced: H̄_n(φ); l2: the map between harmonic spaces
/// ker d_n ∩ (im d_{n+1})^⊥ for the GNS inner product, whose image is given as
/// columns in ℂ^{rank(G_n)·D}.
struct InducedHomologyMaps {
    PresentedMap ordinary;
    PresentedMap reduced;
    ScalarMatrix l2_image;
    Rational dim_ordinary;
    Rational dim_reduced;
    Rational dim_l2;
};
InducedHomologyMaps induced_homology_map(const ChainMap& phi, std::size_t n);

struct DegreeComparison {
    std::size_t degree = 0;
    Rational left;
    Rational right;
};
struct KuennethReport {
    std::vector<DegreeComparison> degrees;
    [[nodiscard]] bool passed() const;
};

/// Cauchy product of two finite sequences.
std::vector<Rational> convolve_finite(const std::vector<Rational>& s, const std::vector<Rational>& t);

/// left: dim H_n(F ⊙ G); right: Σ_{k+l=n} dim H_k(F)·dim H_l(G); all degrees.
KuennethReport kuenneth_chain_check(const ChainComplex& f, const ChainComplex& g);
/// left: β_n(A ⊙ B) from its own bar complex; right: convolution of β(A), β(B).
KuennethReport kuenneth_betti_check(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t max_degree,
                                    std::uint64_t ceiling = kDefaultCeiling);

/// X over A^ev, Y over B^ev. left: dim of X ⊙ Y over (A ⊙ B)^ev after the
/// flip; right: dim X · dim Y.
Comparison dim_multiplicativity_check(const PresentedModule& x, const PresentedModule& y);
/// X ⊙ Y = coker(T_X⊗1 ⊕ 1⊗T_Y) over the tensor algebra `ab`.
PresentedModule tensor_module(const PresentedModule& x, const PresentedModule& y, const AlgebraPtr& ab);

}  // namespace l2k
