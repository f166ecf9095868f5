#pragma once

#include "l2k/dimension.hpp"

#include <vector>

namespace l2k {

/// Row vector in a free module M^l.
using ModuleVector = std::vector<SparseVec>;

/// Columns of m (length l·D each, see flatten) as row vectors.
std::vector<ModuleVector> columns_as_vectors(const ScalarMatrix& m, std::size_t dim);

/// X = coker(T: M^k → M^l). With k = 0 this is the free module M^l.
class PresentedModule {
public:
    explicit PresentedModule(ModuleMap relations) : relations_(std::move(relations)) {}
    static PresentedModule free(const AlgebraPtr& algebra, std::size_t rank)
    {
        return PresentedModule(ModuleMap::zero(algebra, 0, rank));
    }

    [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return relations_.algebra(); }
    [[nodiscard]] const ModuleMap& relations() const noexcept { return relations_; }
    [[nodiscard]] std::size_t ambient_rank() const noexcept { return relations_.target_rank(); }

private:
    ModuleMap relations_;
};

/// l − dim im(T).
Rational dim_module(const PresentedModule& x);

/// Submodule of a presented module generated by ambient vectors, taken
/// modulo the relations.
struct Submodule {
    PresentedModule ambient;
    std::vector<ModuleVector> generators;

    /// M^g → M^l sending basis vector g to generators[g].
    [[nodiscard]] ModuleMap generator_map() const;
};

/// dim of the submodule (as a subquotient of M^l).
Rational dim_submodule(const Submodule& x);
/// Equality as subsets of the ambient module, decided on scalar spans.
bool same_submodule(const Submodule& a, const Submodule& b);
bool contains(const Submodule& big, const Submodule& small);

/// Kernel of T: M^k → M^l as a submodule of the free module M^k.
Submodule kernel_submodule(const ModuleMap& t);
/// Image of T as a submodule of the free module M^l.
Submodule image_submodule(const ModuleMap& t);

/// Basis over ℂ of Hom(X, M^r): maps φ: M^l → M^r with φ∘T = 0. The system
/// splits over the r target slots, so the basis is r copies of Hom(X, M).
std::vector<ModuleMap> hom_space(const PresentedModule& x, std::size_t target_rank);

/// ∩ ker φ over φ ∈ Hom(Y, M) vanishing on X, where Y is the ambient module.
Submodule algebraic_closure(const Submodule& x);

/// Map of presented modules given by a lift M^{l_X} → M^{l_Y} of free covers.
struct PresentedMap {
    PresentedModule source;
    PresentedModule target;
    ModuleMap lift;
};

/// Whether the lift maps relations into relations.
bool is_well_defined(const PresentedMap& f);
/// dim of the image submodule im(f) ⊆ Y.
Rational dim_image(const PresentedMap& f);

/// P(X) = X / closure({0}) together with the quotient map π_X.
struct ProjectivePart {
    PresentedModule module;
    PresentedMap projection;
};
ProjectivePart projective_part(const PresentedModule& x);

/// P(f) = π_Y∘f factored through π_X.
PresentedMap projective_part_map(const PresentedMap& f, const ProjectivePart& px, const ProjectivePart& py);

/// Two exact values that are expected to agree.
struct Comparison {
    Rational left;
    Rational right;
    [[nodiscard]] bool equal() const { return left == right; }
};

/// left = dim im(f), right = dim im(P(f)).
Comparison projective_part_image_check(const PresentedMap& f);

/// Vector space spanned by the submodule and the relations inside ℂ^{l·D}
/// (as columns).
ScalarMatrix scalar_span(const Submodule& x);

}  // namespace l2k
