#pragma once

#include "l2k/homology.hpp"
#include "l2k/modules.hpp"
#include "l2k/module_map.hpp"
#include "l2k/random.hpp"

#include <string>
#include <vector>

namespace l2k {

/// A validated algebra together with some of its idempotents, used to build
/// maps of prescribed non-trivial rank.
struct AlgebraSample {
    AlgebraPtr algebra;
    std::vector<SparseVec> idempotents;  // always contains 0 and 1
};

/// Collects 0, 1, idempotent basis elements and cyclic averages
/// (1/o)·Σ_{j<o} b^j of basis elements with b^o = 1.
AlgebraSample sample_of(const AlgebraPtr& algebra);

/// Small algebras of dimension ≤ max_dim built only through the validated
/// constructors: ℂ^n with random weights, M₂, small group algebras, small
/// tensor products and, when `rebased`, the same in a random non-monomial basis.
AlgebraSample random_algebra(Rng& rng, std::size_t max_dim = 4, bool rebased = true);

/// Random element with small Gaussian-integer coordinates.
SparseVec random_element(Rng& rng, const TracialAlgebra& algebra, std::int64_t bound = 2);
SparseVec random_idempotent(Rng& rng, const AlgebraSample& sample);

/// Random map M^k → M^l. Half the time it factors through a diagonal of
/// random idempotents, which makes images proper and non-free.
ModuleMap random_module_map(Rng& rng, const AlgebraSample& sample, std::size_t k, std::size_t l);

/// coker of a random map M^k → M^l with k < 4, 1 ≤ l ≤ 3.
PresentedModule random_presented(Rng& rng, const AlgebraSample& sample);
/// Well-defined map X → Y: Y's relations are random ones joined with the
/// image of X's relations under a random lift.
PresentedMap random_presented_map(Rng& rng, const AlgebraSample& sample);

/// Diagonal map with random idempotents from the sample.
ModuleMap random_diagonal_idempotent(Rng& rng, const AlgebraSample& sample, std::size_t rank);

/// Complex with the given ranks and d_n = (1 − e_{n-1})∘Y_n∘e_n for random
/// diagonal idempotents e_n and random maps Y_n, so d∘d = 0 by construction.
ChainComplex random_complex(Rng& rng, const AlgebraSample& sample, const std::vector<std::size_t>& ranks);

/// Random element of the space of chain maps F → G (same length), a small
/// integer combination of a basis of the solutions of g∘φ_n = φ_{n-1}∘f.
ChainMap random_chain_map(Rng& rng, const ChainComplex& f, const ChainComplex& g);

}  // namespace l2k
