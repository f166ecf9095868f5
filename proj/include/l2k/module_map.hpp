#pragma once

#include "l2k/algebra.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace l2k {

/// Homomorphism of free left modules M^k → M^l.
///
/// Elements of M^k are row vectors x = (x_0..x_{k-1}); the map acts by right
/// multiplication, y_j = Σ_i x_i·T(j, i). The l×k array T is stored sparsely,
/// grouped by source index i. Composition g∘f (first f, then g) has entries
/// (g∘f)(m, i) = Σ_j f(j, i)·g(m, j), so realize(g∘f) = realize(g)·realize(f).
class ModuleMap {
public:
    ModuleMap(AlgebraPtr algebra, std::size_t source_rank, std::size_t target_rank);
    static ModuleMap identity(const AlgebraPtr& algebra, std::size_t rank);
    static ModuleMap zero(const AlgebraPtr& algebra, std::size_t source_rank, std::size_t target_rank)
    {
        return {algebra, source_rank, target_rank};
    }
    /// Right multiplication by x on M.
    static ModuleMap right_multiplication(const AlgebraPtr& algebra, const SparseVec& x);

    [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
    [[nodiscard]] std::size_t source_rank() const noexcept { return k_; }
    [[nodiscard]] std::size_t target_rank() const noexcept { return l_; }

    /// Entry T(j, i): contribution of source slot i to target slot j.
    [[nodiscard]] SparseVec at(std::size_t target, std::size_t source) const;
    void set(std::size_t target, std::size_t source, SparseVec value);
    void add_to(std::size_t target, std::size_t source, const SparseVec& value, const Scalar& coeff = Scalar(1));
    /// Nonzero entries of source slot i as (target j, value), sorted by j.
    [[nodiscard]] const std::vector<std::pair<std::uint32_t, SparseVec>>& source_entries(std::size_t i) const
    {
        return cols_[i];
    }
    [[nodiscard]] bool is_zero() const;

    /// Image of the row vector x ∈ M^k.
    [[nodiscard]] std::vector<SparseVec> apply(const std::vector<SparseVec>& x) const;
    /// g∘f where f = *this.
    [[nodiscard]] ModuleMap then(const ModuleMap& g) const;
    [[nodiscard]] ModuleMap operator+(const ModuleMap& other) const;
    [[nodiscard]] ModuleMap scaled(const Scalar& s) const;

    /// Scalar matrix of size (D·l)×(D·k): column i·D + p is the image of
    /// b_p·e_i, row j·D + r the b_r-coordinate of slot j.
    [[nodiscard]] ScalarMatrix realize() const;
    /// Column i·D + p of realize(), as a sparse vector.
    [[nodiscard]] SparseVec realize_column(std::size_t column) const;

    /// Same map with every algebra entry pushed through an isomorphism.
    [[nodiscard]] ModuleMap transported(const AlgebraIsomorphism& iso) const;

    friend bool operator==(const ModuleMap& a, const ModuleMap& b);

private:
    AlgebraPtr algebra_;
    std::size_t k_;
    std::size_t l_;
    std::vector<std::vector<std::pair<std::uint32_t, SparseVec>>> cols_;
};

/// g∘f.
inline ModuleMap compose(const ModuleMap& g, const ModuleMap& f) { return f.then(g); }

/// Block matrix [[a, 0], [0, b]]: M^{ka+kb} → M^{la+lb}.
ModuleMap direct_sum(const ModuleMap& a, const ModuleMap& b);
/// Map M^g → M^l sending the g-th basis vector to generators[g] (each of length l).
/// Its image is the submodule generated by the rows.
ModuleMap generator_map(const AlgebraPtr& algebra, std::size_t target_rank,
                        const std::vector<std::vector<SparseVec>>& generators);
/// Restriction to the listed source slots (in order).
ModuleMap restrict_source(const ModuleMap& t, const std::vector<std::size_t>& slots);
/// [a, b]: M^{ka+kb} → M^l, two maps with a common target.
ModuleMap join_sources(const ModuleMap& a, const ModuleMap& b);
/// f ⊗ g over `ab` = A ⊙ B (dimensions must match). Slot (i, i') ↦ i·k_g + i'
/// and entries f(j, i) ⊗ g(j', i').
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g, const AlgebraPtr& ab);

/// Row vector x ∈ M^k as a column of length k·D (slot·D + coordinate), the
/// layout used by realize().
std::vector<Scalar> flatten(const std::vector<SparseVec>& x, std::size_t dim);
std::vector<SparseVec> unflatten(std::span<const Scalar> v, std::size_t dim);
/// Row vector of T(j, i) over j: the image of the i-th basis vector.
std::vector<SparseVec> image_of_basis(const ModuleMap& t, std::size_t i);

}  // namespace l2k
