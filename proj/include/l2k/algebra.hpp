#pragma once

#include "l2k/matrix.hpp"
#include "l2k/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace l2k {

class TracialAlgebra;
using AlgebraPtr = std::shared_ptr<const TracialAlgebra>;

/// Square multiplication table of a finite group; entry (g, h) is the index of g·h.
using CayleyTable = std::vector<std::vector<std::uint32_t>>;

/// Finite-dimensional *-algebra with a faithful tracial state, given by
/// structure constants in a fixed basis b_0..b_{d-1}.
///
/// Besides the defining data each algebra carries the density element c,
/// the unique element with Tr(L_{c·a}) = τ(a) for all a, where L_x is left
/// multiplication on the algebra itself. For a left submodule W of a free
/// module, dim_M W is the ordinary trace of left multiplication by c on W.
class TracialAlgebra {
public:
    enum class Kind { Base, Tensor, Opposite, Enveloping };

    struct Data {
        std::string name;
        std::vector<std::string> labels;
        std::vector<SparseVec> products;  // d*d entries, (i,j) -> b_i b_j
        std::vector<SparseVec> star;      // b_i^*
        SparseVec unit;
        std::vector<Scalar> trace;        // τ(b_i)
    };

    /// Validates every axiom (associativity, unit, involution, traciality,
    /// τ(1) = 1, positive definite Gram matrix); throws ValidationError.
    static AlgebraPtr create(Data data);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::string& name() const noexcept { return data_.name; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return data_.labels; }
    [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const { return data_.products[i * dim_ + j]; }
    [[nodiscard]] const SparseVec& star_of(std::size_t i) const { return data_.star[i]; }
    [[nodiscard]] const SparseVec& unit() const noexcept { return data_.unit; }
    [[nodiscard]] const std::vector<Scalar>& trace_vector() const noexcept { return data_.trace; }
    [[nodiscard]] Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const AlgebraPtr& left_factor() const noexcept { return left_; }
    [[nodiscard]] const AlgebraPtr& right_factor() const noexcept { return right_; }

    /// Coordinates of the density element c.
    [[nodiscard]] const std::vector<Scalar>& density() const noexcept { return density_; }
    /// Column p holds the coordinates of c·b_p.
    [[nodiscard]] const std::vector<SparseVec>& density_action() const noexcept { return density_action_; }
    /// Row p of G with G_pq = τ(b_p^* b_q).
    [[nodiscard]] const std::vector<SparseVec>& gram_rows() const noexcept { return gram_rows_; }
    /// Partition of basis indices such that both c-action and G are block
    /// diagonal; class ids are the smallest member of each class.
    [[nodiscard]] const std::vector<std::uint32_t>& coupling_class() const noexcept { return coupling_; }
    /// True when every coupling class is a singleton (c-action and G diagonal).
    [[nodiscard]] bool diagonal_coupling() const noexcept { return diagonal_; }

    [[nodiscard]] SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
    [[nodiscard]] SparseVec star(const SparseVec& x) const;
    [[nodiscard]] Scalar tau(const SparseVec& x) const;
    [[nodiscard]] SparseVec basis_vector(std::size_t i) const { return {{static_cast<std::uint32_t>(i), Scalar(1)}}; }

    [[nodiscard]] ScalarMatrix gram_matrix() const;
    /// Matrix of a ↦ x·a (columns are images of basis vectors).
    [[nodiscard]] ScalarMatrix left_regular(const SparseVec& x) const;
    /// Matrix of a ↦ a·x.
    [[nodiscard]] ScalarMatrix right_regular(const SparseVec& x) const;

private:
    TracialAlgebra() = default;

    friend AlgebraPtr tensor_algebra(const AlgebraPtr&, const AlgebraPtr&);
    friend AlgebraPtr opposite_algebra(const AlgebraPtr&);
    friend AlgebraPtr enveloping_algebra(const AlgebraPtr&);

    void validate_full() const;
    void validate_light() const;
    void solve_density();
    void finish_derived();

    std::size_t dim_ = 0;
    Data data_;
    Kind kind_ = Kind::Base;
    AlgebraPtr left_, right_;
    std::vector<Scalar> density_;
    std::vector<SparseVec> density_action_;
    std::vector<SparseVec> gram_rows_;
    std::vector<std::uint32_t> coupling_;
    bool diagonal_ = false;
};

/// Element of a tracial algebra in coordinates.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr parent, SparseVec coords);
    static AlgebraElement basis(const AlgebraPtr& parent, std::size_t i);
    static AlgebraElement one(const AlgebraPtr& parent);

    [[nodiscard]] const AlgebraPtr& parent() const noexcept { return parent_; }
    [[nodiscard]] const SparseVec& coords() const noexcept { return coords_; }
    [[nodiscard]] std::vector<Scalar> dense() const { return sparse_to_dense(coords_, parent_->dim()); }
    [[nodiscard]] bool is_zero() const noexcept { return coords_.empty(); }
    [[nodiscard]] AlgebraElement star() const { return {parent_, parent_->star(coords_)}; }
    [[nodiscard]] Scalar trace() const { return parent_->tau(coords_); }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

private:
    AlgebraPtr parent_;
    SparseVec coords_;
};

/// ⊕ M_{n_i}(ℂ) on matrix units with τ = Σ t_i·Tr_i. Requires t_i > 0 and Σ t_i·n_i = 1.
AlgebraPtr multi_matrix_algebra(const std::vector<std::size_t>& blocks, const std::vector<Rational>& weights);
/// ℂΓ with τ(γ) = δ_{γ,e}; the table is validated as a group.
AlgebraPtr group_algebra(const CayleyTable& cayley, std::string name = "");
/// A ⊙ B with basis index i·dim(B) + j and trace τ⊗ρ.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);
/// Same basis, trace and involution; b_i ∘ b_j = b_j b_i.
AlgebraPtr opposite_algebra(const AlgebraPtr& a);
/// A ⊙ A^op, basis (p, q) ↦ p·d + q meaning b_p ⊗ b_q^op.
AlgebraPtr enveloping_algebra(const AlgebraPtr& a);
/// Same algebra in the basis b'_j = Σ_i P_ij b_i (P invertible); fully revalidated.
AlgebraPtr change_basis(const AlgebraPtr& a, const ScalarMatrix& p);

/// Basis permutation between two algebras, perm[source index] = target index.
struct AlgebraIsomorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<std::uint32_t> perm;

    [[nodiscard]] SparseVec apply(const SparseVec& x) const;
};

/// (A ⊙ A^op) ⊙ (B ⊙ B^op) → (A ⊙ B) ⊙ (A ⊙ B)^op, a⊗c°⊗b⊗d° ↦ a⊗b⊗c°⊗d°.
AlgebraIsomorphism flip_iso(const AlgebraPtr& a, const AlgebraPtr& b);
/// Same map with source built on the given enveloping algebras of A and B,
/// so that module maps over them can be transported.
AlgebraIsomorphism flip_iso_between(const AlgebraPtr& ea, const AlgebraPtr& eb);

/// Coordinates of x ⊗ y in the tensor basis i·dim_y + j.
SparseVec tensor_coordinates(const SparseVec& x, const SparseVec& y, std::size_t dim_y);

/// Complex dimension of the centre.
std::size_t center_dimension(const AlgebraPtr& a);

/// Throws ValidationError unless the table is a group table with identity.
void validate_cayley(const CayleyTable& t);
CayleyTable cyclic_group(std::size_t n);
CayleyTable symmetric_group_3();
CayleyTable direct_product(const CayleyTable& g, const CayleyTable& h);

}  // namespace l2k
