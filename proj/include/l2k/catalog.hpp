#pragma once

#include "l2k/homology.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace l2k {

/// Element of [0, ∞] with a nonnegative rational finite part.
/// x + ∞ = ∞, x·∞ = ∞ for x > 0 and 0·∞ = 0.
class ExtendedReal {
public:
    ExtendedReal() = default;
    ExtendedReal(Rational value);  // NOLINT(google-explicit-constructor)
    ExtendedReal(std::int64_t value) : ExtendedReal(Rational(value)) {}  // NOLINT
    static ExtendedReal infinity();

    [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
    [[nodiscard]] bool is_zero() const noexcept { return !infinite_ && value_.is_zero(); }
    /// Finite part; throws std::logic_error for ∞.
    [[nodiscard]] const Rational& value() const;
    /// "p/q" or "inf".
    [[nodiscard]] std::string str() const;
    static ExtendedReal parse(std::string_view text);

    friend ExtendedReal operator+(const ExtendedReal& a, const ExtendedReal& b);
    friend ExtendedReal operator*(const ExtendedReal& a, const ExtendedReal& b);
    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) = default;
    friend std::strong_ordering operator<=>(const ExtendedReal& a, const ExtendedReal& b);

private:
    Rational value_;
    bool infinite_ = false;
};

/// Finitely supported sequence n ↦ β_n in [0, ∞]; unlisted degrees are 0.
class BettiSequence {
public:
    BettiSequence() = default;
    static BettiSequence single(std::size_t degree, ExtendedReal value);
    static BettiSequence from_values(const std::vector<Rational>& values);

    [[nodiscard]] ExtendedReal at(std::size_t degree) const;
    void set(std::size_t degree, ExtendedReal value);
    /// Nonzero entries only, by increasing degree.
    [[nodiscard]] const std::map<std::size_t, ExtendedReal>& support() const noexcept { return values_; }
    [[nodiscard]] bool is_zero() const noexcept { return values_.empty(); }
    /// Highest nonzero degree + 1 (0 for the zero sequence).
    [[nodiscard]] std::size_t length() const;
    /// {"1":"1/8"} style, nonzero degrees only.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const BettiSequence& a, const BettiSequence& b) = default;

private:
    std::map<std::size_t, ExtendedReal> values_;
};

/// (s ⊛ t)_n = Σ_{k+l=n} s_k·t_l.
BettiSequence convolve(const BettiSequence& s, const BettiSequence& t);

struct QuantumGroupDescriptor;
using DescriptorPtr = std::shared_ptr<const QuantumGroupDescriptor>;

/// Catalog entries. Only FiniteDimAlgebra is computed from an algebra; the
/// others evaluate to their known Betti sequences.
struct FiniteQG {
    std::uint64_t dim = 1;
};
struct CocommutativeFinite {
    CayleyTable group;
};
struct FreeGroupDual {
    std::uint64_t generators = 2;
};
struct FiniteDimAlgebra {
    AlgebraPtr algebra;
    std::string file;      // as written in the descriptor, if loaded from a file
    std::string document;  // inline algebra document otherwise
    std::size_t max_degree = 2;
};
struct Product {
    DescriptorPtr left;
    DescriptorPtr right;
};
struct CoamenableInfinite {};

struct QuantumGroupDescriptor {
    std::variant<FiniteQG, CocommutativeFinite, FreeGroupDual, FiniteDimAlgebra, Product, CoamenableInfinite> value;
};

/// Constructors checking N ≥ 1, k ≥ 2, group tables and non-null arms.
DescriptorPtr finite_qg(std::uint64_t dim);
DescriptorPtr cocommutative_finite(CayleyTable group);
DescriptorPtr free_group_dual(std::uint64_t generators);
DescriptorPtr finite_dim_algebra(AlgebraPtr algebra, std::size_t max_degree = 2);
DescriptorPtr product(DescriptorPtr left, DescriptorPtr right);
DescriptorPtr coamenable_infinite();

/// FiniteQG(N) → 1/N at 0; CocommutativeFinite(Γ) → 1/|Γ| at 0;
/// FreeGroupDual(k) → k−1 at 1; CoamenableInfinite → 0; Product → convolve;
/// FiniteDimAlgebra → betti_numbers up to its max_degree (higher degrees are
/// reported as 0).
BettiSequence betti_of(const DescriptorPtr& d, std::uint64_t ceiling = kDefaultCeiling);

/// Solutions of x = c·x in [0, ∞] for 0 < c < 1, i.e. {0, ∞}. Throws
/// std::invalid_argument for c outside (0, 1).
std::vector<ExtendedReal> fixed_point_classify(const Rational& c);

/// A descriptor with β_1 = p/q and every other degree 0:
/// Product(FiniteQG(q), FreeGroupDual(p+1)), or FreeGroupDual(2) when p = q.
DescriptorPtr rational_first_betti(std::uint64_t p, std::uint64_t q);

/// {"kind":"product","left":{"kind":"finite_qg","dim":8},"right":{"kind":"free_group_dual","k":2}}.
/// Other kinds: "cocommutative_finite" {"cayley"}, "coamenable_infinite",
/// "finite_dim_algebra" {"file" | "algebra", optional "max_degree"}. Files
/// are resolved against base_dir.
DescriptorPtr parse_descriptor(std::string_view text, const std::filesystem::path& base_dir = {});
DescriptorPtr load_descriptor(const std::filesystem::path& file);
/// Compact JSON. A FiniteDimAlgebra is written as its file or inline
/// document; one built in code has neither and throws std::invalid_argument.
std::string descriptor_to_text(const DescriptorPtr& d);
/// Short human-readable form, e.g. "(FiniteQG(8) x FreeGroupDual(2))".
std::string describe(const DescriptorPtr& d);

}  // namespace l2k
