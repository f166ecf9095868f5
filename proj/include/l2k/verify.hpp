#pragma once

#include "l2k/homology.hpp"
#include "l2k/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace l2k {

enum class Backend { Exact, Float };

struct SuiteConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    Backend backend = Backend::Exact;
    /// Allowed |float − exact| when the float backend is active.
    double tolerance = 1e-6;
    std::uint64_t ceiling = kDefaultCeiling;
};

/// One comparison. left/right are exact "p/q" strings, or decimal strings
/// for float values.
struct Check {
    std::string name;
    std::size_t trial = 0;
    std::string left;
    std::string right;
    bool passed = false;
    double seconds = 0;
};

struct SuiteResult {
    std::string suite;
    std::vector<Check> checks;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::size_t failures() const;
};

/// Per trial, on random algebras from the validated constructors:
///   "image: algebraic vs l2"     dim_image(T) = dim_image_l2(T)
///   "image: exact vs float"      (float backend only) within tolerance
///   "projective part"            dim im f = dim im P(f)
///   "induced: ordinary vs reduced", "induced: ordinary vs l2"
///                                the three induced maps on homology.
SuiteResult lemma_suite(const SuiteConfig& cfg);

/// Per trial a random pair of complexes (algebra dim ≤ 4, ranks ≤ 3,
/// length ≤ 3): "e∘e = 0" on the tensor complex and one
/// "kuenneth degree n" check per degree.
SuiteResult kuenneth_chain_suite(const SuiteConfig& cfg);

/// β_n(A ⊙ B) against convolve(β(A), β(B)) for n = 0..max_degree.
SuiteResult kuenneth_betti_suite(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t max_degree,
                                 const SuiteConfig& cfg);

/// Per trial: "dim multiplicativity" on random modules over enveloping
/// algebras and "flip iso" (bijective, trace-preserving, multiplicative and
/// *-preserving on random elements).
SuiteResult dim_mult_suite(const SuiteConfig& cfg);

/// The flip isomorphism for A, B checked on `samples` random element pairs.
bool flip_iso_check(Rng& rng, const AlgebraPtr& a, const AlgebraPtr& b, std::size_t samples);

/// "%.12g".
std::string format_double(double x);

}  // namespace l2k
