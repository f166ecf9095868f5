#pragma once

#include "l2k/scalar.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace l2k {

/// Seeded generator. Draws are derived from the raw mt19937_64 stream with
/// our own reductions so results do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
    /// Small Gaussian integer with parts in [-bound, bound]; imaginary part only if `complex`.
    Scalar small_scalar(std::int64_t bound, bool complex);
    /// Derives an independent child stream.
    Rng fork() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t Rng::below(std::uint64_t n)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

inline std::int64_t Rng::between(std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

inline Scalar Rng::small_scalar(std::int64_t bound, bool complex)
{
    const std::int64_t re = between(-bound, bound);
    const std::int64_t im = complex ? between(-bound, bound) : 0;
    return {Rational(re), Rational(im)};
}

}  // namespace l2k
