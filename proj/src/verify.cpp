#include "l2k/verify.hpp"

#include "l2k/generators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace l2k {

bool SuiteResult::passed() const
{
    return failures() == 0;
}

std::size_t SuiteResult::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Check exact_check(std::string name, std::size_t trial, const Rational& left, const Rational& right, double seconds)
{
    return {std::move(name), trial, left.str(), right.str(), left == right, seconds};
}

Check float_check(std::string name, std::size_t trial, const Rational& exact, double approx, double tol, double seconds)
{
    return {std::move(name), trial, exact.str(), format_double(approx), std::abs(exact.to_double() - approx) <= tol,
            seconds};
}

std::vector<std::size_t> random_ranks(Rng& rng)
{
    std::vector<std::size_t> ranks(1 + rng.below(4));
    for (auto& x : ranks) x = rng.below(4);
    return ranks;
}

// Enveloping algebra of a base algebra of dimension ≤ 2, so dimension ≤ 4.
AlgebraSample random_enveloping(Rng& rng)
{
    return sample_of(enveloping_algebra(random_algebra(rng, 2, false).algebra));
}

}  // namespace

SuiteResult lemma_suite(const SuiteConfig& cfg)
{
    SuiteResult out{"lemmas", {}};
    Rng master(cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = master.fork();
        const AlgebraSample s = random_algebra(rng, 4, false);

        auto t0 = Clock::now();
        const ModuleMap map = random_module_map(rng, s, 1 + rng.below(3), 1 + rng.below(3));
        const ImageDimension im = image_dimension(ModuleMapColumns(map), Route::Both);
        out.checks.push_back(exact_check("image: algebraic vs l2", t, im.algebraic, im.l2, seconds_since(t0)));
        if (cfg.backend == Backend::Float) {
            t0 = Clock::now();
            const FloatImageDimension f = image_dimension_float(ModuleMapColumns(map));
            const double dt = seconds_since(t0);
            out.checks.push_back(float_check("image: exact vs float", t, im.algebraic, f.algebraic, cfg.tolerance, dt));
            out.checks.push_back(float_check("image l2: exact vs float", t, im.l2, f.l2, cfg.tolerance, dt));
        }

        t0 = Clock::now();
        const Comparison p = projective_part_image_check(random_presented_map(rng, s));
        out.checks.push_back(exact_check("projective part", t, p.left, p.right, seconds_since(t0)));

        t0 = Clock::now();
        const std::size_t len = rng.below(3);
        std::vector<std::size_t> rf(len + 1), rg(len + 1);
        for (auto& x : rf) x = rng.below(4);
        for (auto& x : rg) x = rng.below(4);
        const ChainComplex f = random_complex(rng, s, rf);
        const ChainComplex g = rng.chance(1, 3) ? f : random_complex(rng, s, rg);
        const ChainMap phi = random_chain_map(rng, f, g);
        const InducedHomologyMaps m = induced_homology_map(phi, rng.below(len + 1));
        const double dt = seconds_since(t0);
        out.checks.push_back(exact_check("induced: ordinary vs reduced", t, m.dim_ordinary, m.dim_reduced, dt));
        out.checks.push_back(exact_check("induced: ordinary vs l2", t, m.dim_ordinary, m.dim_l2, dt));
    }
    return out;
}

SuiteResult kuenneth_chain_suite(const SuiteConfig& cfg)
{
    SuiteResult out{"kuenneth-chain", {}};
    Rng master(cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = master.fork();
        const bool env = rng.chance(1, 2);
        const AlgebraSample sa = env ? random_enveloping(rng) : random_algebra(rng, 4, false);
        const AlgebraSample sb = env ? random_enveloping(rng) : random_algebra(rng, 4, false);
        const ChainComplex f = random_complex(rng, sa, random_ranks(rng));
        const ChainComplex g = random_complex(rng, sb, random_ranks(rng));

        auto t0 = Clock::now();
        const ChainComplex e = tensor_complex(f, g);
        bool square_zero = true;
        for (std::size_t n = 2; n <= e.length(); ++n)
            square_zero = square_zero && e.differential(n).then(e.differential(n - 1)).is_zero();
        out.checks.push_back({"e∘e = 0", t, square_zero ? "0" : "nonzero", "0", square_zero, seconds_since(t0)});

        t0 = Clock::now();
        const KuennethReport rep = kuenneth_chain_check(f, g);
        const double dt = seconds_since(t0);
        for (const auto& d : rep.degrees)
            out.checks.push_back(exact_check("kuenneth degree " + std::to_string(d.degree), t, d.left, d.right, dt));
        if (cfg.backend == Backend::Float) {
            t0 = Clock::now();
            const FloatHomology fh = homology_dimensions_float(e);
            const double fdt = seconds_since(t0);
            for (const auto& d : rep.degrees)
                out.checks.push_back(float_check("float degree " + std::to_string(d.degree), t, d.left,
                                                 fh.values.at(d.degree), cfg.tolerance, fdt));
        }
    }
    return out;
}

SuiteResult kuenneth_betti_suite(const AlgebraPtr& a, const AlgebraPtr& b, std::size_t max_degree,
                                 const SuiteConfig& cfg)
{
    SuiteResult out{"kuenneth-betti", {}};
    const auto t0 = Clock::now();
    const KuennethReport rep = kuenneth_betti_check(a, b, max_degree, cfg.ceiling);
    const double dt = seconds_since(t0);
    for (const auto& d : rep.degrees)
        out.checks.push_back(exact_check("betti degree " + std::to_string(d.degree), 0, d.left, d.right, dt));
    return out;
}

bool flip_iso_check(Rng& rng, const AlgebraPtr& a, const AlgebraPtr& b, std::size_t samples)
{
    const AlgebraIsomorphism iso = flip_iso(a, b);
    const auto& src = *iso.source;
    const auto& tgt = *iso.target;
    if (src.dim() != tgt.dim() || iso.perm.size() != src.dim()) return false;
    std::vector<char> hit(tgt.dim(), 0);
    for (auto v : iso.perm) {
        if (v >= tgt.dim() || hit[v]) return false;
        hit[v] = 1;
    }
    for (std::size_t i = 0; i < samples; ++i) {
        const SparseVec x = random_element(rng, src);
        const SparseVec y = random_element(rng, src);
        if (iso.apply(src.multiply(x, y)) != tgt.multiply(iso.apply(x), iso.apply(y))) return false;
        if (iso.apply(src.star(x)) != tgt.star(iso.apply(x))) return false;
        if (src.tau(x) != tgt.tau(iso.apply(x))) return false;
    }
    return iso.apply(src.unit()) == tgt.unit();
}

SuiteResult dim_mult_suite(const SuiteConfig& cfg)
{
    SuiteResult out{"dim-mult", {}};
    Rng master(cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = master.fork();
        const AlgebraSample sa = random_enveloping(rng), sb = random_enveloping(rng);
        const PresentedModule x(random_module_map(rng, sa, rng.below(3), 1 + rng.below(2)));
        const PresentedModule y(random_module_map(rng, sb, rng.below(3), 1 + rng.below(2)));
        auto t0 = Clock::now();
        const Comparison c = dim_multiplicativity_check(x, y);
        out.checks.push_back(exact_check("dim multiplicativity", t, c.left, c.right, seconds_since(t0)));

        t0 = Clock::now();
        const AlgebraPtr a = random_algebra(rng, 4, false).algebra;
        const AlgebraPtr b = random_algebra(rng, 4, false).algebra;
        const bool ok = flip_iso_check(rng, a, b, 10);
        out.checks.push_back({"flip iso", t, ok ? "iso" : "not iso", "iso", ok, seconds_since(t0)});
    }
    return out;
}

}  // namespace l2k
