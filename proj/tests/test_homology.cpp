#include "l2k/errors.hpp"
#include "l2k/generators.hpp"
#include "l2k/homology.hpp"

#include <gtest/gtest.h>

using namespace l2k;

namespace {

AlgebraPtr m2() { return multi_matrix_algebra({2}, {Rational(1, 2)}); }
AlgebraPtr cplx() { return multi_matrix_algebra({1}, {Rational(1)}); }
Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

std::vector<std::size_t> random_ranks(Rng& rng)
{
    std::vector<std::size_t> ranks(1 + rng.below(3));
    for (auto& x : ranks) x = rng.below(4);
    return ranks;
}

// Base algebras of dimension ≤ 2 so the enveloping algebra has dimension ≤ 4.
AlgebraSample random_enveloping(Rng& rng)
{
    return sample_of(enveloping_algebra(random_algebra(rng, 2).algebra));
}

ChainComplex trivial_complex(const AlgebraPtr& a) { return {a, {1}, {}}; }

}  // namespace

TEST(BarComplex, ShapesAndScalarCase)
{
    const auto a = m2();
    const ChainComplex bar = bar_complex(a, 3);
    EXPECT_EQ(bar.ranks(), (std::vector<std::size_t>{1, 4, 16, 64}));
    EXPECT_EQ(bar.algebra()->dim(), 16u);

    // Over ℂ the differentials alternate between 0 and the identity.
    const ChainComplex c = bar_complex(cplx(), 5);
    for (std::size_t n = 1; n <= 5; ++n) {
        if (n % 2 == 1)
            EXPECT_TRUE(c.differential(n).is_zero()) << n;
        else
            EXPECT_EQ(c.differential(n), ModuleMap::identity(c.algebra(), 1)) << n;
    }
    const auto h = homology_dimensions(c, 4);
    EXPECT_EQ(h, (std::vector<Rational>{r(1), r(0), r(0), r(0), r(0)}));
}

TEST(BarComplex, Ceiling)
{
    EXPECT_THROW(bar_complex(m2(), 9), DepthTooLarge);
    EXPECT_THROW(bar_complex(m2(), 2, 255), DepthTooLarge);
    EXPECT_NO_THROW(bar_complex(m2(), 2, 256));
    EXPECT_THROW(betti_numbers(m2(), 12), DepthTooLarge);
    EXPECT_THROW(bar_complex(m2(), 0), std::invalid_argument);
}

TEST(BarComplex, InteriorHomologyVanishes)
{
    Rng rng(101);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_algebra(rng, 4);
        // A non-monomial basis makes each bar module one dense block; keep those shallow.
        const std::size_t d = s.algebra->dim();
        const std::size_t depth = d <= 2 ? 4 : (s.algebra->diagonal_coupling() ? 3 : 2);
        const auto h = homology_dimensions(bar_complex(s.algebra, depth), depth - 1, Route::Both);
        for (std::size_t n = 1; n < depth; ++n) ASSERT_EQ(h[n], r(0)) << s.algebra->name() << " degree " << n;
        ASSERT_GT(h[0], r(0));
    }
}

TEST(Betti, KnownAlgebras)
{
    auto check = [](const AlgebraPtr& a, std::vector<Rational> expected) {
        const BettiResult b = betti_numbers(a, expected.size() - 1);
        EXPECT_EQ(b.values, expected) << a->name();
        EXPECT_TRUE(b.stabilization_checked) << a->name();
        EXPECT_TRUE(b.stabilized) << a->name();
        EXPECT_EQ(b.depth, expected.size());
    };
    check(cplx(), {r(1), r(0), r(0)});
    check(m2(), {r(1, 4), r(0), r(0)});
    check(group_algebra(cyclic_group(2)), {r(1, 2), r(0), r(0)});
    check(group_algebra(cyclic_group(3)), {r(1, 3), r(0)});
    check(group_algebra(cyclic_group(4)), {r(1, 4), r(0)});
    check(group_algebra(symmetric_group_3()), {r(1, 6), r(0)});
}

// For ⊕ M_{n_i} with τ = Σ t_i Tr_i, A is a sum of simple A^ev-modules whose
// minimal projections have trace t_i², so β₀ = Σ t_i².
TEST(Betti, MultiMatrixClosedForm)
{
    const std::vector<std::pair<std::vector<std::size_t>, std::vector<Rational>>> cases{
        {{1, 1}, {r(1, 3), r(2, 3)}},
        {{1, 1, 1}, {r(1, 2), r(1, 4), r(1, 4)}},
        {{1, 2}, {r(1, 3), r(1, 3)}},
        {{1, 2}, {r(1, 2), r(1, 4)}},
        {{1, 1, 1, 1}, {r(1, 10), r(2, 10), r(3, 10), r(4, 10)}},
    };
    for (const auto& [blocks, weights] : cases) {
        Rational expected;
        for (const auto& t : weights) expected += t * t;
        const auto a = multi_matrix_algebra(blocks, weights);
        const BettiResult b = betti_numbers(a, 1);
        EXPECT_EQ(b.values[0], expected) << a->name();
        EXPECT_EQ(b.values[1], r(0)) << a->name();
    }
}

TEST(Betti, IndependentOfBasis)
{
    Rng rng(103);
    for (int t = 0; t < 10; ++t) {
        const auto plain = random_algebra(rng, 4, false).algebra;
        ScalarMatrix p = ScalarMatrix::identity(plain->dim());
        for (std::size_t i = 0; i < plain->dim(); ++i)
            for (std::size_t j = i + 1; j < plain->dim(); ++j) p(i, j) = rng.small_scalar(1, true);
        const auto rebased = change_basis(plain, p);
        EXPECT_EQ(betti_numbers(plain, 1, kDefaultCeiling, false).values,
                  betti_numbers(rebased, 1, kDefaultCeiling, false).values) << plain->name();
    }
}

TEST(Betti, RoutesAgree)
{
    const ChainComplex bar = bar_complex(tensor_algebra(group_algebra(cyclic_group(2)), m2()), 2);
    EXPECT_EQ(homology_dimensions(bar, 1, Route::Algebraic), homology_dimensions(bar, 1, Route::L2));
}

TEST(TensorComplex, DifferentialSquaresToZeroAndUnit)
{
    Rng rng(107);
    for (int t = 0; t < 40; ++t) {
        const auto s = random_algebra(rng, 4);
        const ChainComplex f = random_complex(rng, s, random_ranks(rng));
        // Construction validates e∘e = 0.
        const ChainComplex g = random_complex(rng, s, random_ranks(rng));
        const ChainComplex e = tensor_complex(f, g);
        for (std::size_t n = 1; n + 1 <= e.length(); ++n) ASSERT_TRUE(e.differential(n + 1).then(e.differential(n)).is_zero());

        const ChainComplex unit = tensor_complex(f, trivial_complex(cplx()));
        ASSERT_EQ(unit.ranks(), f.ranks());
        ASSERT_EQ(homology_dimensions(unit), homology_dimensions(f));
    }
}

TEST(TensorComplex, BarComplexesStayAcyclic)
{
    const auto z2 = group_algebra(cyclic_group(2));
    const ChainComplex e = tensor_complex(bar_complex(z2, 3), bar_complex(m2(), 2));
    EXPECT_EQ(e.algebra()->dim(), 64u);
    const auto h = homology_dimensions(e, 1);
    EXPECT_EQ(h[0], r(1, 8));
    EXPECT_EQ(h[1], r(0));
}

TEST(TensorComplex, FlipTransportPreservesHomology)
{
    Rng rng(109);
    for (int t = 0; t < 30; ++t) {
        const auto sa = random_enveloping(rng), sb = random_enveloping(rng);
        const ChainComplex f = random_complex(rng, sa, random_ranks(rng));
        const ChainComplex g = random_complex(rng, sb, random_ranks(rng));
        const AlgebraIsomorphism iso = flip_iso_between(f.algebra(), g.algebra());
        const ChainComplex plain = tensor_complex_over(f, g, iso.source);
        const ChainComplex flipped = tensor_complex(f, g);
        ASSERT_EQ(flipped.algebra()->kind(), TracialAlgebra::Kind::Enveloping);
        ASSERT_EQ(homology_dimensions(plain), homology_dimensions(flipped));
    }
}

TEST(Kuenneth, ChainLevelRandomPairs)
{
    Rng rng(113);
    for (int t = 0; t < 100; ++t) {
        const bool env = rng.chance(1, 2);
        const auto sa = env ? random_enveloping(rng) : random_algebra(rng, 4);
        const auto sb = env ? random_enveloping(rng) : random_algebra(rng, 4);
        const KuennethReport rep =
            kuenneth_chain_check(random_complex(rng, sa, random_ranks(rng)), random_complex(rng, sb, random_ranks(rng)));
        for (const auto& d : rep.degrees)
            ASSERT_EQ(d.left, d.right) << "trial " << t << " degree " << d.degree;
        ASSERT_TRUE(rep.passed());
    }
}

TEST(Kuenneth, TrivialFactor)
{
    Rng rng(127);
    const auto s = random_algebra(rng, 4);
    const ChainComplex f = random_complex(rng, s, {2, 3, 1});
    const KuennethReport rep = kuenneth_chain_check(f, trivial_complex(cplx()));
    ASSERT_EQ(rep.degrees.size(), 3u);
    EXPECT_TRUE(rep.passed());
}

TEST(Kuenneth, BettiLevel)
{
    const auto z2 = group_algebra(cyclic_group(2));
    const KuennethReport rep = kuenneth_betti_check(z2, m2(), 2);
    ASSERT_EQ(rep.degrees.size(), 3u);
    EXPECT_EQ(rep.degrees[0].left, r(1, 8));
    EXPECT_EQ(rep.degrees[0].right, r(1, 8));
    EXPECT_TRUE(rep.passed());
    const KuennethReport one = kuenneth_betti_check(cplx(), cplx(), 1);
    EXPECT_EQ(one.degrees[0].left, r(1));
    EXPECT_TRUE(one.passed());
}

TEST(DimMultiplicativity, Examples)
{
    const auto a = m2();
    const PresentedModule bimodule(bar_complex(a, 1).differential(1));
    const auto c_ev = enveloping_algebra(cplx());
    const Comparison c = dim_multiplicativity_check(bimodule, PresentedModule::free(c_ev, 1));
    EXPECT_EQ(c.left, r(1, 4));
    EXPECT_EQ(c.right, r(1, 4));
    const Comparison one = dim_multiplicativity_check(PresentedModule::free(c_ev, 1), PresentedModule::free(c_ev, 1));
    EXPECT_EQ(one.left, r(1));
    EXPECT_TRUE(one.equal());
}

TEST(DimMultiplicativity, RandomPairs)
{
    Rng rng(131);
    for (int t = 0; t < 50; ++t) {
        const auto sa = random_enveloping(rng), sb = random_enveloping(rng);
        const PresentedModule x(random_module_map(rng, sa, rng.below(3), 1 + rng.below(2)));
        const PresentedModule y(random_module_map(rng, sb, rng.below(3), 1 + rng.below(2)));
        const Comparison c = dim_multiplicativity_check(x, y);
        ASSERT_TRUE(c.equal()) << c.left.str() << " vs " << c.right.str();
    }
}

TEST(InducedMaps, HomologyModuleMatchesRankFormula)
{
    Rng rng(137);
    for (int t = 0; t < 40; ++t) {
        const auto s = random_algebra(rng, 4);
        const ChainComplex f = random_complex(rng, s, random_ranks(rng));
        const auto h = homology_dimensions(f);
        for (std::size_t n = 0; n <= f.length(); ++n) {
            ASSERT_EQ(dim_module(homology_module(f, n).module), h[n]);
            ASSERT_EQ(dim_module(homology_module(f, n, true).module), h[n]);
        }
    }
}

TEST(InducedMaps, IdentityAndZero)
{
    Rng rng(139);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_algebra(rng, 4);
        const ChainComplex f = random_complex(rng, s, random_ranks(rng));
        const auto h = homology_dimensions(f);
        for (std::size_t n = 0; n <= f.length(); ++n) {
            const InducedHomologyMaps id = induced_homology_map(ChainMap::identity(f), n);
            ASSERT_EQ(id.dim_ordinary, h[n]);
            ASSERT_EQ(id.dim_reduced, h[n]);
            ASSERT_EQ(id.dim_l2, h[n]);
            const InducedHomologyMaps z = induced_homology_map(ChainMap::zero(f, f), n);
            ASSERT_EQ(z.dim_ordinary, r(0));
            ASSERT_EQ(z.dim_reduced, r(0));
            ASSERT_EQ(z.dim_l2, r(0));
        }
    }
}

TEST(InducedMaps, TripleEqualityOnRandomChainMaps)
{
    Rng rng(149);
    int nonzero = 0;
    for (int t = 0; t < 100; ++t) {
        const auto s = random_algebra(rng, 4);
        const std::size_t len = rng.below(3);
        std::vector<std::size_t> rf(len + 1), rg(len + 1);
        for (auto& x : rf) x = rng.below(4);
        for (auto& x : rg) x = rng.below(4);
        const ChainComplex f = random_complex(rng, s, rf);
        const ChainComplex g = rng.chance(1, 3) ? f : random_complex(rng, s, rg);
        const ChainMap phi = random_chain_map(rng, f, g);
        for (std::size_t n = 0; n <= len; ++n) {
            const InducedHomologyMaps m = induced_homology_map(phi, n);
            ASSERT_EQ(m.dim_ordinary, m.dim_reduced) << t;
            ASSERT_EQ(m.dim_ordinary, m.dim_l2) << t;
            if (!m.dim_ordinary.is_zero()) ++nonzero;
        }
    }
    EXPECT_GT(nonzero, 20);
}

TEST(ChainMap, RejectsNonCommutingMaps)
{
    const auto a = m2();
    const ChainComplex f(a, {1, 1}, {ModuleMap::right_multiplication(a, a->basis_vector(0))});
    std::vector<ModuleMap> comps{ModuleMap::identity(a, 1), ModuleMap::zero(a, 1, 1)};
    EXPECT_THROW(ChainMap(f, f, comps), ValidationError);
    EXPECT_THROW(ChainComplex(a, {1, 1, 1}, {ModuleMap::identity(a, 1), ModuleMap::identity(a, 1)}), ValidationError);
}
