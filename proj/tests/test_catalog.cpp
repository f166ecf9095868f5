#include "l2k/catalog.hpp"
#include "l2k/errors.hpp"
#include "l2k/io.hpp"
#include "l2k/random.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace l2k;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }
const ExtendedReal inf = ExtendedReal::infinity();

ExtendedReal random_value(Rng& rng)
{
    switch (rng.below(4)) {
    case 0: return {};
    case 1: return inf;
    default: return Rational(static_cast<std::int64_t>(rng.below(7)), static_cast<std::int64_t>(1 + rng.below(5)));
    }
}

BettiSequence random_sequence(Rng& rng)
{
    BettiSequence s;
    const std::size_t n = rng.below(5);
    for (std::size_t k = 0; k < n; ++k) s.set(rng.below(4), random_value(rng));
    return s;
}

}  // namespace

TEST(ExtendedReal, Arithmetic)
{
    EXPECT_EQ(ExtendedReal(r(1, 2)) + inf, inf);
    EXPECT_EQ(ExtendedReal(r(1, 2)) * inf, inf);
    EXPECT_EQ(inf * inf, inf);
    EXPECT_EQ(ExtendedReal(0) * inf, ExtendedReal(0));
    EXPECT_EQ(inf * ExtendedReal(0), ExtendedReal(0));
    EXPECT_EQ(ExtendedReal(r(1, 3)) + ExtendedReal(r(1, 6)), ExtendedReal(r(1, 2)));
    EXPECT_LT(ExtendedReal(1000), inf);
    EXPECT_EQ(ExtendedReal::parse("inf"), inf);
    EXPECT_EQ(ExtendedReal::parse("3/6").str(), "1/2");
    EXPECT_THROW(ExtendedReal(r(-1)), std::invalid_argument);
    EXPECT_THROW((void)inf.value(), std::logic_error);
}

TEST(Convolve, Examples)
{
    const BettiSequence unit = BettiSequence::single(0, 1);
    const BettiSequence s = BettiSequence::from_values({r(1, 3), r(0), r(2)});
    EXPECT_EQ(convolve(unit, s), s);
    EXPECT_EQ(convolve(BettiSequence::single(0, r(1, 8)), BettiSequence::single(1, 1)), BettiSequence::single(1, r(1, 8)));
    EXPECT_TRUE(convolve(BettiSequence::single(1, inf), BettiSequence()).is_zero());
    EXPECT_EQ(s.str(), R"({"0":"1/3","2":"2"})");
    EXPECT_EQ(s.length(), 3u);
}

TEST(Convolve, CommutativeAssociativeWithUnit)
{
    Rng rng(11);
    const BettiSequence unit = BettiSequence::single(0, 1);
    for (int t = 0; t < 300; ++t) {
        const BettiSequence a = random_sequence(rng), b = random_sequence(rng), c = random_sequence(rng);
        ASSERT_EQ(convolve(a, b), convolve(b, a));
        ASSERT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
        ASSERT_EQ(convolve(a, unit), a);
    }
}

TEST(Catalog, Rules)
{
    EXPECT_EQ(betti_of(finite_qg(8)), BettiSequence::single(0, r(1, 8)));
    EXPECT_EQ(betti_of(free_group_dual(2)), BettiSequence::single(1, 1));
    EXPECT_EQ(betti_of(free_group_dual(5)), BettiSequence::single(1, 4));
    EXPECT_EQ(betti_of(cocommutative_finite(symmetric_group_3())), BettiSequence::single(0, r(1, 6)));
    EXPECT_TRUE(betti_of(coamenable_infinite()).is_zero());
    for (std::uint64_t n : {2, 8, 12})
        EXPECT_EQ(betti_of(product(finite_qg(n), free_group_dual(2))),
                  BettiSequence::single(1, r(1, static_cast<std::int64_t>(n))));
    EXPECT_THROW(finite_qg(0), ValidationError);
    EXPECT_THROW(free_group_dual(1), ValidationError);
    EXPECT_THROW(cocommutative_finite({{0, 1}, {0, 1}}), ValidationError);
}

TEST(Catalog, CoamenableProductsVanish)
{
    const std::vector<DescriptorPtr> others = {finite_qg(3), free_group_dual(4), coamenable_infinite(),
                                               product(finite_qg(2), free_group_dual(3)),
                                               cocommutative_finite(cyclic_group(4))};
    for (const auto& d : others) {
        EXPECT_TRUE(betti_of(product(coamenable_infinite(), d)).is_zero()) << describe(d);
        EXPECT_TRUE(betti_of(product(d, coamenable_infinite())).is_zero()) << describe(d);
    }
}

// The catalog value for a finite group is a closed-form rule; the algebra arm
// runs the bar complex. They must agree.
TEST(Catalog, FiniteGroupRuleMatchesBarComplex)
{
    for (const CayleyTable& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group_3()}) {
        const auto rule = betti_of(cocommutative_finite(g));
        const auto computed = betti_of(finite_dim_algebra(group_algebra(g), 1));
        EXPECT_EQ(rule, computed) << g.size();
    }
    const auto mixed = product(cocommutative_finite(cyclic_group(2)), finite_dim_algebra(group_algebra(cyclic_group(3)), 1));
    EXPECT_EQ(betti_of(mixed), BettiSequence::single(0, r(1, 6)));
}

TEST(FixedPoints, ZeroAndInfinity)
{
    for (const Rational& c : {r(1, 4), r(1, 2), r(1, 9), r(99, 100)}) {
        const auto fp = fixed_point_classify(c);
        ASSERT_EQ(fp, (std::vector<ExtendedReal>{ExtendedReal(0), inf}));
        for (const auto& x : fp) EXPECT_EQ(ExtendedReal(c) * x, x);
        Rng rng(13);
        for (int t = 0; t < 50; ++t) {
            const ExtendedReal x(Rational(static_cast<std::int64_t>(1 + rng.below(50)), static_cast<std::int64_t>(1 + rng.below(50))));
            EXPECT_NE(ExtendedReal(c) * x, x);
        }
    }
    EXPECT_THROW(fixed_point_classify(r(0)), std::invalid_argument);
    EXPECT_THROW(fixed_point_classify(r(1)), std::invalid_argument);
    EXPECT_THROW(fixed_point_classify(r(3, 2)), std::invalid_argument);
}

TEST(RationalFirstBetti, Examples)
{
    EXPECT_EQ(describe(rational_first_betti(1, 8)), "(FiniteQG(8) x FreeGroupDual(2))");
    EXPECT_EQ(describe(rational_first_betti(3, 5)), "(FiniteQG(5) x FreeGroupDual(4))");
    EXPECT_EQ(describe(rational_first_betti(1, 1)), "FreeGroupDual(2)");
    EXPECT_EQ(betti_of(rational_first_betti(3, 5)), BettiSequence::single(1, r(3, 5)));
    EXPECT_EQ(betti_of(rational_first_betti(3, 5)),
              convolve(BettiSequence::single(0, r(1, 5)), BettiSequence::single(1, 3)));
}

TEST(RationalFirstBetti, RandomTargets)
{
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t p = 1 + rng.below(40), q = 1 + rng.below(40);
        const BettiSequence b = betti_of(rational_first_betti(p, q));
        ASSERT_EQ(b, BettiSequence::single(1, Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q))));
        ASSERT_TRUE(b.at(0).is_zero());
    }
}

TEST(DescriptorText, RoundTrip)
{
    const std::string text = R"({"kind":"product","left":{"kind":"finite_qg","dim":8},"right":{"kind":"free_group_dual","k":2}})";
    const DescriptorPtr d = parse_descriptor(text);
    EXPECT_EQ(descriptor_to_text(d), text);
    EXPECT_EQ(betti_of(d).str(), R"({"1":"1/8"})");

    const std::string nested =
        R"({"kind":"product","left":{"kind":"coamenable_infinite"},"right":{"kind":"product","left":{"kind":"cocommutative_finite","cayley":[[0,1],[1,0]]},"right":{"kind":"finite_dim_algebra","algebra":{"kind":"multi_matrix","blocks":[2],"weights":["1/2"]},"max_degree":1}}})";
    EXPECT_EQ(descriptor_to_text(parse_descriptor(nested)), nested);
    EXPECT_THROW(descriptor_to_text(finite_dim_algebra(group_algebra(cyclic_group(2)))), std::invalid_argument);
}

TEST(DescriptorText, Errors)
{
    EXPECT_THROW(parse_descriptor("{"), ParseError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"mystery"})"), ParseError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"finite_qg"})"), ParseError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"finite_qg","dim":-3})"), ParseError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"finite_qg","dim":0})"), ValidationError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"free_group_dual","k":1})"), ValidationError);
    EXPECT_THROW(parse_descriptor(R"({"kind":"cocommutative_finite","cayley":[[0,0],[1,1]]})"), ValidationError);
}

TEST(DescriptorText, AlgebraFileRelativeToDescriptor)
{
    const auto dir = std::filesystem::temp_directory_path() / "l2k_catalog_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "z3.json") << R"({"kind":"group","cayley":[[0,1,2],[1,2,0],[2,0,1]]})";
    std::ofstream(dir / "d.json") << R"({"kind":"finite_dim_algebra","file":"z3.json","max_degree":1})";
    const DescriptorPtr d = load_descriptor(dir / "d.json");
    EXPECT_EQ(betti_of(d), BettiSequence::single(0, r(1, 3)));
    EXPECT_EQ(descriptor_to_text(d), R"({"kind":"finite_dim_algebra","file":"z3.json","max_degree":1})");
    std::filesystem::remove_all(dir);
}

TEST(AlgebraText, Kinds)
{
    const AlgebraPtr m2 = parse_algebra(R"({"kind":"multi_matrix","blocks":[2],"weights":["1/2"]})");
    EXPECT_EQ(m2->dim(), 4u);
    const AlgebraPtr mixed = parse_algebra(R"({"kind":"multi_matrix","blocks":[1,2],"weights":["1/5","2/5"]})");
    EXPECT_EQ(mixed->dim(), 5u);
    const AlgebraPtr z2 = parse_algebra(R"({"kind":"group","cayley":[[0,1],[1,0]],"name":"Z2"})");
    EXPECT_EQ(z2->dim(), 2u);
    const AlgebraPtr t = parse_algebra(
        R"({"kind":"tensor","left":{"kind":"group","cayley":[[0,1],[1,0]]},"right":{"kind":"multi_matrix","blocks":[2],"weights":["1/2"]}})");
    EXPECT_EQ(t->dim(), 8u);
    EXPECT_EQ(betti_numbers(t, 0).values, std::vector<Rational>{r(1, 8)});
}

TEST(AlgebraText, Errors)
{
    EXPECT_THROW(parse_algebra("not json"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"blocks":[2]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"kind":"multi_matrix","blocks":[2],"weights":["x"]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"kind":"multi_matrix","blocks":[2],"weights":[0.5]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"kind":"multi_matrix","blocks":[2],"weights":["1/3"]})"), ValidationError);
    EXPECT_THROW(parse_algebra(R"({"kind":"multi_matrix","blocks":[2,1],"weights":["1/3"]})"), ParseError);
    EXPECT_THROW(parse_algebra(R"({"kind":"group","cayley":[[0,1],[0,1]]})"), ValidationError);
    EXPECT_THROW(parse_algebra(R"({"kind":"group","cayley":[[0,1],[1]]})"), ValidationError);
    EXPECT_THROW(load_algebra("/nonexistent/file.json"), ParseError);
}

TEST(ScalarText, RoundTrip)
{
    Rng rng(19);
    for (int t = 0; t < 100; ++t) {
        const Scalar s(Rational(rng.between(-9, 9), rng.between(1, 9)), Rational(rng.between(-9, 9), rng.between(1, 9)));
        ASSERT_EQ(parse_scalar(scalar_to_text(s)), s);
    }
    EXPECT_EQ(scalar_to_text(Scalar(r(2, 4))), "\"1/2\"");
    EXPECT_EQ(scalar_to_text(Scalar(r(1), r(-1, 3))), R"({"re":"1","im":"-1/3"})");
    EXPECT_EQ(parse_scalar(R"({"re":"1/2","im":"3"})"), Scalar(r(1, 2), r(3)));
    EXPECT_THROW(parse_scalar(R"({"re":"1","imag":"2"})"), ParseError);
}
