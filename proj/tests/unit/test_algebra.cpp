#include <gtest/gtest.h>

#include "matrix_rep.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/finite_dim.hpp"
#include "qmaps/free_product.hpp"
#include "qmaps/free_star.hpp"
#include "qmaps/random.hpp"
#include "qmaps/tensor.hpp"

using namespace qmaps;

namespace {

FreeProductPtr c2c2() { return free_power(make_cn(2), 2); }

}  // namespace

TEST(FiniteDim, StandardAlgebrasSatisfyAxioms) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(make_cn(n)->axiom_failures().empty()) << n;
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_TRUE(make_matrix_algebra(n)->axiom_failures().empty()) << n;
}

TEST(FiniteDim, MatrixUnitsMultiply) {
  const auto m2 = make_matrix_algebra(2);
  const Element e12 = m2->generator("E12"), e21 = m2->generator("E21");
  EXPECT_EQ(e12 * e21, m2->generator("E11"));
  EXPECT_TRUE((e12 * e12).is_zero());
  EXPECT_EQ(e12.star(), e21);
  EXPECT_EQ(m2->generator("E11") + m2->generator("E22"), m2->unit());
}

TEST(FiniteDim, ComplementSplit) {
  const auto m2 = make_matrix_algebra(2);
  // E11 = 1/2 * 1 + (E11 - 1/2).
  const auto [lambda, rest] = m2->split(m2->generator("E11").terms());
  EXPECT_EQ(lambda, Scalar::rational(1, 2));
  ASSERT_EQ(rest.size(), 3u);
  EXPECT_EQ(rest[0], Scalar(1));
  EXPECT_EQ(rest[1], Scalar(0));
  EXPECT_EQ(rest[2], Scalar(0));
}

TEST(FiniteDim, CreateValidates) {
  FiniteDimAlgebra::Data d = make_cn(2)->data();
  d.reduced_complement.clear();
  EXPECT_THROW(FiniteDimAlgebra::create(d), InvalidArgument);
  d = make_cn(2)->data();
  d.reduced_complement = {d.unit};
  EXPECT_THROW(FiniteDimAlgebra::create(d), InvalidArgument);
  d = make_cn(2)->data();
  d.basis_names = {"a_1", "b"};
  EXPECT_THROW(FiniteDimAlgebra::create(d), InvalidArgument);
  EXPECT_THROW(make_cn(0), InvalidArgument);
}

TEST(FiniteDim, InvertRejectsSingular) {
  EXPECT_THROW(invert({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}), InvalidArgument);
  const auto inv = invert({{Scalar(2), Scalar(0)}, {Scalar(1), Scalar(1)}});
  EXPECT_EQ(inv[0][0], Scalar::rational(1, 2));
  EXPECT_EQ(inv[1][0], Scalar::rational(-1, 2));
}

TEST(FreeStar, ConcatenationAndStar) {
  const auto f = make_free_star({{"p", true}, {"z", false}});
  const Element p = f->generator("p"), z = f->generator("z");
  EXPECT_EQ((p * z).star(), z.star() * p);
  EXPECT_FALSE(p * z == z * p);
  EXPECT_EQ(p.star(), p);
  EXPECT_THROW(make_free_star({{"p", true}, {"p", false}}), InvalidArgument);
}

TEST(FreeProduct, PqpIsReducedOfLengthThree) {
  const auto c = c2c2();
  const Element p = c->generator("e1_1"), q = c->generator("e1_2");
  const Element x = p * q * p;
  ASSERT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.terms().begin()->first, (Word{0, 0, 1, 0, 0, 0}));
  EXPECT_EQ(x.terms().begin()->second, Scalar(1));
}

TEST(FreeProduct, JunctionReduction) {
  const auto c = c2c2();
  const Element p = c->generator("e1_1"), q = c->generator("e1_2");
  EXPECT_EQ((p * q) * (q * p), p * q * p);
  EXPECT_EQ(q * q, q);
  EXPECT_TRUE((p * (c->unit() - p)).is_zero());
  // e2_1 = 1 - e1_1 in the reduced basis.
  EXPECT_EQ(c->generator("e2_1"), c->unit() - p);
}

TEST(FreeProduct, MatrixFactorJunction) {
  const auto c = free_product({make_matrix_algebra(2), make_cn(2)});
  const Element e12 = c->generator("E12_1"), e21 = c->generator("E21_1"), q = c->generator("e1_2");
  EXPECT_EQ(e12 * e21, c->generator("E11_1"));
  EXPECT_EQ((e12 * q * e21).star(), e12 * q * e21);
  EXPECT_EQ(q * e12 * e21 * q, q * c->generator("E11_1") * q);
}

TEST(FreeProduct, FlatteningAndErrors) {
  const auto a = free_product({c2c2(), make_cn(3)});
  EXPECT_EQ(a->num_factors(), 3u);
  EXPECT_THROW(free_product({}), InvalidArgument);
  EXPECT_THROW(free_product({make_free_star({{"x", false}})}), InvalidArgument);
  EXPECT_THROW(c2c2()->generator("e1_3"), UnknownGenerator);
  EXPECT_THROW(c2c2()->generator("e1"), UnknownGenerator);
}

TEST(FreeProduct, OwnerMismatchOnMixedArithmetic) {
  const auto c = c2c2();
  const auto d = free_power(make_cn(3), 2);
  EXPECT_THROW(c->unit() + d->unit(), OwnerMismatch);
  EXPECT_THROW((void)(c->unit() * d->unit()), OwnerMismatch);
  EXPECT_THROW((void)(c->unit() == d->unit()), OwnerMismatch);
}

TEST(FreeProduct, BasisWordsCount) {
  // C^2 * C^2: one complement letter per factor, so one reduced word per
  // starting factor and length.
  EXPECT_EQ(c2c2()->basis_words(4).size(), 9u);
  // C^3 * C^3: two letters per factor: 1 + 4 + 8 + 16.
  EXPECT_EQ(free_power(make_cn(3), 2)->basis_words(3).size(), 29u);
}

// Properties: associativity, distributivity and involution on random
// triples, compared exactly and against a numeric representation.
class FreeProductProperties : public ::testing::TestWithParam<int> {};

TEST_P(FreeProductProperties, RandomTriples) {
  const std::vector<FreeProductPtr> algebras{c2c2(), free_product({make_cn(3), make_matrix_algebra(2), make_cn(2)}),
                                             free_product({make_matrix_algebra(3), make_matrix_algebra(2)})};
  const auto& c = algebras[static_cast<std::size_t>(GetParam())];
  const oracle::FreeProductRep rep(*c, 7 + static_cast<std::uint64_t>(GetParam()));
  Rng rng(kDefaultSeed + static_cast<std::uint64_t>(GetParam()));
  for (int k = 0; k < 170; ++k) {
    const Element x = random_element(c, rng, 3, 3), y = random_element(c, rng, 3, 3), z = random_element(c, rng, 3, 3);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ((x * y).star(), y.star() * x.star());
    ASSERT_EQ(x.star().star(), x);
    EXPECT_LT(oracle::max_abs(rep(x * y) - rep(x) * rep(y)), 1e-9);
    EXPECT_LT(oracle::max_abs(rep(x.star()) - rep(x).adjoint()), 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Algebras, FreeProductProperties, ::testing::Values(0, 1, 2));

TEST(Tensor, LegsCommuteAndMultiplyLegwise) {
  const auto c = c2c2();
  const auto m2 = make_matrix_algebra(2);
  const AlgebraPtr t = tensor({m2, c});
  const Element a = tensor_product({m2->generator("E12"), c->generator("e1_1")});
  const Element b = tensor_product({m2->generator("E21"), c->generator("e1_2")});
  EXPECT_EQ(a * b, tensor_product({m2->generator("E11"), c->generator("e1_1") * c->generator("e1_2")}));
  EXPECT_EQ(a.star(), tensor_product({m2->generator("E21"), c->generator("e1_1")}));
  const Element x = t->generator("E12@1"), y = t->generator("e1_2@2");
  EXPECT_EQ(x * y, y * x);
}

TEST(Tensor, FlatteningFlipAndDecompose) {
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  const AlgebraPtr t = tensor({tensor({c2, m2}), c2});
  EXPECT_EQ(legs_of(t).size(), 3u);
  EXPECT_EQ(tensor({c2}).get(), c2.get());
  const Element x = tensor_product({c2->generator("e1"), m2->generator("E12"), c2->generator("e2")});
  const Element flipped = flip_legs(x, 0, 2);
  EXPECT_EQ(flipped, tensor_product({c2->generator("e2"), m2->generator("E12"), c2->generator("e1")}));
  EXPECT_EQ(flip_legs(flipped, 0, 2), x);
  const auto parts = decompose_first_leg(x + tensor_product({c2->generator("e2"), m2->unit(), c2->unit()}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(Word{0}), tensor_product({m2->generator("E12"), c2->generator("e2")}));
  EXPECT_THROW(flip_legs(c2->unit(), 0, 1), InvalidArgument);
}

TEST(Tensor, RandomAssociativityAndInvolution) {
  const AlgebraPtr t = tensor({make_matrix_algebra(2), c2c2()});
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 100; ++k) {
    const Element x = random_element(t, rng, 3, 3), y = random_element(t, rng, 3, 3), z = random_element(t, rng, 3, 3);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ((x * y).star(), y.star() * x.star());
  }
}

TEST(Algebra, EvaluateAndBasisExpressionRoundTrip) {
  const auto c = c2c2();
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Element x = random_element(c, rng, 4, 4);
    EXPECT_EQ(c->evaluate(to_expression(x)), x);
  }
  EXPECT_THROW(c->evaluate(NCExpr::letter("nope")), UnknownGenerator);
}
