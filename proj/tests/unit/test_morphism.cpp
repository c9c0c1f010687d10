#include <gtest/gtest.h>

#include "qmaps/errors.hpp"
#include "qmaps/morphism.hpp"
#include "qmaps/random.hpp"
#include "qmaps/tensor.hpp"

using namespace qmaps;

namespace {

// C^2 -> M_2 sending e1 to E11.
Morphism diagonal_embedding() {
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  return Morphism(c2, m2, {{"e1", m2->generator("E11")}, {"e2", m2->generator("E22")}});
}

}  // namespace

TEST(Morphism, ConstructionValidatesImages) {
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  EXPECT_THROW(Morphism(c2, m2, {{"e1", m2->unit()}}), UnknownGenerator);
  EXPECT_THROW(Morphism(c2, m2, {{"e1", m2->unit()}, {"e2", m2->zero()}, {"e3", m2->zero()}}), UnknownGenerator);
  EXPECT_THROW(Morphism(c2, m2, {{"e1", c2->unit()}, {"e2", m2->zero()}}), OwnerMismatch);
}

TEST(Morphism, WellDefinedness) {
  EXPECT_TRUE(check_well_defined(diagonal_embedding()).ok());
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  // e1 -> E12 is not self-adjoint and not idempotent.
  const Morphism bad(c2, m2, {{"e1", m2->generator("E12")}, {"e2", m2->generator("E22")}});
  const Verdict v = check_well_defined(bad);
  EXPECT_FALSE(v.ok());
  EXPECT_GT(v.residue_terms(), 0u);
}

TEST(Morphism, EvaluatesProducts) {
  const Morphism f = diagonal_embedding();
  const auto c2 = make_cn(2);
  EXPECT_EQ(f(c2->unit()), f.codomain()->unit());
  EXPECT_TRUE(f(c2->generator("e1") * c2->generator("e2")).is_zero());
  EXPECT_THROW(f(make_cn(3)->unit()), OwnerMismatch);
  EXPECT_TRUE(check_multiplicative(f, 1).ok());
}

TEST(Morphism, ComposeAndIdentity) {
  const Morphism f = diagonal_embedding();
  EXPECT_TRUE(compare_on_generators(compose(identity_morphism(f.codomain()), f), f).ok());
  EXPECT_TRUE(compare_on_generators(compose(f, identity_morphism(f.domain())), f).ok());
  EXPECT_THROW(compose(f, f), OwnerMismatch);
}

TEST(Morphism, TensorMorphisms) {
  const Morphism f = diagonal_embedding();
  const Morphism ff = tensor_morphisms({f, f});
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  const Element x = tensor_product({c2->generator("e1"), c2->generator("e2")});
  EXPECT_EQ(ff(x), tensor_product({m2->generator("E11"), m2->generator("E22")}));
  EXPECT_TRUE(check_well_defined(ff).ok());
}

TEST(Morphism, FactorThroughFreeProduct) {
  const auto c = free_power(make_cn(2), 2);
  const auto m2 = make_matrix_algebra(2);
  const auto c2 = make_cn(2);
  // Two non-commuting projections E11 and 1/2 [[1,1],[1,1]].
  const Element half = m2->unit().scaled(Scalar::rational(1, 2)) +
                       (m2->generator("E12") + m2->generator("E21")).scaled(Scalar::rational(1, 2));
  const Morphism f1 = diagonal_embedding();
  const Morphism f2(c2, m2, {{"e1", half}, {"e2", m2->unit() - half}});
  const Morphism lambda = factor_through_free_product(c, {f1, f2});
  EXPECT_TRUE(check_well_defined(lambda).ok());
  EXPECT_TRUE(compare_on_generators(compose(lambda, iota(c, 0)), f1).ok());
  EXPECT_TRUE(compare_on_generators(compose(lambda, iota(c, 1)), f2).ok());
  EXPECT_TRUE(check_multiplicative(lambda, 3).ok());
  EXPECT_THROW(factor_through_free_product(c, {f1}), InvalidArgument);
}

TEST(Morphism, DecomposeAssembleOverCn) {
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  const Morphism f = diagonal_embedding();
  const Morphism swapped(c2, m2, {{"e1", m2->generator("E22")}, {"e2", m2->generator("E11")}});
  const Morphism psi = assemble_over_cn(make_cn(2), {f, swapped});
  EXPECT_TRUE(check_well_defined(psi).ok());
  const auto parts = decompose_over_cn(psi);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(compare_on_generators(parts[0], f).ok());
  EXPECT_TRUE(compare_on_generators(parts[1], swapped).ok());
  EXPECT_THROW(decompose_over_cn(f), InvalidArgument);
}

TEST(Morphism, PiIsIdentityOnEachCopy) {
  const auto c = free_power(make_cn(3), 3);
  const Morphism p = pi(c);
  EXPECT_TRUE(check_well_defined(p).ok());
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_TRUE(compare_on_generators(compose(p, iota(c, k)), identity_morphism(c->factor(k))).ok());
  }
  EXPECT_TRUE(check_multiplicative(p, 2).ok());
  EXPECT_THROW(pi(free_product({make_cn(2), make_cn(3)})), OwnerMismatch);
}

TEST(Morphism, MuOnlyForCommutative) {
  const Morphism m = mu(make_cn(3));
  EXPECT_TRUE(check_well_defined(m).ok());
  const auto c3 = make_cn(3);
  EXPECT_EQ(m(tensor_product({c3->generator("e1"), c3->generator("e1")})), c3->generator("e1"));
  EXPECT_TRUE(m(tensor_product({c3->generator("e1"), c3->generator("e2")})).is_zero());
  EXPECT_THROW(mu(make_matrix_algebra(2)), NotAHomomorphism);
}

TEST(Morphism, UnitalEmbedding) {
  const auto c2 = make_cn(2);
  const auto m2 = make_matrix_algebra(2);
  const Morphism e = unital_embed(c2, m2);
  EXPECT_TRUE(check_well_defined(e).ok());
  EXPECT_EQ(e(m2->generator("E12")), tensor_product({c2->unit(), m2->generator("E12")}));
}

TEST(Morphism, MultiplicativityOnRandomFreeProductMaps) {
  // Random unital *-homomorphisms C^2 * C^2 -> C^2 (x) M_2 via rank-one
  // projections; eval(xy) = eval(x) eval(y) on all basis pairs.
  const auto c = free_power(make_cn(2), 2);
  const auto m2 = make_matrix_algebra(2);
  const auto c2 = make_cn(2);
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 5; ++k) {
    std::vector<Morphism> parts;
    for (int j = 0; j < 2; ++j) {
      const Scalar a = random_scalar(rng, 3, 3, true), b = random_scalar(rng, 3, 3, true);
      const Scalar n = Scalar(a.norm2()) + Scalar(b.norm2());
      const Element p = (m2->generator("E11").scaled(Scalar(a.norm2())) + m2->generator("E12").scaled(a * b.conj()) +
                         m2->generator("E21").scaled(b * a.conj()) + m2->generator("E22").scaled(Scalar(b.norm2())))
                            .scaled(n.inverse());
      parts.push_back(Morphism(c2, m2, {{"e1", p}, {"e2", m2->unit() - p}}));
    }
    const Morphism lambda = factor_through_free_product(c, parts);
    ASSERT_TRUE(check_well_defined(lambda).ok());
    EXPECT_TRUE(check_multiplicative(lambda, 3).ok());
  }
}
