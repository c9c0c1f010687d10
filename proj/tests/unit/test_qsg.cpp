#include <gtest/gtest.h>

#include "qmaps/errors.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/qsg.hpp"
#include "qmaps/suites.hpp"
#include "qmaps/tensor.hpp"

using namespace qmaps;

namespace {

FreeProductPtr as_free_product(const AlgebraPtr& a) { return std::dynamic_pointer_cast<const FreeProductAlgebra>(a); }

}  // namespace

TEST(FiniteGroup, ValidatesTables) {
  EXPECT_THROW(FiniteGroup({}), InvalidArgument);
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), InvalidArgument);  // no inverse for 1
  EXPECT_THROW(FiniteGroup({{0, 2}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(FiniteGroup({{1, 0}, {0, 0}}), InvalidArgument);
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  EXPECT_EQ(z4.inverse(1), 3u);
  EXPECT_EQ(z4.identity(), 0u);
  // Klein four-group.
  const FiniteGroup v({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  EXPECT_EQ(v.inverse(3), 3u);
}

TEST(GroupFunctions, ComultiplicationMatchesGroupLaw) {
  // Oracle: the coefficient of delta_a (x) delta_b in Delta(delta_g) is 1
  // exactly when a b = g.
  for (const FiniteGroup& g : {FiniteGroup::cyclic(3), FiniteGroup({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}})}) {
    const QuantumSemigroup q = group_function_qsg(g);
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Element d = q.comult.image("e" + std::to_string(x + 1));
      for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < g.order(); ++b) {
          const Word key = TensorAlgebra::join_keys({{static_cast<std::int32_t>(a)}, {static_cast<std::int32_t>(b)}});
          EXPECT_EQ(d.coefficient(key), Scalar(g.mul(a, b) == x ? 1 : 0));
        }
      }
    }
    EXPECT_TRUE(check_counit(q, group_counit(g)).ok());
  }
}

TEST(QuantumSemigroup, RejectsNonCoassociative) {
  // Delta(f) = f o m with m(a, b) = not a, which is not associative.
  const auto c2 = make_cn(2);
  const AlgebraPtr cc = tensor({c2, c2});
  const Morphism d(c2, cc, {{"e1", tensor_product({c2->generator("e2"), c2->unit()})},
                            {"e2", tensor_product({c2->generator("e1"), c2->unit()})}});
  EXPECT_TRUE(check_well_defined(d).ok());
  EXPECT_FALSE(check_coassociativity({c2, d}).ok());
  EXPECT_THROW(make_quantum_semigroup(d), DiagramInconsistency);
}

TEST(QuantumSemigroup, RejectsIllDefined) {
  const auto c2 = make_cn(2);
  const AlgebraPtr cc = tensor({c2, c2});
  const Element twice = tensor_product({c2->generator("e1"), c2->generator("e1")}).scaled(2);
  const Morphism d(c2, cc, {{"e1", twice}, {"e2", cc->unit() - twice}});
  EXPECT_THROW(make_quantum_semigroup(d), NotAHomomorphism);
  const Morphism wrong(c2, c2, {{"e1", c2->generator("e1")}, {"e2", c2->generator("e2")}});
  EXPECT_THROW(make_quantum_semigroup(wrong), OwnerMismatch);
}

TEST(FreeProductQsg, DeltaOfPHandExpansion) {
  // Delta(delta_0) = e1 (x) e1 + e2 (x) e2 on C(Z2); with e2 = 1 - p in the
  // first copy this is 2 p(x)p - p(x)1 - 1(x)p + 1(x)1.
  const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
  const QuantumSemigroup d = free_product_qsg({a, a});
  const auto c = as_free_product(d.algebra);
  const Element p = c->generator("e1_1"), one = c->unit();
  EXPECT_EQ(d.comult.image("e1_1"), tensor_product({p, p}).scaled(2) - tensor_product({p, one}) -
                                        tensor_product({one, p}) + tensor_product({one, one}));
  EXPECT_TRUE(check_coassociativity(d).ok());
}

TEST(FreeProductQsg, MixedFactorsAndErrors) {
  const QuantumSemigroup z2 = group_function_qsg(FiniteGroup::cyclic(2));
  const QuantumSemigroup z3 = group_function_qsg(FiniteGroup::cyclic(3));
  const QuantumSemigroup d = free_product_qsg({z2, z3});
  EXPECT_TRUE(check_coassociativity(d).ok());
  EXPECT_TRUE(check_qsg_morphism(iota(as_free_product(d.algebra), 1), z3, d).ok());
  EXPECT_TRUE(check_qsg_morphism(iota(as_free_product(d.algebra), 0), z2, d).ok());
  EXPECT_THROW(free_product_qsg({}), InvalidArgument);
}

TEST(Sadr, GammaEqualsDeltaForSmallGroups) {
  for (std::size_t order : {2u, 3u}) {
    for (std::size_t n : {2u, 3u}) {
      EXPECT_TRUE(verify_gamma_equals_delta(group_function_qsg(FiniteGroup::cyclic(order)), n).ok()) << order << n;
    }
  }
  const FiniteGroup klein({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  EXPECT_TRUE(verify_gamma_equals_delta(group_function_qsg(klein), 2).ok());
}

TEST(Sadr, QuantumFamilyShape) {
  const QuantumFamily fam = quantum_family_of_maps(make_cn(2), 2);
  const auto c2 = make_cn(2);
  const Element p = fam.algebra->generator("e1_1"), q = fam.algebra->generator("e1_2");
  EXPECT_EQ(fam.phi.image("e1"), tensor_product({c2->generator("e1"), p}) + tensor_product({c2->generator("e2"), q}));
  EXPECT_TRUE(check_well_defined(fam.phi).ok());
  EXPECT_THROW(quantum_family_of_maps(make_cn(2), 0), InvalidArgument);
}

TEST(Counit, InducedAndRestricted) {
  const FiniteGroup g = FiniteGroup::cyclic(3);
  const QuantumSemigroup a = group_function_qsg(g);
  const QuantumSemigroup c = free_product_qsg({a, a, a});
  const auto fp = as_free_product(c.algebra);
  const Character eps = counit_of_free_product(fp, {group_counit(g), group_counit(g), group_counit(g)});
  EXPECT_TRUE(check_counit(c, eps).ok());
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(check_counit(a, compose(eps, iota(fp, k))).ok());
  // A non-identity point evaluation is not a counit.
  EXPECT_FALSE(check_counit(a, point_character(make_cn(3), {0, 1, 0})).ok());
}

TEST(Counit, TrivialStructure) {
  const auto c2 = make_cn(2);
  const QuantumSemigroup t = trivial_qsg(c2);
  EXPECT_EQ(t.comult(c2->unit()), tensor_product({c2->unit(), c2->unit()}));
  EXPECT_FALSE(check_counit(t, point_character(c2, {1, 0})).ok());
  // On C itself the trivial structure has the identity as counit.
  const auto one = scalars();
  EXPECT_TRUE(check_counit(trivial_qsg(one), point_character(one, {1})).ok());
}

TEST(Composition, ProjectionCoassociativeAndCounit) {
  const QuantumSemigroup comp = composition_qsg_qmap2();
  const Element d = comp.comult.image("e1_1");
  EXPECT_EQ(d * d, d);
  EXPECT_EQ(d.star(), d);
  EXPECT_TRUE(check_coassociativity(comp).ok());
  const auto c = as_free_product(comp.algebra);
  EXPECT_TRUE(check_counit(comp, chi_ab(c, 1, 0)).ok());
  EXPECT_FALSE(check_counit(comp, chi_ab(c, 1, 1)).ok());
  const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
  EXPECT_FALSE(check_qsg_morphism(pi(c), comp, a).ok());
  EXPECT_TRUE(check_qsg_morphism(pi(c), free_product_qsg({a, a}), a).ok());
}

TEST(Characters, MonoidTables) {
  const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
  const QuantumSemigroup d = free_product_qsg({a, a});
  const auto c = as_free_product(d.algebra);
  std::vector<Character> chars;
  for (int x : {0, 1}) {
    for (int y : {0, 1}) chars.push_back(chi_ab(c, x, y));
  }
  EXPECT_TRUE(is_group(character_monoid(d, chars)));
  EXPECT_FALSE(is_group(character_monoid(composition_qsg_qmap2(), chars)));
  EXPECT_THROW(character_monoid(d, {chars[0]}), InvalidArgument);
  EXPECT_EQ(character_value(chars[2], c->generator("e1_1") * c->generator("e1_2")), Scalar(0));
}

TEST(IsGroup, SmallTables) {
  EXPECT_TRUE(is_group({{0}}));
  EXPECT_TRUE(is_group({{0, 1}, {1, 0}}));
  EXPECT_FALSE(is_group({{0, 1}, {1, 1}}));
  EXPECT_FALSE(is_group({{0, 0}, {0, 0}}));
  EXPECT_FALSE(is_group({}));
}

TEST(Noqg, DerivedEntries) {
  const NoqgDerivation d = derive_noqg_relations();
  const std::set<std::string> sa{"p", "q"};
  ASSERT_EQ(d.square_entries.size(), 4u);
  EXPECT_EQ(d.square_entries[0], parse_expression("p p + z' z - p"));
  EXPECT_EQ(d.square_entries[2], parse_expression("z p + q z - z"));
  EXPECT_EQ(d.square_entries[3], parse_expression("z z' + q q - q"));
  EXPECT_EQ(d.square_entries[1].with_self_adjoint(sa), d.square_entries[2].star().with_self_adjoint(sa));
  ASSERT_EQ(d.adjoint_entries.size(), 2u);
  EXPECT_TRUE(equal_up_to_sign_and_star(d.adjoint_entries[0], parse_expression("p' - p")));
  EXPECT_TRUE(equal_up_to_sign_and_star(d.adjoint_entries[1], parse_expression("q' - q")));
  EXPECT_EQ(d.relations.size(), 5u);
}

TEST(Noqg, PresentationAndPhi) {
  const Presentation p = noqg_presentation();
  EXPECT_EQ(p.all_relations().size(), 5u);
  const NoqgPhi n = noqg_algebra_and_phi();
  EXPECT_EQ(n.phi.image("e1") + n.phi.image("e2"), n.phi.codomain()->unit());
  // Phi is not well-defined into the free algebra: its relations are exactly
  // the presentation's, which do not hold there.
  EXPECT_FALSE(check_well_defined(n.phi).ok());
}
