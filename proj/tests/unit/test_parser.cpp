#include <gtest/gtest.h>

#include "qmaps/errors.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/random.hpp"

using namespace qmaps;

namespace {

NCExpr L(const char* name, bool starred = false) { return NCExpr::letter(name, starred); }

}  // namespace

TEST(Parser, RelationRearranged) {
  EXPECT_EQ(parse_expression("p - p p - z' z"), L("p") - L("p") * L("p") - L("z", true) * L("z"));
  EXPECT_EQ(parse_relation("p = p p + z' z"), parse_expression("p - p p - z' z"));
}

TEST(Parser, AdjointOfProductReverses) {
  EXPECT_EQ(parse_expression("(p q)'"), L("q", true) * L("p", true));
  EXPECT_EQ(parse_expression("p''"), L("p"));
}

TEST(Parser, CoefficientsAndLinearity) {
  const NCExpr half = NCExpr::constant(Scalar::rational(1, 2));
  EXPECT_EQ(parse_expression("1/2 (1 - u)"), half - L("u").scaled(Scalar::rational(1, 2)));
  EXPECT_EQ(parse_expression("3/4 i p"), L("p").scaled(Scalar(0, mpq_class(3, 4))));
  EXPECT_EQ(parse_expression("i'"), NCExpr::constant(Scalar(0, -1)));
  EXPECT_EQ(parse_expression("-2 x@1 y_2"), (L("x@1") * L("y_2")).scaled(-2));
  EXPECT_EQ(parse_expression("0"), NCExpr());
}

TEST(Parser, SyntaxErrorsCarryPosition) {
  try {
    parse_expression("p + (q");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_expression(""), ParseError);
  EXPECT_THROW(parse_expression("p +"), ParseError);
  EXPECT_THROW(parse_expression("1/0"), ParseError);
  EXPECT_THROW(parse_expression("p $ q"), ParseError);
  EXPECT_THROW(parse_relation("p = q = r"), ParseError);
}

TEST(Parser, RoundTripOnRandomCorpus) {
  Rng rng(kDefaultSeed);
  for (int k = 0; k < 100; ++k) {
    const NCExpr e = random_expression({"p", "q", "z", "u_1", "x@2"}, rng);
    const std::string text = e.to_string();
    EXPECT_EQ(parse_expression(text), e) << text;
    EXPECT_EQ(parse_expression(text).to_string(), text);
  }
}

TEST(PresentationFile, ParseAndResolve) {
  const PresentationFile f = parse_presentation_file(
      "# comment\n"
      "gen p selfadjoint\n"
      "gen z\n"
      "gen w adjoint_of z\n"
      "\n"
      "rel w z = p  # trailing comment\n");
  ASSERT_EQ(f.generators.size(), 3u);
  EXPECT_EQ(f.generators[2].kind, GeneratorDecl::Kind::kAdjointOf);
  const Presentation pres = f.to_presentation();
  ASSERT_EQ(pres.generators.size(), 2u);
  EXPECT_TRUE(pres.generators[0].self_adjoint);
  ASSERT_EQ(pres.relations.size(), 1u);
  EXPECT_EQ(pres.relations[0], L("z", true) * L("z") - L("p"));
}

TEST(PresentationFile, PrintParseIsIdentity) {
  const std::string text =
      "gen p selfadjoint\n"
      "gen q selfadjoint\n"
      "gen z\n"
      "rel p = p p + z' z\n"
      "rel q = q q + z z'\n"
      "rel z p = (1 - q) z\n";
  const PresentationFile f = parse_presentation_file(text);
  const std::string printed = print_presentation_file(f);
  EXPECT_EQ(parse_presentation_file(printed), f);
  EXPECT_EQ(print_presentation_file(parse_presentation_file(printed)), printed);
  EXPECT_EQ(to_file(f.to_presentation()).to_presentation(), f.to_presentation());
}

TEST(PresentationFile, Errors) {
  try {
    parse_presentation_file("gen p\ngen q\nrel p q = (p\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_presentation_file("gen p\ngen p\n"), ParseError);
  EXPECT_THROW(parse_presentation_file("gen i\n"), ParseError);
  EXPECT_THROW(parse_presentation_file("gen p bogus\n"), ParseError);
  EXPECT_THROW(parse_presentation_file("relation p\n"), ParseError);
  EXPECT_THROW(parse_presentation_file("gen w adjoint_of z\n"), UnknownGenerator);
  // Unknown names in relations are reported at binding time.
  const PresentationFile f = parse_presentation_file("gen p\nrel p w = 0\n");
  EXPECT_THROW(f.to_presentation(), UnknownGenerator);
  EXPECT_THROW(read_presentation_file("/nonexistent/file.pres"), InvalidArgument);
}

TEST(PresentationFile, ReadsShippedFiles) {
  const Presentation pres = read_presentation_file(QMAPS_TEST_DATA "/noqg.pres").to_presentation();
  EXPECT_EQ(pres.generators.size(), 3u);
  EXPECT_EQ(pres.relations.size(), 3u);
}
