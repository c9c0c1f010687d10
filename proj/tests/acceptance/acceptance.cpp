// Runs every acceptance criterion at its stated tolerance and time limit and
// prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qmaps/characters.hpp"
#include "qmaps/errors.hpp"
#include "qmaps/finite_dim.hpp"
#include "qmaps/funcmodel.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/qsg.hpp"
#include "qmaps/suites.hpp"

using namespace qmaps;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// Every listed check must be present in the report and pass.
void require_checks(Outcome& out, const SuiteReport& r, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    bool found = false;
    for (const auto& c : r.checks) {
      if (c.id != id) continue;
      found = true;
      out.require(c.ok, r.suite + "/" + id + " failed: " + c.detail);
    }
    out.require(found, r.suite + "/" + id + " missing");
  }
  out.require(r.ok(), r.suite + " not ok");
}

SuiteOptions config(std::size_t order, std::size_t copies) {
  SuiteOptions o;
  o.group = FiniteGroup::cyclic(order);
  o.copies = copies;
  return o;
}

Outcome criterion1() {
  Outcome out;
  require_checks(out, run_suite("qfam-universal", config(2, 2)),
                 {"phi-formula-Z2^2", "phi-well-defined-Z2^2", "universal-roundtrip-Z2^2"});
  return out;
}

Outcome criterion2() {
  Outcome out;
  std::vector<std::string> ids;
  for (const std::string tag : {"Z2*Z2", "Z2*Z2*Z2", "Z3*Z3", "Z2*Z3"}) {
    for (const std::string kind : {"delta-well-defined-", "delta-coassociative-", "iota-morphisms-"}) {
      ids.push_back(kind + tag);
    }
  }
  require_checks(out, run_suite("wang-coassoc"), ids);
  return out;
}

Outcome criterion3() {
  Outcome out;
  for (const auto& [n, copies] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    const Verdict v = verify_gamma_equals_delta(group_function_qsg(FiniteGroup::cyclic(n)), copies);
    out.require(v.ok(), "Gamma != Delta for Z" + std::to_string(n) + "^" + std::to_string(copies));
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  require_checks(out, run_suite("counit", config(2, 2)),
                 {"factor-counit-Z2^2", "induced-counit-Z2^2", "restricted-counit-Z2^2"});
  require_checks(out, run_suite("counit", config(3, 3)),
                 {"factor-counit-Z3^3", "induced-counit-Z3^3", "restricted-counit-Z3^3"});
  require_checks(out, run_suite("pi-morphism", config(2, 2)),
                 {"pi-qsg-morphism-Z2^2", "pi-iota-identity-Z2^2", "mu-commutative-only"});
  bool raised = false;
  try {
    (void)mu(make_matrix_algebra(2));
  } catch (const NotAHomomorphism&) {
    raised = true;
  }
  out.require(raised, "mu(M_2) did not raise NotAHomomorphism");
  return out;
}

Outcome criterion5() {
  Outcome out;
  require_checks(out, run_suite("composition-semigroup"),
                 {"delta-p-formula", "composition-well-defined", "composition-coassociative", "composition-differs",
                  "composition-counit"});
  require_checks(out, run_suite("character-monoid"),
                 {"free-convolution-formula", "free-monoid-is-group", "composition-convolution-formula",
                  "composition-monoid-not-group"});
  return out;
}

Outcome criterion6() {
  Outcome out;
  const NoqgDerivation d = derive_noqg_relations();
  const std::set<std::string> sa{"p", "q"};
  std::vector<NCExpr> expected;
  for (const char* text : {"p p + z' z - p", "p z' + z' q - z'", "z p + q z - z", "q q + z z' - q"}) {
    expected.push_back(parse_expression(text));
  }
  auto matches = [&](const NCExpr& a, const NCExpr& b) {
    return equal_up_to_sign_and_star(a, b) || equal_up_to_sign_and_star(a, b, sa);
  };
  out.require(d.square_entries.size() == 4, "expected four entries of Phi(e1)^2 - Phi(e1)");
  for (std::size_t i = 0; i < d.square_entries.size() && i < expected.size(); ++i) {
    out.require(matches(d.square_entries[i], expected[i]),
                "entry " + std::to_string(i) + " is " + d.square_entries[i].to_string());
  }
  out.require(run_suite("noqg-phi").ok(), "noqg-phi suite failed");
  return out;
}

Outcome criterion7() {
  Outcome out;
  const Presentation pres = noqg_presentation();
  SolverOptions o;
  o.step = 0.1;
  o.tol = 1e-10;
  const SolveResult r = solve_grid(pres, o);
  out.require(!r.cloud.empty(), "no solutions");
  if (r.cloud.empty()) return out;
  const ComponentReport c = cluster_components(r.cloud, 2.5 * o.step);
  out.require(c.count() == 3, "component count " + std::to_string(c.count()));
  out.require(c.isolated_count() == 2, "isolated count " + std::to_string(c.isolated_count()));
  const CharacterSystem sys(pres);
  double worst = 0.0;
  for (const auto& x : r.cloud) worst = std::max(worst, distance_to_noqg_families(sys.assignment(x)));
  out.require(worst <= 1e-5, "solution off the families by " + std::to_string(worst));
  double family = 0.0;
  for (double k : {0.0, 1.0}) family = std::max(family, residual(pres, noqg_family(NoqgFamily::kOmega, k)));
  for (int a = 0; a < 32; ++a) {
    const std::complex<double> u = std::polar(1.0, 2.0 * M_PI * a / 32.0);
    family = std::max(family, residual(pres, noqg_family(NoqgFamily::kZero, 0.5 * u)));
    for (double rad : {0.0, 0.1, 0.2, 0.3, 0.4, 0.49}) {
      family = std::max(family, residual(pres, noqg_family(NoqgFamily::kPlus, rad * u)));
      family = std::max(family, residual(pres, noqg_family(NoqgFamily::kMinus, rad * u)));
    }
  }
  out.require(family <= 1e-12, "family residual " + std::to_string(family));
  std::ostringstream s;
  s << r.cloud.size() << " solutions, " << c.count() << " components (" << c.isolated_count() << " isolated)";
  if (out.ok) out.detail = s.str();
  return out;
}

Outcome criterion8() {
  Outcome out;
  for (const auto& c : funcmodel::verify_model(1000, 10)) {
    out.require(c.ok(), c.id + " residual " + std::to_string(c.residual));
  }
  require_checks(out, run_suite("oracle-crosscheck"), {"soundness", "effectiveness"});
  return out;
}

Outcome criterion9() {
  Outcome out;
  require_checks(out, run_suite("freeprod-arith"),
                 {"associativity", "involution", "parser-roundtrip", "morphism-multiplicative"});
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "quantum family of maps and universal property", 1.0, criterion1},
      {2, "free-product comultiplication", 5.0, criterion2},
      {3, "Gamma equals Delta", 10.0, criterion3},
      {4, "counits, pi and mu", 2.0, criterion4},
      {5, "composition semigroup and character monoids", 2.0, criterion5},
      {6, "M_2 to C(Z_2) relations", 1.0, criterion6},
      {7, "M_2 to C(Z_2) character components", 120.0, criterion7},
      {8, "function model and oracle cross-check", 10.0, criterion8},
      {9, "property suites", 10.0, criterion9},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) out.require(false, "over time limit");
    std::printf("%s criterion %d: %s (%.3f s of %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.number, c.name, secs,
                c.limit_seconds, out.detail.empty() ? "" : ": ", out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
