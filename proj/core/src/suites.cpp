#include "qmaps/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "qmaps/errors.hpp"
#include "qmaps/funcmodel.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/tensor.hpp"

namespace qmaps {

namespace {

struct Outcome {
  bool ok = false;
  double residual = 0.0;
  std::string detail;
};

Outcome exact(const Verdict& v, std::string ok_detail = {}) {
  return {v.ok(), static_cast<double>(v.residue_terms()), v.ok() ? std::move(ok_detail) : v.summary()};
}

Outcome expect(bool cond, std::string detail) { return {cond, cond ? 0.0 : 1.0, std::move(detail)}; }

Outcome numeric(double residual, double limit, const std::string& what) {
  std::ostringstream d;
  d << what << " " << residual << " (limit " << limit << ")";
  return {residual <= limit, residual, d.str()};
}

void run_check(SuiteReport& report, const std::string& id, const std::string& anchor,
               const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckRecord rec;
  rec.id = id;
  rec.anchor = anchor;
  try {
    const Outcome o = fn();
    rec.ok = o.ok;
    rec.residual = o.residual;
    rec.detail = o.detail;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.residual = 1.0;
    rec.detail = std::string("exception: ") + e.what();
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(rec));
}

using Config = std::pair<FiniteGroup, std::size_t>;

std::vector<Config> configs(const SuiteOptions& opt, std::vector<Config> defaults) {
  if (!opt.group && !opt.copies) return defaults;
  return {{opt.group.value_or(FiniteGroup::cyclic(2)), opt.copies.value_or(2)}};
}

std::string tag(const Config& c) { return c.first.name() + "^" + std::to_string(c.second); }

Config cfg(std::size_t order, std::size_t n) { return {FiniteGroup::cyclic(order), n}; }

// ---------------------------------------------------------------------------

void freeprod_arith(SuiteReport& r, const SuiteOptions& opt) {
  const FreeProductPtr c = free_power(make_cn(2), 2);
  const Element p = c->generator("e1_1");
  const Element q = c->generator("e1_2");

  run_check(r, "pqp-reduced", "p q p is a reduced word of length 3", [&] {
    const Element x = p * q * p;
    const bool ok = x.terms().size() == 1 && x.terms().begin()->first.size() == 6 &&
                    x.terms().begin()->second == Scalar(1);
    return expect(ok, x.to_string());
  });
  run_check(r, "pq-qp", "(p q)(q p) = p q p since q q = q", [&] {
    return expect((p * q) * (q * p) == p * q * p, ((p * q) * (q * p)).to_string());
  });
  run_check(r, "factor-axioms", "C^n and M_n are unital *-algebras", [&] {
    std::vector<std::string> failures;
    for (const FiniteDimPtr& a : {make_cn(1), make_cn(2), make_cn(3), make_cn(4), make_matrix_algebra(2),
                                  make_matrix_algebra(3)}) {
      for (auto& f : a->axiom_failures()) failures.push_back(a->signature() + ": " + f);
    }
    return Outcome{failures.empty(), static_cast<double>(failures.size()),
                   failures.empty() ? "" : failures.front()};
  });

  Rng rng(opt.seed);
  const std::vector<AlgebraPtr> algebras{c, free_product({make_cn(3), make_matrix_algebra(2), make_cn(2)})};
  run_check(r, "associativity", "(x y) z = x (y z) on 500 random triples", [&] {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < 500; ++k) {
      const AlgebraPtr& a = algebras[k % 2];
      const Element x = random_element(a, rng, 3, 3), y = random_element(a, rng, 3, 3),
                    z = random_element(a, rng, 3, 3);
      if (!((x * y) * z == x * (y * z))) ++bad;
    }
    return expect(bad == 0, std::to_string(bad) + " of 500 triples differ");
  });
  run_check(r, "involution", "(x y)* = y* x* and x** = x on 500 random pairs", [&] {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < 500; ++k) {
      const AlgebraPtr& a = algebras[k % 2];
      const Element x = random_element(a, rng, 3, 3), y = random_element(a, rng, 3, 3);
      if (!((x * y).star() == y.star() * x.star()) || !(x.star().star() == x)) ++bad;
    }
    return expect(bad == 0, std::to_string(bad) + " of 500 pairs differ");
  });
  run_check(r, "unit", "1 x = x = x 1", [&] {
    std::size_t bad = 0;
    for (std::size_t k = 0; k < 100; ++k) {
      const AlgebraPtr& a = algebras[k % 2];
      const Element x = random_element(a, rng, 4, 4);
      if (!(a->unit() * x == x) || !(x * a->unit() == x)) ++bad;
    }
    return expect(bad == 0, std::to_string(bad) + " of 100 elements differ");
  });
  run_check(r, "parser-roundtrip", "parse(print(e)) = e on 100 random expressions", [&] {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t k = 0; k < 100; ++k) {
      const NCExpr e = random_expression({"p", "q", "z", "u_1", "x@2"}, rng);
      const std::string text = e.to_string();
      if (!(parse_expression(text) == e)) {
        if (first.empty()) first = text;
        ++bad;
      }
    }
    return expect(bad == 0, bad == 0 ? "" : std::to_string(bad) + " mismatches, first: " + first);
  });
  run_check(r, "morphism-multiplicative", "eval(x y) = eval(x) eval(y) on basis pairs", [&] {
    Verdict all;
    const QuantumFamily fam = quantum_family_of_maps(make_cn(2), 2);
    const QuantumSemigroup d = free_product_qsg({group_function_qsg(FiniteGroup::cyclic(2)),
                                                 group_function_qsg(FiniteGroup::cyclic(2))});
    for (const Morphism& m : {fam.phi, pi(c), d.comult, composition_qsg_qmap2().comult}) {
      const Verdict v = check_multiplicative(m, 2);
      all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
    }
    return exact(all, "Phi, pi, Delta, Delta_c");
  });
}

// ---------------------------------------------------------------------------

Element m2_from(const FiniteDimPtr& m2, const Scalar (&m)[2][2]) {
  Element x = m2->zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) x += m2->basis({2 * i + j}).scaled(m[i][j]);
  }
  return x;
}

// A unital *-homomorphism C^m -> C^n (x) M_2: for each i a rank-one
// projection P and 1 - P placed on two distinct minimal projections of C^m.
Morphism random_psi(const FiniteDimPtr& a, std::size_t n, Rng& rng) {
  const auto m2 = make_matrix_algebra(2);
  const auto cn = make_cn(n);
  const AlgebraPtr target = tensor({cn, m2});
  const std::size_t m = a->dim();
  std::vector<Element> images(m, target->zero());
  std::uniform_int_distribution<std::size_t> slot(0, m - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar v0 = random_scalar(rng, 4, 4, true), v1 = random_scalar(rng, 4, 4, true);
    const Scalar n0(v0.norm2()), n1(v1.norm2());
    const Scalar norm = n0 + n1;
    const Scalar pm[2][2] = {{n0 / norm, v0 * v1.conj() / norm}, {v1 * v0.conj() / norm, n1 / norm}};
    const Element proj = m2_from(m2, pm);
    const std::size_t j1 = slot(rng);
    std::size_t j2 = slot(rng);
    if (m > 1) {
      while (j2 == j1) j2 = slot(rng);
    }
    const Element ei = cn->basis({static_cast<std::int32_t>(i)});
    images[j1] += tensor_product({ei, proj});
    images[j2] += tensor_product({ei, m2->unit() - proj});
  }
  GeneratorImages gi;
  for (std::size_t j = 0; j < m; ++j) gi.emplace(a->basis_name(j), images[j]);
  return Morphism(a, target, std::move(gi));
}

void qfam_universal(SuiteReport& r, const SuiteOptions& opt) {
  Rng rng(opt.seed);
  for (const auto& conf : configs(opt, {cfg(2, 2), cfg(3, 2), cfg(2, 3)})) {
    const std::size_t n = conf.second;
    const FiniteDimPtr a = make_cn(conf.first.order());
    const QuantumFamily fam = quantum_family_of_maps(a, n);
    const auto cn = make_cn(n);
    run_check(r, "phi-formula-" + tag(conf), "Phi(a) = sum_i e_i (x) iota_i(a)", [&] {
      Verdict v;
      for (const auto& g : a->presentation().generators) {
        Element expected = fam.phi.codomain()->zero();
        for (std::size_t i = 0; i < n; ++i) {
          expected += tensor_product({cn->basis({static_cast<std::int32_t>(i)}),
                                      fam.algebra->embed(i, a->generator(g.name))});
        }
        Element diff = fam.phi.image(g.name) - expected;
        if (!diff.is_zero()) v.violations.push_back({g.name, std::move(diff)});
      }
      if (conf.first.order() == 2 && n == 2) {
        const Element p = fam.algebra->generator("e1_1"), q = fam.algebra->generator("e1_2");
        Element diff = fam.phi.image("e1") - (tensor_product({cn->generator("e1"), p}) +
                                              tensor_product({cn->generator("e2"), q}));
        if (!diff.is_zero()) v.violations.push_back({"e1 -> e1 (x) p + e2 (x) q", std::move(diff)});
      }
      return exact(v);
    });
    run_check(r, "phi-well-defined-" + tag(conf), "Phi is a unital *-homomorphism", [&] {
      return exact(check_well_defined(fam.phi));
    });
    run_check(r, "universal-roundtrip-" + tag(conf),
              "(id (x) Lambda) Phi = Psi and Lambda iota_k = Psi_k for 20 random Psi into C^n (x) M_2", [&] {
                Verdict all;
                const Morphism id_cn = identity_morphism(cn);
                for (int k = 0; k < 20; ++k) {
                  const Morphism psi = random_psi(a, n, rng);
                  const Verdict wd = check_well_defined(psi);
                  if (!wd.ok()) return Outcome{false, 1.0, "random Psi ill-defined: " + wd.summary(1)};
                  const auto parts = decompose_over_cn(psi);
                  const Morphism lambda = factor_through_free_product(fam.algebra, parts);
                  const Verdict back = compare_on_generators(
                      compose(tensor_morphisms({id_cn, lambda}), fam.phi), psi);
                  all.violations.insert(all.violations.end(), back.violations.begin(), back.violations.end());
                  for (std::size_t i = 0; i < n; ++i) {
                    const Verdict v = compare_on_generators(compose(lambda, iota(fam.algebra, i)), parts[i]);
                    all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
                  }
                }
                return exact(all, "20 random Psi");
              });
  }
}

void wang_coassoc(SuiteReport& r, const SuiteOptions& opt) {
  std::vector<std::vector<FiniteGroup>> lists;
  if (opt.group || opt.copies) {
    lists.push_back(std::vector<FiniteGroup>(opt.copies.value_or(2), opt.group.value_or(FiniteGroup::cyclic(2))));
  } else {
    const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
    lists = {{z2, z2}, {z2, z2, z2}, {z3, z3}, {z2, z3}};
  }
  for (const auto& groups : lists) {
    std::string name;
    std::vector<QuantumSemigroup> factors;
    for (const auto& g : groups) {
      name += (name.empty() ? "" : "*") + g.name();
      factors.push_back(group_function_qsg(g));
    }
    run_check(r, "factor-coassociative-" + name, "Delta on C(G) is coassociative", [&] {
      Verdict all;
      for (const auto& f : factors) {
        const Verdict v = check_coassociativity(f);
        all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      }
      return exact(all);
    });
    std::optional<QuantumSemigroup> delta;
    run_check(r, "delta-well-defined-" + name, "Delta_C(iota_k(a)) = (iota_k (x) iota_k) Delta_k(a) respects relations", [&] {
      delta = free_product_qsg(factors);
      return exact(check_well_defined(delta->comult));
    });
    run_check(r, "delta-coassociative-" + name, "(Delta (x) id) Delta = (id (x) Delta) Delta", [&] {
      if (!delta) return Outcome{false, 1.0, "Delta unavailable"};
      return exact(check_coassociativity(*delta));
    });
    run_check(r, "iota-morphisms-" + name, "each iota_k is a quantum semigroup morphism", [&] {
      if (!delta) return Outcome{false, 1.0, "Delta unavailable"};
      const auto c = std::dynamic_pointer_cast<const FreeProductAlgebra>(delta->algebra);
      Verdict all;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        const Verdict v = check_qsg_morphism(iota(c, k), factors[k], *delta);
        all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      }
      return exact(all, std::to_string(factors.size()) + " inclusions");
    });
  }
}

void sadr_gamma(SuiteReport& r, const SuiteOptions& opt) {
  for (const auto& conf : configs(opt, {cfg(2, 2), cfg(2, 3), cfg(3, 2), cfg(4, 2)})) {
    run_check(r, "gamma-equals-delta-" + tag(conf),
              "Gamma read off the diagram equals the free-product Delta on every generator", [&] {
                const QuantumSemigroup a = group_function_qsg(conf.first);
                const Verdict v = verify_gamma_equals_delta(a, conf.second);
                return exact(v, std::to_string(conf.first.order() * conf.second) + " generators agree");
              });
  }
}

void counit(SuiteReport& r, const SuiteOptions& opt) {
  for (const auto& conf : configs(opt, {cfg(2, 2), cfg(2, 3), cfg(3, 2), cfg(3, 3)})) {
    const QuantumSemigroup a = group_function_qsg(conf.first);
    const Character eps = group_counit(conf.first);
    run_check(r, "factor-counit-" + tag(conf), "evaluation at the identity is a counit of C(G)", [&] {
      return exact(check_counit(a, eps));
    });
    run_check(r, "induced-counit-" + tag(conf), "the induced eps_C is a counit of the free product", [&] {
      const QuantumSemigroup c = free_product_qsg(std::vector<QuantumSemigroup>(conf.second, a));
      const auto fp = std::dynamic_pointer_cast<const FreeProductAlgebra>(c.algebra);
      const Character eps_c = counit_of_free_product(fp, std::vector<Character>(conf.second, eps));
      Verdict all = check_well_defined(eps_c);
      const Verdict v = check_counit(c, eps_c);
      all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      return exact(all);
    });
    run_check(r, "restricted-counit-" + tag(conf), "eps_C o iota_k is a counit of each factor", [&] {
      const QuantumSemigroup c = free_product_qsg(std::vector<QuantumSemigroup>(conf.second, a));
      const auto fp = std::dynamic_pointer_cast<const FreeProductAlgebra>(c.algebra);
      const Character eps_c = counit_of_free_product(fp, std::vector<Character>(conf.second, eps));
      Verdict all;
      for (std::size_t k = 0; k < conf.second; ++k) {
        const Verdict v = check_counit(a, compose(eps_c, iota(fp, k)));
        all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      }
      return exact(all);
    });
  }
  run_check(r, "trivial-no-counit", "Delta(a) = a (x) 1 on C^2 admits no counit", [&] {
    const auto c2 = make_cn(2);
    const QuantumSemigroup t = trivial_qsg(c2);
    std::size_t passing = 0;
    for (const auto& values : {std::vector<Scalar>{1, 0}, std::vector<Scalar>{0, 1}}) {
      if (check_counit(t, point_character(c2, values)).ok()) ++passing;
    }
    return expect(passing == 0, std::to_string(passing) + " of 2 characters pass");
  });
}

void pi_morphism(SuiteReport& r, const SuiteOptions& opt) {
  for (const auto& conf : configs(opt, {cfg(2, 2), cfg(3, 2), cfg(2, 3)})) {
    const QuantumSemigroup a = group_function_qsg(conf.first);
    const QuantumSemigroup c = free_product_qsg(std::vector<QuantumSemigroup>(conf.second, a));
    const auto fp = std::dynamic_pointer_cast<const FreeProductAlgebra>(c.algebra);
    run_check(r, "pi-qsg-morphism-" + tag(conf), "pi: C -> A is a quantum semigroup morphism", [&] {
      Verdict all = check_well_defined(pi(fp));
      const Verdict v = check_qsg_morphism(pi(fp), c, a);
      all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      return exact(all);
    });
    run_check(r, "pi-iota-identity-" + tag(conf), "pi o iota_k = id and pi factors the identities", [&] {
      Verdict all;
      const Morphism id = identity_morphism(a.algebra);
      const Morphism lifted = factor_through_free_product(fp, std::vector<Morphism>(conf.second, id));
      const Verdict same = compare_on_generators(lifted, pi(fp));
      all.violations.insert(all.violations.end(), same.violations.begin(), same.violations.end());
      for (std::size_t k = 0; k < conf.second; ++k) {
        const Verdict v = compare_on_generators(compose(pi(fp), iota(fp, k)), id);
        all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
      }
      return exact(all);
    });
    run_check(r, "counit-qsg-morphism-" + tag(conf),
              "eps_C: C -> C is a quantum semigroup morphism restricting to eps on each factor", [&] {
                const Character eps = group_counit(conf.first);
                const Character eps_c = counit_of_free_product(fp, std::vector<Character>(conf.second, eps));
                const QuantumSemigroup one = group_function_qsg(FiniteGroup::cyclic(1));
                Verdict all = check_qsg_morphism(eps_c, c, one);
                for (std::size_t k = 0; k < conf.second; ++k) {
                  const Verdict v = compare_on_generators(compose(eps_c, iota(fp, k)), eps);
                  all.violations.insert(all.violations.end(), v.violations.begin(), v.violations.end());
                }
                return exact(all);
              });
  }
  run_check(r, "pi-fails-for-composition", "(pi (x) pi) Delta_c(p) = 1 (x) p differs from Delta_A(p)", [&] {
    const QuantumSemigroup comp = composition_qsg_qmap2();
    const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
    const auto fp = std::dynamic_pointer_cast<const FreeProductAlgebra>(comp.algebra);
    const Morphism p = pi(fp);
    const Verdict v = check_qsg_morphism(p, comp, a);
    const Element pushed = tensor_morphisms({p, p})(comp.comult.image("e1_1"));
    const bool formula = pushed == tensor_product({a.algebra->unit(), a.algebra->generator("e1")});
    return expect(!v.ok() && formula, v.ok() ? "unexpectedly a morphism" : "fails as expected");
  });
  run_check(r, "mu-commutative-only", "mu is a homomorphism on C^2, C^3 and not on M_2", [&] {
    const bool c2 = check_well_defined(mu(make_cn(2))).ok() && check_well_defined(mu(make_cn(3))).ok();
    bool raised = false;
    try {
      (void)mu(make_matrix_algebra(2));
    } catch (const NotAHomomorphism&) {
      raised = true;
    }
    return expect(c2 && raised, raised ? "mu(M_2) raises NotAHomomorphism" : "mu(M_2) did not raise");
  });
}

void composition_semigroup(SuiteReport& r, const SuiteOptions&) {
  const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
  const QuantumSemigroup delta = free_product_qsg({a, a});
  const QuantumSemigroup comp = composition_qsg_qmap2();
  const auto c = std::dynamic_pointer_cast<const FreeProductAlgebra>(delta.algebra);
  const Element p = c->generator("e1_1");
  const Element one = c->unit();
  run_check(r, "delta-p-formula", "Delta(p) = 2 p(x)p - p(x)1 - 1(x)p + 1(x)1 = (iota_1 (x) iota_1) Delta(delta_0)", [&] {
    const Element expected = tensor_product({p, p}).scaled(2) - tensor_product({p, one}) -
                             tensor_product({one, p}) + tensor_product({one, one});
    const Morphism i1 = iota(c, 0);
    const Element pushed = tensor_morphisms({i1, i1})(a.comult.image("e1"));
    const Element alt = tensor_product({p - one, p}) + tensor_product({one, one}) + tensor_product({p, p - one});
    const bool ok = delta.comult.image("e1_1") == expected && pushed == expected && alt == expected;
    return expect(ok, ok ? "" : (delta.comult.image("e1_1") - expected).to_string());
  });
  run_check(r, "composition-well-defined", "Delta_c respects the relations of C^2 * C^2", [&] {
    return exact(check_well_defined(comp.comult));
  });
  run_check(r, "composition-projection", "Delta_c(p)^2 = Delta_c(p)", [&] {
    const Element d = comp.comult.image("e1_1");
    const bool ok = d * d == d && d.star() == d;
    return expect(ok, ok ? "" : (d * d - d).to_string());
  });
  run_check(r, "composition-coassociative", "Delta_c is coassociative", [&] {
    return exact(check_coassociativity(comp));
  });
  run_check(r, "composition-differs", "Delta_c differs from the free-product Delta on p", [&] {
    const Verdict v = compare_on_generators(comp.comult, delta.comult);
    bool on_p = false;
    for (const auto& viol : v.violations) on_p = on_p || viol.label.find("e1_1") != std::string::npos;
    return expect(!v.ok() && on_p, v.summary(1));
  });
  run_check(r, "composition-counit", "eps(p) = 1, eps(q) = 0 is a counit of Delta_c", [&] {
    return exact(check_counit(comp, chi_ab(c, 1, 0)));
  });
}

void character_monoid_suite(SuiteReport& r, const SuiteOptions&) {
  const QuantumSemigroup a = group_function_qsg(FiniteGroup::cyclic(2));
  const QuantumSemigroup delta = free_product_qsg({a, a});
  const QuantumSemigroup comp = composition_qsg_qmap2();
  const auto c = std::dynamic_pointer_cast<const FreeProductAlgebra>(delta.algebra);
  const std::vector<std::pair<int, int>> ab{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  std::vector<Character> chars;
  for (const auto& [x, y] : ab) chars.push_back(chi_ab(c, x, y));
  const Element p = c->generator("e1_1");

  run_check(r, "free-convolution-formula", "(chi_ab * chi_a'b')(p) = 2aa' - a - a' + 1", [&] {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const int x = ab[i].first, y = ab[j].first;
        if (!(character_value(convolve_characters(chars[i], chars[j], delta), p) == Scalar(2 * x * y - x - y + 1)))
          ++bad;
      }
    }
    return expect(bad == 0, std::to_string(bad) + " of 16 products differ");
  });
  run_check(r, "free-monoid-is-group", "characters of the free-product Delta form Z2 x Z2", [&] {
    const auto table = character_monoid(delta, chars);
    bool involutive = true;
    for (std::size_t i = 0; i < 4; ++i) involutive = involutive && table[i][i] == 3;
    const bool identity = table[3][0] == 0 && table[0][3] == 0;  // chi_11 is the counit
    return expect(is_group(table) && involutive && identity, "identity chi_11, every element of order <= 2");
  });
  run_check(r, "composition-convolution-formula", "(chi_ab * chi_a'b')(p) = aa' + (1 - a)b'", [&] {
    std::size_t bad = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const int x = ab[i].first, x2 = ab[j].first, y2 = ab[j].second;
        if (!(character_value(convolve_characters(chars[i], chars[j], comp), p) == Scalar(x * x2 + (1 - x) * y2)))
          ++bad;
      }
    }
    return expect(bad == 0, std::to_string(bad) + " of 16 products differ");
  });
  run_check(r, "composition-monoid-not-group", "characters of Delta_c form the transformation monoid on 2 points", [&] {
    const auto table = character_monoid(comp, chars);
    std::size_t idempotents = 0;
    for (std::size_t i = 0; i < 4; ++i) idempotents += table[i][i] == i ? 1 : 0;
    const bool identity = table[2][1] == 1 && table[1][2] == 1;  // chi_10 is the counit
    return expect(!is_group(table) && idempotents == 3 && identity,
                  std::to_string(idempotents) + " idempotents, identity chi_10");
  });
}

void noqg_phi(SuiteReport& r, const SuiteOptions&) {
  const std::set<std::string> sa{"p", "q"};
  const NoqgDerivation d = derive_noqg_relations();
  run_check(r, "square-entries", "entries of Phi(e1)^2 - Phi(e1) are p^2+z*z-p, (zp+qz-z)*, zp+qz-z, q^2+zz*-q", [&] {
    const std::vector<NCExpr> expected{parse_expression("p p + z' z - p"), parse_expression("(z p + q z - z)'"),
                                       parse_expression("z p + q z - z"), parse_expression("z z' + q q - q")};
    std::size_t bad = 0;
    std::string detail;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!(d.square_entries[k].with_self_adjoint(sa) == expected[k].with_self_adjoint(sa))) {
        ++bad;
        detail += "entry " + std::to_string(k) + ": " + d.square_entries[k].to_string() + "; ";
      }
    }
    const bool adjoint =
        d.square_entries[1].with_self_adjoint(sa) == d.square_entries[2].star().with_self_adjoint(sa);
    return Outcome{bad == 0 && adjoint, static_cast<double>(bad), detail};
  });
  run_check(r, "adjoint-entries", "Phi(e1)* - Phi(e1) vanishes exactly when p* = p and q* = q", [&] {
    const std::vector<NCExpr> expected{parse_expression("p' - p"), parse_expression("q' - q")};
    bool ok = d.adjoint_entries.size() == 2;
    for (const auto& e : expected) {
      bool found = false;
      for (const auto& x : d.adjoint_entries) found = found || equal_up_to_sign_and_star(x, e);
      ok = ok && found;
    }
    return expect(ok, std::to_string(d.adjoint_entries.size()) + " nonzero entries");
  });
  run_check(r, "relations-match-presentation", "derived relations coincide with the presentation up to sign and adjoint", [&] {
    const Presentation pres = noqg_presentation();
    auto contains = [&](const std::vector<NCExpr>& list, const NCExpr& e) {
      for (const auto& x : list) {
        if (equal_up_to_sign_and_star(x, e)) return true;
        if (!x.with_self_adjoint(sa).is_zero() && equal_up_to_sign_and_star(x, e, sa)) return true;
      }
      return false;
    };
    std::size_t missing = 0;
    const auto rels = pres.all_relations();
    for (const auto& e : d.relations) missing += contains(rels, e) ? 0 : 1;
    for (const auto& e : rels) missing += contains(d.relations, e) ? 0 : 1;
    return expect(missing == 0, std::to_string(d.relations.size()) + " derived, " +
                                    std::to_string(rels.size()) + " in the presentation, " +
                                    std::to_string(missing) + " unmatched");
  });
}

void noqg_characters(SuiteReport& r, const SuiteOptions& opt) {
  const Presentation pres = noqg_presentation();
  run_check(r, "closed-form-families", "every closed-form character has residual <= 1e-12", [&] {
    double worst = 0.0;
    for (double k : {0.0, 1.0}) worst = std::max(worst, residual(pres, noqg_family(NoqgFamily::kOmega, k)));
    for (int a = 0; a < 16; ++a) {
      const double theta = 2.0 * M_PI * a / 16.0;
      const std::complex<double> u(std::cos(theta), std::sin(theta));
      for (double rad : {0.0, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49, 0.4999}) {
        worst = std::max(worst, residual(pres, noqg_family(NoqgFamily::kPlus, rad * u)));
        worst = std::max(worst, residual(pres, noqg_family(NoqgFamily::kMinus, rad * u)));
      }
      worst = std::max(worst, residual(pres, noqg_family(NoqgFamily::kZero, 0.5 * u)));
    }
    return numeric(worst, 1e-12, "max residual");
  });

  SolverOptions so;
  so.step = opt.step;
  so.tol = opt.tol;
  so.threads = opt.threads;
  std::optional<SolveResult> solved;
  run_check(r, "solve", "grid scan and Gauss-Newton refinement", [&] {
    solved = solve_grid(pres, so);
    return expect(!solved->cloud.empty(), std::to_string(solved->cloud.size()) + " solutions from " +
                                              std::to_string(solved->seeds) + " seeds, " +
                                              std::to_string(solved->dropped) + " dropped");
  });
  if (!solved) return;
  const CharacterSystem sys(pres);
  run_check(r, "solutions-on-families", "every refined solution is within 1e-5 of a closed-form character", [&] {
    double worst = 0.0;
    for (const auto& x : solved->cloud) worst = std::max(worst, distance_to_noqg_families(sys.assignment(x)));
    return numeric(worst, 1e-5, "max distance");
  });
  const ComponentReport comps = cluster_components(solved->cloud, 2.5 * so.step);
  run_check(r, "component-count", "the character space has 3 components", [&] {
    return Outcome{comps.count() == 3, std::abs(static_cast<double>(comps.count()) - 3.0),
                   std::to_string(comps.count()) + " components"};
  });
  run_check(r, "isolated-components", "exactly 2 components are isolated points", [&] {
    return Outcome{comps.isolated_count() == 2, std::abs(static_cast<double>(comps.isolated_count()) - 2.0),
                   std::to_string(comps.isolated_count()) + " isolated"};
  });
  run_check(r, "equator-gluing", "solutions with |z| near 1/2 have p and q near 1/2", [&] {
    double worst = 0.0;
    std::size_t near = 0;
    for (const auto& x : solved->cloud) {
      const auto a = sys.assignment(x);
      const double rz = std::abs(a.at("z"));
      if (rz < 0.49) continue;
      ++near;
      const double bound = std::sqrt(std::max(0.0, 0.25 - 0.49 * 0.49));
      worst = std::max(worst, std::max(std::abs(a.at("p").real() - 0.5), std::abs(a.at("q").real() - 0.5)) - bound);
    }
    return Outcome{near > 0 && worst <= 1e-6, std::max(worst, 0.0), std::to_string(near) + " solutions near the equator"};
  });
  CharacterSummary summary;
  summary.coordinate_names = solved->coordinate_names;
  summary.solutions = solved->cloud;
  summary.grid_points = solved->grid_points;
  summary.seeds = solved->seeds;
  summary.dropped = solved->dropped;
  summary.components = comps;
  r.characters = std::move(summary);
}

void funcmodel_suite(SuiteReport& r, const SuiteOptions&) {
  using namespace funcmodel;
  for (const auto& check : verify_model(1000, 10)) {
    run_check(r, check.id, check.description, [&] { return numeric(check.residual, check.limit, "max"); });
  }
  const auto c = model_algebra();
  const Element p = c->generator("e1_1"), q = c->generator("e1_2");
  run_check(r, "model-examples", "q(1/2) = diag(1,0); p q p vanishes at 1/2; p q - q p vanishes at 0 but not at 1/4", [&] {
    Mat2 d;
    d << 1.0, 0.0, 0.0, 0.0;
    const double a = max_entry(sample_q(0.5) - d);
    const double b = max_entry(evaluate_element(p * q * p, 0.5));
    const double e = max_entry(evaluate_element(p * q - q * p, 0.0));
    const double w = max_entry(evaluate_element(p * q - q * p, 0.25));
    return Outcome{std::max({a, b, e}) <= 1e-15 && w > 0.1, std::max({a, b, e}), "witness at 1/4: " + std::to_string(w)};
  });
}

void oracle_crosscheck(SuiteReport& r, const SuiteOptions& opt) {
  using namespace funcmodel;
  const auto c = model_algebra();
  const std::size_t samples = std::max<std::size_t>(opt.samples, 2);
  Rng rng(opt.seed);
  run_check(r, "oracle-examples", "p q (1 - q) p is zero in the model, p q - q p is not", [&] {
    const double z = expression_residual(parse_expression("e1_1 e1_2 (1 - e1_2) e1_1"), samples);
    const double nz = expression_residual(parse_expression("e1_1 e1_2 - e1_2 e1_1"), samples);
    return Outcome{z <= 1e-9 && nz > 1e-4, z, "nonzero witness " + std::to_string(nz)};
  });
  run_check(r, "soundness", "200 expressions that vanish exactly also vanish in the model (tol 1e-9)", [&] {
    std::size_t violations = 0, not_zero = 0;
    double worst = 0.0;
    const NCExpr qq = parse_expression("e1_2 e1_2 - e1_2");
    const NCExpr pp = parse_expression("e1_1 - e1_1 e1_1");
    for (std::size_t k = 0; k < 200; ++k) {
      const Element a = random_element(c, rng, 3, 3), b = random_element(c, rng, 3, 3),
                    d = random_element(c, rng, 3, 3);
      NCExpr e;
      switch (k % 4) {
        case 0: e = to_expression(a) * to_expression(b) - to_expression(a * b); break;
        case 1: e = to_expression(a * b) * to_expression(d) - to_expression(a * (b * d)); break;
        case 2: e = to_expression(a).star() - to_expression(a.star()); break;
        default: e = to_expression(a) * qq * to_expression(b) + to_expression(d) * pp; break;
      }
      if (!c->evaluate(e).is_zero()) ++not_zero;
      const double res = expression_residual(e, samples);
      worst = std::max(worst, res);
      if (res > 1e-9) ++violations;
    }
    return Outcome{violations == 0 && not_zero == 0, worst,
                   std::to_string(violations) + " violations, " + std::to_string(not_zero) +
                       " corpus items not exactly zero"};
  });
  run_check(r, "effectiveness", "200 nonzero elements (|coeff| >= 1/8, length <= 4) have model residual >= 1e-4", [&] {
    std::size_t misses = 0;
    double smallest = INFINITY;
    for (std::size_t k = 0; k < 200; ++k) {
      const Element x = random_element(c, rng, 4, 4, false);
      if (x.is_zero()) continue;
      const double res = oracle_residual(x, samples);
      smallest = std::min(smallest, res);
      if (res < 1e-4) ++misses;
    }
    std::ostringstream d;
    d << misses << " missed, smallest residual " << smallest;
    return Outcome{misses == 0, static_cast<double>(misses), d.str()};
  });
}

using SuiteFn = void (*)(SuiteReport&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"freeprod-arith", freeprod_arith},
      {"qfam-universal", qfam_universal},
      {"wang-coassoc", wang_coassoc},
      {"sadr-gamma", sadr_gamma},
      {"counit", counit},
      {"pi-morphism", pi_morphism},
      {"composition-semigroup", composition_semigroup},
      {"character-monoid", character_monoid_suite},
      {"noqg-phi", noqg_phi},
      {"noqg-characters", noqg_characters},
      {"funcmodel", funcmodel_suite},
      {"oracle-crosscheck", oracle_crosscheck},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = name;
  if (name == "all") {
    for (const auto& [sub, fn] : registry()) {
      SuiteReport part = run_suite(sub, options);
      for (auto& c : part.checks) {
        c.id = sub + "/" + c.id;
        report.checks.push_back(std::move(c));
      }
      if (part.characters) report.characters = std::move(part.characters);
    }
    return report;
  }
  for (const auto& [sub, fn] : registry()) {
    if (sub == name) {
      fn(report, options);
      return report;
    }
  }
  throw InvalidArgument("unknown suite: " + name);
}

SuiteReport solve_characters_report(const Presentation& pres, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = "solve-characters";
  // Unsupported systems are rejected as input errors, not failed checks.
  (void)CharacterSystem(pres);
  SolverOptions so;
  so.step = options.step;
  so.tol = options.tol;
  so.threads = options.threads;
  std::optional<SolveResult> solved;
  run_check(report, "solve", "scalar solutions of the relations", [&] {
    solved = solve_grid(pres, so);
    return expect(!solved->cloud.empty(), std::to_string(solved->cloud.size()) + " solutions from " +
                                              std::to_string(solved->seeds) + " seeds, " +
                                              std::to_string(solved->dropped) + " dropped");
  });
  if (!solved || solved->cloud.empty()) return report;
  const CharacterSystem sys(pres);
  run_check(report, "residuals", "every solution satisfies the relations to tol", [&] {
    double worst = 0.0;
    for (const auto& x : solved->cloud) worst = std::max(worst, sys.residual(x));
    return numeric(worst, so.tol, "max residual");
  });
  CharacterSummary summary;
  summary.coordinate_names = solved->coordinate_names;
  summary.solutions = solved->cloud;
  summary.grid_points = solved->grid_points;
  summary.seeds = solved->seeds;
  summary.dropped = solved->dropped;
  summary.components = cluster_components(solved->cloud, 2.5 * so.step);
  report.characters = std::move(summary);
  return report;
}

FiniteGroup parse_group(const std::string& spec) {
  if (spec.size() >= 2 && spec[0] == 'Z' &&
      spec.find_first_not_of("0123456789", 1) == std::string::npos) {
    return FiniteGroup::cyclic(std::stoul(spec.substr(1)));
  }
  std::ifstream in(spec);
  if (!in) throw InvalidArgument("group must be Z<n> or a readable table file: " + spec);
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw InvalidArgument("group file must start with a positive order: " + spec);
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (auto& row : table) {
    for (auto& v : row) {
      if (!(in >> v)) throw InvalidArgument("group file table is incomplete: " + spec);
    }
  }
  return FiniteGroup(std::move(table));
}

Character chi_ab(const FreeProductPtr& c, const Scalar& a, const Scalar& b) {
  if (c->num_factors() != 2 || !c->factor(0)->same_as(*make_cn(2)) || !c->factor(1)->same_as(*make_cn(2))) {
    throw InvalidArgument("chi_ab needs C^2 * C^2");
  }
  return factor_through_free_product(
      c, {point_character(make_cn(2), {a, Scalar(1) - a}), point_character(make_cn(2), {b, Scalar(1) - b})});
}

}  // namespace qmaps
