#include "qmaps/qsg.hpp"

#include <set>

#include "qmaps/errors.hpp"
#include "qmaps/free_star.hpp"
#include "qmaps/parser.hpp"
#include "qmaps/tensor.hpp"

namespace qmaps {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidArgument("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidArgument("group table is not square");
    for (auto v : row) {
      if (v >= n) throw InvalidArgument("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw InvalidArgument("group table is not associative");
        }
      }
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    found = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (table_[e][a] != a || table_[a][e] != a) {
        found = false;
        break;
      }
    }
    if (found) identity_ = e;
  }
  if (!found) throw InvalidArgument("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw InvalidArgument("group table element without inverse");
  }
  name_ = "G" + std::to_string(n);
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  FiniteGroup g(std::move(t));
  g.name_ = "Z" + std::to_string(n);
  return g;
}

Verdict check_coassociativity(const QuantumSemigroup& q) {
  Verdict wd = check_well_defined(q.comult);
  if (!wd.ok()) return wd;
  const Morphism id = identity_morphism(q.algebra);
  const Morphism left = tensor_morphisms({q.comult, id});
  const Morphism right = tensor_morphisms({id, q.comult});
  Verdict v;
  for (const auto& g : q.algebra->presentation().generators) {
    const Element& d = q.comult.image(g.name);
    Element diff = left(d) - right(d);
    if (!diff.is_zero()) v.violations.push_back({"coassociativity on " + g.name, std::move(diff)});
  }
  return v;
}

QuantumSemigroup make_quantum_semigroup(Morphism comult) {
  const AlgebraPtr c = comult.domain();
  require_same_owner(*comult.codomain(), *tensor({c, c}), "comultiplication codomain");
  QuantumSemigroup q{c, std::move(comult)};
  const Verdict wd = check_well_defined(q.comult);
  if (!wd.ok()) throw NotAHomomorphism("comultiplication is not well defined: " + wd.summary(1));
  const Verdict co = check_coassociativity(q);
  if (!co.ok()) throw DiagramInconsistency("comultiplication is not coassociative: " + co.summary(1));
  return q;
}

Verdict check_qsg_morphism(const Morphism& theta, const QuantumSemigroup& dom,
                           const QuantumSemigroup& cod) {
  require_same_owner(*theta.domain(), *dom.algebra, "qsg morphism domain");
  require_same_owner(*theta.codomain(), *cod.algebra, "qsg morphism codomain");
  const Morphism tt = tensor_morphisms({theta, theta});
  Verdict v;
  for (const auto& g : dom.algebra->presentation().generators) {
    Element diff = tt(dom.comult.image(g.name)) - cod.comult(theta.image(g.name));
    if (!diff.is_zero()) v.violations.push_back({"morphism property on " + g.name, std::move(diff)});
  }
  return v;
}

QuantumSemigroup group_function_qsg(const FiniteGroup& g) {
  const auto a = make_cn(g.order());
  const AlgebraPtr aa = tensor({a, a});
  auto delta = [&](std::size_t k) { return a->basis({static_cast<std::int32_t>(k)}); };
  GeneratorImages images;
  for (std::size_t x = 0; x < g.order(); ++x) {
    Element sum = aa->zero();
    for (std::size_t h = 0; h < g.order(); ++h) sum += tensor_product({delta(h), delta(g.mul(g.inverse(h), x))});
    images.emplace(a->basis_name(x), std::move(sum));
  }
  return make_quantum_semigroup(Morphism(a, aa, std::move(images)));
}

FiniteDimPtr scalars() { return make_cn(1); }

Character point_character(const FiniteDimPtr& cn, const std::vector<Scalar>& values) {
  if (values.size() != cn->dim()) throw InvalidArgument("point_character: wrong number of values");
  const auto s = scalars();
  GeneratorImages images;
  for (std::size_t i = 0; i < cn->dim(); ++i) images.emplace(cn->basis_name(i), s->scalar(values[i]));
  return Morphism(cn, s, std::move(images));
}

Morphism group_counit(const FiniteGroup& g) {
  std::vector<Scalar> values(g.order());
  values[g.identity()] = 1;
  return point_character(make_cn(g.order()), values);
}

Scalar character_value(const Character& chi, const Element& x) {
  const Element v = chi(x);
  Scalar out;
  for (const auto& [w, c] : v.terms()) out += c;  // every key of a one-dimensional object is its unit
  return out;
}

QuantumSemigroup trivial_qsg(const AlgebraPtr& a) {
  GeneratorImages images;
  for (const auto& g : a->presentation().generators) {
    images.emplace(g.name, tensor_product({a->generator(g.name), a->unit()}));
  }
  return make_quantum_semigroup(Morphism(a, tensor({a, a}), std::move(images)));
}

QuantumFamily quantum_family_of_maps(const FiniteDimPtr& a, std::size_t n) {
  if (n == 0) throw InvalidArgument("quantum_family_of_maps: n must be positive");
  const FreeProductPtr c = free_power(a, n);
  std::vector<Morphism> inclusions;
  for (std::size_t k = 0; k < n; ++k) inclusions.push_back(iota(c, k));
  return {c, assemble_over_cn(make_cn(n), inclusions)};
}

QuantumSemigroup free_product_qsg(const std::vector<QuantumSemigroup>& factors) {
  if (factors.empty()) throw InvalidArgument("free_product_qsg: no factors");
  std::vector<AlgebraPtr> algebras;
  for (const auto& f : factors) {
    const Verdict v = check_coassociativity(f);
    if (!v.ok()) throw InvalidArgument("free_product_qsg: factor is not coassociative: " + v.summary(1));
    algebras.push_back(f.algebra);
  }
  const FreeProductPtr c = free_product(algebras);
  if (c->num_factors() != factors.size()) {
    throw InvalidArgument("free_product_qsg: factors must be finite-dimensional");
  }
  GeneratorImages images;
  std::vector<Morphism> inclusions;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    inclusions.push_back(iota(c, k));
    const Morphism ii = tensor_morphisms({inclusions.back(), inclusions.back()});
    for (const auto& [name, d] : factors[k].comult.images()) {
      images.emplace(FreeProductAlgebra::copy_name(name, k), ii(d));
    }
  }
  QuantumSemigroup q = make_quantum_semigroup(Morphism(c, tensor({c, c}), std::move(images)));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const Verdict v = check_qsg_morphism(inclusions[k], factors[k], q);
    if (!v.ok()) throw DiagramInconsistency("inclusion is not a quantum semigroup morphism: " + v.summary(1));
  }
  return q;
}

Morphism sadr_comultiplication(const QuantumSemigroup& a, std::size_t n) {
  const auto fd = std::dynamic_pointer_cast<const FiniteDimAlgebra>(a.algebra);
  if (!fd) throw InvalidArgument("sadr_comultiplication: algebra must be finite-dimensional");
  const QuantumFamily family = quantum_family_of_maps(fd, n);
  const FiniteDimPtr b = make_cn(n);
  const AlgebraPtr c = family.algebra;
  const Morphism id_c = identity_morphism(c);
  const Morphism phi_phi = tensor_morphisms({family.phi, family.phi});
  const Morphism collapse = tensor_morphisms({mu(b), id_c, id_c});
  const AlgebraPtr cc = tensor({c, c});

  GeneratorImages images;
  std::map<std::string, Element> diagram;
  for (const auto& g : fd->presentation().generators) {
    // B C B C -> B B C C -> B C C
    const Element x = collapse(flip_legs(phi_phi(a.comult.image(g.name)), 1, 2));
    const auto pieces = decompose_first_leg(x);
    for (std::size_t k = 0; k < n; ++k) {
      auto it = pieces.find(Word{static_cast<std::int32_t>(k)});
      images.emplace(FreeProductAlgebra::copy_name(g.name, k), it == pieces.end() ? cc->zero() : it->second);
    }
    diagram.emplace(g.name, x);
  }
  Morphism gamma(c, cc, std::move(images));
  const Morphism lifted = tensor_morphisms({identity_morphism(b), gamma});
  for (const auto& [name, x] : diagram) {
    if (!(lifted(family.phi.image(name)) == x)) {
      throw DiagramInconsistency("(id (x) Gamma) Phi differs from the collapsed (Phi (x) Phi) Delta on " + name);
    }
  }
  const Verdict wd = check_well_defined(gamma);
  if (!wd.ok()) throw NotAHomomorphism("Gamma is not well defined: " + wd.summary(1));
  return gamma;
}

Verdict verify_gamma_equals_delta(const QuantumSemigroup& a, std::size_t n) {
  const Morphism gamma = sadr_comultiplication(a, n);
  const QuantumSemigroup delta = free_product_qsg(std::vector<QuantumSemigroup>(n, a));
  return compare_on_generators(gamma, delta.comult);
}

Verdict check_counit(const QuantumSemigroup& q, const Character& eps) {
  require_same_owner(*eps.domain(), *q.algebra, "counit domain");
  const Morphism id = identity_morphism(q.algebra);
  const Morphism left = tensor_morphisms({eps, id});
  const Morphism right = tensor_morphisms({id, eps});
  const AlgebraPtr one = eps.codomain();
  Verdict v;
  for (const auto& g : q.algebra->presentation().generators) {
    const Element& d = q.comult.image(g.name);
    const Element x = q.algebra->generator(g.name);
    Element l = left(d) - tensor_product({one->unit(), x});
    if (!l.is_zero()) v.violations.push_back({"(eps (x) id) Delta on " + g.name, std::move(l)});
    Element r = right(d) - tensor_product({x, one->unit()});
    if (!r.is_zero()) v.violations.push_back({"(id (x) eps) Delta on " + g.name, std::move(r)});
  }
  return v;
}

Character counit_of_free_product(const FreeProductPtr& c, const std::vector<Character>& counits) {
  return factor_through_free_product(c, counits);
}

QuantumSemigroup composition_qsg_qmap2() {
  const auto c2 = make_cn(2);
  const FreeProductPtr c = free_power(c2, 2);
  const Element p = c->generator("e1_1");
  const Element q = c->generator("e1_2");
  const Element one = c->unit();
  const AlgebraPtr cc = tensor({c, c});
  const Element dp = tensor_product({p, p}) + tensor_product({one - p, q});
  const Element dq = tensor_product({q, p}) + tensor_product({one - q, q});
  GeneratorImages images;
  images.emplace("e1_1", dp);
  images.emplace("e2_1", cc->unit() - dp);
  images.emplace("e1_2", dq);
  images.emplace("e2_2", cc->unit() - dq);
  return make_quantum_semigroup(Morphism(c, cc, std::move(images)));
}

Character convolve_characters(const Character& chi, const Character& chi2, const QuantumSemigroup& q) {
  const Morphism both = tensor_morphisms({chi, chi2});
  const auto s = scalars();
  GeneratorImages images;
  for (const auto& g : q.algebra->presentation().generators) {
    const Element pushed = both(q.comult.image(g.name));
    Scalar value;
    for (const auto& [w, c] : pushed.terms()) value += c;
    images.emplace(g.name, s->scalar(value));
  }
  return Morphism(q.algebra, s, std::move(images));
}

std::vector<std::vector<std::size_t>> character_monoid(const QuantumSemigroup& q,
                                                       const std::vector<Character>& chars) {
  std::vector<std::vector<std::size_t>> table(chars.size(), std::vector<std::size_t>(chars.size()));
  for (std::size_t i = 0; i < chars.size(); ++i) {
    for (std::size_t j = 0; j < chars.size(); ++j) {
      const Character prod = convolve_characters(chars[i], chars[j], q);
      std::size_t found = chars.size();
      for (std::size_t k = 0; k < chars.size() && found == chars.size(); ++k) {
        if (compare_on_generators(prod, chars[k]).ok()) found = k;
      }
      if (found == chars.size()) {
        throw InvalidArgument("character list is not closed under convolution (" + std::to_string(i) +
                              " * " + std::to_string(j) + ")");
      }
      table[i][j] = found;
    }
  }
  return table;
}

bool is_group(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool identity = true;
    for (std::size_t a = 0; a < n && identity; ++a) identity = table[e][a] == a && table[a][e] == a;
    if (!identity) continue;
    for (std::size_t a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == e && table[b][a] == e;
      if (!has_inverse) return false;
    }
    return true;
  }
  return false;
}

Presentation noqg_presentation() {
  Presentation p;
  p.generators = {{"p", true}, {"q", true}, {"z", false}};
  p.relations = {parse_relation("p = p p + z' z"), parse_relation("q = q q + z z'"),
                 parse_relation("z p = (1 - q) z")};
  p.validate();
  return p;
}

namespace {

Morphism noqg_phi_into(const AlgebraPtr& ambient) {
  const auto m2 = make_matrix_algebra(2);
  const auto c2 = make_cn(2);
  const AlgebraPtr target = tensor({m2, ambient});
  auto unit = [&](std::int32_t i, std::int32_t j) { return m2->basis({2 * i + j}); };
  const Element p = ambient->generator("p");
  const Element q = ambient->generator("q");
  const Element z = ambient->generator("z");
  const Element e1 = tensor_product({unit(0, 0), p}) + tensor_product({unit(0, 1), z.star()}) +
                     tensor_product({unit(1, 0), z}) + tensor_product({unit(1, 1), q});
  GeneratorImages images;
  images.emplace("e1", e1);
  images.emplace("e2", target->unit() - e1);
  return Morphism(c2, target, std::move(images));
}

std::vector<NCExpr> matrix_entries(const Element& x) {
  const auto pieces = decompose_first_leg(x);
  std::vector<NCExpr> out;
  for (std::int32_t k = 0; k < 4; ++k) {
    auto it = pieces.find(Word{k});
    out.push_back(it == pieces.end() ? NCExpr() : to_expression(it->second));
  }
  return out;
}

}  // namespace

NoqgPhi noqg_algebra_and_phi() {
  const AlgebraPtr ambient = make_free_star({{"p", true}, {"q", true}, {"z", false}});
  return {noqg_presentation(), ambient, noqg_phi_into(ambient)};
}

NoqgDerivation derive_noqg_relations() {
  NoqgDerivation out;
  const NoqgPhi sa = noqg_algebra_and_phi();
  const Element x = sa.phi.image("e1");
  out.square_entries = matrix_entries(x * x - x);

  const AlgebraPtr general = make_free_star({{"p", false}, {"q", false}, {"z", false}});
  const Element y = noqg_phi_into(general).image("e1");
  for (const auto& e : matrix_entries(y.star() - y)) {
    if (!e.is_zero()) out.adjoint_entries.push_back(e);
  }

  // p* - p and q* - q normalize to zero, so they are matched literally.
  const std::set<std::string> self_adjoint{"p", "q"};
  for (const auto& e : out.adjoint_entries) out.relations.push_back(e);
  for (const auto& e : out.square_entries) {
    if (e.is_zero()) continue;
    bool dup = false;
    for (const auto& r : out.relations) {
      dup = dup || (!r.with_self_adjoint(self_adjoint).is_zero() && equal_up_to_sign_and_star(r, e, self_adjoint));
    }
    if (!dup) out.relations.push_back(e);
  }
  return out;
}

}  // namespace qmaps
