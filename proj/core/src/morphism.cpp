#include "qmaps/morphism.hpp"

#include <sstream>

#include "qmaps/errors.hpp"
#include "qmaps/tensor.hpp"

namespace qmaps {

Morphism::Morphism(AlgebraPtr domain, AlgebraPtr codomain, GeneratorImages images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw InvalidArgument("morphism needs a domain and a codomain");
  for (const auto& g : domain_->presentation().generators) {
    auto it = images_.find(g.name);
    if (it == images_.end()) throw UnknownGenerator(g.name);
    require_same_owner(it->second.owner(), *codomain_, "morphism image");
  }
  for (const auto& [name, img] : images_) {
    if (!domain_->presentation().has(name)) throw UnknownGenerator(name);
  }
}

const Element& Morphism::image(const std::string& generator) const {
  auto it = images_.find(generator);
  if (it == images_.end()) throw UnknownGenerator(generator);
  return it->second;
}

Element Morphism::apply(const NCExpr& e) const { return eval_ncexpr(e, images_, codomain_); }

Element Morphism::operator()(const Element& x) const {
  require_same_owner(x.owner(), *domain_, "morphism argument");
  Terms out;
  std::map<std::string, Terms> factor_cache;
  for (const auto& [w, c] : x.terms()) {
    Terms prod = codomain_->unit_terms();
    for (const auto& f : domain_->basis_factors(w)) {
      const std::string key = f.to_string();
      auto it = factor_cache.find(key);
      if (it == factor_cache.end()) it = factor_cache.emplace(key, apply(f).terms()).first;
      prod = codomain_->multiply(prod, it->second);
      if (prod.empty()) break;
    }
    for (const auto& [v, d] : prod) accumulate(out, v, c * d);
  }
  return Element(codomain_, std::move(out));
}

std::size_t Verdict::residue_terms() const {
  std::size_t n = 0;
  for (const auto& v : violations) n += v.residue.terms().size();
  return n;
}

std::string Verdict::summary(std::size_t max_items) const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_items; ++i) {
    std::string residue = violations[i].residue.to_string();
    if (residue.size() > 200) residue = residue.substr(0, 200) + "...";
    os << "; " << violations[i].label << " -> " << residue;
  }
  return os.str();
}

Verdict check_well_defined(const Morphism& m) {
  Verdict v;
  for (const auto& rel : m.domain()->presentation().all_relations()) {
    Element residue = m.apply(rel);
    if (!residue.is_zero()) v.violations.push_back({rel.to_string(), std::move(residue)});
  }
  return v;
}

Verdict compare_on_generators(const Morphism& a, const Morphism& b) {
  require_same_owner(*a.domain(), *b.domain(), "compare morphisms (domain)");
  require_same_owner(*a.codomain(), *b.codomain(), "compare morphisms (codomain)");
  Verdict v;
  for (const auto& g : a.domain()->presentation().generators) {
    Element diff = a.image(g.name) - b.image(g.name);
    if (!diff.is_zero()) v.violations.push_back({g.name, std::move(diff)});
  }
  return v;
}

Verdict check_multiplicative(const Morphism& m, std::size_t max_length) {
  Verdict v;
  const auto& dom = *m.domain();
  const auto words = dom.basis_words(max_length);
  std::vector<Element> images;
  for (const auto& w : words) images.push_back(m(dom.basis(w)));
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Element bi = dom.basis(words[i]);
    Element star_diff = m(bi.star()) - images[i].star();
    if (!star_diff.is_zero()) v.violations.push_back({"star " + dom.format_word(words[i]), star_diff});
    for (std::size_t j = 0; j < words.size(); ++j) {
      Element diff = m(bi * dom.basis(words[j])) - images[i] * images[j];
      if (!diff.is_zero()) {
        v.violations.push_back({dom.format_word(words[i]) + " * " + dom.format_word(words[j]), diff});
      }
    }
  }
  Element unit_diff = m(dom.unit()) - m.codomain()->unit();
  if (!unit_diff.is_zero()) v.violations.push_back({"unit", unit_diff});
  return v;
}

Morphism identity_morphism(const AlgebraPtr& obj) { return Morphism(obj, obj, obj->self_images()); }

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_owner(*f.codomain(), *g.domain(), "compose");
  GeneratorImages images;
  for (const auto& [name, img] : f.images()) images.emplace(name, g(img));
  return Morphism(f.domain(), g.codomain(), std::move(images));
}

Morphism tensor_morphisms(const std::vector<Morphism>& ms) {
  if (ms.empty()) throw InvalidArgument("tensor_morphisms: empty list");
  if (ms.size() == 1) return ms.front();
  std::vector<AlgebraPtr> domains;
  std::vector<AlgebraPtr> codomains;
  for (const auto& m : ms) {
    domains.push_back(m.domain());
    codomains.push_back(m.codomain());
  }
  const AlgebraPtr domain = tensor(domains);
  const AlgebraPtr codomain = tensor(codomains);
  GeneratorImages images;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    std::vector<Element> units;
    for (const auto& c : codomains) units.push_back(c->unit());
    const bool dom_is_tensor = ms[k].domain()->kind() == AlgebraKind::kTensor;
    for (const auto& [name, img] : ms[k].images()) {
      std::string flat_name;
      if (dom_is_tensor) {
        const auto sep = name.rfind('@');
        const std::size_t leg = std::stoul(name.substr(sep + 1)) - 1;
        flat_name = TensorAlgebra::leg_name(name.substr(0, sep), offset + leg);
      } else {
        flat_name = TensorAlgebra::leg_name(name, offset);
      }
      std::vector<Element> parts = units;
      parts[k] = img;
      images.emplace(flat_name, tensor_product(parts));
    }
    offset += legs_of(ms[k].domain()).size();
  }
  return Morphism(domain, codomain, std::move(images));
}

Morphism iota(const FreeProductPtr& c, std::size_t k) {
  if (k >= c->num_factors()) throw InvalidArgument("iota: factor index out of range");
  const auto& factor = c->factor(k);
  GeneratorImages images;
  for (const auto& g : factor->presentation().generators) {
    images.emplace(g.name, c->generator(FreeProductAlgebra::copy_name(g.name, k)));
  }
  return Morphism(factor, c, std::move(images));
}

Morphism factor_through_free_product(const FreeProductPtr& c, const std::vector<Morphism>& psis) {
  if (psis.size() != c->num_factors()) {
    throw InvalidArgument("factor_through_free_product: need one morphism per factor");
  }
  const AlgebraPtr target = psis.front().codomain();
  GeneratorImages images;
  for (std::size_t k = 0; k < psis.size(); ++k) {
    require_same_owner(*psis[k].domain(), *c->factor(k), "factor_through_free_product (domain)");
    require_same_owner(*psis[k].codomain(), *target, "factor_through_free_product (codomain)");
    for (const auto& [name, img] : psis[k].images()) {
      images.emplace(FreeProductAlgebra::copy_name(name, k), Element(target, img.terms()));
    }
  }
  return Morphism(c, target, std::move(images));
}

std::vector<Morphism> decompose_over_cn(const Morphism& psi) {
  const auto legs = legs_of(psi.codomain());
  const auto cn = std::dynamic_pointer_cast<const FiniteDimAlgebra>(legs.front());
  if (legs.size() < 2 || !cn || !cn->same_as(*make_cn(cn->dim()))) {
    throw InvalidArgument("decompose_over_cn: first codomain leg is not C^n");
  }
  const std::vector<AlgebraPtr> rest_legs(legs.begin() + 1, legs.end());
  const AlgebraPtr rest = tensor(rest_legs);
  std::vector<GeneratorImages> parts(cn->dim());
  for (const auto& [name, img] : psi.images()) {
    const auto pieces = decompose_first_leg(img);
    for (std::size_t i = 0; i < cn->dim(); ++i) {
      auto it = pieces.find(Word{static_cast<std::int32_t>(i)});
      parts[i].emplace(name, it == pieces.end() ? rest->zero() : it->second);
    }
  }
  std::vector<Morphism> out;
  for (auto& images : parts) out.emplace_back(psi.domain(), rest, std::move(images));
  return out;
}

Morphism assemble_over_cn(const FiniteDimPtr& cn, const std::vector<Morphism>& parts) {
  if (parts.size() != cn->dim()) throw InvalidArgument("assemble_over_cn: need n parts");
  const AlgebraPtr domain = parts.front().domain();
  const AlgebraPtr target = parts.front().codomain();
  const AlgebraPtr codomain = tensor({cn, target});
  GeneratorImages images;
  for (const auto& g : domain->presentation().generators) {
    Element sum = codomain->zero();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      require_same_owner(*parts[i].domain(), *domain, "assemble_over_cn (domain)");
      const Element yi(target, parts[i].image(g.name).terms());
      sum += tensor_product({cn->basis({static_cast<std::int32_t>(i)}), yi});
    }
    images.emplace(g.name, std::move(sum));
  }
  return Morphism(domain, codomain, std::move(images));
}

Morphism pi(const FreeProductPtr& c) {
  const AlgebraPtr a = c->factor(0);
  std::vector<Morphism> ids;
  for (std::size_t k = 0; k < c->num_factors(); ++k) {
    require_same_owner(*c->factor(k), *a, "pi needs identical factors");
    ids.push_back(identity_morphism(a));
  }
  return factor_through_free_product(c, ids);
}

Morphism mu(const FiniteDimPtr& b) {
  const AlgebraPtr bb = tensor({b, b});
  GeneratorImages images;
  for (const auto& g : b->presentation().generators) {
    images.emplace(TensorAlgebra::leg_name(g.name, 0), b->generator(g.name));
    images.emplace(TensorAlgebra::leg_name(g.name, 1), b->generator(g.name));
  }
  Morphism m(bb, b, std::move(images));
  const Verdict v = check_well_defined(m);
  if (!v.ok()) {
    throw NotAHomomorphism("multiplication map on " + b->signature() +
                           " is not a homomorphism: " + v.summary(1));
  }
  return m;
}

Morphism unital_embed(const AlgebraPtr& b, const AlgebraPtr& a) {
  const AlgebraPtr codomain = tensor({b, a});
  GeneratorImages images;
  for (const auto& g : a->presentation().generators) {
    images.emplace(g.name, tensor_product({b->unit(), a->generator(g.name)}));
  }
  return Morphism(a, codomain, std::move(images));
}

}  // namespace qmaps
