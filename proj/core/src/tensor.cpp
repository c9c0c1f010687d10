#include "qmaps/tensor.hpp"

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

std::string tensor_signature(const std::vector<AlgebraPtr>& legs) {
  std::string s = "(";
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (i) s += " (x) ";
    s += legs[i]->signature();
  }
  return s + ")";
}

Presentation tensor_presentation(const std::vector<AlgebraPtr>& legs) {
  Presentation p;
  std::vector<std::vector<Letter>> letters(legs.size());
  for (std::size_t k = 0; k < legs.size(); ++k) {
    const auto rename = [k](const std::string& n) { return TensorAlgebra::leg_name(n, k); };
    for (const auto& g : legs[k]->presentation().generators) {
      p.generators.push_back({rename(g.name), g.self_adjoint});
      letters[k].push_back({rename(g.name), false});
      if (!g.self_adjoint) letters[k].push_back({rename(g.name), true});
    }
    for (const auto& r : legs[k]->presentation().relations) p.relations.push_back(r.renamed(rename));
  }
  for (std::size_t k = 0; k < legs.size(); ++k) {
    for (std::size_t l = k + 1; l < legs.size(); ++l) {
      for (const auto& a : letters[k]) {
        for (const auto& b : letters[l]) {
          p.relations.push_back(NCExpr::word({a, b}) - NCExpr::word({b, a}));
        }
      }
    }
  }
  return p;
}

}  // namespace

TensorAlgebra::TensorAlgebra(std::vector<AlgebraPtr> legs)
    : AlgebraObject(tensor_signature(legs), tensor_presentation(legs)), legs_(std::move(legs)) {}

std::string TensorAlgebra::leg_name(const std::string& name, std::size_t k) {
  return name + "@" + std::to_string(k + 1);
}

std::vector<Word> TensorAlgebra::split_key(const Word& key) {
  std::vector<Word> out;
  std::size_t pos = 0;
  while (pos < key.size()) {
    const auto len = static_cast<std::size_t>(key[pos]);
    out.emplace_back(key.begin() + static_cast<long>(pos + 1),
                     key.begin() + static_cast<long>(pos + 1 + len));
    pos += 1 + len;
  }
  return out;
}

Word TensorAlgebra::join_keys(const std::vector<Word>& keys) {
  Word out;
  for (const auto& k : keys) {
    out.push_back(static_cast<std::int32_t>(k.size()));
    out.insert(out.end(), k.begin(), k.end());
  }
  return out;
}

Terms TensorAlgebra::leg_product(const std::vector<Terms>& per_leg) const {
  Terms acc{{Word{}, Scalar(1)}};
  for (const auto& leg_terms : per_leg) {
    Terms next;
    for (const auto& [prefix, c] : acc) {
      for (const auto& [w, d] : leg_terms) {
        Word key = prefix;
        key.push_back(static_cast<std::int32_t>(w.size()));
        key.insert(key.end(), w.begin(), w.end());
        accumulate(next, key, c * d);
      }
    }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

Terms TensorAlgebra::unit_terms() const {
  std::vector<Terms> per_leg;
  for (const auto& l : legs_) per_leg.push_back(l->unit_terms());
  return leg_product(per_leg);
}

Terms TensorAlgebra::multiply_basis(const Word& a, const Word& b) const {
  const auto ka = split_key(a);
  const auto kb = split_key(b);
  std::vector<Terms> per_leg;
  for (std::size_t i = 0; i < legs_.size(); ++i) per_leg.push_back(legs_[i]->multiply_basis(ka[i], kb[i]));
  return leg_product(per_leg);
}

Terms TensorAlgebra::star_basis(const Word& w) const {
  const auto keys = split_key(w);
  std::vector<Terms> per_leg;
  for (std::size_t i = 0; i < legs_.size(); ++i) per_leg.push_back(legs_[i]->star_basis(keys[i]));
  return leg_product(per_leg);
}

Element TensorAlgebra::leg_embed(std::size_t k, const Element& x) const {
  if (k >= legs_.size()) throw InvalidArgument("leg_embed: leg index out of range");
  require_same_owner(x.owner(), *legs_[k], "leg_embed");
  std::vector<Terms> per_leg;
  for (std::size_t i = 0; i < legs_.size(); ++i) per_leg.push_back(i == k ? x.terms() : legs_[i]->unit_terms());
  return Element(ptr(), leg_product(per_leg));
}

Terms TensorAlgebra::generator_terms(const std::string& name) const {
  const auto sep = name.rfind('@');
  if (sep == std::string::npos) throw UnknownGenerator(name);
  std::size_t k = 0;
  try {
    k = std::stoul(name.substr(sep + 1));
  } catch (const std::exception&) {
    throw UnknownGenerator(name);
  }
  if (k == 0 || k > legs_.size()) throw UnknownGenerator(name);
  std::vector<Terms> per_leg;
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    per_leg.push_back(i == k - 1 ? legs_[i]->generator_terms(name.substr(0, sep)) : legs_[i]->unit_terms());
  }
  return leg_product(per_leg);
}

std::vector<NCExpr> TensorAlgebra::basis_factors(const Word& w) const {
  const auto keys = split_key(w);
  std::vector<NCExpr> out;
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    const auto rename = [i](const std::string& n) { return leg_name(n, i); };
    for (const auto& f : legs_[i]->basis_factors(keys[i])) out.push_back(f.renamed(rename));
  }
  return out;
}

std::string TensorAlgebra::format_word(const Word& w) const {
  const auto keys = split_key(w);
  std::string s;
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (i) s += " (x) ";
    const std::string leg = legs_[i]->format_word(keys[i]);
    s += leg.empty() ? "1" : leg;
  }
  return "[" + s + "]";
}

std::vector<Word> TensorAlgebra::basis_words(std::size_t max_length) const {
  std::vector<Word> acc{Word{}};
  for (const auto& l : legs_) {
    std::vector<Word> next;
    for (const auto& prefix : acc) {
      for (const auto& w : l->basis_words(max_length)) {
        Word key = prefix;
        key.push_back(static_cast<std::int32_t>(w.size()));
        key.insert(key.end(), w.begin(), w.end());
        next.push_back(std::move(key));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<AlgebraPtr> legs_of(const AlgebraPtr& obj) {
  if (auto t = std::dynamic_pointer_cast<const TensorAlgebra>(obj)) return t->legs();
  return {obj};
}

AlgebraPtr tensor(const std::vector<AlgebraPtr>& legs) {
  if (legs.empty()) throw InvalidArgument("tensor: no legs");
  std::vector<AlgebraPtr> flat;
  for (const auto& l : legs) {
    if (!l) throw InvalidArgument("tensor: null leg");
    const auto sub = legs_of(l);
    flat.insert(flat.end(), sub.begin(), sub.end());
  }
  if (flat.size() == 1) return flat.front();
  return std::make_shared<const TensorAlgebra>(std::move(flat));
}

Element tensor_product(const std::vector<Element>& factors) {
  if (factors.empty()) throw InvalidArgument("tensor_product: no factors");
  if (factors.size() == 1) return factors.front();
  std::vector<AlgebraPtr> owners;
  for (const auto& f : factors) owners.push_back(f.owner_ptr());
  const AlgebraPtr target = tensor(owners);
  Terms acc{{Word{}, Scalar(1)}};
  for (const auto& f : factors) {
    const bool is_tensor = f.owner().kind() == AlgebraKind::kTensor;
    Terms next;
    for (const auto& [prefix, c] : acc) {
      for (const auto& [w, d] : f.terms()) {
        Word key = prefix;
        if (!is_tensor) key.push_back(static_cast<std::int32_t>(w.size()));
        key.insert(key.end(), w.begin(), w.end());
        accumulate(next, key, c * d);
      }
    }
    acc = std::move(next);
  }
  return Element(target, std::move(acc));
}

Element flip_legs(const Element& x, std::size_t k, std::size_t l) {
  const auto t = std::dynamic_pointer_cast<const TensorAlgebra>(x.owner_ptr());
  if (!t) throw InvalidArgument("flip_legs: element is not in a tensor product");
  if (k == l || k >= t->num_legs() || l >= t->num_legs()) throw InvalidArgument("flip_legs: bad leg indices");
  auto legs = t->legs();
  std::swap(legs[k], legs[l]);
  const AlgebraPtr target = tensor(legs);
  Terms out;
  for (const auto& [w, c] : x.terms()) {
    auto keys = TensorAlgebra::split_key(w);
    std::swap(keys[k], keys[l]);
    accumulate(out, TensorAlgebra::join_keys(keys), c);
  }
  return Element(target, std::move(out));
}

std::map<Word, Element, WordLess> decompose_first_leg(const Element& x) {
  const auto t = std::dynamic_pointer_cast<const TensorAlgebra>(x.owner_ptr());
  if (!t) throw InvalidArgument("decompose_first_leg: element is not in a tensor product");
  const std::vector<AlgebraPtr> rest_legs(t->legs().begin() + 1, t->legs().end());
  const AlgebraPtr rest = tensor(rest_legs);
  const bool rest_is_tensor = rest_legs.size() > 1;
  std::map<Word, Terms, WordLess> parts;
  for (const auto& [w, c] : x.terms()) {
    const auto keys = TensorAlgebra::split_key(w);
    const std::vector<Word> tail(keys.begin() + 1, keys.end());
    accumulate(parts[keys[0]], rest_is_tensor ? TensorAlgebra::join_keys(tail) : tail[0], c);
  }
  std::map<Word, Element, WordLess> out;
  for (auto& [w, terms] : parts) out.emplace(w, Element(rest, std::move(terms)));
  return out;
}

}  // namespace qmaps
