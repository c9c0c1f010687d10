#include "qmaps/algebra.hpp"

#include <sstream>

#include "qmaps/errors.hpp"

namespace qmaps {

void accumulate(Terms& terms, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

AlgebraObject::AlgebraObject(std::string signature, Presentation presentation)
    : signature_(std::move(signature)), presentation_(std::move(presentation)) {}

NCExpr AlgebraObject::basis_expression(const Word& w) const {
  NCExpr out = NCExpr::constant(1);
  for (const auto& f : basis_factors(w)) out = out * f;
  return out;
}

Terms AlgebraObject::multiply(const Terms& a, const Terms& b) const {
  Terms out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      const Scalar c = ca * cb;
      for (const auto& [w, d] : multiply_basis(wa, wb)) accumulate(out, w, c * d);
    }
  }
  return out;
}

Terms AlgebraObject::star(const Terms& a) const {
  Terms out;
  for (const auto& [w, c] : a) {
    const Scalar cc = c.conj();
    for (const auto& [v, d] : star_basis(w)) accumulate(out, v, cc * d);
  }
  return out;
}

Element AlgebraObject::unit() const { return Element(ptr(), unit_terms()); }
Element AlgebraObject::zero() const { return Element(ptr()); }
Element AlgebraObject::scalar(const Scalar& s) const { return unit().scaled(s); }
Element AlgebraObject::basis(const Word& w) const { return Element(ptr(), Terms{{w, Scalar(1)}}); }

Element AlgebraObject::generator(const std::string& name) const {
  if (!presentation_.has(name)) throw UnknownGenerator(name);
  return Element(ptr(), generator_terms(name));
}

GeneratorImages AlgebraObject::self_images() const {
  GeneratorImages out;
  for (const auto& g : presentation_.generators) out.emplace(g.name, generator(g.name));
  return out;
}

Element AlgebraObject::evaluate(const NCExpr& e) const {
  return eval_ncexpr(e, self_images(), ptr());
}

Element::Element(AlgebraPtr owner, Terms terms) : owner_(std::move(owner)) {
  if (!owner_) throw InvalidArgument("element without owner");
  for (auto& [w, c] : terms) {
    if (!c.is_zero()) terms_.emplace(w, std::move(c));
  }
}

Scalar Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

Element Element::star() const { return Element(owner_, owner_->star(terms_)); }

Element Element::scaled(const Scalar& s) const {
  Terms out;
  if (!s.is_zero()) {
    for (const auto& [w, c] : terms_) out.emplace(w, c * s);
  }
  return Element(owner_, std::move(out));
}

void require_same_owner(const AlgebraObject& a, const AlgebraObject& b, const char* what) {
  if (!a.same_as(b)) {
    throw OwnerMismatch(std::string(what) + ": '" + a.signature() + "' vs '" + b.signature() + "'");
  }
}

Element& Element::operator+=(const Element& o) {
  require_same_owner(*owner_, *o.owner_, "add");
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_owner(*owner_, *o.owner_, "subtract");
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  require_same_owner(*a.owner_, *b.owner_, "multiply");
  return Element(a.owner_, a.owner_->multiply(a.terms_, b.terms_));
}

bool operator==(const Element& a, const Element& b) {
  require_same_owner(*a.owner_, *b.owner_, "compare");
  return a.terms_ == b.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string word = owner_->format_word(w);
    if (word.empty()) {
      os << c;
    } else if (c == Scalar(1)) {
      os << word;
    } else {
      os << "(" << c << ")*" << word;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

NCExpr to_expression(const Element& x) {
  NCExpr out;
  for (const auto& [w, c] : x.terms()) out += x.owner().basis_expression(w).scaled(c);
  return out;
}

Element eval_ncexpr(const NCExpr& expr, const GeneratorImages& images, const AlgebraPtr& target) {
  Terms out;
  std::map<Letter, Terms> letter_cache;
  for (const auto& [word, coeff] : expr.terms()) {
    Terms prod = target->unit_terms();
    for (const auto& letter : word) {
      auto cached = letter_cache.find(letter);
      if (cached == letter_cache.end()) {
        auto it = images.find(letter.name);
        if (it == images.end()) throw UnknownGenerator(letter.name);
        require_same_owner(it->second.owner(), *target, "generator image");
        Terms t = letter.starred ? it->second.star().terms() : it->second.terms();
        cached = letter_cache.emplace(letter, std::move(t)).first;
      }
      prod = target->multiply(prod, cached->second);
      if (prod.empty()) break;
    }
    for (const auto& [w, c] : prod) accumulate(out, w, c * coeff);
  }
  return Element(target, std::move(out));
}

}  // namespace qmaps
