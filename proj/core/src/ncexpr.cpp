#include "qmaps/ncexpr.hpp"

#include <algorithm>

namespace qmaps {

NCExpr::NCExpr(Terms terms) {
  for (auto& [w, c] : terms) add_term(w, c);
}

NCExpr NCExpr::constant(const Scalar& s) { return word({}, s); }

NCExpr NCExpr::letter(std::string name, bool starred) {
  return word({Letter{std::move(name), starred}});
}

NCExpr NCExpr::word(NCWord w, const Scalar& coeff) {
  NCExpr e;
  e.add_term(w, coeff);
  return e;
}

void NCExpr::add_term(const NCWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCExpr NCExpr::star() const {
  NCExpr out;
  for (const auto& [w, c] : terms_) {
    NCWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.starred = !l.starred;
    out.add_term(r, c.conj());
  }
  return out;
}

NCExpr NCExpr::scaled(const Scalar& s) const {
  NCExpr out;
  if (s.is_zero()) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * s);
  return out;
}

NCExpr& NCExpr::operator+=(const NCExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
  NCExpr out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      NCWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::set<std::string> NCExpr::generator_names() const {
  std::set<std::string> names;
  for (const auto& [w, c] : terms_) {
    for (const auto& l : w) names.insert(l.name);
  }
  return names;
}

NCExpr NCExpr::renamed(const std::function<std::string(const std::string&)>& fn) const {
  NCExpr out;
  for (const auto& [w, c] : terms_) {
    NCWord r = w;
    for (auto& l : r) l.name = fn(l.name);
    out.add_term(r, c);
  }
  return out;
}

NCExpr NCExpr::with_self_adjoint(const std::set<std::string>& self_adjoint) const {
  NCExpr out;
  for (const auto& [w, c] : terms_) {
    NCWord r = w;
    for (auto& l : r) {
      if (l.starred && self_adjoint.count(l.name)) l.starred = false;
    }
    out.add_term(r, c);
  }
  return out;
}

NCExpr NCExpr::substituted(const std::function<NCExpr(const std::string&)>& fn) const {
  NCExpr out;
  for (const auto& [w, c] : terms_) {
    NCExpr prod = constant(c);
    for (const auto& l : w) {
      NCExpr img = fn(l.name);
      prod = prod * (l.starred ? img.star() : img);
    }
    out += prod;
  }
  return out;
}

namespace {

std::string magnitude(const mpq_class& q) {
  mpq_class a = abs(q);
  return a.get_str();
}

}  // namespace

std::string NCExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (const auto& l : w) {
      if (!word.empty()) word += " ";
      word += l.name;
      if (l.starred) word += "'";
    }
    bool negative = false;
    std::string coeff;  // empty means magnitude one on a nonempty word
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      if (!(abs(c.re()) == 1) || word.empty()) coeff = magnitude(c.re());
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      coeff = abs(c.im()) == 1 ? "i" : magnitude(c.im()) + " i";
    } else {
      const std::string im = abs(c.im()) == 1 ? "i" : magnitude(c.im()) + " i";
      coeff = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? " - " : " + ") + im + ")";
    }
    std::string body = coeff;
    if (!word.empty()) body = coeff.empty() ? word : coeff + " " + word;
    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
    first = false;
  }
  return out;
}

bool equal_up_to_sign_and_star(const NCExpr& a, const NCExpr& b) {
  const NCExpr bs = b.star();
  return a == b || a == -b || a == bs || a == -bs;
}

bool equal_up_to_sign_and_star(const NCExpr& a, const NCExpr& b, const std::set<std::string>& self_adjoint) {
  const NCExpr na = a.with_self_adjoint(self_adjoint);
  const NCExpr nb = b.with_self_adjoint(self_adjoint);
  const NCExpr nbs = b.star().with_self_adjoint(self_adjoint);
  return na == nb || na == -nb || na == nbs || na == -nbs;
}

}  // namespace qmaps
