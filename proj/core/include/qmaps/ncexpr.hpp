#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qmaps/scalar.hpp"

namespace qmaps {

/// A generator name, possibly starred.
struct Letter {
  std::string name;
  bool starred = false;

  auto operator<=>(const Letter&) const = default;
  bool operator==(const Letter&) const = default;
};

using NCWord = std::vector<Letter>;

/// Shorter words first, then lexicographic.
struct NCWordLess {
  bool operator()(const NCWord& a, const NCWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// A formal noncommutative *-polynomial: a finite sum of scalar-weighted
/// words. Always kept canonical (no zero coefficients, words unique), so
/// equality is syntactic. The empty word is the unit.
class NCExpr {
 public:
  using Terms = std::map<NCWord, Scalar, NCWordLess>;

  NCExpr() = default;
  explicit NCExpr(Terms terms);

  static NCExpr constant(const Scalar& s);
  static NCExpr letter(std::string name, bool starred = false);
  static NCExpr word(NCWord w, const Scalar& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Reverses every word, flips every star and conjugates coefficients.
  NCExpr star() const;
  NCExpr scaled(const Scalar& s) const;

  NCExpr& operator+=(const NCExpr& o);
  NCExpr& operator-=(const NCExpr& o);
  NCExpr operator-() const { return scaled(-1); }
  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
  friend NCExpr operator*(const NCExpr& a, const NCExpr& b);
  friend NCExpr operator*(const Scalar& s, const NCExpr& a) { return a.scaled(s); }
  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.terms_ == b.terms_; }

  /// Canonical text form, e.g. "p - p p - z' z" or "(1/2 + i) u". The
  /// expression parser reads it back to an equal expression; the zero
  /// expression prints as "0".
  std::string to_string() const;

  /// Generator names occurring in the expression.
  std::set<std::string> generator_names() const;

  /// Applies `fn` to every generator name.
  NCExpr renamed(const std::function<std::string(const std::string&)>& fn) const;

  /// Replaces x' by x for every name in `self_adjoint`.
  NCExpr with_self_adjoint(const std::set<std::string>& self_adjoint) const;

  /// Substitutes an expression for every letter. `fn` receives the bare
  /// (unstarred) letter; starred letters get the star of the result.
  NCExpr substituted(const std::function<NCExpr(const std::string&)>& fn) const;

 private:
  void add_term(const NCWord& w, const Scalar& c);

  Terms terms_;
};

/// True when a == b, a == -b, a == b* or a == -b*.
bool equal_up_to_sign_and_star(const NCExpr& a, const NCExpr& b);

/// Same comparison after replacing x' by x for the given names, applied
/// also after taking the star.
bool equal_up_to_sign_and_star(const NCExpr& a, const NCExpr& b, const std::set<std::string>& self_adjoint);

}  // namespace qmaps
