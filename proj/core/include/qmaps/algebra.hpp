#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qmaps/ncexpr.hpp"
#include "qmaps/presentation.hpp"
#include "qmaps/scalar.hpp"

namespace qmaps {

/// Encoded canonical basis key. The encoding is private to each kind of
/// algebra object: a basis index for finite-dimensional algebras, letter
/// codes for free *-algebras, (factor, complement) pairs for free products
/// and length-prefixed leg keys for tensor products.
using Word = std::vector<std::int32_t>;

/// Shorter words first, then lexicographic on letter codes.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Terms = std::map<Word, Scalar, WordLess>;

/// Adds c to the coefficient of w, erasing it if it cancels.
void accumulate(Terms& terms, const Word& w, const Scalar& c);

enum class AlgebraKind { kFiniteDim, kFreeStar, kFreeProduct, kTensor };

class AlgebraObject;
class Element;
using AlgebraPtr = std::shared_ptr<const AlgebraObject>;
using GeneratorImages = std::map<std::string, Element>;

/// A unital *-algebra with a canonical linear basis, exact multiplication
/// and involution on that basis, and a canonical presentation whose
/// generators are interpreted inside the object itself.
class AlgebraObject : public std::enable_shared_from_this<AlgebraObject> {
 public:
  virtual ~AlgebraObject() = default;
  AlgebraObject(const AlgebraObject&) = delete;
  AlgebraObject& operator=(const AlgebraObject&) = delete;

  virtual AlgebraKind kind() const = 0;

  /// Structural identity. Two objects with the same signature are the same
  /// algebra with the same basis and may share elements.
  const std::string& signature() const { return signature_; }
  const Presentation& presentation() const { return presentation_; }
  bool same_as(const AlgebraObject& other) const {
    return this == &other || signature_ == other.signature_;
  }

  virtual Terms unit_terms() const = 0;
  virtual Terms multiply_basis(const Word& a, const Word& b) const = 0;
  virtual Terms star_basis(const Word& w) const = 0;
  /// Coordinates of a presentation generator.
  virtual Terms generator_terms(const std::string& name) const = 0;
  /// Ordered factors whose product is the basis element `w`, written in the
  /// presentation's generators. Their product is the basis expression.
  virtual std::vector<NCExpr> basis_factors(const Word& w) const = 0;
  virtual std::string format_word(const Word& w) const = 0;
  /// Canonical basis words of length at most `max_length` (all of them for
  /// finite-dimensional objects).
  virtual std::vector<Word> basis_words(std::size_t max_length) const = 0;

  NCExpr basis_expression(const Word& w) const;
  Terms multiply(const Terms& a, const Terms& b) const;
  Terms star(const Terms& a) const;

  AlgebraPtr ptr() const { return shared_from_this(); }
  Element unit() const;
  Element zero() const;
  Element scalar(const Scalar& s) const;
  Element basis(const Word& w) const;
  Element generator(const std::string& name) const;
  /// Every presentation generator mapped to itself.
  GeneratorImages self_images() const;
  /// Evaluates an expression in the generators of this object.
  Element evaluate(const NCExpr& e) const;

 protected:
  AlgebraObject(std::string signature, Presentation presentation);

 private:
  std::string signature_;
  Presentation presentation_;
};

/// A finite scalar-weighted combination of canonical basis words of its
/// owner. Always canonical: zero coefficients are dropped.
class Element {
 public:
  explicit Element(AlgebraPtr owner, Terms terms = {});

  const AlgebraPtr& owner_ptr() const { return owner_; }
  const AlgebraObject& owner() const { return *owner_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  Element star() const;
  Element scaled(const Scalar& s) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const { return scaled(-1); }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, const Element& a) { return a.scaled(s); }
  /// Throws OwnerMismatch when the owners differ.
  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const;

 private:
  AlgebraPtr owner_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

void require_same_owner(const AlgebraObject& a, const AlgebraObject& b, const char* what);

/// sum_w c_w * basis_expression(w): the element written in its owner's
/// generators.
NCExpr to_expression(const Element& x);

/// Substitutes generator images into `expr` and evaluates in `target`.
/// Starred letters use the involution of the image.
Element eval_ncexpr(const NCExpr& expr, const GeneratorImages& images, const AlgebraPtr& target);

}  // namespace qmaps
