#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qmaps/algebra.hpp"

namespace qmaps {

/// Algebraic tensor product of two or more algebra objects. Legs are never
/// themselves tensor products (construction flattens them). Multiplication
/// and involution act leg-wise, so letters in different legs commute.
///
/// Basis keys are the leg keys concatenated, each prefixed by its length.
/// Generator g of leg k is named "g@k" (k is 1-based); the presentation adds
/// commutators between letters of different legs.
class TensorAlgebra final : public AlgebraObject {
 public:
  AlgebraKind kind() const override { return AlgebraKind::kTensor; }

  std::size_t num_legs() const { return legs_.size(); }
  const AlgebraPtr& leg(std::size_t k) const { return legs_.at(k); }
  const std::vector<AlgebraPtr>& legs() const { return legs_; }

  static std::string leg_name(const std::string& name, std::size_t k);
  static std::vector<Word> split_key(const Word& key);
  static Word join_keys(const std::vector<Word>& keys);

  /// 1 (x) ... (x) x (x) ... (x) 1 with x in leg k (0-based).
  Element leg_embed(std::size_t k, const Element& x) const;

  Terms unit_terms() const override;
  Terms multiply_basis(const Word& a, const Word& b) const override;
  Terms star_basis(const Word& w) const override;
  Terms generator_terms(const std::string& name) const override;
  std::vector<NCExpr> basis_factors(const Word& w) const override;
  std::string format_word(const Word& w) const override;
  std::vector<Word> basis_words(std::size_t max_length) const override;

  explicit TensorAlgebra(std::vector<AlgebraPtr> legs);

 private:
  Terms leg_product(const std::vector<Terms>& per_leg) const;

  std::vector<AlgebraPtr> legs_;
};

using TensorPtr = std::shared_ptr<const TensorAlgebra>;

/// Tensor product of the given objects, flattening tensor legs. A single
/// non-tensor leg is returned unchanged. Throws InvalidArgument when empty.
AlgebraPtr tensor(const std::vector<AlgebraPtr>& legs);

/// x1 (x) x2 (x) ... in tensor(owners).
Element tensor_product(const std::vector<Element>& factors);

/// Exchanges legs k and l (0-based) of every basis tuple of x.
Element flip_legs(const Element& x, std::size_t k, std::size_t l);

/// Writes x = sum_w b_w (x) Y_w with b_w running over the basis of the
/// first leg; returns w -> Y_w. Y_w lives in the tensor of the remaining legs.
std::map<Word, Element, WordLess> decompose_first_leg(const Element& x);

/// Legs of an object: its own legs for a tensor, {obj} otherwise.
std::vector<AlgebraPtr> legs_of(const AlgebraPtr& obj);

}  // namespace qmaps
