#pragma once

#include <memory>
#include <vector>

#include "qmaps/algebra.hpp"
#include "qmaps/finite_dim.hpp"

namespace qmaps {

/// Unital free product of finite-dimensional *-algebras, amalgamated over
/// the units.
///
/// The canonical basis is the set of reduced words: sequences of letters
/// (factor f, complement index c) with adjacent factors distinct, where c
/// indexes the factor's reduced complement. The empty word is the unit.
/// A word of L letters is encoded as 2L integers f0 c0 f1 c1 ...
///
/// Copy k of a factor generator g is named "g_k" (k is 1-based).
class FreeProductAlgebra final : public AlgebraObject {
 public:
  AlgebraKind kind() const override { return AlgebraKind::kFreeProduct; }

  std::size_t num_factors() const { return factors_.size(); }
  const FiniteDimPtr& factor(std::size_t k) const { return factors_.at(k); }
  const std::vector<FiniteDimPtr>& factors() const { return factors_; }

  /// iota_k on a factor element (k is 0-based).
  Element embed(std::size_t k, const Element& x) const;
  /// Name of copy k (0-based) of factor generator `name`.
  static std::string copy_name(const std::string& name, std::size_t k);

  Terms unit_terms() const override { return Terms{{Word{}, Scalar(1)}}; }
  Terms multiply_basis(const Word& a, const Word& b) const override;
  Terms star_basis(const Word& w) const override;
  Terms generator_terms(const std::string& name) const override;
  std::vector<NCExpr> basis_factors(const Word& w) const override;
  std::string format_word(const Word& w) const override;
  std::vector<Word> basis_words(std::size_t max_length) const override;

  explicit FreeProductAlgebra(std::vector<FiniteDimPtr> factors);

 private:
  Terms embed_terms(std::size_t k, const Terms& natural) const;
  void multiply_into(Terms& out, const Word& a, std::size_t a_len, const Word& b,
                     std::size_t b_start, const Scalar& coeff) const;

  std::vector<FiniteDimPtr> factors_;
};

using FreeProductPtr = std::shared_ptr<const FreeProductAlgebra>;

/// Nested free-product factors are flattened. Other non-finite-dimensional
/// factors and an empty list are rejected with InvalidArgument.
FreeProductPtr free_product(const std::vector<AlgebraPtr>& factors);

/// n-fold free product of one algebra with itself.
FreeProductPtr free_power(const AlgebraPtr& factor, std::size_t n);

}  // namespace qmaps
