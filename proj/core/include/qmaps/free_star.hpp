#pragma once

#include <memory>
#include <vector>

#include "qmaps/algebra.hpp"

namespace qmaps {

/// Free unital *-algebra: basis is all words in the generators and the
/// stars of the non-self-adjoint generators; multiplication concatenates.
/// Letter code is 2*generator_index + starred.
class FreeStarAlgebra final : public AlgebraObject {
 public:
  AlgebraKind kind() const override { return AlgebraKind::kFreeStar; }

  Terms unit_terms() const override { return Terms{{Word{}, Scalar(1)}}; }
  Terms multiply_basis(const Word& a, const Word& b) const override;
  Terms star_basis(const Word& w) const override;
  Terms generator_terms(const std::string& name) const override;
  std::vector<NCExpr> basis_factors(const Word& w) const override;
  std::string format_word(const Word& w) const override;
  std::vector<Word> basis_words(std::size_t max_length) const override;

  explicit FreeStarAlgebra(std::vector<Generator> generators);

 private:
  std::int32_t index_of(const std::string& name) const;
};

/// Throws InvalidArgument on duplicate names.
AlgebraPtr make_free_star(const std::vector<Generator>& generators);

}  // namespace qmaps
