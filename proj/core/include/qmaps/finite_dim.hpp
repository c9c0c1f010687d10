#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/algebra.hpp"

namespace qmaps {

using Vector = std::vector<Scalar>;

/// A finite-dimensional *-algebra given by structure constants on a named
/// basis. Basis words are single indices {i}.
///
/// The reduced complement is an ordered list of coordinate vectors that,
/// together with the unit, form a basis. Free products use it to build
/// their reduced-word basis.
class FiniteDimAlgebra final : public AlgebraObject {
 public:
  struct Data {
    std::string name;                      // signature, e.g. "C^2", "M_2"
    std::vector<std::string> basis_names;  // also the presentation generators
    std::vector<Scalar> structure;         // c[i][j][k] at (i*dim + j)*dim + k
    Vector unit;
    std::vector<Vector> involution;  // star(b_i) = sum_j involution[i][j] b_j
    std::vector<Vector> reduced_complement;
  };

  /// Validates shapes and the reduced complement; throws InvalidArgument.
  static std::shared_ptr<const FiniteDimAlgebra> create(Data data);

  AlgebraKind kind() const override { return AlgebraKind::kFiniteDim; }
  std::size_t dim() const { return data_.basis_names.size(); }
  const Data& data() const { return data_; }
  const Scalar& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.structure[(i * dim() + j) * dim() + k];
  }
  const std::string& basis_name(std::size_t i) const { return data_.basis_names[i]; }

  Terms unit_terms() const override;
  Terms multiply_basis(const Word& a, const Word& b) const override;
  Terms star_basis(const Word& w) const override;
  Terms generator_terms(const std::string& name) const override;
  std::vector<NCExpr> basis_factors(const Word& w) const override;
  std::string format_word(const Word& w) const override;
  std::vector<Word> basis_words(std::size_t max_length) const override;

  // Reduced (unit + complement) coordinates, used by free products.
  std::size_t complement_size() const { return data_.reduced_complement.size(); }
  const Vector& complement_vector(std::size_t c) const { return data_.reduced_complement[c]; }
  const std::string& complement_name(std::size_t c) const { return complement_names_[c]; }
  /// Splits natural coordinates into (unit coefficient, complement coordinates).
  std::pair<Scalar, Vector> split(const Vector& natural) const;
  std::pair<Scalar, Vector> split(const Terms& natural) const;
  /// complement_a * complement_b split against the unit.
  const std::pair<Scalar, Vector>& complement_product(std::size_t a, std::size_t b) const {
    return complement_products_[a * complement_size() + b];
  }
  const std::pair<Scalar, Vector>& complement_star(std::size_t a) const {
    return complement_stars_[a];
  }

  /// Exhaustive check of associativity, unit, involution and the
  /// reduced-complement basis. Returns human-readable failures.
  std::vector<std::string> axiom_failures() const;

  /// Structural constructor; use create().
  FiniteDimAlgebra(Data data, Presentation presentation);

 private:
  void build_reduced_tables();

  Data data_;
  std::vector<std::vector<Scalar>> to_reduced_;  // inverse of [unit | complement]
  std::vector<std::string> complement_names_;
  std::vector<std::pair<Scalar, Vector>> complement_products_;
  std::vector<std::pair<Scalar, Vector>> complement_stars_;
};

using FiniteDimPtr = std::shared_ptr<const FiniteDimAlgebra>;

/// C^n with minimal projections e1..en; reduced complement {e1..e(n-1)}.
FiniteDimPtr make_cn(std::size_t n);

/// M_n with matrix units Eij; reduced complement {Eii - 1/n (i<n), Eij (i!=j)}.
FiniteDimPtr make_matrix_algebra(std::size_t n);

/// Exact inverse of a square matrix over Gaussian rationals; throws
/// InvalidArgument when singular.
std::vector<Vector> invert(std::vector<Vector> m);

}  // namespace qmaps
