#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmaps/finite_dim.hpp"
#include "qmaps/free_product.hpp"
#include "qmaps/morphism.hpp"

namespace qmaps {

/// Finite group given by its multiplication table on {0, ..., n-1}.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::string name_;
};

/// An algebra with a comultiplication C -> C (x) C. Use
/// make_quantum_semigroup to get one whose axioms have been verified.
struct QuantumSemigroup {
  AlgebraPtr algebra;
  Morphism comult;
};

/// ok iff (Delta (x) id) Delta(g) = (id (x) Delta) Delta(g) for every
/// generator g. Ill-definedness of Delta is reported first.
Verdict check_coassociativity(const QuantumSemigroup& q);

/// Verifies well-definedness and coassociativity; throws
/// NotAHomomorphism or DiagramInconsistency otherwise.
QuantumSemigroup make_quantum_semigroup(Morphism comult);

/// (Theta (x) Theta) o Delta_dom = Delta_cod o Theta on generators.
Verdict check_qsg_morphism(const Morphism& theta, const QuantumSemigroup& dom,
                           const QuantumSemigroup& cod);

/// C(G) = C^|G| with Delta(delta_g) = sum_h delta_h (x) delta_{h^-1 g}.
/// Basis element e_{k+1} is delta_k.
QuantumSemigroup group_function_qsg(const FiniteGroup& g);

/// Evaluation at the group identity.
Morphism group_counit(const FiniteGroup& g);

/// Delta(a) = a (x) 1.
QuantumSemigroup trivial_qsg(const AlgebraPtr& a);

struct QuantumFamily {
  FreeProductPtr algebra;  // C = A^{*n}
  Morphism phi;            // A -> C^n (x) C
};

/// Phi(a) = sum_i e_i (x) iota_i(a) on A^{*n}.
QuantumFamily quantum_family_of_maps(const FiniteDimPtr& a, std::size_t n);

/// Delta_C(iota_k(g)) = (iota_k (x) iota_k) Delta_k(g) on the free product.
QuantumSemigroup free_product_qsg(const std::vector<QuantumSemigroup>& factors);

/// Gamma: C -> C (x) C for C = A^{*n} read off from
/// (mu (x) id (x) id)(id (x) flip (x) id)(Phi (x) Phi) Delta_A, then
/// checked against (id (x) Gamma) Phi on every generator.
Morphism sadr_comultiplication(const QuantumSemigroup& a, std::size_t n);

/// Gamma versus the free-product Delta on every generator of A^{*n}.
Verdict verify_gamma_equals_delta(const QuantumSemigroup& a, std::size_t n);

/// A character is a morphism into C^1 (the scalars).
using Character = Morphism;

FiniteDimPtr scalars();
Scalar character_value(const Character& chi, const Element& x);
/// Character of C^n sending e_i to values[i].
Character point_character(const FiniteDimPtr& cn, const std::vector<Scalar>& values);

/// (eps (x) id) Delta = id = (id (x) eps) Delta on generators.
Verdict check_counit(const QuantumSemigroup& q, const Character& eps);

/// Induced counit on the free product: factor_through_free_product.
Character counit_of_free_product(const FreeProductPtr& c, const std::vector<Character>& counits);

/// The composition comultiplication on C^2 * C^2:
/// p -> p (x) p + (1 - p) (x) q,  q -> q (x) p + (1 - q) (x) q,
/// with p = e1_1, q = e1_2.
QuantumSemigroup composition_qsg_qmap2();

/// (chi * chi')(x) = (chi (x) chi')(Delta(x)).
Character convolve_characters(const Character& chi, const Character& chi2, const QuantumSemigroup& q);

/// table[i][j] = index of chars[i] * chars[j] in chars. Throws
/// InvalidArgument when the list is not closed under convolution.
std::vector<std::vector<std::size_t>> character_monoid(const QuantumSemigroup& q,
                                                       const std::vector<Character>& chars);

/// Identity element plus two-sided inverses.
bool is_group(const std::vector<std::vector<std::size_t>>& table);

/// The Theta presentation for maps from M_2 to C(Z_2): generators p, q
/// (self-adjoint) and z with p = p^2 + z* z, q = q^2 + z z*, z p = (1 - q) z.
Presentation noqg_presentation();

struct NoqgPhi {
  Presentation presentation;
  AlgebraPtr ambient;  // free *-algebra on p, q (self-adjoint), z
  Morphism phi;        // C^2 -> M_2 (x) ambient, e1 -> [[p, z*], [z, q]]
};

NoqgPhi noqg_algebra_and_phi();

struct NoqgDerivation {
  /// Entries (1,1), (1,2), (2,1), (2,2) of Phi(e1)^2 - Phi(e1).
  std::vector<NCExpr> square_entries;
  /// Nonzero entries of Phi(e1)* - Phi(e1) in the free *-algebra where p, q
  /// are not assumed self-adjoint.
  std::vector<NCExpr> adjoint_entries;
  /// All derived relations, deduplicated up to sign and adjoint.
  std::vector<NCExpr> relations;
};

NoqgDerivation derive_noqg_relations();

}  // namespace qmaps
