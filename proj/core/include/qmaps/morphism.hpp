#pragma once

#include <string>
#include <vector>

#include "qmaps/algebra.hpp"
#include "qmaps/finite_dim.hpp"
#include "qmaps/free_product.hpp"

namespace qmaps {

/// A unital *-homomorphism candidate, determined by the images of the
/// domain's presentation generators. Construction checks that every
/// generator has an image in the codomain; whether the relations are
/// respected is a separate question answered by check_well_defined.
class Morphism {
 public:
  Morphism(AlgebraPtr domain, AlgebraPtr codomain, GeneratorImages images);

  const AlgebraPtr& domain() const { return domain_; }
  const AlgebraPtr& codomain() const { return codomain_; }
  const GeneratorImages& images() const { return images_; }
  const Element& image(const std::string& generator) const;

  /// Evaluates on an element of the domain through the basis expressions.
  Element operator()(const Element& x) const;
  /// Evaluates an expression in the domain generators.
  Element apply(const NCExpr& e) const;

 private:
  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  GeneratorImages images_;
};

struct Violation {
  std::string label;
  Element residue;
};

/// Outcome of an exact check: ok iff no violations.
struct Verdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  /// Total number of nonzero terms across all residues.
  std::size_t residue_terms() const;
  std::string summary(std::size_t max_items = 3) const;
};

/// ok iff every relation of the domain (including g = g* for self-adjoint
/// generators) maps to exactly zero.
Verdict check_well_defined(const Morphism& m);

/// Exact equality of images on every domain generator.
Verdict compare_on_generators(const Morphism& a, const Morphism& b);

/// Checks eval(xy) = eval(x)eval(y) and eval(x*) = eval(x)* on all pairs of
/// canonical basis words up to `max_length`.
Verdict check_multiplicative(const Morphism& m, std::size_t max_length);

Morphism identity_morphism(const AlgebraPtr& obj);

/// g o f. Throws OwnerMismatch when f's codomain is not g's domain.
Morphism compose(const Morphism& g, const Morphism& f);

/// m1 (x) ... (x) mk from tensor(domains) to tensor(codomains).
Morphism tensor_morphisms(const std::vector<Morphism>& ms);

/// iota_k: factor k -> C (0-based).
Morphism iota(const FreeProductPtr& c, std::size_t k);

/// The unique Lambda: C -> D with Lambda o iota_k = psis[k].
Morphism factor_through_free_product(const FreeProductPtr& c, const std::vector<Morphism>& psis);

/// Splits Psi: A -> C^n (x) D as Psi(a) = sum_i e_i (x) Psi_i(a).
std::vector<Morphism> decompose_over_cn(const Morphism& psi);

/// Inverse of decompose_over_cn: a -> sum_i e_i (x) parts[i](a).
Morphism assemble_over_cn(const FiniteDimPtr& cn, const std::vector<Morphism>& parts);

/// pi: A^{*n} -> A sending every copy of each generator to that generator.
Morphism pi(const FreeProductPtr& c);

/// Multiplication map B (x) B -> B. Throws NotAHomomorphism when B is not
/// commutative.
Morphism mu(const FiniteDimPtr& b);

/// a -> 1 (x) a from A to B (x) A.
Morphism unital_embed(const AlgebraPtr& b, const AlgebraPtr& a);

}  // namespace qmaps
