#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qmaps/ncexpr.hpp"

namespace qmaps {

struct Generator {
  std::string name;
  bool self_adjoint = false;

  bool operator==(const Generator&) const = default;
};

/// Generators and relations of a unital *-algebra. Each relation is read
/// as "= 0". A self-adjoint generator carries the relation g = g*
/// implicitly.
struct Presentation {
  std::vector<Generator> generators;
  std::vector<NCExpr> relations;

  const Generator* find(const std::string& name) const;
  bool has(const std::string& name) const { return find(name) != nullptr; }
  std::set<std::string> self_adjoint_names() const;

  /// The implicit g - g* relations for self-adjoint generators followed by
  /// the explicit relations.
  std::vector<NCExpr> all_relations() const;

  /// Throws InvalidArgument on duplicate names and UnknownGenerator when a
  /// relation mentions an undeclared generator.
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

}  // namespace qmaps
