#include "qmaps/presentation.hpp"

#include "qmaps/errors.hpp"

namespace qmaps {

const Generator* Presentation::find(const std::string& name) const {
  for (const auto& g : generators) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

std::set<std::string> Presentation::self_adjoint_names() const {
  std::set<std::string> out;
  for (const auto& g : generators) {
    if (g.self_adjoint) out.insert(g.name);
  }
  return out;
}

std::vector<NCExpr> Presentation::all_relations() const {
  std::vector<NCExpr> out;
  for (const auto& g : generators) {
    if (g.self_adjoint) out.push_back(NCExpr::letter(g.name) - NCExpr::letter(g.name, true));
  }
  out.insert(out.end(), relations.begin(), relations.end());
  return out;
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!seen.insert(g.name).second) throw InvalidArgument("duplicate generator '" + g.name + "'");
  }
  for (const auto& r : relations) {
    for (const auto& n : r.generator_names()) {
      if (!seen.count(n)) throw UnknownGenerator(n);
    }
  }
}

}  // namespace qmaps
