#include "qmaps/free_star.hpp"

#include <set>

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

std::string free_signature(const std::vector<Generator>& gens) {
  std::string s = "Free<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += gens[i].name;
    if (gens[i].self_adjoint) s += ":sa";
  }
  return s + ">";
}

}  // namespace

FreeStarAlgebra::FreeStarAlgebra(std::vector<Generator> generators)
    : AlgebraObject(free_signature(generators), Presentation{generators, {}}) {}

AlgebraPtr make_free_star(const std::vector<Generator>& generators) {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!seen.insert(g.name).second) throw InvalidArgument("duplicate generator '" + g.name + "'");
  }
  return std::make_shared<const FreeStarAlgebra>(generators);
}

std::int32_t FreeStarAlgebra::index_of(const std::string& name) const {
  const auto& gens = presentation().generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].name == name) return static_cast<std::int32_t>(i);
  }
  throw UnknownGenerator(name);
}

Terms FreeStarAlgebra::multiply_basis(const Word& a, const Word& b) const {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return Terms{{w, Scalar(1)}};
}

Terms FreeStarAlgebra::star_basis(const Word& w) const {
  const auto& gens = presentation().generators;
  Word r(w.rbegin(), w.rend());
  for (auto& code : r) {
    if (!gens[static_cast<std::size_t>(code / 2)].self_adjoint) code ^= 1;
  }
  return Terms{{r, Scalar(1)}};
}

Terms FreeStarAlgebra::generator_terms(const std::string& name) const {
  return Terms{{Word{2 * index_of(name)}, Scalar(1)}};
}

std::vector<NCExpr> FreeStarAlgebra::basis_factors(const Word& w) const {
  const auto& gens = presentation().generators;
  std::vector<NCExpr> out;
  for (auto code : w) out.push_back(NCExpr::letter(gens[static_cast<std::size_t>(code / 2)].name, code & 1));
  return out;
}

std::string FreeStarAlgebra::format_word(const Word& w) const {
  const auto& gens = presentation().generators;
  std::string s;
  for (auto code : w) {
    if (!s.empty()) s += " ";
    s += gens[static_cast<std::size_t>(code / 2)].name;
    if (code & 1) s += "'";
  }
  return s;
}

std::vector<Word> FreeStarAlgebra::basis_words(std::size_t max_length) const {
  std::vector<std::int32_t> letters;
  const auto& gens = presentation().generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    letters.push_back(static_cast<std::int32_t>(2 * i));
    if (!gens[i].self_adjoint) letters.push_back(static_cast<std::int32_t>(2 * i + 1));
  }
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length && !letters.empty(); ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (auto l : letters) {
        Word v = w;
        v.push_back(l);
        next.push_back(v);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace qmaps
