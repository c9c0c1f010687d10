#include "qmaps/free_product.hpp"

#include <cassert>

#include "qmaps/errors.hpp"

namespace qmaps {

namespace {

std::string product_signature(const std::vector<FiniteDimPtr>& factors) {
  std::string s = "(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " * ";
    s += factors[i]->signature();
  }
  return s + ")";
}

Presentation product_presentation(const std::vector<FiniteDimPtr>& factors) {
  Presentation p;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto rename = [k](const std::string& n) { return FreeProductAlgebra::copy_name(n, k); };
    for (const auto& g : factors[k]->presentation().generators) {
      p.generators.push_back({rename(g.name), g.self_adjoint});
    }
    for (const auto& r : factors[k]->presentation().relations) p.relations.push_back(r.renamed(rename));
  }
  return p;
}

}  // namespace

FreeProductAlgebra::FreeProductAlgebra(std::vector<FiniteDimPtr> factors)
    : AlgebraObject(product_signature(factors), product_presentation(factors)),
      factors_(std::move(factors)) {}

std::string FreeProductAlgebra::copy_name(const std::string& name, std::size_t k) {
  return name + "_" + std::to_string(k + 1);
}

FreeProductPtr free_product(const std::vector<AlgebraPtr>& factors) {
  if (factors.empty()) throw InvalidArgument("free_product: empty factor list");
  std::vector<FiniteDimPtr> flat;
  for (const auto& f : factors) {
    if (!f) throw InvalidArgument("free_product: null factor");
    if (auto fd = std::dynamic_pointer_cast<const FiniteDimAlgebra>(f)) {
      flat.push_back(fd);
    } else if (auto fp = std::dynamic_pointer_cast<const FreeProductAlgebra>(f)) {
      flat.insert(flat.end(), fp->factors().begin(), fp->factors().end());
    } else {
      throw InvalidArgument("free_product: factor '" + f->signature() +
                            "' is neither finite-dimensional nor a free product");
    }
  }
  return std::make_shared<const FreeProductAlgebra>(std::move(flat));
}

FreeProductPtr free_power(const AlgebraPtr& factor, std::size_t n) {
  if (n == 0) throw InvalidArgument("free_power: need at least one copy");
  return free_product(std::vector<AlgebraPtr>(n, factor));
}

Terms FreeProductAlgebra::embed_terms(std::size_t k, const Terms& natural) const {
  const auto [unit_coeff, comp] = factors_.at(k)->split(natural);
  Terms out;
  accumulate(out, Word{}, unit_coeff);
  for (std::size_t c = 0; c < comp.size(); ++c) {
    accumulate(out, Word{static_cast<std::int32_t>(k), static_cast<std::int32_t>(c)}, comp[c]);
  }
  return out;
}

Element FreeProductAlgebra::embed(std::size_t k, const Element& x) const {
  if (k >= factors_.size()) throw InvalidArgument("iota: factor index out of range");
  require_same_owner(x.owner(), *factors_[k], "iota");
  return Element(ptr(), embed_terms(k, x.terms()));
}

// Multiplies the prefix a[0, a_len) by the suffix b[b_start, end).
void FreeProductAlgebra::multiply_into(Terms& out, const Word& a, std::size_t a_len, const Word& b,
                                       std::size_t b_start, const Scalar& coeff) const {
  auto concat = [&](std::size_t a_end, const Word* middle, std::size_t b_from) {
    Word w(a.begin(), a.begin() + static_cast<long>(a_end));
    if (middle) w.insert(w.end(), middle->begin(), middle->end());
    w.insert(w.end(), b.begin() + static_cast<long>(b_from), b.end());
    return w;
  };
  if (a_len == 0 || b_start == b.size()) {
    accumulate(out, concat(a_len, nullptr, b_start), coeff);
    return;
  }
  const std::int32_t fa = a[a_len - 2];
  const std::int32_t fb = b[b_start];
  if (fa != fb) {
    accumulate(out, concat(a_len, nullptr, b_start), coeff);
    return;
  }
  const auto& factor = *factors_[static_cast<std::size_t>(fa)];
  const auto& [lambda, gamma] = factor.complement_product(static_cast<std::size_t>(a[a_len - 1]),
                                                          static_cast<std::size_t>(b[b_start + 1]));
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (gamma[k].is_zero()) continue;
    const Word letter{fa, static_cast<std::int32_t>(k)};
    accumulate(out, concat(a_len - 2, &letter, b_start + 2), coeff * gamma[k]);
  }
  if (!lambda.is_zero()) {
    // The junction shrinks by two letters on every scalar branch.
    assert((a_len - 2) + (b.size() - b_start - 2) < a_len + (b.size() - b_start));
    multiply_into(out, a, a_len - 2, b, b_start + 2, coeff * lambda);
  }
}

Terms FreeProductAlgebra::multiply_basis(const Word& a, const Word& b) const {
  Terms out;
  multiply_into(out, a, a.size(), b, 0, Scalar(1));
  return out;
}

Terms FreeProductAlgebra::star_basis(const Word& w) const {
  Terms out = unit_terms();
  for (std::size_t pos = w.size(); pos >= 2; pos -= 2) {
    const auto f = static_cast<std::size_t>(w[pos - 2]);
    const auto& [sigma, tau] = factors_[f]->complement_star(static_cast<std::size_t>(w[pos - 1]));
    Terms letter;
    accumulate(letter, Word{}, sigma);
    for (std::size_t k = 0; k < tau.size(); ++k) {
      accumulate(letter, Word{static_cast<std::int32_t>(f), static_cast<std::int32_t>(k)}, tau[k]);
    }
    out = multiply(out, letter);
  }
  return out;
}

Terms FreeProductAlgebra::generator_terms(const std::string& name) const {
  const auto sep = name.rfind('_');
  if (sep == std::string::npos) throw UnknownGenerator(name);
  std::size_t k = 0;
  try {
    k = std::stoul(name.substr(sep + 1));
  } catch (const std::exception&) {
    throw UnknownGenerator(name);
  }
  if (k == 0 || k > factors_.size()) throw UnknownGenerator(name);
  const auto& factor = *factors_[k - 1];
  return embed_terms(k - 1, factor.generator_terms(name.substr(0, sep)));
}

std::vector<NCExpr> FreeProductAlgebra::basis_factors(const Word& w) const {
  std::vector<NCExpr> out;
  for (std::size_t pos = 0; pos < w.size(); pos += 2) {
    const auto f = static_cast<std::size_t>(w[pos]);
    const auto& factor = *factors_[f];
    const auto& v = factor.complement_vector(static_cast<std::size_t>(w[pos + 1]));
    NCExpr e;
    for (std::size_t i = 0; i < v.size(); ++i) {
      e += NCExpr::letter(copy_name(factor.basis_name(i), f)).scaled(v[i]);
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string FreeProductAlgebra::format_word(const Word& w) const {
  std::string s;
  for (std::size_t pos = 0; pos < w.size(); pos += 2) {
    if (!s.empty()) s += " ";
    const auto f = static_cast<std::size_t>(w[pos]);
    s += copy_name(factors_[f]->complement_name(static_cast<std::size_t>(w[pos + 1])), f);
  }
  return s;
}

std::vector<Word> FreeProductAlgebra::basis_words(std::size_t max_length) const {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (std::size_t f = 0; f < factors_.size(); ++f) {
        if (!w.empty() && static_cast<std::size_t>(w[w.size() - 2]) == f) continue;
        for (std::size_t c = 0; c < factors_[f]->complement_size(); ++c) {
          Word v = w;
          v.push_back(static_cast<std::int32_t>(f));
          v.push_back(static_cast<std::int32_t>(c));
          next.push_back(std::move(v));
        }
      }
    }
    if (next.empty()) break;
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace qmaps
