#include "qmaps/random.hpp"

#include <algorithm>

namespace qmaps {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Scalar random_scalar(Rng& rng, int max_num, int max_den, bool complex) {
  auto part = [&]() {
    const long num = uniform(rng, 1, max_num) * (uniform(rng, 0, 1) ? 1 : -1);
    return Scalar::rational(num, uniform(rng, 1, max_den));
  };
  Scalar s = part();
  if (complex && uniform(rng, 0, 1)) s += part() * Scalar::i();
  return s;
}

Element random_element(const AlgebraPtr& algebra, Rng& rng, std::size_t max_terms, std::size_t max_length,
                       bool complex) {
  const std::vector<Word> words = algebra->basis_words(max_length);
  const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::max<std::size_t>(max_terms, 1))));
  Terms terms;
  for (std::size_t k = 0; k < n; ++k) {
    const Word& w = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(words.size()) - 1))];
    terms[w] = random_scalar(rng, 4, 8, complex);
  }
  return Element(algebra, std::move(terms));
}

NCExpr random_expression(const std::vector<std::string>& names, Rng& rng, std::size_t max_terms,
                         std::size_t max_length) {
  NCExpr out;
  const long terms = uniform(rng, 1, static_cast<long>(max_terms));
  for (long t = 0; t < terms; ++t) {
    NCExpr term = NCExpr::constant(random_scalar(rng, 5, 6, true));
    const long len = uniform(rng, 0, static_cast<long>(max_length));
    for (long k = 0; k < len; ++k) {
      NCExpr f = NCExpr::letter(names[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(names.size()) - 1))],
                                uniform(rng, 0, 2) == 0);
      if (uniform(rng, 0, 4) == 0) f = (f + NCExpr::constant(random_scalar(rng))).star();
      term = term * f;
    }
    out += term;
  }
  return out;
}

}  // namespace qmaps
