#pragma once

// Numeric *-representations used as an oracle for the exact layer. Each
// factor of a free product acts on C^6 through a random unitary change of
// basis, so products in the free product are checked against plain matrix
// products of the represented basis expressions.

#include <Eigen/Dense>
#include <map>
#include <random>
#include <string>

#include "qmaps/algebra.hpp"
#include "qmaps/free_product.hpp"

namespace qmaps::oracle {

using Mat = Eigen::MatrixXcd;

inline Mat random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  }
  return Eigen::HouseholderQR<Mat>(m).householderQ();
}

/// Matrices for the basis of a finite-dimensional factor, acting on C^6.
/// C^n (n <= 6): spectral projections of a diagonal with each of the n
/// values used at least once. M_n (n | 6): E_ij (x) I_(6/n).
inline std::map<std::string, Mat> factor_rep(const FiniteDimAlgebra& a, std::mt19937_64& rng) {
  constexpr int kN = 6;
  const Mat u = random_unitary(kN, rng);
  std::map<std::string, Mat> out;
  const std::string& first = a.basis_name(0);
  if (first == "e1") {
    const int n = static_cast<int>(a.dim());
    for (int i = 0; i < n; ++i) {
      Mat d = Mat::Zero(kN, kN);
      for (int s = i; s < kN; s += n) d(s, s) = 1.0;
      out[a.basis_name(static_cast<std::size_t>(i))] = u * d * u.adjoint();
    }
  } else {
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(a.dim()))));
    const int m = kN / n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Mat e = Mat::Zero(kN, kN);
        for (int s = 0; s < m; ++s) e(i * m + s, j * m + s) = 1.0;
        out[a.basis_name(static_cast<std::size_t>(i * n + j))] = u * e * u.adjoint();
      }
    }
  }
  return out;
}

/// Representation of a free product: letter "name_k" acts as factor k's
/// matrix for `name`.
class FreeProductRep {
 public:
  FreeProductRep(const FreeProductAlgebra& c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < c.num_factors(); ++k) {
      for (auto& [name, m] : factor_rep(*c.factor(k), rng)) {
        letters_[FreeProductAlgebra::copy_name(name, k)] = m;
      }
    }
  }

  Mat operator()(const NCExpr& e) const {
    Mat out = Mat::Zero(6, 6);
    for (const auto& [word, coeff] : e.terms()) {
      Mat t = Mat::Identity(6, 6) * coeff.to_complex();
      for (const auto& l : word) {
        const Mat& m = letters_.at(l.name);
        t = t * (l.starred ? Mat(m.adjoint()) : m);
      }
      out += t;
    }
    return out;
  }

  Mat operator()(const Element& x) const {
    Mat out = Mat::Zero(6, 6);
    for (const auto& [w, c] : x.terms()) out += c.to_complex() * (*this)(x.owner().basis_expression(w));
    return out;
  }

 private:
  std::map<std::string, Mat> letters_;
};

inline double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace qmaps::oracle
