#include "qmaps/funcmodel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>

#include "qmaps/errors.hpp"
#include "qmaps/qsg.hpp"
#include "qmaps/tensor.hpp"

namespace qmaps::funcmodel {

namespace {

using cd = std::complex<double>;

void check_t(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("model parameter outside [0, 1]: " + std::to_string(t));
}

Mat2 letter_value(const std::string& name, double t) {
  if (name == "e1_1" || name == "p") return sample_p(t);
  if (name == "e1_2" || name == "q") return sample_q(t);
  if (name == "e2_1") return Mat2::Identity() - sample_p(t);
  if (name == "e2_2") return Mat2::Identity() - sample_q(t);
  throw UnknownGenerator(name);
}

Mat2 evaluate_word_terms(const AlgebraObject& owner, const Terms& terms, double t) {
  Mat2 out = Mat2::Zero();
  for (const auto& [w, c] : terms) out += c.to_complex() * evaluate_expression(owner.basis_expression(w), t);
  return out;
}

}  // namespace

FreeProductPtr model_algebra() { return free_power(make_cn(2), 2); }

Mat2 sample_p(double t) {
  check_t(t);
  Mat2 m = Mat2::Zero();
  m(1, 1) = 1.0;
  return m;
}

Mat2 sample_q(double t) {
  check_t(t);
  const double c = std::cos(2.0 * std::numbers::pi * t);
  const double s = std::sin(2.0 * std::numbers::pi * t);
  Mat2 m;
  m << cd(0.5 * (1.0 - c), 0.0), cd(0.0, 0.5 * s), cd(0.0, -0.5 * s), cd(0.5 * (1.0 + c), 0.0);
  return m;
}

Mat2 evaluate_expression(const NCExpr& e, double t) {
  Mat2 out = Mat2::Zero();
  for (const auto& [word, coeff] : e.terms()) {
    Mat2 term = Mat2::Identity() * coeff.to_complex();
    for (const auto& letter : word) {
      const Mat2 v = letter_value(letter.name, t);
      term = term * (letter.starred ? Mat2(v.adjoint()) : v);
    }
    out += term;
  }
  return out;
}

Mat2 evaluate_element(const Element& x, double t) {
  require_same_owner(x.owner(), *model_algebra(), "function model");
  return evaluate_word_terms(x.owner(), x.terms(), t);
}

Mat4 evaluate_tensor(const Element& x, double s, double t) {
  const auto model = model_algebra();
  require_same_owner(x.owner(), *tensor({model, model}), "function model tensor");
  Mat4 out = Mat4::Zero();
  for (const auto& [key, c] : x.terms()) {
    const auto legs = TensorAlgebra::split_key(key);
    const Mat2 a = evaluate_expression(model->basis_expression(legs[0]), s);
    const Mat2 b = evaluate_expression(model->basis_expression(legs[1]), t);
    out += c.to_complex() * Mat4(Eigen::kroneckerProduct(a, b));
  }
  return out;
}

std::vector<double> sample_points(std::size_t count) {
  if (count < 2) throw InvalidArgument("need at least two sample points");
  std::vector<double> pts{0.0, 1.0};
  const std::size_t interior = count - 2;
  const std::size_t uniform = (interior + 1) / 2;
  for (std::size_t k = 1; k <= uniform; ++k) {
    pts.push_back(static_cast<double>(k) / static_cast<double>(uniform + 1));
  }
  const double inv_phi = 1.0 / std::numbers::phi;
  for (std::size_t k = 1; pts.size() < count; ++k) {
    const double v = std::fmod(0.5 * inv_phi + static_cast<double>(k) * inv_phi, 1.0);
    if (v > 0.0) pts.push_back(v);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

double max_entry(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double oracle_residual(const Element& x, std::size_t samples) {
  require_same_owner(x.owner(), *model_algebra(), "function model");
  std::vector<std::pair<NCExpr, cd>> terms;
  for (const auto& [w, c] : x.terms()) terms.emplace_back(x.owner().basis_expression(w), c.to_complex());
  double worst = 0.0;
  for (double t : sample_points(samples)) {
    Mat2 v = Mat2::Zero();
    for (const auto& [e, c] : terms) v += c * evaluate_expression(e, t);
    worst = std::max(worst, max_entry(v));
  }
  return worst;
}

bool oracle_is_zero(const Element& x, std::size_t samples, double tol) {
  return oracle_residual(x, samples) <= tol;
}

double expression_residual(const NCExpr& e, std::size_t samples) {
  double worst = 0.0;
  for (double t : sample_points(samples)) worst = std::max(worst, max_entry(evaluate_expression(e, t)));
  return worst;
}

std::vector<ModelCheck> verify_model(std::size_t samples, std::size_t pairs) {
  ModelCheck p_idem{"p-idempotent", "max |p(t)^2 - p(t)|", 0.0, 1e-12};
  ModelCheck q_idem{"q-idempotent", "max |q(t)^2 - q(t)|", 0.0, 1e-12};
  ModelCheck sa{"pq-self-adjoint", "max |p(t)* - p(t)|, |q(t)* - q(t)|", 0.0, 1e-12};
  for (double t : sample_points(samples)) {
    const Mat2 p = sample_p(t), q = sample_q(t);
    p_idem.residual = std::max(p_idem.residual, max_entry(p * p - p));
    q_idem.residual = std::max(q_idem.residual, max_entry(q * q - q));
    sa.residual = std::max({sa.residual, max_entry(p.adjoint() - p), max_entry(q.adjoint() - q)});
  }
  ModelCheck ends{"endpoints-diagonal", "off-diagonal entries of p, q at t = 0, 1", 0.0, 1e-15};
  for (double t : {0.0, 1.0}) {
    for (const Mat2& m : {sample_p(t), sample_q(t)}) {
      ends.residual = std::max({ends.residual, std::abs(m(0, 1)), std::abs(m(1, 0))});
    }
  }

  const auto free_delta = free_product_qsg({group_function_qsg(FiniteGroup::cyclic(2)),
                                            group_function_qsg(FiniteGroup::cyclic(2))});
  const auto comp = composition_qsg_qmap2();
  const Element dp = free_delta.comult.image("e1_1");
  const Element dcp = comp.comult.image("e1_1");
  ModelCheck d_idem{"delta-p-projection", "Delta(p)^2 - Delta(p) and Delta(p)* - Delta(p)", 0.0, 1e-12};
  ModelCheck dc_idem{"delta-c-p-projection", "Delta_c(p)^2 - Delta_c(p) and Delta_c(p)* - Delta_c(p)", 0.0,
                     1e-12};
  const auto pts = sample_points(std::max<std::size_t>(pairs, 2));
  for (double s : pts) {
    for (double t : pts) {
      const Mat4 a = evaluate_tensor(dp, s, t);
      d_idem.residual = std::max({d_idem.residual, max_entry(a * a - a), max_entry(a.adjoint() - a)});
      const Mat4 b = evaluate_tensor(dcp, s, t);
      dc_idem.residual = std::max({dc_idem.residual, max_entry(b * b - b), max_entry(b.adjoint() - b)});
    }
  }
  return {p_idem, q_idem, sa, ends, d_idem, dc_idem};
}

}  // namespace qmaps::funcmodel
