#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qmaps/algebra.hpp"
#include "qmaps/free_product.hpp"

namespace qmaps::funcmodel {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

/// The algebra C^2 * C^2 that the model represents. The first copy of e1 is
/// p, the second is q.
FreeProductPtr model_algebra();

/// p(t) = diag(0, 1). Throws InvalidArgument for t outside [0, 1].
Mat2 sample_p(double t);
/// q(t) = 1/2 [[1 - cos 2 pi t, i sin 2 pi t], [-i sin 2 pi t, 1 + cos 2 pi t]].
Mat2 sample_q(double t);

/// Evaluates an expression in e1_1, e2_1, e1_2, e2_2 (or p, q) at t.
Mat2 evaluate_expression(const NCExpr& e, double t);

/// Throws OwnerMismatch unless x lives in model_algebra().
Mat2 evaluate_element(const Element& x, double t);

/// x in C (x) C evaluated at (s, t) as a 4 x 4 matrix.
Mat4 evaluate_tensor(const Element& x, double s, double t);

/// Both endpoints, a uniform interior grid and golden-ratio offsets,
/// sorted. Throws InvalidArgument for count < 2.
std::vector<double> sample_points(std::size_t count);

/// Max absolute entry.
double max_entry(const Eigen::MatrixXcd& m);

/// Max over sample_points(samples) of max_entry(evaluate_element(x, t)).
double oracle_residual(const Element& x, std::size_t samples);
bool oracle_is_zero(const Element& x, std::size_t samples, double tol);

/// Max over sample_points(samples) of max_entry(evaluate_expression(e, t)).
/// Works on the expression as written, without symbolic reduction.
double expression_residual(const NCExpr& e, std::size_t samples);

struct ModelCheck {
  std::string id;
  std::string description;
  double residual = 0.0;
  double limit = 0.0;
  bool ok() const { return residual <= limit; }
};

/// Idempotence and self-adjointness of p(t), q(t) at `samples` points,
/// endpoint diagonality, and idempotence and self-adjointness of Delta(p)
/// and Delta_c(p) at pairs x pairs points (s, t).
std::vector<ModelCheck> verify_model(std::size_t samples = 1000, std::size_t pairs = 10);

}  // namespace qmaps::funcmodel
