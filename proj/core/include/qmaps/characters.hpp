#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmaps/presentation.hpp"

namespace qmaps {

/// Generator name -> complex value. Self-adjoint generators are real.
using CharacterAssignment = std::map<std::string, std::complex<double>>;

/// Max over all relations (including g = g* for self-adjoint g) of the
/// modulus of the relation with generators replaced by scalars and star by
/// complex conjugation. Throws UnknownGenerator for an unassigned name.
double residual(const Presentation& pres, const CharacterAssignment& a);

/// The relations of a presentation as a polynomial map from real
/// coordinates to C^m. A self-adjoint generator takes one real coordinate,
/// any other generator two (real and imaginary part).
class CharacterSystem {
 public:
  static constexpr std::size_t kMaxUnknowns = 6;

  /// Throws InvalidArgument beyond kMaxUnknowns real unknowns.
  explicit CharacterSystem(const Presentation& pres);

  std::size_t unknowns() const { return coordinate_names_.size(); }
  std::size_t equations() const { return relations_.size(); }
  const std::vector<std::string>& coordinate_names() const { return coordinate_names_; }

  /// Relation values at x.
  std::vector<std::complex<double>> values(const std::vector<double>& x) const;
  double residual(const std::vector<double>& x) const;
  /// Row 2r holds d Re f_r, row 2r+1 holds d Im f_r. Row-major,
  /// 2 * equations() by unknowns().
  std::vector<double> jacobian(const std::vector<double>& x) const;

  CharacterAssignment assignment(const std::vector<double>& x) const;
  std::vector<double> coordinates(const CharacterAssignment& a) const;

 private:
  struct Factor {
    std::size_t generator;
    bool starred;
  };
  struct Term {
    std::complex<double> coeff;
    std::vector<Factor> factors;
  };

  std::complex<double> generator_value(std::size_t g, const std::vector<double>& x) const;

  std::vector<std::string> generator_names_;
  std::vector<bool> self_adjoint_;
  std::vector<std::size_t> first_coordinate_;
  std::vector<std::string> coordinate_names_;
  std::vector<std::vector<Term>> relations_;
};

struct SolverOptions {
  /// Per-coordinate interval; empty means [-1.5, 1.5] for every coordinate.
  std::vector<std::pair<double, double>> box;
  double step = 0.1;
  double tol = 1e-10;
  /// Grid points below this residual are refined. Non-positive means
  /// max(1e-2, step / 2).
  double coarse_threshold = 0.0;
  int max_iterations = 60;
  /// Refined points closer than this are merged.
  double dedup_radius = 1e-6;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;

  double effective_coarse_threshold() const;
};

struct SolveResult {
  std::vector<std::string> coordinate_names;
  /// Deduplicated refined solutions, sorted lexicographically.
  std::vector<std::vector<double>> cloud;
  std::size_t grid_points = 0;
  std::size_t seeds = 0;
  /// Seeds whose refinement did not reach tol.
  std::size_t dropped = 0;
};

/// Gauss-Newton with minimum-norm steps. Empty when the residual does not
/// reach tol within max_iterations.
std::optional<std::vector<double>> refine(const CharacterSystem& sys, std::vector<double> x, double tol,
                           int max_iterations);

/// Grid scan, refinement and deduplication. The output does not depend on
/// the thread count.
SolveResult solve_grid(const Presentation& pres, const SolverOptions& options);

struct Component {
  std::size_t samples = 0;
  std::vector<double> representative;
  double diameter = 0.0;
  bool isolated = false;
};

struct ComponentReport {
  double merge_radius = 0.0;
  std::vector<Component> components;

  std::size_t count() const { return components.size(); }
  std::size_t isolated_count() const;
};

/// Single-linkage clustering. A component is isolated when its diameter is
/// below merge_radius / 2. Throws InvalidArgument on an empty cloud.
ComponentReport cluster_components(const std::vector<std::vector<double>>& cloud, double merge_radius);

enum class NoqgFamily { kPlus, kMinus, kZero, kOmega };

/// Closed-form characters of the p, q, z presentation. For kOmega the
/// parameter is k in {0, 1}; for kPlus and kMinus |zeta| < 1/2; for kZero
/// |zeta| = 1/2. Throws InvalidArgument outside these domains.
CharacterAssignment noqg_family(NoqgFamily kind, std::complex<double> parameter);

/// Euclidean distance in (p, q, Re z, Im z) from a to the nearest closed-form
/// character. Sphere members are matched through zeta = z, so the value is
/// an upper bound on the true distance.
double distance_to_noqg_families(const CharacterAssignment& a);

}  // namespace qmaps
