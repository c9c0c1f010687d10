#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmaps/qsg.hpp"
#include "qmaps/random.hpp"
#include "qmaps/report.hpp"

namespace qmaps {

struct SuiteOptions {
  /// When group or copies is set, configurable suites run that single
  /// configuration (missing parts default to Z2 and 2); otherwise they run
  /// their standard configuration list.
  std::optional<FiniteGroup> group;
  std::optional<std::size_t> copies;
  double step = 0.1;
  double tol = 1e-10;
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
};

/// Every suite name accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite. Exceptions raised inside a
/// check are recorded as a failed check.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Solves for the scalar characters of `pres` and clusters them at
/// 2.5 * step. The report passes when at least one solution is found.
/// Throws InvalidArgument when the system has too many unknowns.
SuiteReport solve_characters_report(const Presentation& pres, const SuiteOptions& options = {});

/// "Z<n>" or a file holding the order followed by the multiplication table.
FiniteGroup parse_group(const std::string& spec);

/// chi_{a,b} on C^2 * C^2: e1_1 -> a, e1_2 -> b.
Character chi_ab(const FreeProductPtr& c, const Scalar& a, const Scalar& b);

}  // namespace qmaps
