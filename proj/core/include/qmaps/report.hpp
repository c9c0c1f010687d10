#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmaps/characters.hpp"

namespace qmaps {

struct CheckRecord {
  std::string id;
  /// The identity being checked, in words.
  std::string anchor;
  bool ok = false;
  /// Exact checks: number of nonzero residue terms. Numeric checks: the
  /// measured residual.
  double residual = 0.0;
  double millis = 0.0;
  std::string detail;

  bool operator==(const CheckRecord&) const = default;
};

/// Solver output attached to character suites.
struct CharacterSummary {
  std::vector<std::string> coordinate_names;
  std::vector<std::vector<double>> solutions;
  std::size_t grid_points = 0;
  std::size_t seeds = 0;
  std::size_t dropped = 0;
  ComponentReport components;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::optional<CharacterSummary> characters;

  /// True iff every check passed. An empty report is not ok.
  bool ok() const;

  std::string to_json(int indent = 2) const;
  /// Throws InvalidArgument on malformed input.
  static SuiteReport from_json(const std::string& text);
  /// One line per check plus a status line.
  std::string to_text() const;
};

}  // namespace qmaps
