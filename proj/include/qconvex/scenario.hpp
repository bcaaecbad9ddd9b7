#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qconvex/betti_engine.hpp"
#include "qconvex/curvature_bochner.hpp"

namespace qconvex {

enum class ScenarioErrorKind {
  parse,       ///< not JSON, wrong types, unknown or missing fields, wrong list lengths
  validation,  ///< well-formed but mathematically inadmissible (q-convexity, ranges)
};

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(ScenarioErrorKind kind, std::string field, const std::string& message);
  ScenarioErrorKind kind() const { return kind_; }
  /// JSON path of the offending field, e.g. "points[2].curvatures".
  const std::string& field() const { return field_; }

 private:
  ScenarioErrorKind kind_;
  std::string field_;
};

/// Hand-authored input for `certify`. See docs/scenario-format.md.
struct Scenario {
  int n = 0;
  int q = 0;
  int p = 0;
  std::optional<double> c;                           ///< ambient lower bound, or
  std::optional<std::vector<double>> ambient_eigenvalues;  ///< full sorted spectrum
  std::vector<std::vector<double>> points;           ///< principal curvatures per point
  std::optional<double> diameter;
  bool ambient_strict_at_point = false;
};

/// Parses scenario JSON; throws ScenarioError(parse) on schema violations.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Throws ScenarioError(validation) on inadmissible data.
AmbientModel make_ambient(const Scenario& s);
/// Throws ScenarioError(validation), naming the first point that is not q-convex.
HypersurfaceSample make_sample(const Scenario& s, double margin_tolerance_scale = 1e-10);

}  // namespace qconvex
