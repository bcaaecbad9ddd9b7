#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qconvex/betti_engine.hpp"
#include "qconvex/convexity_bounds.hpp"
#include "qconvex/scenario.hpp"

namespace qconvex {

struct PointDiagnostics {
  std::size_t index = 0;
  std::vector<double> curvatures;  ///< sorted ascending
  double mean_curvature = 0.0;
  double margin = 0.0;
  ConvexityStatus convexity = ConvexityStatus::violated;
  double t_lambda_min = 0.0;          ///< smallest eigenvalue of T_A^[p]
  std::vector<double> bochner_bounds;  ///< pointwise 𝔅^[ℓ] bound for ℓ = 1, 2, …

  friend bool operator==(const PointDiagnostics&, const PointDiagnostics&) = default;
};

struct Report {
  std::string version;
  std::string ambient_source;  ///< "bound" or "eigenvalues"
  bool ambient_strict_at_point = false;
  std::optional<double> diameter;
  double margin_tolerance_scale = 1e-10;
  double pinching_tolerance = 1e-10;
  std::optional<double> epsilon;
  std::optional<double> exponent_constant;
  bool strict_somewhere = false;
  double max_mean_curvature = 0.0;
  std::vector<PointDiagnostics> points;
  BettiCertificate certificate;
  std::vector<std::string> notes;

  friend bool operator==(const Report&, const Report&) = default;
};

struct RunOptions {
  double margin_tolerance_scale = 1e-10;
  EngineConfig engine;
};

/// Certifies a parsed scenario. Throws ScenarioError(validation) on bad data.
Report build_report(const Scenario& s, const RunOptions& options = {});
/// Loads and certifies a scenario file. Throws ScenarioError.
Report run_scenario(const std::filesystem::path& path, const RunOptions& options = {});

/// Stable-key-order JSON. parse_report(render_structured(r)) == r.
std::string render_structured(const Report& r);
/// Throws ScenarioError(parse) on malformed input or unknown fields.
Report parse_report(std::string_view text);
std::string render_text(const Report& r);

}  // namespace qconvex
