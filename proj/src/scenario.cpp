#include "qconvex/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qconvex/version.hpp"

namespace qconvex {

using nlohmann::json;

ScenarioError::ScenarioError(ScenarioErrorKind kind, std::string field, const std::string& message)
    : std::runtime_error(field.empty() ? message : field + ": " + message), kind_(kind), field_(std::move(field)) {}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ScenarioError(ScenarioErrorKind::parse, field, message);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  const std::set<std::string_view> keys(allowed);
  for (const auto& [key, _] : obj.items()) {
    if (!keys.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  if (!obj.contains(key)) fail(path.empty() ? key : path + "." + key, "missing required field");
  return obj.at(key);
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<int>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::vector<double> as_numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("", "scenario must be a JSON object");
  reject_unknown(doc, "", {"schema", "n", "q", "p", "ambient", "points", "diameter", "flags"});

  if (doc.contains("schema")) {
    const auto& schema = doc.at("schema");
    if (!schema.is_string() || schema.get<std::string>() != kScenarioSchema) {
      fail("schema", "expected \"" + std::string(kScenarioSchema) + "\"");
    }
  }

  Scenario s;
  s.n = as_int(require(doc, "", "n"), "n");
  s.q = as_int(require(doc, "", "q"), "q");
  s.p = as_int(require(doc, "", "p"), "p");
  if (s.n < 3 || s.n > kMaxDimension - 1) fail("n", "must lie in [3, " + std::to_string(kMaxDimension - 1) + "]");

  const json& ambient = require(doc, "", "ambient");
  if (!ambient.is_object()) fail("ambient", "expected an object");
  reject_unknown(ambient, "ambient", {"c", "eigenvalues"});
  if (ambient.contains("c") == ambient.contains("eigenvalues")) {
    fail("ambient", "exactly one of \"c\" or \"eigenvalues\" is required");
  }
  if (ambient.contains("c")) {
    s.c = as_number(ambient.at("c"), "ambient.c");
  } else {
    auto ev = as_numbers(ambient.at("eigenvalues"), "ambient.eigenvalues");
    const std::size_t expected = binomial(s.n + 1, 2);
    if (ev.size() != expected) {
      fail("ambient.eigenvalues", "expected binom(n+1, 2) = " + std::to_string(expected) + " values, got " +
                                      std::to_string(ev.size()));
    }
    s.ambient_eigenvalues = std::move(ev);
  }

  const json& points = require(doc, "", "points");
  if (!points.is_array() || points.empty()) fail("points", "expected a non-empty array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = "points[" + std::to_string(i) + "]";
    const json& pt = points[i];
    if (!pt.is_object()) fail(path, "expected an object");
    reject_unknown(pt, path, {"curvatures"});
    auto k = as_numbers(require(pt, path, "curvatures"), path + ".curvatures");
    if (static_cast<int>(k.size()) != s.n) {
      fail(path + ".curvatures", "expected n = " + std::to_string(s.n) + " values, got " + std::to_string(k.size()));
    }
    s.points.push_back(std::move(k));
  }

  if (doc.contains("diameter")) s.diameter = as_number(doc.at("diameter"), "diameter");
  if (doc.contains("flags")) {
    const json& flags = doc.at("flags");
    if (!flags.is_object()) fail("flags", "expected an object");
    reject_unknown(flags, "flags", {"ambient_strict_at_point"});
    if (flags.contains("ambient_strict_at_point")) {
      const auto& v = flags.at("ambient_strict_at_point");
      if (!v.is_boolean()) fail("flags.ambient_strict_at_point", "expected a boolean");
      s.ambient_strict_at_point = v.get<bool>();
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(ScenarioErrorKind::parse, "", "cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

AmbientModel make_ambient(const Scenario& s) {
  try {
    AmbientModel model = s.ambient_eigenvalues ? AmbientModel::from_eigenvalues(s.n, s.p, *s.ambient_eigenvalues)
                                               : AmbientModel::from_bound(s.n, s.p, *s.c);
    model.assert_strict_at_point(s.ambient_strict_at_point);
    return model;
  } catch (const DomainError& e) {
    throw ScenarioError(ScenarioErrorKind::validation, "ambient", e.what());
  }
}

HypersurfaceSample make_sample(const Scenario& s, double margin_tolerance_scale) {
  std::vector<PrincipalSpectrum> pts;
  pts.reserve(s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    try {
      pts.emplace_back(s.points[i]);
    } catch (const DomainError& e) {
      throw ScenarioError(ScenarioErrorKind::validation, "points[" + std::to_string(i) + "]", e.what());
    }
  }
  try {
    return HypersurfaceSample(s.n, s.q, std::move(pts), s.diameter, margin_tolerance_scale);
  } catch (const ConvexityViolation& e) {
    throw ScenarioError(ScenarioErrorKind::validation, "points[" + std::to_string(e.point()) + "]", e.what());
  } catch (const DomainError& e) {
    throw ScenarioError(ScenarioErrorKind::validation, "", e.what());
  }
}

}  // namespace qconvex
