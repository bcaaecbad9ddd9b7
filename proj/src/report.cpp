#include "qconvex/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qconvex/exterior_operators.hpp"
#include "qconvex/version.hpp"

namespace qconvex {

using ojson = nlohmann::ordered_json;

Report build_report(const Scenario& s, const RunOptions& options) {
  const AmbientModel ambient = make_ambient(s);
  const HypersurfaceSample sample = make_sample(s, options.margin_tolerance_scale);

  BettiCertificate cert;
  try {
    cert = certify(sample, ambient, s.p, options.engine);
  } catch (const DomainError& e) {
    throw ScenarioError(ScenarioErrorKind::validation, "", e.what());
  }

  Report r;
  r.version = std::string(kVersion);
  r.ambient_source = s.ambient_eigenvalues ? "eigenvalues" : "bound";
  r.ambient_strict_at_point = s.ambient_strict_at_point;
  r.diameter = s.diameter;
  r.margin_tolerance_scale = options.margin_tolerance_scale;
  r.pinching_tolerance = options.engine.pinching_tolerance;
  r.epsilon = options.engine.epsilon;
  r.exponent_constant = options.engine.exponent_constant;
  r.strict_somewhere = sample.strict_somewhere();
  r.max_mean_curvature = sample.max_mean_curvature();

  const int n = s.n;
  const int q = s.q;
  const int ell_max = std::min({s.p, q, n - q});
  for (std::size_t i = 0; i < sample.points().size(); ++i) {
    const auto& k = sample.points()[i];
    PointDiagnostics d;
    d.index = i;
    d.curvatures.assign(k.values().begin(), k.values().end());
    d.mean_curvature = k.mean_curvature();
    const auto m = qconvex_margin(k, q, default_margin_tolerance(k, options.margin_tolerance_scale));
    d.margin = m.margin;
    d.convexity = m.status;
    d.t_lambda_min = closed_form_values(k, s.p).front();
    for (int ell = 1; ell <= ell_max; ++ell) {
      d.bochner_bounds.push_back(bochner_pointwise_bound(ambient.bound(), n, q, ell, d.mean_curvature));
    }
    r.points.push_back(std::move(d));
  }
  r.certificate = std::move(cert);

  r.notes.push_back("degrees 0 and n carry beta = 1 for a closed connected oriented manifold; no vanishing argument is applied there");
  const auto& degs = r.certificate.degrees;
  if (std::any_of(degs.begin(), degs.end(), [](const auto& d) { return d.status == BettiStatus::exponential_bound; })) {
    r.notes.push_back(
        "exponential bounds give the exponent sqrt(-kappa D^2 i(n-i)) only; the multiplicative constant C is not "
        "computed unless supplied");
  }
  if (std::any_of(degs.begin(), degs.end(), [](const auto& d) { return d.rigidity; })) {
    r.notes.push_back(
        "rigid degrees: a positive Betti number there forces every harmonic form of that degree to be parallel "
        "(forms are not constructed)");
  }
  if (s.ambient_strict_at_point) {
    r.notes.push_back("ambient strict positivity at a point is an asserted input, not computed");
  }
  return r;
}

Report run_scenario(const std::filesystem::path& path, const RunOptions& options) {
  return build_report(load_scenario(path), options);
}

namespace {

ojson optional_number(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson degree_json(const DegreeCertificate& d) {
  ojson j;
  j["degree"] = d.degree;
  j["status"] = std::string(to_string(d.status));
  j["rule"] = std::string(to_string(d.rule));
  j["source_degree"] = d.source_degree;
  j["binomial"] = d.binomial;
  j["curvature_floor"] = optional_number(d.curvature_floor);
  j["exponent"] = optional_number(d.exponent);
  j["numeric_bound"] = optional_number(d.numeric_bound);
  j["rigidity"] = d.rigidity;
  j["reason"] = d.reason;
  return j;
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ScenarioError(ScenarioErrorKind::parse, field, message);
}

class Reader {
 public:
  Reader(const ojson& obj, std::string path, std::initializer_list<std::string_view> keys) : obj_(obj), path_(std::move(path)) {
    if (!obj.is_object()) fail(path_, "expected an object");
    const std::set<std::string_view> allowed(keys);
    for (const auto& [key, _] : obj.items()) {
      if (!allowed.count(key)) fail(field(key), "unknown field");
    }
    for (auto k : keys) {
      if (!obj.contains(std::string(k))) fail(field(k), "missing field");
    }
  }

  const ojson& at(std::string_view key) const { return obj_.at(std::string(key)); }
  std::string field(std::string_view key) const { return path_.empty() ? std::string(key) : path_ + "." + std::string(key); }

  double number(std::string_view key) const {
    if (!at(key).is_number()) fail(field(key), "expected a number");
    return at(key).get<double>();
  }
  std::optional<double> optional(std::string_view key) const {
    if (at(key).is_null()) return std::nullopt;
    return number(key);
  }
  template <typename Int>
  Int integer(std::string_view key) const {
    if (!at(key).is_number_integer()) fail(field(key), "expected an integer");
    return at(key).get<Int>();
  }
  bool boolean(std::string_view key) const {
    if (!at(key).is_boolean()) fail(field(key), "expected a boolean");
    return at(key).get<bool>();
  }
  std::string string(std::string_view key) const {
    if (!at(key).is_string()) fail(field(key), "expected a string");
    return at(key).get<std::string>();
  }
  const ojson& array(std::string_view key) const {
    if (!at(key).is_array()) fail(field(key), "expected an array");
    return at(key);
  }
  std::vector<double> numbers(std::string_view key) const {
    std::vector<double> out;
    for (const auto& v : array(key)) {
      if (!v.is_number()) fail(field(key), "expected numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }

 private:
  const ojson& obj_;
  std::string path_;
};

}  // namespace

std::string render_structured(const Report& r) {
  ojson j;
  j["schema"] = std::string(kReportSchema);
  j["version"] = r.version;
  ojson input;
  input["n"] = r.certificate.n;
  input["q"] = r.certificate.q;
  input["p"] = r.certificate.p;
  input["c"] = r.certificate.c;
  input["ambient_source"] = r.ambient_source;
  input["ambient_strict_at_point"] = r.ambient_strict_at_point;
  input["diameter"] = optional_number(r.diameter);
  j["input"] = input;
  ojson tol;
  tol["margin_tolerance_scale"] = r.margin_tolerance_scale;
  tol["pinching_tolerance"] = r.pinching_tolerance;
  tol["epsilon"] = optional_number(r.epsilon);
  tol["exponent_constant"] = optional_number(r.exponent_constant);
  j["tolerances"] = tol;
  ojson sample;
  sample["strict_somewhere"] = r.strict_somewhere;
  sample["max_mean_curvature"] = r.max_mean_curvature;
  j["sample"] = sample;
  ojson points = ojson::array();
  for (const auto& p : r.points) {
    ojson pj;
    pj["index"] = p.index;
    pj["curvatures"] = p.curvatures;
    pj["mean_curvature"] = p.mean_curvature;
    pj["margin"] = p.margin;
    pj["convexity"] = std::string(to_string(p.convexity));
    pj["t_lambda_min"] = p.t_lambda_min;
    pj["bochner_bounds"] = p.bochner_bounds;
    points.push_back(std::move(pj));
  }
  j["points"] = std::move(points);
  ojson degrees = ojson::array();
  for (const auto& d : r.certificate.degrees) degrees.push_back(degree_json(d));
  j["certificate"] = std::move(degrees);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

Report parse_report(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    fail("", std::string("invalid JSON: ") + e.what());
  }
  const Reader top(doc, "", {"schema", "version", "input", "tolerances", "sample", "points", "certificate", "notes"});
  if (top.string("schema") != kReportSchema) fail("schema", "unsupported report schema");

  Report r;
  r.version = top.string("version");

  const Reader input(top.at("input"), "input", {"n", "q", "p", "c", "ambient_source", "ambient_strict_at_point", "diameter"});
  r.certificate.n = input.integer<int>("n");
  r.certificate.q = input.integer<int>("q");
  r.certificate.p = input.integer<int>("p");
  r.certificate.c = input.number("c");
  r.ambient_source = input.string("ambient_source");
  r.ambient_strict_at_point = input.boolean("ambient_strict_at_point");
  r.diameter = input.optional("diameter");

  const Reader tol(top.at("tolerances"), "tolerances",
                   {"margin_tolerance_scale", "pinching_tolerance", "epsilon", "exponent_constant"});
  r.margin_tolerance_scale = tol.number("margin_tolerance_scale");
  r.pinching_tolerance = tol.number("pinching_tolerance");
  r.epsilon = tol.optional("epsilon");
  r.exponent_constant = tol.optional("exponent_constant");

  const Reader sample(top.at("sample"), "sample", {"strict_somewhere", "max_mean_curvature"});
  r.strict_somewhere = sample.boolean("strict_somewhere");
  r.max_mean_curvature = sample.number("max_mean_curvature");

  const auto& points = top.array("points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Reader pr(points[i], "points[" + std::to_string(i) + "]",
                    {"index", "curvatures", "mean_curvature", "margin", "convexity", "t_lambda_min", "bochner_bounds"});
    PointDiagnostics d;
    d.index = pr.integer<std::size_t>("index");
    d.curvatures = pr.numbers("curvatures");
    d.mean_curvature = pr.number("mean_curvature");
    d.margin = pr.number("margin");
    const auto conv = pr.string("convexity");
    if (conv == "strict") d.convexity = ConvexityStatus::strict;
    else if (conv == "nonnegative") d.convexity = ConvexityStatus::nonnegative;
    else if (conv == "violated") d.convexity = ConvexityStatus::violated;
    else fail(pr.field("convexity"), "unknown convexity status");
    d.t_lambda_min = pr.number("t_lambda_min");
    d.bochner_bounds = pr.numbers("bochner_bounds");
    r.points.push_back(std::move(d));
  }

  const auto& degrees = top.array("certificate");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const Reader dr(degrees[i], "certificate[" + std::to_string(i) + "]",
                    {"degree", "status", "rule", "source_degree", "binomial", "curvature_floor", "exponent",
                     "numeric_bound", "rigidity", "reason"});
    DegreeCertificate d;
    d.degree = dr.integer<int>("degree");
    const auto status = betti_status_from_string(dr.string("status"));
    if (!status) fail(dr.field("status"), "unknown status");
    d.status = *status;
    const auto rule = betti_rule_from_string(dr.string("rule"));
    if (!rule) fail(dr.field("rule"), "unknown rule");
    d.rule = *rule;
    d.source_degree = dr.integer<int>("source_degree");
    d.binomial = dr.integer<std::size_t>("binomial");
    d.curvature_floor = dr.optional("curvature_floor");
    d.exponent = dr.optional("exponent");
    d.numeric_bound = dr.optional("numeric_bound");
    d.rigidity = dr.boolean("rigidity");
    d.reason = dr.string("reason");
    r.certificate.degrees.push_back(std::move(d));
  }

  for (const auto& note : top.array("notes")) {
    if (!note.is_string()) fail("notes", "expected strings");
    r.notes.push_back(note.get<std::string>());
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  const auto& c = r.certificate;
  out << "qconvex " << r.version << " certificate\n";
  out << "  n = " << c.n << ", q = " << c.q << ", p = " << c.p << ", c = " << std::setprecision(12) << c.c
      << " (ambient " << r.ambient_source << (r.ambient_strict_at_point ? ", strict at a point asserted" : "") << ")\n";
  out << "  diameter: " << (r.diameter ? std::to_string(*r.diameter) : std::string("not given")) << '\n';
  out << "  tolerances: margin scale " << r.margin_tolerance_scale << ", pinching " << r.pinching_tolerance << '\n';
  out << "  sample: " << r.points.size() << " point(s), H_max = " << r.max_mean_curvature
      << ", strictly q-convex somewhere: " << (r.strict_somewhere ? "yes" : "no") << "\n\n";

  out << "  degree  status             rule               detail\n";
  for (const auto& d : c.degrees) {
    std::string detail;
    if (d.status == BettiStatus::vanishes) detail = "beta = 0";
    else if (d.status == BettiStatus::bounded_binomial) detail = "beta <= " + std::to_string(d.binomial);
    else if (d.status == BettiStatus::exponential_bound) {
      std::ostringstream e;
      e << std::setprecision(6) << "beta <= " << d.binomial << " * exp(C * " << d.exponent.value_or(0.0) << ")";
      if (d.numeric_bound) e << " = " << *d.numeric_bound;
      detail = e.str();
    } else if (d.degree == 0 || d.degree == c.n) detail = "beta = 1 (informational)";
    if (d.rigidity) detail += " [rigid]";
    if (d.source_degree != d.degree && d.rule != BettiRule::connectedness) detail += " (dual of degree " + std::to_string(d.source_degree) + ")";
    out << "  " << std::setw(6) << d.degree << "  " << std::left << std::setw(19) << to_string(d.status) << std::setw(19)
        << to_string(d.rule) << std::right << detail << '\n';
  }
  out << "\n  reasons:\n";
  for (const auto& d : c.degrees) out << "    " << d.degree << ": " << d.reason << '\n';

  out << "\n  points:\n";
  for (const auto& p : r.points) {
    out << "    #" << p.index << " H = " << std::setprecision(12) << p.mean_curvature << ", margin = " << p.margin << " ("
        << to_string(p.convexity) << "), min eig T^[p] = " << p.t_lambda_min << '\n';
  }
  if (!r.notes.empty()) {
    out << "\n  notes:\n";
    for (const auto& n : r.notes) out << "    - " << n << '\n';
  }
  return out.str();
}

}  // namespace qconvex
