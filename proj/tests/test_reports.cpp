#include <filesystem>
#include <string>

#include "doctest.h"
#include "qconvex/error.hpp"
#include "qconvex/report.hpp"
#include "qconvex/scenario.hpp"
#include "qconvex/sweep.hpp"

using namespace qconvex;

namespace {

const std::filesystem::path kScenarios{QCONVEX_SCENARIO_DIR};

ScenarioError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ScenarioError& e) {
    return e;
  }
  FAIL("expected a ScenarioError");
  return ScenarioError(ScenarioErrorKind::parse, "", "");
}

const char* kTorus = R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"curvatures": [-1, 1, 1, 1]}]})";

}  // namespace

TEST_CASE("scenario parsing accepts the documented format") {
  const auto s = parse_scenario(R"({
    "schema": "qconvex.scenario/1", "n": 5, "q": 2, "p": 2,
    "ambient": {"eigenvalues": [0,0,0,0,0,1,1,1,1,1,1,1,1,1,1]},
    "points": [{"curvatures": [0.5, 0.25, 1, 1, 1]}],
    "diameter": 2.5,
    "flags": {"ambient_strict_at_point": true}
  })");
  CHECK(s.n == 5);
  CHECK_FALSE(s.c.has_value());
  REQUIRE(s.ambient_eigenvalues.has_value());
  CHECK(s.ambient_eigenvalues->size() == 15);
  CHECK(s.points[0][0] == 0.5);
  CHECK(*s.diameter == 2.5);
  CHECK(s.ambient_strict_at_point);
  CHECK(make_ambient(s).bound() == doctest::Approx(0.0));
}

TEST_CASE("scenario schema violations are parse errors naming the field") {
  auto e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"curvatures": [-1, 1, 1]}]})");
  CHECK(e.kind() == ScenarioErrorKind::parse);
  CHECK(e.field() == "points[0].curvatures");

  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [], "extra": 1})");
  CHECK(e.field() == "extra");
  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1, "eigenvalues": []}, "points": []})");
  CHECK(e.field() == "ambient");
  e = parse_error(R"({"n": "4", "q": 2, "p": 1, "ambient": {"c": 1}, "points": []})");
  CHECK(e.field() == "n");
  e = parse_error(R"({"n": 4, "p": 1, "ambient": {"c": 1}, "points": []})");
  CHECK(e.field() == "q");
  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"eigenvalues": [1, 2]}, "points": [{"curvatures": [1,1,1,1]}]})");
  CHECK(e.field() == "ambient.eigenvalues");
  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"curvatures": [1,1,1,"x"]}]})");
  CHECK(e.field() == "points[0].curvatures[3]");
  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"k": [1,1,1,1]}]})");
  CHECK(e.field() == "points[0].k");
  e = parse_error(R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"curvatures": [1,1,1,1]}], "flags": {"x": true}})");
  CHECK(e.field() == "flags.x");
  e = parse_error(R"({"schema": "other/2", "n": 4})");
  CHECK(e.field() == "schema");
  e = parse_error("{not json");
  CHECK(e.kind() == ScenarioErrorKind::parse);
}

TEST_CASE("inadmissible data is a validation error naming the point") {
  const auto s = parse_scenario(
      R"({"n": 4, "q": 2, "p": 1, "ambient": {"c": 1}, "points": [{"curvatures": [1,1,1,1]}, {"curvatures": [-2,1,1,1]}]})");
  try {
    build_report(s);
    FAIL("expected validation failure");
  } catch (const ScenarioError& e) {
    CHECK(e.kind() == ScenarioErrorKind::validation);
    CHECK(e.field() == "points[1]");
    CHECK(std::string(e.what()).find("margin") != std::string::npos);
  }
  const auto bad_p = parse_scenario(R"({"n": 4, "q": 2, "p": 3, "ambient": {"c": 1}, "points": [{"curvatures": [1,1,1,1]}]})");
  CHECK_THROWS_AS(build_report(bad_p), ScenarioError);
}

TEST_CASE("report round-trips through the structured format") {
  for (const char* name : {"torus_boundary.json", "convexity_range_vanishing.json", "rational_homology_sphere.json",
                           "hyperbolic_diameter.json"}) {
    RunOptions opts;
    opts.engine.exponent_constant = 0.25;
    const auto r = run_scenario(kScenarios / name, opts);
    const auto text = render_structured(r);
    CHECK(parse_report(text) == r);
    CHECK(render_structured(parse_report(text)) == text);
  }
}

TEST_CASE("report parsing rejects unknown fields and bad schema") {
  const auto r = build_report(parse_scenario(kTorus));
  auto text = render_structured(r);
  const auto pos = text.find("\"version\"");
  std::string extra = text;
  extra.insert(pos, "\"surprise\": 1, ");
  CHECK_THROWS_AS(parse_report(extra), ScenarioError);
  std::string wrong = text;
  wrong.replace(wrong.find("qconvex.report/1"), 16, "qconvex.report/9");
  CHECK_THROWS_AS(parse_report(wrong), ScenarioError);
  std::string nested = text;
  nested.insert(nested.find("\"rigidity\""), "\"source\": \"x\", ");
  CHECK_THROWS_AS(parse_report(nested), ScenarioError);
}

TEST_CASE("scenario examples produce the expected certificates") {
  const auto torus = run_scenario(kScenarios / "torus_boundary.json");
  CHECK(torus.certificate[1].status == BettiStatus::bounded_binomial);
  CHECK(torus.certificate[1].binomial == 4);
  CHECK(torus.certificate[1].rigidity);
  bool has_rigidity_note = false;
  for (const auto& note : torus.notes) has_rigidity_note = has_rigidity_note || note.find("parallel") != std::string::npos;
  CHECK(has_rigidity_note);
  CHECK(torus.points[0].t_lambda_min == doctest::Approx(-3.0));
  REQUIRE(torus.points[0].bochner_bounds.size() == 1);
  CHECK(torus.points[0].bochner_bounds[0] == doctest::Approx(0.0).scale(1.0));

  const auto vanish = run_scenario(kScenarios / "convexity_range_vanishing.json");
  for (int i : {2, 3, 4}) CHECK(vanish.certificate[i].status == BettiStatus::vanishes);

  const auto sphere = run_scenario(kScenarios / "rational_homology_sphere.json");
  for (int i : {1, 2, 3}) CHECK(sphere.certificate[i].status == BettiStatus::vanishes);

  const auto hyperbolic = run_scenario(kScenarios / "hyperbolic_diameter.json");
  CHECK(hyperbolic.certificate[2].status == BettiStatus::exponential_bound);
  CHECK(hyperbolic.ambient_source == "eigenvalues");

  const auto text = render_text(torus);
  CHECK(text.find("bounded_binomial") != std::string::npos);
  CHECK(text.find("pinching 1e-10") != std::string::npos);

  CHECK_THROWS_AS(run_scenario(kScenarios / "malformed_length.json"), ScenarioError);
  CHECK_THROWS_AS(run_scenario(kScenarios / "does_not_exist.json"), ScenarioError);
}

TEST_CASE("reports are deterministic") {
  const auto a = render_structured(run_scenario(kScenarios / "hyperbolic_diameter.json"));
  const auto b = render_structured(run_scenario(kScenarios / "hyperbolic_diameter.json"));
  CHECK(a == b);
}

TEST_CASE("sweep suites pass and are independent of thread count") {
  SweepConfig cfg;
  cfg.seed = 7;
  cfg.n_max = 5;
  cfg.samples = 60;
  cfg.threads = 1;
  const auto single = random_sweep(cfg);
  cfg.threads = 3;
  const auto multi = random_sweep(cfg);
  CHECK(single == multi);
  CHECK(render_structured(single) == render_structured(multi));
  CHECK(single.suites.size() == 5);
  for (const auto& s : single.suites) {
    INFO(s.suite);
    CHECK(s.failed == 0);
    CHECK(s.passed == 60);
    CHECK(s.max_violation <= s.tolerance);
  }
  CHECK(single.all_passed());
  cfg.seed = 8;
  CHECK_FALSE(random_sweep(cfg) == single);
}

TEST_CASE("sweep configuration validation and suite names") {
  CHECK(sweep_suite_from_string("tmin_bound") == SweepSuite::tmin_bound);
  CHECK_FALSE(sweep_suite_from_string("nope").has_value());
  for (auto s : all_sweep_suites()) CHECK(sweep_suite_from_string(to_string(s)) == s);
  SweepConfig cfg;
  cfg.n_min = 2;
  CHECK_THROWS_AS(random_sweep(cfg), DomainError);
  cfg.n_min = 5;
  cfg.n_max = 4;
  CHECK_THROWS_AS(random_sweep(cfg), DomainError);
  cfg.n_max = 11;
  CHECK_THROWS_AS(random_sweep(cfg), DomainError);
  cfg.n_max = 6;
  cfg.samples = 0;
  CHECK_THROWS_AS(random_sweep(cfg), DomainError);

  cfg.samples = 20;
  cfg.suites = {SweepSuite::contraction_identity};
  const auto r = random_sweep(cfg);
  REQUIRE(r.suites.size() == 1);
  CHECK(r.suites[0].suite == "contraction_identity");
  CHECK(render_text(r).find("contraction_identity") != std::string::npos);
}
