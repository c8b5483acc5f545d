#include <doctest.h>

#include "convexa/catalog.hpp"
#include "convexa/geometry/constructions.hpp"
#include "convexa/report.hpp"
#include "support.hpp"

using namespace convexa;

TEST_CASE("analysis report for C15 carries a cycle and an RF tuple") {
  AnalysisReport r = analyze(named_code("C15"));
  CHECK(r.obstruction_found());
  CHECK(r.cycle);
  REQUIRE_FALSE(r.rf_tuples.empty());
  CHECK(r.rf_tuples.front().tuple == RFTuple{1, 2, 3, 4, 5});
  CHECK(r.graph.shape == "cycle");
  Json j = to_json(r, false);
  CHECK(j["verdict"] == verdict_text(r));
  CHECK(render_text(r).find(verdict_text(r)) != std::string::npos);
  CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("absence is never reported as convexity") {
  for (const char* name : {"C8", "C_star"}) {
    AnalysisReport r = analyze(named_code(name));
    CHECK_FALSE(r.obstruction_found());
    CHECK(verdict_text(r) == "no certificate found");
    std::string text = render_text(r);
    CHECK(text.find("closed-convex") == std::string::npos);
    CHECK(to_json(r).dump().find("closed-convex") == std::string::npos);
  }
}

TEST_CASE("threaded analysis gives the same report") {
  AnalyzeOptions o;
  o.threads = 3;
  for (const char* name : {"C6", "C8", "D6"}) {
    CHECK(to_json(analyze(named_code(name), o), false) == to_json(analyze(named_code(name)), false));
  }
}

TEST_CASE("path-shaped codes get interval verdicts") {
  AnalysisReport r = analyze(testing_support::code_of("n=3\n1 12 2 23 {}"));
  CHECK(r.graph.shape == "path");
  CHECK_FALSE(r.graph.interval_violation);
  CHECK(to_json(r)["containment_graph"]["interval_violation"].is_null());
}

TEST_CASE("realization section diffs codewords") {
  NeuralCode c = testing_support::code_of("n=2\n1 2 {}");
  auto check = verify_realization(c, interval_realization({{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}),
                                  true);
  CHECK_FALSE(check.match);
  CHECK(check.extra == std::vector<NeuronSet>{NeuronSet{1, 2}});
  CHECK(check.nondegeneracy == "degenerate");
  auto open = verify_realization(
      c, interval_realization({{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}, RealizationMode::Open), true);
  CHECK(open.match);
  CHECK(open.nondegeneracy == "degenerate");
  REQUIRE(open.companion_code);
  CHECK(open.companion_code->contains(NeuronSet{1, 2}));
  CHECK_THROWS(verify_realization(named_code("C6"), theta_figure_realization(), false));
}
