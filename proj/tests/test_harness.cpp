#include <set>

#include "doctest.h"

#include "semistar/backends.hpp"
#include "semistar/harness.hpp"

using namespace semistar;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"(backend:
  kind: pvd
  q: 2
  m: 2
window:
  low: 0
  high: 8
budget:
  enumeration: 100
seed: 7
jobs: 2
operations: [d, v]
families:
  - [V]
  - [V, K]
checks: [axioms, bracket-not-eab]
)");
  CHECK(cfg.backend.kind == "pvd");
  CHECK(cfg.window.low == 0);
  CHECK(cfg.window.high == 8);
  CHECK(cfg.budget.enumeration == 100);
  CHECK(cfg.seed == 7);
  CHECK(cfg.jobs == 2);
  REQUIRE(cfg.operations);
  CHECK(cfg.operations->size() == 2);
  REQUIRE(cfg.families);
  CHECK(cfg.families->at(1) == std::vector<std::string>{"V", "K"});
  // aliases resolve to the registered id
  CHECK(cfg.checks == std::vector<std::string>{"axioms", "prop-b-3-eab"});

  const auto empty = parse_config("");
  CHECK(empty.checks.empty());
  CHECK(empty.backend.kind == "numsgp");
}

TEST_CASE("config errors carry line numbers") {
  CHECK(code_of([] { parse_config("backend:\n  kind: numsgp\nwindw: {}\n", "a.yaml"); }) == ErrorCode::ConfigError);
  CHECK(message_of([] { parse_config("backend:\n  kind: numsgp\nwindw: {}\n", "a.yaml"); }).find("a.yaml:3") !=
        std::string::npos);
  CHECK(message_of([] { parse_config("checks:\n  - axioms\n  - nope\n", "b.yaml"); }).find("b.yaml:3") !=
        std::string::npos);
  CHECK(message_of([] { parse_config("window:\n  low: abc\n", "c.yaml"); }).find("c.yaml:2") != std::string::npos);
  CHECK(code_of([] { parse_config("backend:\n  kind: ring\n"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_config("checks: [axioms\n"); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { load_config("/nonexistent/suite.yaml"); }) == ErrorCode::ConfigError);
}

TEST_CASE("window overrides and backend shorthand") {
  WindowConfig w;
  apply_window_overrides(w, "low=0,high=8");
  CHECK(w.low == 0);
  CHECK(w.high == 8);
  CHECK(code_of([&] { apply_window_overrides(w, "lo=1"); }) == ErrorCode::ConfigError);
  CHECK(code_of([&] { apply_window_overrides(w, "low"); }) == ErrorCode::ConfigError);

  CHECK(parse_backend("numsgp:3,5,7").generators == std::vector<int>{3, 5, 7});
  CHECK(parse_backend("valuation:2").rank == 2);
  CHECK(backend_label(parse_backend("pvd:2,2")) == "pvd:2,2");
  CHECK(code_of([] { parse_backend("ring:1"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { parse_backend("valuation:x"); }) == ErrorCode::ParseError);
}

TEST_CASE("eval expressions") {
  const auto ctx = make_numsgp({3, 4, 5});
  CHECK(eval_expression(ctx, "(3,5)^v") == "(3,4,5)");
  CHECK(eval_expression(ctx, "D^d") == "D");
  CHECK(eval_expression(ctx, "(3,5)^w") == "(3,5)");
  CHECK(eval_expression(ctx, "(3,5)^t") == "(3,4,5)");
  CHECK(eval_expression(ctx, "(3,5)^d^v") == "(3,4,5)");
  CHECK(eval_expression(ctx, "M^e") == "K");
  CHECK(eval_expression(ctx, "(0)") == "D");
  CHECK(eval_expression(ctx, "(t^3, t^5)^v") == "(3,4,5)");

  CHECK(code_of([&] { eval_expression(ctx, "(3,5"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { eval_expression(ctx, "(3,x)^v"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { eval_expression(ctx, "(3,5)^"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { eval_expression(ctx, "(3,5)^nope"); }) == ErrorCode::UnknownName);
  CHECK(code_of([&] { eval_expression(ctx, "Q^v"); }) == ErrorCode::UnknownName);

  const auto val = make_valuation(2, {2, 6});
  CHECK(eval_expression(val, "(t^(0,1))^v") == eval_expression(val, "(t^(0,1))"));
}

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const auto& c : check_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK(find_check(c.id).id == c.id);
  }
  CHECK(find_check("bracket-not-eab").id == "prop-b-3-eab");
  CHECK(find_check("bracket-not-eab").predicts_counterexample);
  CHECK(code_of([] { find_check("no-such-check"); }) == ErrorCode::UnknownName);
  for (const char* id : {"axioms", "v-nondivisorial", "stable-vs-spectral", "lemma-ast-zero-7-v", "prop-ext-lambda-4",
                         "prop-bracket-star", "prop-b-3-eab"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("suite reports") {
  SuiteConfig cfg;
  cfg.checks = {"axioms", "v-nondivisorial", "stable-vs-spectral"};
  const auto report = run_suite(cfg);
  REQUIRE(report["checks"].size() == 3);
  for (const auto& c : report["checks"]) {
    CHECK(c["verdict"] == "verified-on-window");
    std::vector<std::string> keys;
    for (const auto& [k, v] : c.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"check_id", "paper_anchor", "verdict", "witness", "window", "budget",
                                           "millis"});
  }
  CHECK(report_exit_code(report) == 0);
  CHECK(report_body(report)["checks"][0].contains("millis") == false);
  const auto md = render_markdown(report);
  CHECK(md.find("| axioms |") != std::string::npos);
  CHECK(md.find("verified-on-window") != std::string::npos);

  SuiteConfig none;
  const auto empty = run_suite(none);
  CHECK(empty["checks"].empty());
  CHECK(report_exit_code(empty) == 0);
}

TEST_CASE("exit code follows the prediction") {
  ordered_json fake{{"checks", ordered_json::array()}};
  fake["checks"].push_back({{"check_id", "prop-b-3-eab"}, {"verdict", "counterexample"}});
  CHECK(report_exit_code(fake) == 0);
  fake["checks"].push_back({{"check_id", "axioms"}, {"verdict", "counterexample"}});
  CHECK(report_exit_code(fake) == 1);
}

TEST_CASE("pvd suite reports the predicted witness") {
  SuiteConfig cfg;
  cfg.backend = parse_backend("pvd:2,2");
  cfg.window.low = 0;
  cfg.window.high = 8;
  cfg.checks = {"bracket-not-eab"};
  const auto report = run_suite(cfg);
  const auto& c = report["checks"][0];
  CHECK(c["check_id"] == "prop-b-3-eab");
  CHECK(c["verdict"] == "counterexample");
  CHECK(c["witness"]["replayed"] == true);
  CHECK(report_exit_code(report) == 0);
}

TEST_CASE("searches") {
  SuiteConfig eab;
  eab.backend = parse_backend("pvd:2,2");
  eab.window.low = 0;
  eab.window.high = 8;
  const auto e = run_search("eab", eab);
  CHECK(e["result"] == "witness");
  CHECK(e["witness"]["replayed"] == true);

  SuiteConfig dvr;
  dvr.backend = parse_backend("valuation:1");
  const auto s = run_search("strict-ext-gap", dvr);
  CHECK(s["result"] == "witness");
  CHECK(s["witness"]["z"] == "t^0");
  const auto g = run_search("equivalence-gap", dvr);
  CHECK(g["result"] == "witness");
  CHECK(g["witness"]["z"] == "(t^0)/(t^0 + t^0*X)");

  const auto miss = run_search("eab", dvr);
  CHECK(miss["result"] == "exhausted");
  CHECK(code_of([&] { run_search("gap", dvr); }) == ErrorCode::UnknownName);
}

TEST_CASE("seeded runs repeat") {
  SuiteConfig cfg;
  cfg.backend = parse_backend("valuation:2");
  cfg.checks = {"lemma-ast-zero-2", "prop-ext-lambda-4", "cor-stt-1", "remark-cf-d"};
  cfg.jobs = 4;
  const auto a = report_body(run_suite(cfg)).dump();
  cfg.jobs = 1;
  const auto b = report_body(run_suite(cfg)).dump();
  CHECK(a == b);
}
