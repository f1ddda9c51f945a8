#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semistar/harness.hpp"

using namespace semistar;

namespace {

constexpr int kUsageError = 2;

struct Common {
  std::optional<std::uint64_t> seed;
  std::string window;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> jobs;
  std::string report_path;
  std::string format = "json";
};

void apply_common(SuiteConfig& cfg, const Common& c) {
  if (c.seed) cfg.seed = *c.seed;
  if (!c.window.empty()) apply_window_overrides(cfg.window, c.window);
  if (c.budget) cfg.budget.enumeration = *c.budget;
  if (c.jobs) cfg.jobs = *c.jobs;
}

void emit(const ordered_json& doc, const std::string& text, const Common& c) {
  if (c.report_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.report_path);
  if (!out) throw Error(ErrorCode::ConfigError, c.report_path + ": cannot write report");
  out << text;
  (void)doc;
}

void add_common(CLI::App* app, Common& c, bool with_format) {
  app->add_option("--seed", c.seed, "seed for sampled subsets");
  app->add_option("--window", c.window, "window overrides, key=value[,key=value]");
  app->add_option("--budget", c.budget, "enumeration budget");
  app->add_option("--jobs", c.jobs, "worker threads (0: hardware concurrency)");
  app->add_option("--report", c.report_path, "write the report to this path");
  if (with_format) app->add_option("--format", c.format, "json or md")->check(CLI::IsMember({"json", "md"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semistar: semistar-operation calculus on computable domains"};
  app.require_subcommand(1);
  Common common;

  std::string config_path;
  auto* run = app.add_subcommand("run", "run the checks named in a YAML suite config");
  run->add_option("config", config_path, "suite config file")->required();
  add_common(run, common, true);

  std::string backend_spec, expr;
  auto* eval = app.add_subcommand("eval", "evaluate an ideal expression such as (3,5)^v");
  eval->add_option("backend", backend_spec, "numsgp:3,4,5 | valuation:<rank> | pvd:<q>,<m>")->required();
  eval->add_option("expr", expr, "ideal expression")->required();
  add_common(eval, common, false);

  std::string kind, search_backend;
  auto* search = app.add_subcommand("search", "search for a separating witness");
  search->add_option("kind", kind, "eab | strict-ext-gap | equivalence-gap")->required();
  search->add_option("--backend", search_backend, "backend override");
  add_common(search, common, false);

  auto* list = app.add_subcommand("list-checks", "list the registered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*run) {
      SuiteConfig cfg = load_config(config_path);
      apply_common(cfg, common);
      const auto report = run_suite(cfg);
      emit(report, common.format == "md" ? render_markdown(report) : report.dump(2) + "\n", common);
      return report_exit_code(report);
    }
    if (*eval) {
      SuiteConfig cfg;
      cfg.backend = parse_backend(backend_spec);
      apply_common(cfg, common);
      std::cout << eval_expression(build_context(cfg.backend, cfg.window), expr) << "\n";
      return 0;
    }
    if (*search) {
      SuiteConfig cfg;
      if (kind == "eab") {
        cfg.backend = parse_backend("pvd:2,2");
        cfg.window.low = 0;
        cfg.window.high = 8;
      } else {
        cfg.backend = parse_backend("valuation:1");
      }
      if (!search_backend.empty()) cfg.backend = parse_backend(search_backend);
      apply_common(cfg, common);
      const auto doc = run_search(kind, cfg);
      emit(doc, doc.dump(2) + "\n", common);
      return 0;
    }
    if (*list) {
      for (const auto& c : check_registry())
        std::cout << c.id << "  [" << c.anchor << "]" << (c.predicts_counterexample ? "  expects counterexample" : "")
                  << "\n    " << c.summary << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ConfigError:
      case ErrorCode::ParseError:
      case ErrorCode::UnknownName: return kUsageError;
      default: return 3;
    }
  }
  return 0;
}
