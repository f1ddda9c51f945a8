#ifndef SEMISTAR_HARNESS_HPP
#define SEMISTAR_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semistar/domain.hpp"

namespace semistar {

using ordered_json = nlohmann::ordered_json;

struct BackendConfig {
  std::string kind = "numsgp";  // numsgp | valuation | pvd
  std::vector<int> generators{3, 4, 5};
  int rank = 1;
  int q = 2;
  int m = 2;
};

struct WindowConfig {
  int ideal_max = 12;
  int element_margin = 40;
  int ideal_bound = 2;
  int element_bound = 6;
  int low = -6;
  int high = 12;
  int poly_degree = 3;
  std::size_t sample_ideals = 24;
};

struct BudgetConfig {
  std::size_t enumeration = 4096;
  std::size_t ab = 256;
  std::size_t b_poly = 4096;
};

struct SuiteConfig {
  BackendConfig backend;
  WindowConfig window;
  BudgetConfig budget;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;  // 0: hardware concurrency
  std::optional<std::vector<std::string>> operations;
  std::optional<std::vector<std::vector<std::string>>> families;
  std::vector<std::string> checks;
};

// Parses the YAML suite format; errors are ConfigError with the line number.
SuiteConfig parse_config(const std::string& text, const std::string& origin = "<config>");
SuiteConfig load_config(const std::string& path);
// Applies `key=value[,key=value]` overrides to the window section.
void apply_window_overrides(WindowConfig& w, const std::string& spec);
// Backend shorthand used on the command line: numsgp:3,4,5  valuation:2  pvd:2,2
BackendConfig parse_backend(const std::string& spec);

ContextPtr build_context(const BackendConfig& b, const WindowConfig& w);
std::string backend_label(const BackendConfig& b);
// Operation names configured for the suite, or the default catalogue.
std::vector<std::string> operation_names(const SuiteConfig& cfg, const ContextPtr& ctx);
std::vector<std::vector<std::string>> overring_families(const SuiteConfig& cfg, const ContextPtr& ctx);

enum class Verdict { Verified, Counterexample, Skipped, BudgetExhausted };
std::string to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Verified;
  ordered_json witness = nullptr;
};

struct RunEnv {
  SuiteConfig cfg;
  ContextPtr ctx;
  std::uint64_t seed = 0;  // per-check seed derived from the suite seed
};

struct CheckInfo {
  std::string id;
  std::string anchor;
  std::string summary;
  bool predicts_counterexample = false;
  std::function<CheckResult(const RunEnv&)> run;
};

const std::vector<CheckInfo>& check_registry();
// Resolves an id or alias; throws UnknownName.
const CheckInfo& find_check(const std::string& id);

ordered_json run_suite(const SuiteConfig& cfg);
// The report without timing fields; identical configs give identical bodies.
ordered_json report_body(const ordered_json& report);
std::string render_markdown(const ordered_json& report);
// 0 unless a check produced a counterexample to an asserted statement.
int report_exit_code(const ordered_json& report);

// `<ideal>^<op>^<op>...` with ideals D, K, M, 0 or generator lists.
std::string eval_expression(const ContextPtr& ctx, const std::string& expr);

ordered_json run_search(const std::string& kind, const SuiteConfig& cfg);
std::vector<std::string> search_kinds();

}  // namespace semistar

#endif
