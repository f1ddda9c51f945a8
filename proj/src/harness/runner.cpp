#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "harness/checks.hpp"

namespace semistar {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified-on-window";
    case Verdict::Counterexample: return "counterexample";
    case Verdict::Skipped: return "skipped";
    case Verdict::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {

std::vector<CheckInfo> build_registry() {
  using namespace checks;
  return {
      {"axioms", "def-semistar", "scaling, monotonicity, extensivity and idempotence on every window ideal", false, axioms},
      {"v-nondivisorial", "ex-w-v", "an ideal with E^w strictly inside E^v", false, v_nondivisorial},
      {"stable-vs-spectral", "prop-m-1", "certificate, enumerated and quasi-maximal forms of the stable closure agree", false, stable_vs_spectral},
      {"op-order", "def-t-w", "d <= w <= t <= v <= e and *~ <= *_f <= *", false, op_order},
      {"prop-loc1-4", "prop-loc1-4", "bar(*) <= * and F^* = F^bar(*), also for every localizing system", false, loc1_4},
      {"prop-loc1-5", "prop-loc1-5", "bar(*) = * exactly for the stable operations", false, loc1_5},
      {"prop-nagata-4", "prop-nagata-4", "E^{*~} = E Na(D,*) cap K", false, nagata_4},
      {"prop-kr-6", "prop-kr-6", "principalization of two-generated ideals in the Kronecker function ring", false, kr_6},
      {"prop-m-3", "prop-m-3", "constants of the Nagata extension of principal ideals are E^{*~}", false, m_3},
      {"lemma-ast-zero-2", "lemma-ast-zero-2", "(E^{o0}[X])^o = (E[X])^o for the three extensions", false, ast_zero_2},
      {"lemma-ast-zero-7-v", "lemma-ast-zero-7", "v on D[X] induces v and (E[X])^v = E^v[X]", false, ast_zero_7_v},
      {"lemma-ast-zero-7-b", "lemma-ast-zero-7", "(E[X]F:F) unions land in E^b[X] and cover E^b", false, ast_zero_7_b},
      {"prop-ext-lambda-2", "prop-ext-lambda-2", "wedge fixes D iff bracket and angle fix D[X]", false, ext_lambda_2},
      {"prop-ext-lambda-3", "prop-ext-lambda-3", "1 separates bracket from angle on (M, 1+X); 1/(1+X) separates angle from paren", false, ext_lambda_3},
      {"prop-ext-lambda-4", "prop-ext-lambda-4", "bracket and angle are strict extensions of wedge", false, ext_lambda_4},
      {"prop-ext-lambda-5", "prop-ext-lambda-5", "all three extensions induce wedge", false, ext_lambda_5},
      {"cor-ext-sext-2", "cor-ext-sext-2", "bracket ~ angle ~ paren, bracket strictly equivalent to angle but not to paren", false, ext_sext_2},
      {"prop-bracket-star", "prop-bracket-star", "colon-union and spectral forms of [*~] agree", false, bracket_star},
      {"remark-pic-b", "remark-pic-b", "[*~] = *~[X]", false, pic_b},
      {"prop-b-3-eab", "prop-b-3", "[b] is not eab on the PVD", true, b_3_eab},
      {"gauss-content", "gauss-content", "c(fg) = c(f)c(g) over a valuation domain", false, gauss_content},
      {"remark-cf-d", "remark-cf-d", "circ_S is the spectral operation over nabla(S), stable and of finite type", false, cf_d},
      {"cor-stt-1", "cor-stt-1", "content-type sets of stable finite-type operations are saturated", false, stt_1},
      {"remark-cf-h", "remark-cf-h", "(circ_S)_i = w_R criterion", false, cf_h},
  };
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> a{{"bracket-not-eab", "prop-b-3-eab"}};
  return a;
}

ordered_json window_echo(const SuiteConfig& cfg) {
  const auto& w = cfg.window;
  if (cfg.backend.kind == "numsgp")
    return {{"ideal_max", w.ideal_max}, {"element_margin", w.element_margin}, {"poly_degree", w.poly_degree},
            {"sample_ideals", w.sample_ideals}};
  if (cfg.backend.kind == "valuation")
    return {{"ideal_bound", w.ideal_bound}, {"element_bound", w.element_bound}, {"poly_degree", w.poly_degree},
            {"sample_ideals", w.sample_ideals}};
  return {{"low", w.low}, {"high", w.high}, {"poly_degree", w.poly_degree}, {"sample_ideals", w.sample_ideals}};
}

std::uint64_t check_seed(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
  return seed ^ h;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = build_registry();
  return registry;
}

const CheckInfo& find_check(const std::string& id) {
  const auto& a = aliases();
  const std::string key = a.count(id) ? a.at(id) : id;
  for (const auto& c : check_registry())
    if (c.id == key) return c;
  throw Error(ErrorCode::UnknownName, "unknown check '" + id + "'");
}

ordered_json run_suite(const SuiteConfig& cfg) {
  const ContextPtr ctx = build_context(cfg.backend, cfg.window);
  const std::size_t n = cfg.checks.size();
  std::vector<ordered_json> entries(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& info = find_check(cfg.checks[i]);
      const RunEnv env{cfg, ctx, check_seed(cfg.seed, info.id)};
      const auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = info.run(env);
      } catch (const Error& e) {
        r = e.code() == ErrorCode::EnumerationBudgetExceeded ? checks::exhausted(e.what()) : checks::skipped(e.what());
      }
      const auto millis =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      entries[i] = ordered_json{{"check_id", info.id},     {"paper_anchor", info.anchor},
                                {"verdict", to_string(r.verdict)}, {"witness", r.witness},
                                {"window", window_echo(cfg)}, {"budget", cfg.budget.enumeration},
                                {"millis", millis}};
    }
  };
  const std::size_t jobs =
      std::max<std::size_t>(1, std::min(n, cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency())));
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs && n > 0; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  ordered_json report{{"backend", backend_label(cfg.backend)}, {"context", ctx->name()}, {"seed", cfg.seed}};
  report["checks"] = ordered_json::array();
  for (auto& e : entries) report["checks"].push_back(std::move(e));
  return report;
}

ordered_json report_body(const ordered_json& report) {
  ordered_json body = report;
  if (body.contains("checks"))
    for (auto& c : body["checks"]) c.erase("millis");
  return body;
}

namespace {

bool unexpected(const ordered_json& entry) {
  if (entry.at("verdict") != to_string(Verdict::Counterexample)) return false;
  try {
    return !find_check(entry.at("check_id").get<std::string>()).predicts_counterexample;
  } catch (const Error&) {
    return true;
  }
}

}  // namespace

int report_exit_code(const ordered_json& report) {
  for (const auto& c : report.at("checks"))
    if (unexpected(c)) return 1;
  return 0;
}

std::string render_markdown(const ordered_json& report) {
  std::ostringstream out;
  out << "# Report for " << report.at("context").get<std::string>() << "\n\n";
  out << "Backend `" << report.at("backend").get<std::string>() << "`, seed " << report.at("seed") << ".\n\n";
  out << "| check | anchor | verdict | expected | ms |\n|---|---|---|---|---|\n";
  for (const auto& c : report.at("checks")) {
    const auto id = c.at("check_id").get<std::string>();
    bool predicted = false;
    try {
      predicted = find_check(id).predicts_counterexample;
    } catch (const Error&) {
    }
    out << "| " << id << " | " << c.at("paper_anchor").get<std::string>() << " | "
        << c.at("verdict").get<std::string>() << " | " << (predicted ? "counterexample" : "no counterexample")
        << " | " << (c.contains("millis") ? c.at("millis").dump() : "-") << " |\n";
  }
  bool any = false;
  for (const auto& c : report.at("checks")) {
    if (c.at("witness").is_null()) continue;
    if (!any) out << "\n## Witnesses\n";
    any = true;
    out << "\n### " << c.at("check_id").get<std::string>() << "\n\n```json\n" << c.at("witness").dump(2) << "\n```\n";
  }
  out << "\nExit status " << report_exit_code(report) << ".\n";
  return out.str();
}

}  // namespace semistar
