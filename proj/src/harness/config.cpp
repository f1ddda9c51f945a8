#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "semistar/backends.hpp"
#include "semistar/calculus.hpp"
#include "semistar/harness.hpp"

namespace semistar {

namespace {

[[noreturn]] void fail(const std::string& origin, const YAML::Node& at, const std::string& what) {
  const auto mark = at.Mark();
  const std::string where = mark.is_null() ? origin : origin + ":" + std::to_string(mark.line + 1);
  throw Error(ErrorCode::ConfigError, where + ": " + what);
}

template <class T>
T scalar(const std::string& origin, const YAML::Node& n, const std::string& field) {
  if (!n.IsScalar()) fail(origin, n, "field '" + field + "' must be a scalar");
  try {
    return n.as<T>();
  } catch (const YAML::Exception&) {
    fail(origin, n, "field '" + field + "' has an invalid value '" + n.Scalar() + "'");
  }
}

std::vector<std::string> string_list(const std::string& origin, const YAML::Node& n, const std::string& field) {
  if (!n.IsSequence()) fail(origin, n, "field '" + field + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : n) out.push_back(scalar<std::string>(origin, item, field));
  return out;
}

void check_keys(const std::string& origin, const YAML::Node& map, const std::set<std::string>& allowed,
                const std::string& section) {
  if (!map.IsMap()) fail(origin, map, "section '" + section + "' must be a mapping");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) fail(origin, kv.first, "unknown field '" + key + "' in section '" + section + "'");
  }
}

}  // namespace

SuiteConfig parse_config(const std::string& text, const std::string& origin) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw Error(ErrorCode::ConfigError, origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
  }
  SuiteConfig cfg;
  if (root.IsNull()) return cfg;
  check_keys(origin, root, {"backend", "window", "budget", "seed", "jobs", "operations", "families", "checks"}, "top level");

  if (const auto b = root["backend"]) {
    check_keys(origin, b, {"kind", "generators", "rank", "q", "m"}, "backend");
    if (b["kind"]) cfg.backend.kind = scalar<std::string>(origin, b["kind"], "backend.kind");
    if (cfg.backend.kind != "numsgp" && cfg.backend.kind != "valuation" && cfg.backend.kind != "pvd")
      fail(origin, b["kind"], "backend.kind must be numsgp, valuation or pvd");
    if (const auto g = b["generators"]) {
      if (!g.IsSequence()) fail(origin, g, "field 'backend.generators' must be a list");
      cfg.backend.generators.clear();
      for (const auto& x : g) cfg.backend.generators.push_back(scalar<int>(origin, x, "backend.generators"));
    }
    if (b["rank"]) cfg.backend.rank = scalar<int>(origin, b["rank"], "backend.rank");
    if (b["q"]) cfg.backend.q = scalar<int>(origin, b["q"], "backend.q");
    if (b["m"]) cfg.backend.m = scalar<int>(origin, b["m"], "backend.m");
  }
  if (const auto w = root["window"]) {
    check_keys(origin, w,
               {"ideal_max", "element_margin", "ideal_bound", "element_bound", "low", "high", "poly_degree",
                "sample_ideals"},
               "window");
    auto& o = cfg.window;
    if (w["ideal_max"]) o.ideal_max = scalar<int>(origin, w["ideal_max"], "window.ideal_max");
    if (w["element_margin"]) o.element_margin = scalar<int>(origin, w["element_margin"], "window.element_margin");
    if (w["ideal_bound"]) o.ideal_bound = scalar<int>(origin, w["ideal_bound"], "window.ideal_bound");
    if (w["element_bound"]) o.element_bound = scalar<int>(origin, w["element_bound"], "window.element_bound");
    if (w["low"]) o.low = scalar<int>(origin, w["low"], "window.low");
    if (w["high"]) o.high = scalar<int>(origin, w["high"], "window.high");
    if (w["poly_degree"]) o.poly_degree = scalar<int>(origin, w["poly_degree"], "window.poly_degree");
    if (w["sample_ideals"]) o.sample_ideals = scalar<std::size_t>(origin, w["sample_ideals"], "window.sample_ideals");
  }
  if (const auto b = root["budget"]) {
    check_keys(origin, b, {"enumeration", "ab", "b_poly"}, "budget");
    if (b["enumeration"]) cfg.budget.enumeration = scalar<std::size_t>(origin, b["enumeration"], "budget.enumeration");
    if (b["ab"]) cfg.budget.ab = scalar<std::size_t>(origin, b["ab"], "budget.ab");
    if (b["b_poly"]) cfg.budget.b_poly = scalar<std::size_t>(origin, b["b_poly"], "budget.b_poly");
  }
  if (root["seed"]) cfg.seed = scalar<std::uint64_t>(origin, root["seed"], "seed");
  if (root["jobs"]) cfg.jobs = scalar<std::size_t>(origin, root["jobs"], "jobs");
  if (const auto ops = root["operations"]) cfg.operations = string_list(origin, ops, "operations");
  if (const auto fams = root["families"]) {
    if (!fams.IsSequence()) fail(origin, fams, "field 'families' must be a list of lists");
    cfg.families.emplace();
    for (const auto& f : fams) cfg.families->push_back(string_list(origin, f, "families"));
  }
  if (const auto checks = root["checks"]) {
    if (!checks.IsSequence()) fail(origin, checks, "field 'checks' must be a list");
    for (const auto& c : checks) {
      const auto id = scalar<std::string>(origin, c, "checks");
      try {
        cfg.checks.push_back(find_check(id).id);
      } catch (const Error&) {
        fail(origin, c, "unknown check '" + id + "'");
      }
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

void apply_window_overrides(WindowConfig& w, const std::string& spec) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ConfigError, "window override '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "window override '" + item + "' has a non-integer value");
    }
    const int v = static_cast<int>(value);
    if (key == "ideal_max") w.ideal_max = v;
    else if (key == "element_margin") w.element_margin = v;
    else if (key == "ideal_bound") w.ideal_bound = v;
    else if (key == "element_bound") w.element_bound = v;
    else if (key == "low") w.low = v;
    else if (key == "high") w.high = v;
    else if (key == "poly_degree") w.poly_degree = v;
    else if (key == "sample_ideals") w.sample_ideals = static_cast<std::size_t>(value);
    else throw Error(ErrorCode::ConfigError, "unknown window field '" + key + "'");
  }
}

BackendConfig parse_backend(const std::string& spec) {
  BackendConfig b;
  const auto colon = spec.find(':');
  b.kind = spec.substr(0, colon);
  std::vector<int> nums;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        nums.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "backend parameter '" + item + "' is not an integer");
      }
    }
  }
  if (b.kind == "numsgp") {
    if (!nums.empty()) b.generators = nums;
  } else if (b.kind == "valuation") {
    if (nums.size() > 1) throw Error(ErrorCode::ParseError, "valuation takes one parameter, the rank");
    if (!nums.empty()) b.rank = nums[0];
  } else if (b.kind == "pvd") {
    if (nums.size() == 1 || nums.size() > 2) throw Error(ErrorCode::ParseError, "pvd takes q,m");
    if (nums.size() == 2) {
      b.q = nums[0];
      b.m = nums[1];
    }
  } else {
    throw Error(ErrorCode::UnknownName, "unknown backend '" + b.kind + "'");
  }
  return b;
}

ContextPtr build_context(const BackendConfig& b, const WindowConfig& w) {
  if (b.kind == "numsgp") return make_numsgp(b.generators, {w.ideal_max, w.element_margin});
  if (b.kind == "valuation") return make_valuation(b.rank, {w.ideal_bound, w.element_bound});
  if (b.kind == "pvd") return make_pvd(b.q, b.m, w.low, w.high);
  throw Error(ErrorCode::UnknownName, "unknown backend '" + b.kind + "'");
}

std::string backend_label(const BackendConfig& b) {
  if (b.kind == "numsgp") {
    std::string out = "numsgp:";
    for (std::size_t i = 0; i < b.generators.size(); ++i) out += (i ? "," : "") + std::to_string(b.generators[i]);
    return out;
  }
  if (b.kind == "valuation") return "valuation:" + std::to_string(b.rank);
  return "pvd:" + std::to_string(b.q) + "," + std::to_string(b.m);
}

std::vector<std::vector<std::string>> overring_families(const SuiteConfig& cfg, const ContextPtr& ctx) {
  if (cfg.families) return *cfg.families;
  std::vector<std::vector<std::string>> out;
  for (const auto& t : ctx->overrings()) out.push_back({t.name});
  std::vector<std::string> vf;
  for (const auto& t : ctx->valuation_family()) vf.push_back(t.name);
  if (vf.size() > 1) out.push_back(vf);
  return out;
}

std::vector<std::string> operation_names(const SuiteConfig& cfg, const ContextPtr& ctx) {
  if (cfg.operations) return *cfg.operations;
  std::vector<std::string> out{"d", "e", "v", "t", "w"};
  const auto& primes = ctx->primes();
  for (std::size_t mask = 1; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::string list;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask & (std::size_t{1} << i)) list += (list.empty() ? "" : ",") + primes[i].name;
    out.push_back("spectral:{" + list + "}");
  }
  for (const auto& fam : overring_families(cfg, ctx)) {
    std::string list;
    for (const auto& n : fam) list += (list.empty() ? "" : ",") + n;
    out.push_back("wedge:{" + list + "}");
  }
  return out;
}

}  // namespace semistar
