#include <algorithm>
#include <chrono>

#include "harness/checks.hpp"
#include "semistar/backends.hpp"

namespace semistar {

namespace {

using Clock = std::chrono::steady_clock;

const PrimeSpec& top_prime(const ContextPtr& ctx) {
  const auto& primes = ctx->primes();
  return *std::max_element(primes.begin(), primes.end(),
                           [](const PrimeSpec& a, const PrimeSpec& b) { return a.height < b.height; });
}

// First configured family of valuation overrings with a member centered on the maximal ideal.
std::vector<std::string> valuation_family(const SuiteConfig& cfg, const ContextPtr& ctx) {
  RunEnv env{cfg, ctx, cfg.seed};
  const auto& m = top_prime(ctx).ideal;
  for (const auto& fam : checks::nontrivial_families(env)) {
    const bool valuations =
        std::all_of(fam.begin(), fam.end(), [&](const std::string& n) { return ctx->overring(n).valuation; });
    const bool centered = std::any_of(fam.begin(), fam.end(), [&](const std::string& n) {
      const auto& t = ctx->overring(n);
      return !ctx->leq(ctx->extend(ctx->unit(), t), ctx->extend(m, t));
    });
    if (valuations && centered) return fam;
  }
  return {};
}

ordered_json search_eab(const SuiteConfig& cfg, const ContextPtr& ctx) {
  const auto* pvd = dynamic_cast<const PvdContext*>(ctx.get());
  if (pvd == nullptr) return {{"result", "exhausted"}, {"reason", "eab search runs on the pvd backend"}};
  PolyTriple t;
  try {
    t = bracket_eab_witness(ctx);
  } catch (const Error& e) {
    return {{"result", "exhausted"}, {"reason", e.what()}};
  }
  (void)cfg;
  std::vector<std::string> family;
  for (const auto& v : ctx->valuation_family()) family.push_back(v.name);
  const auto op = ext_bracket(ctx, family);
  std::string detail;
  const bool replayed = verify_bracket_eab(op, t, &detail);
  return {{"result", "witness"},
          {"witness",
           {{"F", format_poly_ideal(t.f)},
            {"G", format_poly_ideal(t.g)},
            {"H", format_poly_ideal(t.h)},
            {"operation", op.name()},
            {"replayed", replayed},
            {"detail", detail}}}};
}

Poly one_plus_x(const ContextPtr& ctx) { return Poly::from_coeffs({ctx->arith().one(), ctx->arith().one()}); }

ordered_json search_strict_ext_gap(const SuiteConfig& cfg, const ContextPtr& ctx) {
  const auto fam = valuation_family(cfg, ctx);
  if (fam.empty()) return {{"result", "exhausted"}, {"reason", "no configured family of valuation overrings"}};
  const auto gens_of_m = ctx->generators(top_prime(ctx).ideal);
  if (!gens_of_m) return {{"result", "exhausted"}, {"reason", "maximal ideal has no finite presentation"}};
  std::vector<Poly> q_gens;
  for (const auto& g : *gens_of_m) q_gens.push_back(Poly::constant(g));
  q_gens.push_back(one_plus_x(ctx));
  const PolyIdeal q = make_poly_ideal(ctx, q_gens);
  const auto bracket = ext_bracket(ctx, fam);
  const auto angle = ext_angle(ctx, fam);
  std::size_t tried = 0;
  for (const auto& z : poly_samples_for(ctx, ctx->unit())) {
    ++tried;
    try {
      if (!bracket.member(z, q) && angle.member(z, q))
        return {{"result", "witness"},
                {"witness",
                 {{"family", checks::family_label(fam)},
                  {"Q", format_poly_ideal(q)},
                  {"z", format_rational(*ctx, z)},
                  {"in_bracket", bracket.member(z, q)},
                  {"in_angle", angle.member(z, q)}}}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Undecided) throw;
    }
  }
  return {{"result", "exhausted"}, {"Q", format_poly_ideal(q)}, {"tried", tried}};
}

ordered_json search_equivalence_gap(const SuiteConfig& cfg, const ContextPtr& ctx) {
  const auto fam = valuation_family(cfg, ctx);
  if (fam.empty()) return {{"result", "exhausted"}, {"reason", "no configured family of valuation overrings"}};
  const auto bracket = ext_bracket(ctx, fam);
  const auto paren = ext_paren(ctx, fam);
  std::vector<Module> ideals{ctx->unit()};
  for (const auto& e : ctx->window_ideals())
    if (ideals.size() < 16 && !(ctx->leq(e, ctx->unit()) && ctx->leq(ctx->unit(), e))) ideals.push_back(e);
  std::size_t tried = 0;
  for (const auto& e : ideals) {
    const auto ex = extended_ideal(ctx, e);
    for (const auto& z : poly_samples_for(ctx, e)) {
      ++tried;
      try {
        const bool b = bracket.member(z, ex);
        const bool p = paren.member(z, ex);
        if (b != p)
          return {{"result", "witness"},
                  {"witness",
                   {{"family", checks::family_label(fam)},
                    {"E", ctx->format(e)},
                    {"z", format_rational(*ctx, z)},
                    {"in_bracket", b},
                    {"in_paren", p}}}};
      } catch (const Error& err) {
        if (err.code() != ErrorCode::Undecided) throw;
      }
    }
  }
  return {{"result", "exhausted"}, {"tried", tried}};
}

}  // namespace

std::vector<std::string> search_kinds() { return {"eab", "strict-ext-gap", "equivalence-gap"}; }

ordered_json run_search(const std::string& kind, const SuiteConfig& cfg) {
  const auto kinds = search_kinds();
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end())
    throw Error(ErrorCode::UnknownName, "unknown search kind '" + kind + "'");
  const ContextPtr ctx = build_context(cfg.backend, cfg.window);
  const auto start = Clock::now();
  ordered_json out{{"search", kind}, {"backend", backend_label(cfg.backend)}, {"context", ctx->name()}};
  ordered_json body;
  if (kind == "eab") body = search_eab(cfg, ctx);
  else if (kind == "strict-ext-gap") body = search_strict_ext_gap(cfg, ctx);
  else body = search_equivalence_gap(cfg, ctx);
  for (auto& [k, v] : body.items()) out[k] = v;
  out["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return out;
}

}  // namespace semistar
