#include <algorithm>
#include <random>

#include "harness/checks.hpp"

namespace semistar::checks {

namespace {

ClosureValue plain(const ContextPtr& ctx, const Module& m) { return {ctx, m, true, ""}; }

std::vector<SemistarOp> nontrivial(const RunEnv& env) {
  std::vector<SemistarOp> out;
  for (auto& op : configured_ops(env))
    if (!op(env.ctx->unit()).module.is_field()) out.push_back(op);
  return out;
}

ordered_json names_of(const std::vector<SemistarOp>& ops) {
  ordered_json out = ordered_json::array();
  for (const auto& op : ops) out.push_back(op.name());
  return out;
}

}  // namespace

std::vector<Module> sample_ideals(const RunEnv& env) {
  const auto all = env.ctx->window_ideals();
  const std::size_t n = env.cfg.window.sample_ideals;
  if (all.size() <= n) return all;
  std::vector<std::size_t> idx(all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(env.seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(n);
  std::sort(idx.begin(), idx.end());
  std::vector<Module> out;
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

std::vector<Module> integral_sample_ideals(const RunEnv& env) {
  std::vector<Module> out;
  for (auto& m : sample_ideals(env))
    if (env.ctx->leq(m, env.ctx->unit())) out.push_back(std::move(m));
  return out;
}

std::vector<SemistarOp> configured_ops(const RunEnv& env) {
  std::vector<SemistarOp> out;
  for (const auto& name : operation_names(env.cfg, env.ctx)) out.push_back(make_op(env.ctx, name));
  return out;
}

CheckResult axioms(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  const auto scalars = ctx->sample_scalars();
  const auto ops = configured_ops(env);
  std::size_t evaluations = 0;
  for (const auto& op : ops) {
    std::vector<ClosureValue> closed;
    for (const auto& e : ideals) closed.push_back(op(e));
    evaluations += ideals.size();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      const auto& e = ideals[i];
      const auto& c = closed[i];
      auto violation = [&](const std::string& axiom, ordered_json extra) {
        ordered_json w{{"operation", op.name()}, {"axiom", axiom}, {"E", ctx->format(e)},
                       {"E_star", ctx->format(c.module)}};
        for (auto& [k, v] : extra.items()) w[k] = v;
        return counterexample(w);
      };
      if (!closure_leq(plain(ctx, e), c)) return violation("extensive", ordered_json::object());
      if (!same_closure(op(c.module), c)) return violation("idempotent", ordered_json::object());
      for (const auto& x : scalars) {
        const Module xd = ctx->span({x});
        const ClosureValue scaled{ctx, ctx->mul(xd, c.module), c.exact, ""};
        if (!same_closure(op(ctx->mul(xd, e)), scaled))
          return violation("scaling", ordered_json{{"x", ctx->arith().format(x, ctx->rank())}});
        ++evaluations;
      }
      for (std::size_t j = 0; j < ideals.size(); ++j)
        if (i != j && ctx->leq(e, ideals[j]) && !closure_leq(c, closed[j]))
          return violation("monotone", ordered_json{{"F", ctx->format(ideals[j])}});
    }
  }
  return verified({{"operations", names_of(ops)}, {"ideals", ideals.size()}, {"evaluations", evaluations}});
}

CheckResult v_nondivisorial(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto v = v_op(ctx);
  const auto w = stable_assoc(v);
  std::optional<ordered_json> gap;
  for (const auto& e : ctx->window_ideals()) {
    const auto ve = v(e);
    const auto we = w(e);
    if (!closure_leq(we, ve))
      return counterexample({{"E", ctx->format(e)}, {"E_w", ctx->format(we.module)}, {"E_v", ctx->format(ve.module)}});
    if (!gap && !same_closure(we, ve))
      gap = ordered_json{{"E", ctx->format(e)}, {"E_w", ctx->format(we.module)}, {"E_v", ctx->format(ve.module)}};
  }
  if (!gap) return skipped("w = v on every window ideal of " + ctx->name());
  return verified(*gap);
}

CheckResult stable_vs_spectral(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  const auto ops = configured_ops(env);
  for (const auto& op : ops) {
    const auto cert = stable_assoc(op);
    const auto qmax = stable_assoc_qmax(op);
    std::optional<SemistarOp> enumerated;
    try {
      // With D^* = K every J is accepted and the union leaves any finite window.
      if (!op(ctx->unit()).module.is_field())
        enumerated = stable_assoc_enumerated(op, env.cfg.budget.enumeration);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EnumerationBudgetExceeded) throw;
    }
    for (const auto& e : ideals) {
      const auto a = cert(e);
      const auto b = qmax(e);
      if (!same_closure(a, b))
        return counterexample({{"operation", op.name()}, {"E", ctx->format(e)}, {"certificate", ctx->format(a.module)},
                               {"spectral", ctx->format(b.module)}});
      if (enumerated) {
        const auto c = (*enumerated)(e);
        if (!same_closure(a, c))
          return counterexample({{"operation", op.name()}, {"E", ctx->format(e)},
                                 {"certificate", ctx->format(a.module)}, {"enumerated", ctx->format(c.module)}});
      }
    }
  }
  return verified({{"operations", names_of(ops)}, {"ideals", ideals.size()}});
}

CheckResult op_order(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  const std::vector<std::string> chain{"d", "w", "t", "v", "e"};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!op_leq(make_op(ctx, chain[i]), make_op(ctx, chain[i + 1]), ideals))
      return counterexample({{"expected", chain[i] + " <= " + chain[i + 1]}});
  for (const auto& op : configured_ops(env)) {
    const auto f = finite_type_op(op);
    const auto s = stable_assoc(op);
    if (!op_leq(f, op, ideals)) return counterexample({{"expected", f.name() + " <= " + op.name()}});
    if (!op_leq(s, f, ideals)) return counterexample({{"expected", s.name() + " <= " + f.name()}});
  }
  return verified({{"chain", "d <= w <= t <= v <= e"}, {"ideals", ideals.size()}});
}

namespace {

std::optional<Module> membership_gap(const LocalizingSystem& a, const LocalizingSystem& b,
                                     const std::vector<Module>& ideals) {
  for (const auto& i : ideals)
    if (!i.is_zero() && a.contains(i) != b.contains(i)) return i;
  return std::nullopt;
}

}  // namespace

CheckResult loc1_4(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  const auto integral = ctx->integral_window_ideals();
  const auto ops = configured_ops(env);
  for (const auto& op : ops) {
    const auto f = localizing_system_of(op);
    const auto bar = op_of_localizing_system(f);
    if (!op_leq(bar, op, ideals)) return counterexample({{"operation", op.name()}, {"expected", "bar(*) <= *"}});
    if (const auto gap = membership_gap(f, localizing_system_of(bar), integral))
      return counterexample({{"operation", op.name()}, {"I", ctx->format(*gap)}, {"expected", "F^* = F^bar(*)"}});
  }
  std::size_t systems = 0;
  try {
    for (const auto& f : enumerate_localizing_systems(ctx)) {
      ++systems;
      const auto star = op_of_localizing_system(f);
      const auto bar = op_of_localizing_system(localizing_system_of(star));
      if (const auto gap = membership_gap(localizing_system_of(star), localizing_system_of(bar), integral))
        return counterexample({{"system", f.name}, {"I", ctx->format(*gap)}, {"expected", "F^* = F^bar(*)"}});
      if (const auto gap = membership_gap(f, localizing_system_of(star), integral))
        return counterexample({{"system", f.name}, {"I", ctx->format(*gap)}, {"expected", "F^(*_F) = F"}});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteSpectrum) throw;
  }
  return verified({{"operations", names_of(ops)}, {"localizing_systems", systems}, {"ideals", integral.size()}});
}

CheckResult loc1_5(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  ordered_json table = ordered_json::object();
  auto test = [&](const SemistarOp& op) -> std::optional<CheckResult> {
    std::vector<ClosureValue> closed;
    for (const auto& e : ideals) closed.push_back(op(e));
    std::optional<ordered_json> instability;
    for (std::size_t i = 0; i < ideals.size() && !instability; ++i)
      for (std::size_t j = i + 1; j < ideals.size() && !instability; ++j) {
        const auto lhs = op(ctx->intersect(ideals[i], ideals[j]));
        const ClosureValue rhs{ctx, ctx->intersect(closed[i].module, closed[j].module),
                               closed[i].exact && closed[j].exact, ""};
        if (!same_closure(lhs, rhs)) instability = ordered_json{{"E", ctx->format(ideals[i])}, {"F", ctx->format(ideals[j])}};
      }
    const bool equal = op_equal(op_of_localizing_system(localizing_system_of(op)), op, ideals);
    table[op.name()] = ordered_json{{"stable", !instability}, {"bar_equals_star", equal}};
    if (equal == !instability) return std::nullopt;
    ordered_json w{{"operation", op.name()}, {"stable", !instability}, {"bar_equals_star", equal}};
    if (instability) w["instability"] = *instability;
    return counterexample(w);
  };
  for (const auto& op : configured_ops(env))
    if (auto r = test(op)) return *r;
  try {
    for (const auto& f : enumerate_localizing_systems(ctx))
      if (auto r = test(op_of_localizing_system(f))) return *r;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteSpectrum) throw;
  }
  return verified({{"operations", table}});
}

CheckResult nagata_4(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ideals = ctx->window_ideals();
  const auto elements = ctx->window_elements();
  const auto ops = nontrivial(env);
  if (ops.empty()) return skipped("no operation with D^* != K configured");
  std::mt19937_64 rng(env.seed);
  std::size_t replayed = 0;
  for (const auto& op : ops) {
    const auto tilde = stable_assoc(op);
    const auto opf = finite_type_op(op);
    const auto dstar = op(ctx->unit());
    std::vector<Module> accepted;
    for (const auto& j : ctx->colon_ideals())
      if (closure_leq(dstar, opf(j))) accepted.push_back(j);
    for (const auto& e : ideals) {
      Module u = Module::zero();
      for (const auto& j : accepted) u = ctx->add(u, ctx->colon(e, j));
      const auto te = tilde(e);
      if (!same_closure(ClosureValue{ctx, u, false, ""}, te))
        return counterexample({{"operation", op.name()}, {"E", ctx->format(e)}, {"E_tilde", ctx->format(te.module)},
                               {"E_Na_cap_K", ctx->format(u)}});
      // Replay a few memberships through the Nagata oracle itself.
      for (int k = 0; k < 2; ++k) {
        const Element& x = elements[rng() % elements.size()];
        ++replayed;
        if (nagata_extended_member(x, e, op) != te.contains(x))
          return counterexample({{"operation", op.name()}, {"E", ctx->format(e)},
                                 {"x", ctx->arith().format(x, ctx->rank())}});
      }
    }
    const auto td = tilde(ctx->unit());
    const NagataRing na(op);
    for (const auto& x : elements)
      if (na.contains(RationalFunction::of(Poly::constant(x))) != td.contains(x))
        return counterexample({{"operation", op.name()}, {"E", "D"}, {"x", ctx->arith().format(x, ctx->rank())}});
  }
  return verified({{"operations", names_of(ops)}, {"ideals", ideals.size()}, {"replayed_memberships", replayed}});
}

CheckResult kr_6(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto family = ctx->valuation_family();
  if (family.empty()) return skipped("no declared valuation family");
  std::size_t tested = 0;
  for (const auto& e : ctx->window_ideals()) {
    const auto gens = ctx->generators(e);
    if (!gens || gens->empty() || gens->size() > 2) continue;
    ++tested;
    if (!kronecker_principal_check(ctx, *gens, family))
      return counterexample({{"F", ctx->format(e)}});
  }
  ordered_json names = ordered_json::array();
  for (const auto& t : family) names.push_back(t.name);
  return verified({{"family", names}, {"ideals", tested}});
}

CheckResult m_3(const RunEnv& env) {
  const auto& ctx = env.ctx;
  const auto ops = nontrivial(env);
  if (ops.empty()) return skipped("no operation with D^* != K configured");
  std::size_t tested = 0;
  for (const auto& op : ops) {
    const auto tilde = stable_assoc(op);
    const NagataRing na(op);
    for (const auto& e : ctx->window_ideals()) {
      const auto gens = ctx->generators(e);
      if (!gens || gens->size() != 1) continue;
      const Poly den = Poly::constant(gens->front());
      const auto te = tilde(e);
      for (const auto& x : ctx->window_elements()) {
        ++tested;
        if (na.contains({Poly::constant(x), den}) != te.contains(x))
          return counterexample({{"operation", op.name()}, {"E", ctx->format(e)},
                                 {"x", ctx->arith().format(x, ctx->rank())}});
      }
    }
  }
  return verified({{"operations", names_of(ops)}, {"memberships", tested}});
}

}  // namespace semistar::checks
