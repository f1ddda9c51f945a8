#include <algorithm>

#include "semistar/calculus.hpp"

namespace semistar {

namespace {

// Integral ideals on which localizing systems are compared: the enumerated
// window plus D and its nonzero primes.
std::vector<Module> test_ideals(const ContextPtr& ctx) {
  std::vector<Module> out = ctx->integral_window_ideals();
  auto push = [&](const Module& m) {
    if (!m.is_zero() && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  };
  push(ctx->unit());
  for (const auto& p : ctx->primes()) push(p.ideal);
  return out;
}

std::vector<Element> elements_of(const ContextPtr& ctx, const Module& i) {
  if (auto g = ctx->generators(i)) return *g;
  std::vector<Element> out;
  for (const auto& x : ctx->window_elements())
    if (ctx->contains(i, x)) out.push_back(x);
  return out;
}

}  // namespace

bool LocalizingSystem::contains(const Module& i) const {
  if (i.is_zero()) return false;
  return member(i);
}

LocalizingSystem localizing_system_of(const SemistarOp& op) {
  const auto ctx = op.context();
  const auto dstar = std::make_shared<const ClosureValue>(op(ctx->unit()));
  LocalizingSystem f;
  f.ctx = ctx;
  f.name = "F(" + op.name() + ")";
  f.member = [op, dstar](const Module& i) { return closure_leq(*dstar, op(i)); };
  f.finite_type = op.claimed().finite_type.value_or(false);
  return f;
}

LocalizingSystem spectral_localizing_system(const ContextPtr& ctx, const std::vector<std::size_t>& avoided) {
  std::vector<Module> primes;
  std::string name = "{";
  for (std::size_t k = 0; k < avoided.size(); ++k) {
    const auto& p = ctx->primes().at(avoided[k]);
    primes.push_back(p.ideal);
    name += (k ? "," : "") + p.name;
  }
  LocalizingSystem f;
  f.ctx = ctx;
  f.name = name + "}";
  f.member = [ctx, primes](const Module& i) {
    return std::none_of(primes.begin(), primes.end(), [&](const Module& p) { return ctx->leq(i, p); });
  };
  f.finite_type = true;
  f.avoided = avoided;
  return f;
}

std::vector<LocalizingSystem> enumerate_localizing_systems(const ContextPtr& ctx) {
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < ctx->primes().size(); ++i)
    if (!ctx->primes()[i].ideal.is_zero()) nonzero.push_back(i);
  if (nonzero.size() > 16) throw Error(ErrorCode::InfiniteSpectrum, "spectrum too large to enumerate");
  const auto ideals = test_ideals(ctx);
  std::vector<LocalizingSystem> out;
  std::vector<std::vector<bool>> signatures;
  for (std::uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
    std::vector<std::size_t> avoided;
    for (std::size_t k = 0; k < nonzero.size(); ++k)
      if (mask >> k & 1u) avoided.push_back(nonzero[k]);
    auto f = spectral_localizing_system(ctx, avoided);
    std::vector<bool> sig;
    for (const auto& i : ideals) sig.push_back(f.contains(i));
    if (std::find(signatures.begin(), signatures.end(), sig) != signatures.end()) continue;
    signatures.push_back(std::move(sig));
    out.push_back(std::move(f));
  }
  return out;
}

SemistarOp op_of_localizing_system(const LocalizingSystem& f) {
  const auto ctx = f.ctx;
  const std::string name = "from_ls:" + f.name;
  return SemistarOp(
      name, ctx,
      [ctx, f, name](const Module& e) {
        const Module d = ctx->unit();
        auto pred = [&](const Element& x) {
          return f.contains(ctx->intersect(ctx->colon(e, ctx->span({x})), d));
        };
        return ClosureValue{ctx, ctx->from_window_oracle(pred), false, name};
      },
      {f.finite_type, true, std::nullopt});
}

std::vector<Module> localizing_members(const LocalizingSystem& f, std::size_t budget) {
  const auto ideals = f.ctx->integral_window_ideals();
  if (ideals.size() > budget)
    throw Error(ErrorCode::EnumerationBudgetExceeded,
                std::to_string(ideals.size()) + " candidate ideals exceed budget " + std::to_string(budget));
  std::vector<Module> out;
  for (const auto& i : ideals)
    if (f.contains(i)) out.push_back(i);
  return out;
}

std::optional<std::string> localizing_axiom_violation(const LocalizingSystem& f) {
  const auto ctx = f.ctx;
  const auto ideals = test_ideals(ctx);
  const Module d = ctx->unit();
  std::vector<bool> in;
  for (const auto& i : ideals) in.push_back(f.contains(i));
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    if (!in[a]) continue;
    for (std::size_t b = 0; b < ideals.size(); ++b)
      if (!in[b] && ctx->leq(ideals[a], ideals[b]))
        return "upward closure fails: " + ctx->format(ideals[a]) + " in F, " + ctx->format(ideals[b]) + " not";
    const auto elems = elements_of(ctx, ideals[a]);
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      if (in[b]) continue;
      const bool all = std::all_of(elems.begin(), elems.end(), [&](const Element& x) {
        return f.contains(ctx->intersect(ctx->colon(ideals[b], ctx->span({x})), d));
      });
      if (all)
        return "residual condition fails: I = " + ctx->format(ideals[a]) + ", J = " + ctx->format(ideals[b]);
    }
  }
  return std::nullopt;
}

bool localizing_leq(const LocalizingSystem& a, const LocalizingSystem& b) {
  for (const auto& i : test_ideals(a.ctx))
    if (a.contains(i) && !b.contains(i)) return false;
  return true;
}

}  // namespace semistar
