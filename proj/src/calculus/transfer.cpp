#include "semistar/backends.hpp"
#include "semistar/calculus.hpp"

namespace semistar {

OverringTransfer overring_transfer(const ContextPtr& ctx, const std::string& overring) {
  const OverringSpec spec = ctx->overring(overring);
  if (spec.kind == OverringKind::Self && ctx->kind() == BackendKind::Valuation) return {ctx, ctx, spec};
  if (spec.kind != OverringKind::Valuation)
    throw Error(ErrorCode::UnknownOverring, "no standalone context for overring " + overring);
  return {ctx, make_valuation(1, {4, 12}), spec};
}

std::optional<Module> OverringTransfer::up(const Module& m) const {
  if (base == target || !m.is_proper()) return m;
  if (!(base->extend(m, overring) == m)) return std::nullopt;
  const auto gens = base->generators(m);
  if (!gens) return std::nullopt;
  std::optional<Exponent> best;
  for (const auto& g : *gens) {
    const Exponent v = base->overring_value(g, overring);
    if (!best || v < *best) best = v;
  }
  return ValuationContext::closed(*best);
}

Module OverringTransfer::down(const Module& m) const {
  if (base == target || !m.is_proper()) return m;
  const auto& cut = m.as<ValueCut>();
  if (cut.kind != ValueCut::Kind::Closed)
    throw Error(ErrorCode::InvalidArgument, "only principal overring ideals transfer down");
  return base->extend(base->span({Element::monomial(cut.bound.major)}), overring);
}

SemistarOp transfer_to_overring(const SemistarOp& op, const OverringTransfer& t) {
  if (op.context() != t.base) throw Error(ErrorCode::BackendMismatch, "operation is not on the base domain");
  const std::string name = op.name() + "_i";
  return SemistarOp(name, t.target, [op, t, name](const Module& e) {
    const auto c = op(t.down(e));
    const auto lifted = t.up(c.module);
    if (!lifted)
      throw Error(ErrorCode::InvalidArgument, "closure " + t.base->format(c.module) + " is not a module over " +
                                                  t.overring.name);
    return ClosureValue{t.target, *lifted, c.exact, name};
  });
}

SemistarOp transfer_from_overring(const SemistarOp& op_on_t, const OverringTransfer& t) {
  if (op_on_t.context() != t.target) throw Error(ErrorCode::BackendMismatch, "operation is not on the overring");
  const std::string name = op_on_t.name() + "^i";
  return SemistarOp(name, t.base, [op_on_t, t, name](const Module& e) {
    const auto c = op_on_t(*t.up(t.base->extend(e, t.overring)));
    return ClosureValue{t.base, t.down(c.module), c.exact, name};
  });
}

}  // namespace semistar
