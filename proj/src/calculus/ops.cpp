#include <algorithm>

#include "semistar/calculus.hpp"

namespace semistar {

SemistarOp::SemistarOp(std::string name, ContextPtr ctx, Evaluator eval, OpFlags flags)
    : name_(std::move(name)), ctx_(std::move(ctx)), eval_(std::move(eval)), flags_(flags) {}

ClosureValue SemistarOp::apply(const Module& e) const {
  if (e.is_zero()) return {ctx_, e, true, name_};
  if (e.is_field()) return {ctx_, e, true, name_};
  return eval_(e);
}

ClosureValue SemistarOp::apply(const FracIdeal& e) const {
  if (e.ctx != ctx_) throw Error(ErrorCode::BackendMismatch, "ideal and operation live on different backends");
  return apply(e.module);
}

SemistarOp identity_op(const ContextPtr& ctx) {
  return SemistarOp("d", ctx, [ctx](const Module& e) { return ClosureValue{ctx, e, true, "d"}; }, {true, true, true});
}

SemistarOp trivial_op(const ContextPtr& ctx) {
  return SemistarOp("e", ctx, [ctx](const Module&) { return ClosureValue{ctx, Module::field(), true, "e"}; },
                    {true, true, true});
}

SemistarOp v_op(const ContextPtr& ctx) {
  return SemistarOp("v", ctx, [ctx](const Module& e) {
    const Module d = ctx->unit();
    return ClosureValue{ctx, ctx->colon(d, ctx->colon(d, e)), true, "v"};
  });
}

namespace {

std::string prime_list_name(const ContextPtr& ctx, const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? "," : "") + ctx->primes().at(idx[i]).name;
  return out + "}";
}

}  // namespace

SemistarOp spectral_op(const ContextPtr& ctx, const std::vector<std::size_t>& delta) {
  for (auto i : delta)
    if (i >= ctx->primes().size()) throw Error(ErrorCode::InvalidArgument, "prime index out of range");
  const std::string name = "spectral:" + prime_list_name(ctx, delta);
  if (delta.empty()) {
    auto e = trivial_op(ctx);
    return SemistarOp(name, ctx, [e](const Module& m) { return e(m); }, e.claimed());
  }
  return SemistarOp(
      name, ctx,
      [ctx, delta, name](const Module& e) {
        Module acc = Module::field();
        for (auto i : delta) acc = ctx->intersect(acc, ctx->localize(e, i));
        return ClosureValue{ctx, acc, true, name};
      },
      {std::nullopt, true, std::nullopt});
}

SemistarOp wedge_op(const ContextPtr& ctx, const std::vector<std::string>& overrings) {
  std::vector<OverringSpec> family;
  std::string name = "wedge:{";
  for (std::size_t i = 0; i < overrings.size(); ++i) {
    family.push_back(ctx->overring(overrings[i]));
    name += (i ? "," : "") + overrings[i];
  }
  name += "}";
  return SemistarOp(name, ctx, [ctx, family, name](const Module& e) {
    Module acc = Module::field();
    for (const auto& t : family) acc = ctx->intersect(acc, ctx->extend(e, t));
    return ClosureValue{ctx, acc, true, name};
  });
}

SemistarOp finite_type_op(const SemistarOp& op) {
  const auto ctx = op.context();
  const std::string name = op.name() + "_f";
  OpFlags flags = op.claimed();
  flags.finite_type = true;
  return SemistarOp(
      name, ctx,
      [ctx, op, name](const Module& e) {
        if (ctx->generators(e)) {
          auto c = op(e);
          c.provenance = name;
          return c;
        }
        Module acc = Module::zero();
        for (const auto& f : ctx->fg_submodules(e)) acc = ctx->add(acc, op(f).module);
        return ClosureValue{ctx, acc, false, name + " (union over finitely generated approximants)"};
      },
      flags);
}

SemistarOp stable_assoc(const SemistarOp& op) {
  const auto ctx = op.context();
  const auto opf = finite_type_op(op);
  const auto dstar = std::make_shared<const ClosureValue>(op(ctx->unit()));
  const std::string name = "stable_of:" + op.name();
  return SemistarOp(
      name, ctx,
      [ctx, opf, dstar, name](const Module& e) {
        const Module d = ctx->unit();
        auto pred = [&](const Element& x) {
          const Module j = ctx->intersect(ctx->colon(e, ctx->span({x})), d);
          return !j.is_zero() && closure_leq(*dstar, opf(j));
        };
        return ClosureValue{ctx, ctx->from_window_oracle(pred), false, name};
      },
      {true, true, std::nullopt});
}

SemistarOp stable_assoc_enumerated(const SemistarOp& op, std::size_t budget) {
  const auto ctx = op.context();
  const auto ideals = ctx->colon_ideals();
  if (ideals.size() > budget)
    throw Error(ErrorCode::EnumerationBudgetExceeded,
                std::to_string(ideals.size()) + " candidate ideals exceed budget " + std::to_string(budget));
  const auto opf = finite_type_op(op);
  const auto dstar = op(ctx->unit());
  std::vector<Module> accepted;
  for (const auto& j : ideals)
    if (closure_leq(dstar, opf(j))) accepted.push_back(j);
  const std::string name = "stable_of:" + op.name() + "[enumerated]";
  return SemistarOp(
      name, ctx,
      [ctx, accepted, name](const Module& e) {
        Module acc = e;
        for (const auto& j : accepted) acc = ctx->add(acc, ctx->colon(e, j));
        return ClosureValue{ctx, acc, false, name};
      },
      {true, true, std::nullopt});
}

SemistarOp stable_assoc_qmax(const SemistarOp& op) {
  const auto ctx = op.context();
  const auto qs = quasi_spectrum(finite_type_op(op));
  const auto spec = spectral_op(ctx, qs.maximals);
  const std::string name = "stable_of:" + op.name() + "[qmax]";
  return SemistarOp(
      name, ctx,
      [spec, name](const Module& e) {
        auto c = spec(e);
        c.provenance = name;
        return c;
      },
      {true, true, std::nullopt});
}

AbResult ab_assoc(const SemistarOp& op, const Module& f, std::size_t budget) {
  const auto ctx = op.context();
  if (f.is_zero() || f.is_field()) return {{ctx, f, true, "ab_of:" + op.name()}, true, 0};
  // (FH:H) is unchanged by rescaling H, so one representative per class.
  std::vector<Module> hs{ctx->unit()};
  for (const auto& h : ctx->window_ideals()) {
    Module rep = h;
    if (const auto gens = ctx->generators(h); gens && !gens->empty()) {
      const auto lowest = std::min_element(gens->begin(), gens->end(),
                                           [](const Element& a, const Element& b) { return a.value() < b.value(); });
      rep = ctx->mul(h, ctx->span({Element::monomial(-lowest->value())}));
    }
    if (std::find(hs.begin(), hs.end(), rep) == hs.end()) hs.push_back(std::move(rep));
  }
  const std::size_t limit = std::min(budget, hs.size());

  Module acc = Module::zero();
  std::size_t examined = 0;
  std::size_t target = 1;
  int unchanged = 0;
  bool stabilized = false;
  while (examined < limit) {
    const Module before = acc;
    for (; examined < std::min(target, limit); ++examined) {
      const Module& h = hs[examined];
      acc = ctx->add(acc, ctx->colon(op(ctx->mul(f, h)).module, h));
    }
    if (examined > 1 && acc == before) {
      if (++unchanged >= 2) {
        stabilized = true;
        break;
      }
    } else if (examined > 1) {
      unchanged = 0;
    }
    target *= 2;
  }
  if (examined == hs.size()) stabilized = true;
  std::string prov = "ab_of:" + op.name() + (stabilized ? " stabilized after " : " lower approximation after ") +
                     std::to_string(examined) + " H";
  return {{ctx, acc, false, prov}, stabilized, examined};
}

SemistarOp ab_op(const SemistarOp& op, std::size_t budget) {
  const auto ctx = op.context();
  const std::string name = "ab_of:" + op.name();
  return SemistarOp(
      name, ctx,
      [ctx, op, budget](const Module& e) {
        if (ctx->generators(e)) return ab_assoc(op, e, budget).value;
        Module acc = Module::zero();
        for (const auto& f : ctx->fg_submodules(e)) acc = ctx->add(acc, ab_assoc(op, f, budget).value.module);
        return ClosureValue{ctx, acc, false, "ab_of:" + op.name() + " (union over approximants)"};
      },
      {true, std::nullopt, true});
}

bool op_leq(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](const Module& e) { return closure_leq(a(e), b(e)); });
}

bool op_equal(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples) {
  return std::all_of(samples.begin(), samples.end(), [&](const Module& e) { return same_closure(a(e), b(e)); });
}

}  // namespace semistar
