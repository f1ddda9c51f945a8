#include <algorithm>

#include "semistar/poly.hpp"

namespace semistar {

namespace {

bool integral_content(const DomainContext& ctx, const Poly& g) {
  return ctx.leq(content_module(ctx, g), ctx.unit());
}

// g in N^* = {g in D[X] : c(g)^* = D^*}.
bool in_nagata_set(const DomainContext& ctx, const Poly& g, const SemistarOp& op, const ClosureValue& dstar) {
  if (g.is_zero() || !g.is_polynomial() || !integral_content(ctx, g)) return false;
  return closure_leq(dstar, op(content_module(ctx, g)));
}

bool coefficients_in(const Poly& f, const ClosureValue& c) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [&](const Element& a) { return a.is_zero() || c.contains(a); });
}

Exponent min_value(const DomainContext& ctx, const Poly& p, const OverringSpec& t) {
  std::optional<Exponent> best;
  for (const auto& c : p.coeffs) {
    if (c.is_zero()) continue;
    const Exponent v = ctx.overring_value(c, t);
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace

NagataRing::NagataRing(SemistarOp op)
    : op_(std::move(op)), dstar_(op_(op_.context()->unit())), tilde_(dstar_) {
  if (dstar_.module.is_field()) throw Error(ErrorCode::TrivialStar, "Na(D," + op_.name() + ") needs D^* != K");
  // Constants of Na(D,*) are D^{*~}; numerators may use them freely.
  tilde_ = stable_assoc(op_)(op_.context()->unit());
}

bool nagata_member(const RationalFunction& h, const SemistarOp& op) { return NagataRing(op).contains(h); }

bool NagataRing::contains(const RationalFunction& h) const {
  const auto& op = op_;
  const auto ctx = op.context();
  const auto& ar = ctx->arith();
  const auto& dstar = dstar_;
  const auto& tilde = tilde_;
  if (h.is_zero()) return true;
  if (!h.num.is_polynomial() || !h.den.is_polynomial()) {
    const auto l = as_laurent(ar, h);
    return l && l->is_polynomial() && coefficients_in(*l, tilde);
  }
  if (in_nagata_set(*ctx, h.den, op, dstar)) return coefficients_in(h.num, tilde);
  if (const auto l = as_laurent(ar, h); l && l->is_polynomial() && coefficients_in(*l, tilde)) return true;
  // Cofactor search: rescale the denominator by a monomial taken from its
  // coefficients.
  for (const auto& c : h.den.coeffs)
    for (const auto& term : c.terms()) {
      const Element y = Element::monomial(term.exponent, term.coeff);
      const Element yi = ar.inverse(y);
      const Poly g = poly_scale(ar, h.den, yi);
      if (in_nagata_set(*ctx, g, op, dstar) && coefficients_in(poly_scale(ar, h.num, yi), tilde)) return true;
    }
  return false;
}

bool nagata_extended_member(const Element& x, const Module& e, const SemistarOp& op) {
  const auto ctx = op.context();
  if (x.is_zero()) return true;
  const auto dstar = op(ctx->unit());
  const auto opf = finite_type_op(op);
  const Module xd = ctx->span({x});
  for (const auto& j : ctx->colon_ideals())
    if (ctx->leq(ctx->mul(xd, j), e) && closure_leq(dstar, opf(j))) return true;
  return false;
}

bool kronecker_member(const ContextPtr& ctx, const RationalFunction& h, const std::vector<OverringSpec>& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "Kronecker membership over an empty family");
  if (h.is_zero()) return true;
  for (const auto& t : family)
    if (min_value(*ctx, h.num, t) < min_value(*ctx, h.den, t)) return false;
  return true;
}

bool kronecker_principal_check(const ContextPtr& ctx, const std::vector<Element>& generators,
                               const std::vector<OverringSpec>& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "Kronecker check over an empty family");
  const Poly f = Poly::from_coeffs(generators);
  if (f.is_zero()) throw Error(ErrorCode::AllZeroGenerators, "principal check needs a nonzero generator");
  for (const auto& a : generators)
    if (!a.is_zero() && !kronecker_member(ctx, {Poly::constant(a), f}, family)) return false;
  for (const auto& t : family) {
    const bool some = std::any_of(generators.begin(), generators.end(), [&](const Element& a) {
      return !a.is_zero() && kronecker_member(ctx, {f, Poly::constant(a)}, {t});
    });
    if (!some) return false;
  }
  return true;
}

std::optional<std::pair<Poly, Poly>> gauss_content_failure(const ContextPtr& ctx, const std::vector<Poly>& samples) {
  const auto& ar = ctx->arith();
  for (const auto& f : samples)
    for (const auto& g : samples) {
      if (f.is_zero() || g.is_zero()) continue;
      const Module lhs = content_module(*ctx, poly_mul(ar, f, g));
      const Module rhs = ctx->mul(content_module(*ctx, f), content_module(*ctx, g));
      if (!(lhs == rhs)) return std::make_pair(f, g);
    }
  return std::nullopt;
}

}  // namespace semistar
