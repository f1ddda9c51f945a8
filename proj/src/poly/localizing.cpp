#include "semistar/poly.hpp"

namespace semistar {

namespace {

// J cap D for a graded ideal J.
Module constants_of(const DomainContext& ctx, const GradedIdeal& j) {
  return ctx.intersect(j.level(0), ctx.unit());
}

GradedIdeal single(const DomainContext& ctx, const Element& c, int degree) {
  return graded_normalize(ctx, {degree, {ctx.span({c})}});
}

}  // namespace

bool PolyLocalizingSystem::contains(const PolyIdeal& j) const {
  const auto& ctx = *base.ctx;
  if (j.graded) {
    const Module j0 = constants_of(ctx, *j.graded);
    return !j0.is_zero() && base.contains(j0);
  }
  std::vector<Element> constants;
  for (const auto& g : j.generators)
    if (g.lo == 0 && g.degree() == 0) constants.push_back(g.coeffs.front());
  if (!constants.empty() && base.contains(ctx.intersect(ctx.span(constants), ctx.unit()))) return true;
  throw Error(ErrorCode::Undecided, "J cap D is not computable for " + format_poly_ideal(j));
}

PolyLocalizingSystem localizing_poly(const LocalizingSystem& f) { return {f}; }

PolyOp op_of_poly_localizing_system(const PolyLocalizingSystem& f) {
  const auto ctx = f.base.ctx;
  return PolyOp("*_" + f.base.name + "[X]", ctx, [f, ctx](const RationalFunction& z, const PolyIdeal& a) {
    if (!a.graded) throw Error(ErrorCode::Undecided, "*_F[X] is implemented for X-monomial ideals");
    const auto lz = as_laurent(ctx->arith(), z);
    if (!lz) return false;
    Module j0 = ctx->unit();
    for (int k = lz->lo; k <= lz->degree(); ++k) {
      const Element c = lz->coeff(k);
      if (!c.is_zero()) j0 = ctx->intersect(j0, ctx->colon(a.graded->level(k), ctx->span({c})));
    }
    return !j0.is_zero() && f.base.contains(j0);
  });
}

std::optional<std::string> poly_localizing_violation(const PolyLocalizingSystem& f,
                                                     const std::vector<PolyIdeal>& samples) {
  const auto& ctx = *f.base.ctx;
  const GradedIdeal dx = graded_extended(ctx.unit());
  for (const auto& i : samples) {
    if (!i.graded || !f.contains(i)) continue;
    for (const auto& j : samples) {
      if (!j.graded) continue;
      if (graded_leq(ctx, *i.graded, *j.graded) && !f.contains(j))
        return "upward closure fails: " + format_poly_ideal(i) + " in F[X] but " + format_poly_ideal(j) + " is not";
      if (f.contains(j)) continue;
      bool all_in = true;
      for (int k = i.graded->lo; k <= i.graded->top() && all_in; ++k) {
        const auto gens_of_level = ctx.generators(i.graded->level(k)).value();
        for (const auto& c : gens_of_level) {
          const GradedIdeal r = graded_intersect(ctx, graded_colon(ctx, *j.graded, single(ctx, c, k)), dx);
          if (!f.contains(graded_poly_ideal(f.base.ctx, r))) {
            all_in = false;
            break;
          }
        }
      }
      if (all_in)
        return "residual axiom fails: (" + format_poly_ideal(j) + " : i) in F[X] for every generator i of " +
               format_poly_ideal(i);
    }
  }
  return std::nullopt;
}

}  // namespace semistar
