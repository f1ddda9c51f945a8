#include <algorithm>

#include "semistar/poly.hpp"

namespace semistar {

namespace {

const OverringSpec& overring_of_kind(const DomainContext& ctx, OverringKind kind) {
  for (const auto& t : ctx.overrings())
    if (t.kind == kind) return t;
  throw Error(ErrorCode::UnknownOverring, ctx.name() + " declares no overring of the requested kind");
}

std::vector<OverringSpec> resolve(const ContextPtr& ctx, const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorCode::InvalidArgument, "overring family must be nonempty");
  std::vector<OverringSpec> out;
  for (const auto& n : names) out.push_back(ctx->overring(n));
  return out;
}

std::string family_name(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

// Laurent form of z, or nullopt when z is certainly not a Laurent polynomial.
std::optional<Poly> laurent(const ElementArith& ar, const RationalFunction& z) { return as_laurent(ar, z); }

std::optional<GaloisField::Code> eval_residue(const DomainContext& ctx, const Poly& p, const OverringSpec& t,
                                              GaloisField::Code a) {
  const auto& f = ctx.arith().field();
  GaloisField::Code acc = 0;
  GaloisField::Code power = 1;
  for (int k = 0; k <= p.degree(); ++k) {
    const Element c = p.coeff(k);
    if (!c.is_zero()) {
      const auto r = ctx.residue(c, t);
      if (!r) return std::nullopt;
      acc = f.add(acc, f.mul(*r, power));
    }
    power = f.mul(power, a);
  }
  return acc;
}

Exponent min_value(const DomainContext& ctx, const Poly& p, const OverringSpec& t) {
  std::optional<Exponent> best;
  for (const auto& c : p.coeffs) {
    if (c.is_zero()) continue;
    const Exponent v = ctx.overring_value(c, t);
    if (!best || v < *best) best = v;
  }
  if (!best) throw Error(ErrorCode::ZeroPolynomial, "value of the zero polynomial");
  return *best;
}

bool in_field_extension(const PolyIdeal& a, const Poly& z) {
  const auto& ctx = *a.ctx;
  if (a.graded) {
    for (int k = z.lo; k <= z.degree(); ++k)
      if (!z.coeff(k).is_zero() && a.graded->level(k).is_zero()) return false;
    return true;
  }
  for (const auto& g : a.generators)
    if (g.lo == 0 && g.degree() == 0) return true;
  if (a.generators.size() == 1) return poly_divide(ctx.arith(), z, a.generators.front()).has_value();
  throw Error(ErrorCode::Undecided, "A K[X] membership needs a graded ideal or a single generator");
}

}  // namespace

bool in_extension_poly(const PolyIdeal& a, const OverringSpec& t, const RationalFunction& z) {
  const auto& ctx = *a.ctx;
  if (z.is_zero()) return true;
  const auto lz = laurent(ctx.arith(), z);
  if (!lz || lz->lo < 0) return false;
  if (t.kind == OverringKind::Field) return in_field_extension(a, *lz);
  if (a.graded) return graded_contains(ctx, graded_extend(ctx, *a.graded, t), *lz);

  // Positive certificates: the X-monomial part of A, or one generator dividing z.
  std::vector<Poly> mono;
  for (const auto& g : a.generators)
    if (g.is_x_monomial()) mono.push_back(g);
  if (!mono.empty()) {
    const auto part = make_poly_ideal(a.ctx, mono);
    if (graded_contains(ctx, graded_extend(ctx, *part.graded, t), *lz)) return true;
  }
  const Module tunit = ctx.extend(ctx.unit(), t);
  for (const auto& g : a.generators) {
    std::optional<Poly> q;
    try {
      q = poly_divide(ctx.arith(), *lz, g);
    } catch (const Error&) {
      continue;
    }
    if (q && q->is_polynomial() &&
        std::all_of(q->coeffs.begin(), q->coeffs.end(), [&](const Element& c) { return ctx.contains(tunit, c); }))
      return true;
  }

  // Negative certificates: coefficients outside c(A)T, or a residue point
  // where every generator vanishes and z does not.
  Module cont = Module::zero();
  for (const auto& g : a.generators) cont = ctx.add(cont, content_module(ctx, g));
  const Module ct = ctx.extend(cont, t);
  for (const auto& c : lz->coeffs)
    if (!c.is_zero() && !ctx.contains(ct, c)) return false;
  if (t.valuation) {
    const auto order = ctx.arith().field().order();
    for (GaloisField::Code pt = 0; pt < order; ++pt) {
      bool all_vanish = true;
      for (const auto& g : a.generators) {
        const auto r = eval_residue(ctx, g, t, pt);
        if (!r || *r != 0) {
          all_vanish = false;
          break;
        }
      }
      if (!all_vanish) continue;
      const auto rz = eval_residue(ctx, *lz, t, pt);
      if (rz && *rz != 0) return false;
    }
  }
  throw Error(ErrorCode::Undecided, "no certificate for " + format_poly(ctx, *lz) + " in " + format_poly_ideal(a) +
                                        " extended to " + t.name);
}

bool in_nagata_extension(const PolyIdeal& a, const OverringSpec& t, const RationalFunction& z) {
  const auto& ctx = *a.ctx;
  if (z.is_zero() || t.kind == OverringKind::Field) return true;
  if (!t.valuation) {
    // Exact when the denominator has content T: z in A T(X) iff num in A T(X) cap T[X],
    // which for A = E[X] is (ET)[X].
    const Element one = ctx.arith().one();
    if (!ctx.contains(ctx.extend(content_module(ctx, z.den), t), one))
      throw Error(ErrorCode::Undecided, "A T(X) membership over " + t.name + " needs a denominator of content T");
    std::optional<Module> base = a.extended_from;
    if (!base && a.graded && a.graded->lo == 0 && a.graded->levels.size() == 1) base = a.graded->levels.front();
    if (base) {
      const Module et = ctx.extend(*base, t);
      return std::all_of(z.num.coeffs.begin(), z.num.coeffs.end(),
                         [&](const Element& c) { return c.is_zero() || ctx.contains(et, c); });
    }
    if (in_extension_poly(a, t, RationalFunction::of(z.num))) return true;
    throw Error(ErrorCode::Undecided, "A T(X) membership over " + t.name + " is decided for extended ideals E[X]");
  }
  // c(A)T as a module: a cut of T, possibly not finitely generated.
  std::optional<Module> ct;
  auto absorb = [&](const Module& m) { ct = ct ? ctx.add(*ct, m) : m; };
  for (const auto& g : a.generators)
    absorb(ctx.extend(ctx.span({Element::monomial(min_value(ctx, g, t))}), t));
  if (!ct && a.graded)
    for (int k = a.graded->lo; k <= a.graded->top(); ++k)
      if (!a.graded->level(k).is_zero()) absorb(ctx.extend(a.graded->level(k), t));
  if (!ct) throw Error(ErrorCode::Undecided, "ideal has no usable generators");
  const Exponent dz = min_value(ctx, z.num, t) - min_value(ctx, z.den, t);
  return ctx.contains(*ct, Element::monomial(dz));
}

PolyOp ext_bracket(const ContextPtr& ctx, const std::vector<std::string>& family) {
  const auto ts = resolve(ctx, family);
  return PolyOp("[wedge:" + family_name(family) + "]", ctx, [ts](const RationalFunction& z, const PolyIdeal& a) {
    return std::all_of(ts.begin(), ts.end(), [&](const OverringSpec& t) { return in_extension_poly(a, t, z); });
  });
}

PolyOp ext_paren(const ContextPtr& ctx, const std::vector<std::string>& family) {
  const auto ts = resolve(ctx, family);
  return PolyOp("(wedge:" + family_name(family) + ")", ctx, [ts](const RationalFunction& z, const PolyIdeal& a) {
    return std::all_of(ts.begin(), ts.end(), [&](const OverringSpec& t) { return in_nagata_extension(a, t, z); });
  });
}

PolyOp ext_angle(const ContextPtr& ctx, const std::vector<std::string>& family) {
  const auto ts = resolve(ctx, family);
  const OverringSpec k = overring_of_kind(*ctx, OverringKind::Field);
  return PolyOp("<wedge:" + family_name(family) + ">", ctx, [ts, k](const RationalFunction& z, const PolyIdeal& a) {
    return std::all_of(ts.begin(), ts.end(), [&](const OverringSpec& t) { return in_nagata_extension(a, t, z); }) &&
           in_extension_poly(a, k, z);
  });
}

PolyOp identity_poly(const ContextPtr& ctx) {
  const OverringSpec self = overring_of_kind(*ctx, OverringKind::Self);
  return PolyOp("d[X]", ctx, [self](const RationalFunction& z, const PolyIdeal& a) {
    return in_extension_poly(a, self, z);
  });
}

PolyOp v_poly(const ContextPtr& ctx) {
  return PolyOp("v[X]", ctx, [ctx](const RationalFunction& z, const PolyIdeal& a) {
    if (!a.graded) throw Error(ErrorCode::Undecided, "v on D[X] is implemented for X-monomial ideals");
    const auto lz = laurent(ctx->arith(), z);
    if (!lz) return false;
    const GradedIdeal dx = graded_extended(ctx->unit());
    const GradedIdeal vv = graded_colon(*ctx, dx, graded_colon(*ctx, dx, *a.graded));
    return graded_contains(*ctx, vv, *lz);
  });
}

PolyOp bracket_tilde(const SemistarOp& op, std::size_t budget) {
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
  return PolyOp("[" + op.name() + "~]", ctx, [ctx, accepted](const RationalFunction& z, const PolyIdeal& a) {
    if (!a.graded) throw Error(ErrorCode::Undecided, "[*~] is implemented for X-monomial ideals");
    const auto lz = laurent(ctx->arith(), z);
    if (!lz) return false;
    for (const auto& f : accepted) {
      bool ok = true;
      for (int k = lz->lo; k <= lz->degree() && ok; ++k) {
        const Element c = lz->coeff(k);
        ok = c.is_zero() || ctx->contains(ctx->colon(a.graded->level(k), f), c);
      }
      if (ok) return true;
    }
    return false;
  });
}

PolyOp bracket_tilde_spectral(const SemistarOp& op) {
  const auto ctx = op.context();
  const auto qmax = quasi_spectrum(finite_type_op(op)).maximals;
  return PolyOp("[" + op.name() + "~]spectral", ctx, [ctx, qmax](const RationalFunction& z, const PolyIdeal& a) {
    if (!a.graded) throw Error(ErrorCode::Undecided, "[*~] is implemented for X-monomial ideals");
    if (qmax.empty()) return true;
    const auto lz = laurent(ctx->arith(), z);
    if (!lz) return false;
    for (int k = lz->lo; k <= lz->degree(); ++k) {
      const Element c = lz->coeff(k);
      if (c.is_zero()) continue;
      for (auto q : qmax)
        if (!ctx->contains(ctx->localize(a.graded->level(k), q), c)) return false;
    }
    return true;
  });
}

bool bracket_tilde_member(const RationalFunction& z, const PolyIdeal& a, const SemistarOp& op) {
  return bracket_tilde(op).member(z, a);
}

SemistarOp induced_op(const PolyOp& op) {
  const auto ctx = op.context();
  const std::string name = op.name() + "_0";
  return SemistarOp(name, ctx, [ctx, op, name](const Module& e) {
    const PolyIdeal ex = extended_ideal(ctx, e);
    auto pred = [&](const Element& x) { return op.member(RationalFunction::of(Poly::constant(x)), ex); };
    return ClosureValue{ctx, ctx->from_window_oracle(pred), false, name};
  });
}

std::vector<RationalFunction> poly_samples(const ContextPtr& ctx, const std::vector<Element>& scalars) {
  const auto& ar = ctx->arith();
  const Element one = ar.one();
  const Poly x = Poly::monomial(one, 1);
  const Poly one_plus_x = Poly::from_coeffs({one, one});
  std::vector<RationalFunction> out;
  for (std::size_t i = 0; i < scalars.size(); ++i) {
    const Element& c = scalars[i];
    const Poly pc = Poly::constant(c);
    out.push_back(RationalFunction::of(pc));
    out.push_back(RationalFunction::of(poly_mul(ar, pc, x)));
    out.push_back(RationalFunction::of(Poly::monomial(c, 2)));
    out.push_back({pc, one_plus_x});
    out.push_back({poly_mul(ar, pc, x), one_plus_x});
    out.push_back({poly_mul(ar, pc, one_plus_x), Poly::monomial(one, 1)});
    const Element& d = scalars[(i + 1) % scalars.size()];
    out.push_back(RationalFunction::of(Poly::from_coeffs({c, Element{}, d})));
    out.push_back(RationalFunction::of(Poly::from_coeffs({c, d, Element{}, c})));
  }
  return out;
}

std::vector<RationalFunction> poly_samples_for(const ContextPtr& ctx, const Module& e) {
  std::vector<Element> scalars;
  if (auto g = ctx->generators(e)) scalars = *g;
  const auto window = ctx->window_elements();
  const std::size_t stride = std::max<std::size_t>(1, window.size() / 10);
  for (std::size_t i = 0; i < window.size(); i += stride) scalars.push_back(window[i]);
  return poly_samples(ctx, scalars);
}

bool is_extension(const PolyOp& ext, const SemistarOp& op, const std::vector<Module>& samples) {
  const auto induced = induced_op(ext);
  return op_equal(induced, op, samples);
}

bool is_strict_extension(const PolyOp& ext, const SemistarOp& op, const std::vector<Module>& samples) {
  if (!is_extension(ext, op, samples)) return false;
  const auto ctx = op.context();
  for (const auto& e : samples) {
    const auto closure = op(e);
    const PolyIdeal ex = extended_ideal(ctx, e);
    for (const auto& z : poly_samples_for(ctx, e)) {
      const auto lz = as_laurent(ctx->arith(), z);
      const bool in_target = lz && lz->is_polynomial() &&
                             std::all_of(lz->coeffs.begin(), lz->coeffs.end(),
                                         [&](const Element& c) { return c.is_zero() || closure.contains(c); });
      if (ext.member(z, ex) != in_target) return false;
    }
  }
  return true;
}

bool equivalent(const PolyOp& a, const PolyOp& b, const std::vector<Module>& samples) {
  return op_equal(induced_op(a), induced_op(b), samples);
}

bool strictly_equivalent(const PolyOp& a, const PolyOp& b, const std::vector<Module>& samples) {
  const auto ctx = a.context();
  for (const auto& e : samples) {
    const PolyIdeal ex = extended_ideal(ctx, e);
    for (const auto& z : poly_samples_for(ctx, e))
      if (a.member(z, ex) != b.member(z, ex)) return false;
  }
  return true;
}

}  // namespace semistar
