#include <algorithm>
#include <bit>

#include "semistar/backends.hpp"
#include "semistar/poly.hpp"

namespace semistar {

namespace {

bool integral_poly(const DomainContext& ctx, const Poly& g) {
  return !g.is_zero() && g.is_polynomial() && ctx.leq(content_module(ctx, g), ctx.unit());
}

bool is_unit_constant(const DomainContext& ctx, const Poly& g) {
  if (g.lo != 0 || g.degree() != 0 || !g.coeffs.front().is_monomial()) return false;
  const Element& c = g.coeffs.front();
  return ctx.contains(ctx.unit(), c) && ctx.contains(ctx.unit(), ctx.arith().inverse(c));
}

bool content_outside(const DomainContext& ctx, const Poly& g, const std::vector<std::size_t>& primes) {
  const Module c = content_module(ctx, g);
  return std::none_of(primes.begin(), primes.end(),
                      [&](std::size_t p) { return ctx.leq(c, ctx.primes().at(p).ideal); });
}

std::vector<std::size_t> maximal_of(const DomainContext& ctx, const std::vector<std::size_t>& set) {
  std::vector<std::size_t> out;
  const auto& primes = ctx.primes();
  for (auto p : set) {
    const bool dominated = std::any_of(set.begin(), set.end(), [&](std::size_t q) {
      return q != p && ctx.leq(primes[p].ideal, primes[q].ideal) && !(primes[p].ideal == primes[q].ideal);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::string format_list(const DomainContext& ctx, const std::vector<std::size_t>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? "," : "") + ctx.primes()[primes[i]].name;
  return out + "}";
}

}  // namespace

MultSetSpec MultSetSpec::of_generators(std::vector<Poly> gens) {
  for (const auto& g : gens)
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "0 cannot generate a multiplicative set");
  MultSetSpec s;
  s.kind = Kind::Generators;
  s.generators = std::move(gens);
  return s;
}

MultSetSpec MultSetSpec::of_content(const SemistarOp& op) {
  MultSetSpec s;
  s.kind = Kind::Content;
  s.op = op;
  return s;
}

MultSetSpec MultSetSpec::of_avoidance(std::vector<std::size_t> primes) {
  MultSetSpec s;
  s.kind = Kind::Avoidance;
  s.avoided = std::move(primes);
  return s;
}

bool mult_set_member(const ContextPtr& ctx, const Poly& g, const MultSetSpec& s) {
  if (g.is_zero()) return false;
  switch (s.kind) {
    case MultSetSpec::Kind::Generators: {
      Poly rest = g;
      for (int depth = 0; depth < 16; ++depth) {
        if (is_unit_constant(*ctx, rest)) return true;
        bool divided = false;
        for (const auto& h : s.generators) {
          if (is_unit_constant(*ctx, h)) continue;
          std::optional<Poly> q;
          try {
            q = poly_divide(ctx->arith(), rest, h);
          } catch (const Error&) {
            continue;
          }
          if (q && q->is_polynomial()) {
            rest = *q;
            divided = true;
            break;
          }
        }
        if (!divided) return false;
      }
      return false;
    }
    case MultSetSpec::Kind::Content: {
      if (!integral_poly(*ctx, g)) return false;
      const auto& op = *s.op;
      return closure_leq(op(ctx->unit()), op(content_module(*ctx, g)));
    }
    case MultSetSpec::Kind::Avoidance:
      return integral_poly(*ctx, g) && content_outside(*ctx, g, s.avoided);
  }
  return false;
}

std::vector<std::size_t> delta_of(const ContextPtr& ctx, const MultSetSpec& s) {
  const auto& primes = ctx->primes();
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < primes.size(); ++p) {
    const Module& pm = primes[p].ideal;
    bool avoids = true;
    if (!pm.is_zero()) {
      switch (s.kind) {
        case MultSetSpec::Kind::Generators:
          avoids = std::none_of(s.generators.begin(), s.generators.end(), [&](const Poly& g) {
            return g.is_polynomial() && ctx->leq(content_module(*ctx, g), pm);
          });
          break;
        case MultSetSpec::Kind::Content:
          avoids = !closure_leq((*s.op)(ctx->unit()), finite_type_op(*s.op)(pm));
          break;
        case MultSetSpec::Kind::Avoidance:
          avoids = std::any_of(s.avoided.begin(), s.avoided.end(),
                               [&](std::size_t q) { return ctx->leq(pm, primes.at(q).ideal); });
          break;
      }
    }
    if (avoids) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> nabla_of(const ContextPtr& ctx, const MultSetSpec& s) {
  return maximal_of(*ctx, delta_of(ctx, s));
}

bool extended_saturation_member(const ContextPtr& ctx, const Poly& g, const MultSetSpec& s) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "saturation membership of 0");
  if (!integral_poly(*ctx, g)) return false;
  return content_outside(*ctx, g, delta_of(ctx, s));
}

ClosureValue circ_S(const ContextPtr& ctx, const Module& e, const MultSetSpec& s) { return circ_op(ctx, s)(e); }

SemistarOp circ_op(const ContextPtr& ctx, const MultSetSpec& s) {
  const auto nabla = nabla_of(ctx, s);
  const auto spectral = spectral_op(ctx, nabla);
  const std::string name = "circ" + format_list(*ctx, nabla);
  return SemistarOp(name, ctx, [spectral, name](const Module& e) {
    auto c = spectral(e);
    c.provenance = name;
    return c;
  }, {true, true, std::nullopt});
}

BPolyReport b_poly_check(const ContextPtr& ctx, const Module& e, std::size_t budget) {
  BPolyReport report;
  const auto rhs = ab_assoc(identity_op(ctx), e).value;
  const auto ideals = ctx->integral_window_ideals();

  std::vector<Element> principal;
  for (const auto& x : ctx->window_elements()) {
    if (principal.size() >= 4) break;
    if (x.is_zero() || !ctx->contains(ctx->unit(), x)) continue;
    const Module s = ctx->span({x});
    if (std::none_of(principal.begin(), principal.end(), [&](const Element& y) { return ctx->span({y}) == s; }))
      principal.push_back(x);
  }

  std::vector<GradedIdeal> fs;
  for (const auto& i : ideals) fs.push_back(graded_extended(i));
  for (const auto& a : principal)
    for (const auto& b : principal)
      for (int j = 1; j <= 2; ++j)
        fs.push_back(graded_add(*ctx, graded_extended(ctx->span({a})),
                                graded_normalize(*ctx, {j, {ctx->span({b})}})));
  if (fs.size() > budget)
    throw Error(ErrorCode::EnumerationBudgetExceeded,
                std::to_string(fs.size()) + " ideals F exceed budget " + std::to_string(budget));

  const GradedIdeal ex = graded_extended(e);
  Module level0 = Module::zero();
  bool unbounded = false;
  report.holds = true;
  for (const auto& f : fs) {
    ++report.examined;
    const GradedIdeal q = graded_colon(*ctx, graded_mul(*ctx, ex, f), f);
    for (int k = std::min(0, q.lo); k <= q.top(); ++k)
      if (!ctx->included_on_window(q.level(k), rhs.module)) {
        report.holds = false;
        report.detail = "level " + std::to_string(k) + " of (E[X]F:F) for F = " + format_graded(*ctx, f) +
                        " escapes " + ctx->format(rhs.module);
        return report;
      }
    level0 = ctx->add(level0, q.level(0));
    const Module cf = f.levels.back();
    auto bounded_at = [&](const Module& cm) {
      for (int k = q.lo; k <= q.top(); ++k)
        if (!ctx->leq(ctx->mul(ctx->mul(q.level(k), cf), cm), ctx->mul(e, cm))) return false;
      return true;
    };
    int found = -1;
    Module cm = ctx->unit();
    for (int m = 0; m <= 6 && found < 0; ++m, cm = ctx->mul(cm, cf))
      if (bounded_at(cm)) found = m;
    if (found < 0) unbounded = true;
    report.bound_m = std::max(report.bound_m, found);
  }
  if (unbounded) report.bound_m = -1;
  if (!ctx->included_on_window(rhs.module, level0)) {
    report.holds = false;
    report.detail = ctx->format(rhs.module) + " is not covered by the constants of the union";
    return report;
  }
  report.detail = "E^b = " + ctx->format(rhs.module) + " on both levels over " + std::to_string(report.examined) +
                  " ideals F; relative to the enumerated window only";
  return report;
}

PolyTriple bracket_eab_witness(const ContextPtr& pvd) {
  const auto* p = dynamic_cast<const PvdContext*>(pvd.get());
  if (p == nullptr) throw Error(ErrorCode::BackendMismatch, "the bracket eab witness needs the PVD backend");
  if (p->window_high() < 8) throw Error(ErrorCode::WindowTooSmall, "the bracket eab witness needs degree window 8");
  const std::vector<std::pair<int, int>> monos{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << monos.size()); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  auto ideal_of = [&](unsigned mask) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < monos.size(); ++i)
      if (mask & (1u << i)) gens.push_back(Poly::monomial(Element::monomial(monos[i].first), monos[i].second));
    return make_poly_ideal(pvd, gens);
  };
  const OverringSpec v = pvd->overring("V");
  auto closed = [&](const PolyIdeal& a) { return graded_extend(*pvd, *a.graded, v); };
  std::vector<PolyIdeal> ideals;
  for (auto m : masks) ideals.push_back(ideal_of(m));
  for (const auto& f : ideals)
    for (const auto& g : ideals)
      for (const auto& h : ideals) {
        const GradedIdeal gv = closed(g);
        const GradedIdeal hv = closed(h);
        if (graded_leq(*pvd, gv, hv)) continue;
        const GradedIdeal fg = graded_extend(*pvd, graded_mul(*pvd, *f.graded, *g.graded), v);
        const GradedIdeal fh = graded_extend(*pvd, graded_mul(*pvd, *f.graded, *h.graded), v);
        if (graded_leq(*pvd, fg, fh)) return {f, g, h};
      }
  throw Error(ErrorCode::SearchFailed, "no monomial triple of degree at most 2 found");
}

bool verify_bracket_eab(const PolyOp& op, const PolyTriple& t, std::string* detail) {
  const auto& ar = op.context()->arith();
  auto product = [&](const PolyIdeal& a, const PolyIdeal& b) {
    std::vector<Poly> gens;
    for (const auto& x : a.generators)
      for (const auto& y : b.generators) gens.push_back(poly_mul(ar, x, y));
    return make_poly_ideal(op.context(), gens);
  };
  const PolyIdeal fg = product(t.f, t.g);
  const PolyIdeal fh = product(t.f, t.h);
  for (const auto& z : fg.generators)
    if (!op.member(RationalFunction::of(z), fh)) {
      if (detail) *detail = format_poly(*op.context(), z) + " in FG lies outside (FH)^*";
      return false;
    }
  for (const auto& z : t.g.generators)
    if (!op.member(RationalFunction::of(z), t.h)) {
      if (detail) *detail = format_poly(*op.context(), z) + " in G lies outside H^*";
      return true;
    }
  if (detail) *detail = "G^* is contained in H^*";
  return false;
}

}  // namespace semistar
