#include <algorithm>

#include "semistar/poly.hpp"

namespace semistar {

namespace {

Poly normalized(std::vector<Element> c, int lo) {
  std::size_t first = 0;
  while (first < c.size() && c[first].is_zero()) ++first;
  if (first == c.size()) return {};
  std::size_t last = c.size();
  while (c[last - 1].is_zero()) --last;
  Poly p;
  p.lo = lo + static_cast<int>(first);
  p.coeffs.assign(std::make_move_iterator(c.begin() + static_cast<std::ptrdiff_t>(first)),
                  std::make_move_iterator(c.begin() + static_cast<std::ptrdiff_t>(last)));
  return p;
}

}  // namespace

Poly Poly::constant(const Element& c) { return normalized({c}, 0); }
Poly Poly::monomial(const Element& c, int degree) { return normalized({c}, degree); }
Poly Poly::from_coeffs(std::vector<Element> coeffs, int lo) { return normalized(std::move(coeffs), lo); }

Element Poly::coeff(int k) const {
  if (is_zero() || k < lo || k > degree()) return {};
  return coeffs[static_cast<std::size_t>(k - lo)];
}

Poly poly_add(const ElementArith& ar, const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.lo, b.lo);
  const int hi = std::max(a.degree(), b.degree());
  std::vector<Element> c;
  for (int k = lo; k <= hi; ++k) c.push_back(ar.add(a.coeff(k), b.coeff(k)));
  return normalized(std::move(c), lo);
}

Poly poly_sub(const ElementArith& ar, const Poly& a, const Poly& b) {
  std::vector<Element> neg;
  for (const auto& c : b.coeffs) neg.push_back(ar.neg(c));
  return poly_add(ar, a, normalized(std::move(neg), b.lo));
}

Poly poly_mul(const ElementArith& ar, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] = ar.add(c[i + j], ar.mul(a.coeffs[i], b.coeffs[j]));
  return normalized(std::move(c), a.lo + b.lo);
}

Poly poly_scale(const ElementArith& ar, const Poly& a, const Element& x) {
  std::vector<Element> c;
  for (const auto& e : a.coeffs) c.push_back(ar.mul(e, x));
  return normalized(std::move(c), a.lo);
}

std::optional<Poly> poly_divide(const ElementArith& ar, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return Poly{};
  const Element& lead = b.coeffs.back();
  if (!lead.is_monomial())
    throw Error(ErrorCode::Undecided, "division needs a monomial leading coefficient");
  const Element inv = ar.inverse(lead);
  const int qlo = a.lo - b.lo;
  Poly rem = a;
  Poly quot;
  while (!rem.is_zero() && rem.degree() - b.degree() >= qlo) {
    const int shift = rem.degree() - b.degree();
    const Poly term = Poly::monomial(ar.mul(rem.coeffs.back(), inv), shift);
    const Poly before = rem;
    rem = poly_sub(ar, rem, poly_mul(ar, term, b));
    quot = poly_add(ar, quot, term);
    if (!rem.is_zero() && rem.degree() >= before.degree()) return std::nullopt;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

std::string format_poly(const DomainContext& ctx, const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i].is_zero()) continue;
    const int k = p.lo + static_cast<int>(i);
    if (!out.empty()) out += " + ";
    std::string c = ctx.arith().format(p.coeffs[i], ctx.rank());
    if (p.coeffs[i].terms().size() > 1) c = "(" + c + ")";
    out += c;
    if (k == 1) out += "*X";
    if (k != 0 && k != 1) out += "*X^" + std::to_string(k);
  }
  return out;
}

RationalFunction RationalFunction::of(Poly p) {
  return {std::move(p), Poly::constant(Element::monomial(Exponent{0, 0}))};
}

std::optional<Poly> as_laurent(const ElementArith& ar, const RationalFunction& z) {
  if (z.den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero denominator");
  return poly_divide(ar, z.num, z.den);
}

std::string format_rational(const DomainContext& ctx, const RationalFunction& z) {
  const std::string n = format_poly(ctx, z.num);
  if (z.den == Poly::constant(ctx.arith().one())) return n;
  return "(" + n + ")/(" + format_poly(ctx, z.den) + ")";
}

Module GradedIdeal::level(int k) const {
  if (levels.empty() || k < lo) return Module::zero();
  if (k > top()) return levels.back();
  return levels[static_cast<std::size_t>(k - lo)];
}

GradedIdeal graded_normalize(const DomainContext& ctx, GradedIdeal g) {
  (void)ctx;
  std::size_t first = 0;
  while (first < g.levels.size() && g.levels[first].is_zero()) ++first;
  if (first == g.levels.size()) return {};
  g.levels.erase(g.levels.begin(), g.levels.begin() + static_cast<std::ptrdiff_t>(first));
  g.lo += static_cast<int>(first);
  while (g.levels.size() > 1 && g.levels[g.levels.size() - 2] == g.levels.back()) g.levels.pop_back();
  return g;
}

GradedIdeal graded_extended(const Module& e) {
  if (e.is_zero()) return {};
  return {0, {e}};
}

namespace {

template <class F>
GradedIdeal levelwise(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b, F&& f) {
  if (a.levels.empty() && b.levels.empty()) return {};
  const int lo = a.levels.empty() ? b.lo : b.levels.empty() ? a.lo : std::min(a.lo, b.lo);
  const int hi = std::max(a.levels.empty() ? lo : a.top(), b.levels.empty() ? lo : b.top());
  GradedIdeal out{lo, {}};
  for (int k = lo; k <= hi; ++k) out.levels.push_back(f(a.level(k), b.level(k)));
  return graded_normalize(ctx, std::move(out));
}

}  // namespace

GradedIdeal graded_add(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b) {
  return levelwise(ctx, a, b, [&](const Module& x, const Module& y) { return ctx.add(x, y); });
}

GradedIdeal graded_intersect(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b) {
  return levelwise(ctx, a, b, [&](const Module& x, const Module& y) { return ctx.intersect(x, y); });
}

GradedIdeal graded_mul(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b) {
  if (a.levels.empty() || b.levels.empty()) return {};
  GradedIdeal out{a.lo + b.lo, {}};
  for (int k = a.lo + b.lo; k <= a.top() + b.top(); ++k) {
    Module acc = Module::zero();
    for (int i = a.lo; i <= k - b.lo; ++i) acc = ctx.add(acc, ctx.mul(a.level(i), b.level(k - i)));
    out.levels.push_back(acc);
  }
  return graded_normalize(ctx, std::move(out));
}

GradedIdeal graded_colon(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b) {
  if (b.levels.empty()) throw Error(ErrorCode::InvalidArgument, "colon by the zero ideal of D[X]");
  if (a.levels.empty()) return {};
  GradedIdeal out{a.lo - b.lo, {}};
  for (int k = a.lo - b.lo; k <= a.top() - b.lo; ++k) {
    Module acc = Module::field();
    for (int i = b.lo; i <= b.top(); ++i) acc = ctx.intersect(acc, ctx.colon(a.level(k + i), b.level(i)));
    out.levels.push_back(acc);
  }
  return graded_normalize(ctx, std::move(out));
}

GradedIdeal graded_extend(const DomainContext& ctx, const GradedIdeal& a, const OverringSpec& t) {
  GradedIdeal out = a;
  for (auto& m : out.levels) m = ctx.extend(m, t);
  return graded_normalize(ctx, std::move(out));
}

bool graded_leq(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b) {
  if (a.levels.empty()) return true;
  const int hi = std::max(a.top(), b.levels.empty() ? a.top() : b.top());
  for (int k = a.lo; k <= hi; ++k)
    if (!ctx.leq(a.level(k), b.level(k))) return false;
  return true;
}

bool graded_contains(const DomainContext& ctx, const GradedIdeal& a, const Poly& z) {
  for (std::size_t i = 0; i < z.coeffs.size(); ++i) {
    const Element& c = z.coeffs[i];
    if (!c.is_zero() && !ctx.contains(a.level(z.lo + static_cast<int>(i)), c)) return false;
  }
  return true;
}

std::string format_graded(const DomainContext& ctx, const GradedIdeal& a) {
  if (a.levels.empty()) return "0";
  std::string out;
  for (int k = a.lo; k <= a.top(); ++k) {
    if (!out.empty()) out += " + ";
    out += ctx.format(a.level(k)) + "*X^" + std::to_string(k);
    if (k == a.top()) out += "[X]";
  }
  return out;
}

PolyIdeal make_poly_ideal(const ContextPtr& ctx, std::vector<Poly> generators) {
  generators.erase(std::remove_if(generators.begin(), generators.end(), [](const Poly& p) { return p.is_zero(); }),
                   generators.end());
  if (generators.empty()) throw Error(ErrorCode::AllZeroGenerators, "an ideal of D[X] needs a nonzero generator");
  PolyIdeal a{ctx, std::move(generators), std::nullopt, std::nullopt};
  if (std::all_of(a.generators.begin(), a.generators.end(), [](const Poly& p) { return p.is_x_monomial(); })) {
    GradedIdeal g;
    for (const auto& p : a.generators) {
      GradedIdeal one{p.lo, {ctx->span({p.coeffs.front()})}};
      g = graded_add(*ctx, g, one);
    }
    a.graded = std::move(g);
  }
  return a;
}

PolyIdeal extended_ideal(const ContextPtr& ctx, const Module& e) {
  if (e.is_zero()) throw Error(ErrorCode::AllZeroGenerators, "E[X] needs a nonzero E");
  PolyIdeal a{ctx, {}, graded_extended(e), e};
  if (auto gens = ctx->generators(e))
    for (const auto& g : *gens) a.generators.push_back(Poly::constant(g));
  return a;
}

PolyIdeal graded_poly_ideal(const ContextPtr& ctx, const GradedIdeal& g) {
  PolyIdeal a{ctx, {}, graded_normalize(*ctx, g), std::nullopt};
  for (int k = g.lo; k <= g.top(); ++k)
    if (auto gens = ctx->generators(g.level(k)))
      for (const auto& x : *gens) a.generators.push_back(Poly::monomial(x, k));
  return a;
}

std::string format_poly_ideal(const PolyIdeal& a) {
  if (a.extended_from) return a.ctx->format(*a.extended_from) + "[X]";
  std::string out = "(";
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    out += (i ? ", " : "") + format_poly(*a.ctx, a.generators[i]);
  if (a.generators.empty() && a.graded) out += format_graded(*a.ctx, *a.graded);
  return out + ")";
}

PolyOp::PolyOp(std::string name, ContextPtr ctx, Member member)
    : name_(std::move(name)), ctx_(std::move(ctx)), member_(std::move(member)) {}

bool PolyOp::member(const RationalFunction& z, const PolyIdeal& a) const {
  if (a.ctx != ctx_) throw Error(ErrorCode::BackendMismatch, "ideal and operation live on different backends");
  if (z.is_zero()) return true;
  return member_(z, a);
}

Module content_module(const DomainContext& ctx, const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "content of the zero polynomial");
  return ctx.span(f.coeffs);
}

FracIdeal content(const ContextPtr& ctx, const Poly& f) { return make_frac_ideal(content_module(*ctx, f), ctx); }

}  // namespace semistar
