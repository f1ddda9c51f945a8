#include "semistar/domain.hpp"

#include <algorithm>

namespace semistar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AllZeroGenerators: return "AllZeroGenerators";
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnsupportedRank: return "UnsupportedRank";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::UnknownOverring: return "UnknownOverring";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::InfiniteSpectrum: return "InfiniteSpectrum";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::TrivialStar: return "TrivialStar";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

const OverringSpec& DomainContext::overring(std::string_view name) const {
  for (const auto& t : overrings())
    if (t.name == name) return t;
  throw Error(ErrorCode::UnknownOverring, std::string(name));
}

std::vector<Module> DomainContext::integral_window_ideals() const {
  std::vector<Module> out;
  for (auto& m : window_ideals())
    if (is_integral(m)) out.push_back(std::move(m));
  return out;
}

bool DomainContext::same_on_window(const Module& a, const Module& b) const {
  for (const auto& x : window_elements())
    if (contains(a, x) != contains(b, x)) return false;
  return true;
}

bool DomainContext::included_on_window(const Module& a, const Module& b) const {
  for (const auto& x : window_elements())
    if (contains(a, x) && !contains(b, x)) return false;
  return true;
}

std::optional<FracIdeal> ClosureValue::presentation() const {
  if (!exact) return std::nullopt;
  auto gens = ctx->generators(module);
  if (!gens) return std::nullopt;
  return FracIdeal{ctx, *gens, module};
}

namespace {

void require_same(const ContextPtr& a, const ContextPtr& b) {
  if (a != b) throw Error(ErrorCode::BackendMismatch, "operands belong to different backends");
}

}  // namespace

bool same_closure(const ClosureValue& a, const ClosureValue& b) {
  require_same(a.ctx, b.ctx);
  if (a.exact && b.exact) return a.module == b.module;
  return a.ctx->same_on_window(a.module, b.module);
}

bool closure_leq(const ClosureValue& a, const ClosureValue& b) {
  require_same(a.ctx, b.ctx);
  if (a.exact && b.exact) return a.ctx->leq(a.module, b.module);
  return a.ctx->included_on_window(a.module, b.module);
}

FracIdeal normalize(const std::vector<Element>& gens, const ContextPtr& ctx) {
  if (gens.empty() || std::all_of(gens.begin(), gens.end(), [](const Element& g) { return g.is_zero(); }))
    throw Error(ErrorCode::AllZeroGenerators, "a fractional ideal needs a nonzero generator");
  return make_frac_ideal(ctx->span(gens), ctx);
}

FracIdeal make_frac_ideal(const Module& m, const ContextPtr& ctx) {
  auto gens = ctx->generators(m);
  if (!gens) throw Error(ErrorCode::InvalidArgument, "module is not finitely generated: " + ctx->format(m));
  return FracIdeal{ctx, std::move(*gens), m};
}

FracIdeal ideal_add(const FracIdeal& e, const FracIdeal& f) {
  require_same(e.ctx, f.ctx);
  return make_frac_ideal(e.ctx->add(e.module, f.module), e.ctx);
}

FracIdeal ideal_mul(const FracIdeal& e, const FracIdeal& f) {
  require_same(e.ctx, f.ctx);
  return make_frac_ideal(e.ctx->mul(e.module, f.module), e.ctx);
}

ClosureValue ideal_intersect(const FracIdeal& e, const FracIdeal& f) {
  require_same(e.ctx, f.ctx);
  return {e.ctx, e.ctx->intersect(e.module, f.module), true, "intersect"};
}

ClosureValue ideal_colon(const FracIdeal& e, const FracIdeal& f) {
  require_same(e.ctx, f.ctx);
  return {e.ctx, e.ctx->colon(e.module, f.module), true, "colon"};
}

bool element_in(const Element& x, const FracIdeal& e) {
  e.ctx->check_precision(x);
  return e.ctx->contains(e.module, x);
}

bool element_in(const Element& x, const ClosureValue& c) {
  c.ctx->check_precision(x);
  return c.contains(x);
}

}  // namespace semistar
