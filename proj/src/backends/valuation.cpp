#include <algorithm>
#include <climits>
#include <sstream>

#include "lattice.hpp"
#include "semistar/backends.hpp"

namespace semistar {

namespace {

// Cuts are totally ordered by inclusion; a larger key is a smaller set.
std::pair<int, long long> key(const ValueCut& c) {
  if (c.kind == ValueCut::Kind::Closed) return {c.bound.major, c.bound.minor};
  return {c.bound.major + 1, LLONG_MIN};
}

std::string exponent_text(Exponent g, int rank) {
  if (rank == 1) return std::to_string(g.major);
  return "(" + std::to_string(g.major) + "," + std::to_string(g.minor) + ")";
}

}  // namespace

ValuationContext::ValuationContext(int rank, ValuationWindow window)
    : DomainContext(ElementArith(std::make_shared<const GaloisField>(2, 1))), rank_(rank), window_(window) {
  if (rank != 1 && rank != 2) throw Error(ErrorCode::UnsupportedRank, "valuation rank must be 1 or 2");
  if (window.ideal_bound < 0 || window.element_bound < window.ideal_bound)
    throw Error(ErrorCode::InvalidArgument, "bad valuation window");
  primes_.push_back({"(0)", 0, Module::zero()});
  overrings_ = {
      {"V", OverringKind::Self, true, true, -1},
      {"K", OverringKind::Field, true, true, -1},
      {"V_(0)", OverringKind::Localization, true, true, 0},
  };
  if (rank == 2) {
    primes_.push_back({"P", 1, limit(0)});
    primes_.push_back({"M", 2, closed({0, 1})});
    overrings_.push_back({"V_P", OverringKind::Localization, true, true, 1});
    overrings_.push_back({"V_M", OverringKind::Localization, true, true, 2});
  } else {
    primes_.push_back({"M", 1, closed({1, 0})});
    overrings_.push_back({"V_M", OverringKind::Localization, true, true, 1});
  }
}

std::string ValuationContext::name() const { return rank_ == 1 ? "Valuation<Z>" : "Valuation<Z^2>"; }

Module ValuationContext::unit() const { return closed({0, 0}); }

Module ValuationContext::span(const std::vector<Element>& gens) const {
  std::optional<Exponent> best;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const Exponent v = g.value();
    if (!best || v < *best) best = v;
  }
  if (!best) return Module::zero();
  return closed(*best);
}

Module ValuationContext::add(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_add(a, b)) return *t;
  return key(a.as<ValueCut>()) <= key(b.as<ValueCut>()) ? a : b;
}

Module ValuationContext::intersect(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_intersect(a, b)) return *t;
  return key(a.as<ValueCut>()) >= key(b.as<ValueCut>()) ? a : b;
}

Module ValuationContext::mul(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_mul(a, b)) return *t;
  const auto& x = a.as<ValueCut>();
  const auto& y = b.as<ValueCut>();
  using K = ValueCut::Kind;
  if (x.kind == K::Closed && y.kind == K::Closed) return closed(x.bound + y.bound);
  if (x.kind == K::Limit && y.kind == K::Limit) return limit(x.bound.major + y.bound.major + 1);
  const auto& c = x.kind == K::Closed ? x : y;
  const auto& l = x.kind == K::Closed ? y : x;
  return limit(l.bound.major + c.bound.major);
}

Module ValuationContext::colon(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_colon(a, b)) return *t;
  const auto& x = a.as<ValueCut>();
  const auto& y = b.as<ValueCut>();
  using K = ValueCut::Kind;
  if (x.kind == K::Closed && y.kind == K::Closed) return closed(x.bound - y.bound);
  if (x.kind == K::Limit && y.kind == K::Closed) return limit(x.bound.major - y.bound.major);
  if (x.kind == K::Closed) return limit(x.bound.major - y.bound.major - 1);
  return limit(x.bound.major - y.bound.major - 1);
}

bool ValuationContext::contains(const Module& m, const Element& x) const {
  if (x.is_zero() || m.is_field()) return true;
  if (m.is_zero()) return false;
  const auto& c = m.as<ValueCut>();
  const Exponent v = x.value();
  if (c.kind == ValueCut::Kind::Closed) return v >= c.bound;
  return v.major > c.bound.major;
}

bool ValuationContext::leq(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_leq(a, b)) return *t;
  return key(a.as<ValueCut>()) >= key(b.as<ValueCut>());
}

std::optional<std::vector<Element>> ValuationContext::generators(const Module& m) const {
  if (!m.is_proper()) return std::nullopt;
  const auto& c = m.as<ValueCut>();
  if (c.kind == ValueCut::Kind::Limit) return std::nullopt;
  return std::vector<Element>{Element::monomial(c.bound)};
}

std::string ValuationContext::format(const Module& m) const {
  if (m.is_zero()) return "0";
  if (m.is_field()) return "K";
  const auto& c = m.as<ValueCut>();
  if (c.kind == ValueCut::Kind::Closed) return "t^" + exponent_text(c.bound, rank_) + "V";
  return "{v > (" + std::to_string(c.bound.major) + ",*)}";
}

Module ValuationContext::localize(const Module& m, std::size_t prime) const {
  if (prime >= primes_.size()) throw Error(ErrorCode::InvalidArgument, "prime index out of range");
  if (m.is_zero() || prime + 1 == primes_.size()) return m;
  if (prime == 0 || m.is_field()) return Module::field();
  const auto& c = m.as<ValueCut>();
  if (c.kind == ValueCut::Kind::Closed) return limit(c.bound.major - 1);
  return m;
}

Module ValuationContext::extend(const Module& m, const OverringSpec& t) const {
  switch (t.kind) {
    case OverringKind::Self: return m;
    case OverringKind::Field: return m.is_zero() ? m : Module::field();
    case OverringKind::Localization: return localize(m, static_cast<std::size_t>(t.prime));
    case OverringKind::Valuation: return m;
  }
  return m;
}

Exponent ValuationContext::overring_value(const Element& x, const OverringSpec& t) const {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "value of zero");
  const Exponent v = x.value();
  if (t.kind == OverringKind::Field || (t.kind == OverringKind::Localization && t.prime == 0)) return {0, 0};
  if (t.kind == OverringKind::Localization && t.prime == 1 && rank_ == 2) return {v.major, 0};
  return v;
}

std::optional<GaloisField::Code> ValuationContext::residue(const Element& x, const OverringSpec& t) const {
  const bool top = t.kind == OverringKind::Self ||
                   (t.kind == OverringKind::Localization && t.prime + 1 == static_cast<int>(primes_.size()));
  if (!top) return std::nullopt;
  if (x.is_zero()) return 0;
  const Exponent v = x.value();
  if (v < Exponent{0, 0}) return std::nullopt;
  return v == Exponent{0, 0} ? x.leading_coeff() : 0;
}

std::vector<OverringSpec> ValuationContext::valuation_family() const { return {overring("V")}; }

std::vector<Element> ValuationContext::window_elements() const {
  const int b = window_.element_bound;
  std::vector<Element> out;
  for (int i = -b; i <= b; ++i) {
    if (rank_ == 1) {
      out.push_back(Element::monomial(i));
      continue;
    }
    for (int j = -b; j <= b; ++j) out.push_back(Element::monomial(Exponent{i, j}));
  }
  return out;
}

std::vector<Module> ValuationContext::window_ideals() const {
  const int b = window_.ideal_bound;
  std::vector<Module> out;
  for (int i = -b; i <= b; ++i) {
    if (rank_ == 1) {
      out.push_back(closed({i, 0}));
      continue;
    }
    for (int j = -b; j <= b; ++j) out.push_back(closed({i, j}));
  }
  return out;
}

std::vector<Module> ValuationContext::colon_ideals() const {
  const int r = 2 * window_.element_bound;
  std::vector<Module> out;
  for (int i = 0; i <= r; ++i) {
    if (rank_ == 1) {
      out.push_back(closed({i, 0}));
      continue;
    }
    for (int j = i == 0 ? 0 : -r; j <= r; ++j) out.push_back(closed({i, j}));
  }
  return out;
}

std::vector<Element> ValuationContext::sample_scalars() const {
  if (rank_ == 1) return {Element::monomial(1), Element::monomial(-1), Element::monomial(2)};
  return {Element::monomial(Exponent{1, 0}), Element::monomial(Exponent{0, 1}), Element::monomial(Exponent{-1, 2}),
          Element::monomial(Exponent{0, -1})};
}

std::vector<Module> ValuationContext::fg_submodules(const Module& m) const {
  const int b = window_.element_bound;
  if (m.is_zero()) return {};
  if (m.is_field()) return {closed({-b, rank_ == 2 ? -b : 0})};
  const auto& c = m.as<ValueCut>();
  if (c.kind == ValueCut::Kind::Closed) return {m};
  return {closed({c.bound.major + 1, -b})};
}

Module ValuationContext::from_window_oracle(const std::function<bool(const Element&)>& pred) const {
  std::optional<Exponent> best;
  bool all = true;
  for (const auto& x : window_elements()) {
    if (pred(x)) {
      if (!best || x.value() < *best) best = x.value();
    } else {
      all = false;
    }
  }
  if (!best) return Module::zero();
  if (all) return Module::field();
  if (rank_ == 2 && best->minor == -window_.element_bound) return limit(best->major - 1);
  return closed(*best);
}

ContextPtr make_valuation(int rank, ValuationWindow window) {
  return std::make_shared<const ValuationContext>(rank, window);
}

}  // namespace semistar
