#include <algorithm>
#include <bit>
#include <sstream>

#include "lattice.hpp"
#include "semistar/backends.hpp"

namespace semistar {

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int checked_order(int q, int m) {
  if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, "PVD base field size must be prime");
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "PVD extension degree must be at least 2");
  long long order = 1;
  for (int i = 0; i < m; ++i) order *= q;
  if (order > 64) throw Error(ErrorCode::InvalidArgument, "PVD residue field larger than 64 elements");
  return static_cast<int>(order);
}

constexpr std::uint64_t bit(GaloisField::Code c) { return std::uint64_t{1} << c; }

template <class F>
void for_each_code(std::uint64_t mask, F&& f) {
  while (mask) {
    const auto c = static_cast<GaloisField::Code>(std::countr_zero(mask));
    f(c);
    mask &= mask - 1;
  }
}

}  // namespace

PvdContext::PvdContext(int q, int m, int low, int high)
    : DomainContext(ElementArith(std::make_shared<const GaloisField>(q, m))), q_(q), m_(m), low_(low), high_(high) {
  const int order = checked_order(q, m);
  if (low > 0 || high < 2 || high - low < 4)
    throw Error(ErrorCode::WindowTooSmall, "PVD window must contain [0, 2] and span at least 4 degrees");
  full_ = order == 64 ? ~std::uint64_t{0} : (bit(static_cast<GaloisField::Code>(order)) - 1);
  primes_ = {{"(0)", 0, Module::zero()}, {"M", 1, ideal(1, full_)}};
  overrings_ = {
      {"D", OverringKind::Self, false, true, -1},
      {"V", OverringKind::Valuation, true, false, -1},
      {"K", OverringKind::Field, true, true, -1},
      {"D_(0)", OverringKind::Localization, true, true, 0},
      {"D_M", OverringKind::Localization, false, true, 1},
  };
}

std::string PvdContext::name() const {
  return "PVD<F" + std::to_string(q_) + "+T*F" + std::to_string(q_) + "^" + std::to_string(m_) + "[[T]]>";
}

std::uint64_t PvdContext::base_field_space() const { return bit(static_cast<GaloisField::Code>(q_)) - 1; }

std::uint64_t PvdContext::span_of(std::uint64_t mask) const {
  const auto& f = arith().field();
  std::uint64_t s = bit(0);
  for_each_code(mask, [&](GaloisField::Code c) {
    if (s & bit(c)) return;
    std::uint64_t next = s;
    GaloisField::Code mult = c;
    for (int k = 1; k < q_; ++k) {
      for_each_code(s, [&](GaloisField::Code x) { next |= bit(f.add(x, mult)); });
      mult = f.add(mult, c);
    }
    s = next;
  });
  return s;
}

Module PvdContext::ideal(int degree, std::uint64_t subspace) const {
  const std::uint64_t w = span_of(subspace);
  if (w == bit(0)) return Module::proper(PvdIdeal{degree + 1, full_});
  return Module::proper(PvdIdeal{degree, w});
}

std::vector<std::uint64_t> PvdContext::subspaces() const {
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> frontier{bit(0)};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      for_each_code(full_ & ~s, [&](GaloisField::Code c) {
        const auto t = span_of(s | bit(c));
        if (std::find(found.begin(), found.end(), t) == found.end()) {
          found.push_back(t);
          next.push_back(t);
        }
      });
    }
    frontier = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](auto a, auto b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return found;
}

Module PvdContext::unit() const { return ideal(0, base_field_space()); }

Module PvdContext::span(const std::vector<Element>& gens) const {
  std::optional<int> n;
  for (const auto& g : gens)
    if (!g.is_zero() && (!n || g.value().major < *n)) n = g.value().major;
  if (!n) return Module::zero();
  std::uint64_t w = 0;
  for (const auto& g : gens)
    if (!g.is_zero() && g.value().major == *n) w |= bit(g.leading_coeff());
  return ideal(*n, w);
}

Module PvdContext::add(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_add(a, b)) return *t;
  const auto& x = a.as<PvdIdeal>();
  const auto& y = b.as<PvdIdeal>();
  if (x.degree != y.degree) return x.degree < y.degree ? a : b;
  return ideal(x.degree, x.subspace | y.subspace);
}

Module PvdContext::mul(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_mul(a, b)) return *t;
  const auto& x = a.as<PvdIdeal>();
  const auto& y = b.as<PvdIdeal>();
  const auto& f = arith().field();
  std::uint64_t w = 0;
  for_each_code(x.subspace, [&](GaloisField::Code u) {
    for_each_code(y.subspace, [&](GaloisField::Code v) { w |= bit(f.mul(u, v)); });
  });
  return ideal(x.degree + y.degree, w);
}

Module PvdContext::intersect(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_intersect(a, b)) return *t;
  const auto& x = a.as<PvdIdeal>();
  const auto& y = b.as<PvdIdeal>();
  if (x.degree != y.degree) return x.degree > y.degree ? a : b;
  return ideal(x.degree, x.subspace & y.subspace);
}

Module PvdContext::colon(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_colon(a, b)) return *t;
  const auto& x = a.as<PvdIdeal>();
  const auto& y = b.as<PvdIdeal>();
  const auto& f = arith().field();
  std::uint64_t w = 0;
  for_each_code(full_, [&](GaloisField::Code c) {
    bool ok = true;
    for_each_code(y.subspace, [&](GaloisField::Code v) { ok = ok && (x.subspace & bit(f.mul(c, v))); });
    if (ok) w |= bit(c);
  });
  return ideal(x.degree - y.degree, w);
}

bool PvdContext::contains(const Module& m, const Element& x) const {
  if (x.is_zero() || m.is_field()) return true;
  if (m.is_zero()) return false;
  const auto& body = m.as<PvdIdeal>();
  const int v = x.value().major;
  if (v != body.degree) return v > body.degree;
  return (body.subspace & bit(x.leading_coeff())) != 0;
}

bool PvdContext::leq(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_leq(a, b)) return *t;
  const auto& x = a.as<PvdIdeal>();
  const auto& y = b.as<PvdIdeal>();
  if (x.degree != y.degree) return x.degree > y.degree;
  return (x.subspace & ~y.subspace) == 0;
}

std::optional<std::vector<Element>> PvdContext::generators(const Module& m) const {
  if (!m.is_proper()) return std::nullopt;
  const auto& body = m.as<PvdIdeal>();
  std::vector<Element> out;
  std::uint64_t cur = bit(0);
  for_each_code(body.subspace, [&](GaloisField::Code c) {
    if (cur & bit(c)) return;
    out.push_back(Element::monomial(body.degree, c));
    cur = span_of(cur | bit(c));
  });
  return out;
}

std::string PvdContext::format(const Module& m) const {
  if (m.is_zero()) return "0";
  if (m.is_field()) return "K";
  const auto& body = m.as<PvdIdeal>();
  std::ostringstream os;
  os << "T^" << body.degree;
  if (body.subspace == full_) {
    os << "V";
  } else {
    os << "<";
    bool first = true;
    const auto gens_of_m = generators(m).value();
    for (const auto& g : gens_of_m) {
      os << (first ? "" : ",") << g.leading_coeff();
      first = false;
    }
    os << ">+T^" << body.degree + 1 << "V";
  }
  return os.str();
}

Module PvdContext::localize(const Module& m, std::size_t prime) const {
  if (prime >= primes_.size()) throw Error(ErrorCode::InvalidArgument, "prime index out of range");
  if (prime == 0) return m.is_zero() ? m : Module::field();
  return m;
}

Module PvdContext::extend(const Module& m, const OverringSpec& t) const {
  switch (t.kind) {
    case OverringKind::Self: return m;
    case OverringKind::Field: return m.is_zero() ? m : Module::field();
    case OverringKind::Localization: return localize(m, static_cast<std::size_t>(t.prime));
    case OverringKind::Valuation:
      if (!m.is_proper()) return m;
      return ideal(m.as<PvdIdeal>().degree, full_);
  }
  return m;
}

Exponent PvdContext::overring_value(const Element& x, const OverringSpec& t) const {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "value of zero");
  if (t.kind == OverringKind::Valuation) return {x.value().major, 0};
  if (t.kind == OverringKind::Field || (t.kind == OverringKind::Localization && t.prime == 0)) return {0, 0};
  throw Error(ErrorCode::InvalidArgument, t.name + " is not a valuation overring");
}

std::optional<GaloisField::Code> PvdContext::residue(const Element& x, const OverringSpec& t) const {
  if (t.kind != OverringKind::Valuation) return std::nullopt;
  if (x.is_zero()) return 0;
  const int v = x.value().major;
  if (v < 0) return std::nullopt;
  return v == 0 ? x.leading_coeff() : 0;
}

std::vector<OverringSpec> PvdContext::valuation_family() const { return {overring("V"), overring("K")}; }

std::vector<Element> PvdContext::window_elements() const {
  std::vector<Element> out;
  for (int k = low_; k <= high_; ++k)
    for_each_code(full_ & ~bit(0), [&](GaloisField::Code c) { out.push_back(Element::monomial(k, c)); });
  return out;
}

std::vector<Module> PvdContext::window_ideals() const {
  const auto spaces = subspaces();
  if (spaces.size() * static_cast<std::size_t>(high_ - low_ + 1) > 4096)
    throw Error(ErrorCode::EnumerationBudgetExceeded, "too many PVD window ideals");
  std::vector<Module> out;
  for (int n = low_; n <= high_; ++n)
    for (auto w : spaces) out.push_back(ideal(n, w));
  return out;
}

std::vector<Element> PvdContext::sample_scalars() const {
  const auto alpha = static_cast<GaloisField::Code>(q_);
  return {Element::monomial(1), Element::monomial(-1), Element::monomial(0, alpha), Element::monomial(2, alpha)};
}

std::vector<Module> PvdContext::fg_submodules(const Module& m) const {
  if (m.is_zero()) return {};
  if (m.is_field()) return {ideal(low_, full_)};
  return {m};
}

Module PvdContext::from_window_oracle(const std::function<bool(const Element&)>& pred) const {
  std::optional<int> n;
  std::uint64_t w = 0;
  bool all = true;
  for (const auto& x : window_elements()) {
    if (!pred(x)) {
      all = false;
      continue;
    }
    const int d = x.value().major;
    if (!n || d < *n) {
      n = d;
      w = 0;
    }
    if (d == *n) w |= bit(x.leading_coeff());
  }
  if (!n) return Module::zero();
  if (all) {
    // Everything in the window passed; K only if the oracle also accepts below it.
    try {
      if (pred(Element::monomial(low_ - 1))) return Module::field();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExceeded) throw;
    }
  }
  return ideal(*n, w);
}

void PvdContext::check_precision(const Element& x) const {
  for (const auto& t : x.terms())
    if (t.exponent.major < low_ || t.exponent.major > high_ || t.exponent.minor != 0)
      throw Error(ErrorCode::PrecisionExceeded, "T-degree " + std::to_string(t.exponent.major) +
                                                    " outside window [" + std::to_string(low_) + ", " +
                                                    std::to_string(high_) + "]");
}

ContextPtr make_pvd(int q, int m, int low, int high) { return std::make_shared<const PvdContext>(q, m, low, high); }

}  // namespace semistar
