#include <algorithm>
#include <numeric>
#include <sstream>

#include "lattice.hpp"
#include "semistar/backends.hpp"

namespace semistar {

namespace {

std::shared_ptr<const GaloisField> binary_field() {
  static const auto f = std::make_shared<const GaloisField>(2, 1);
  return f;
}

}  // namespace

NumericalSemigroupContext::NumericalSemigroupContext(std::vector<int> generators, SemigroupWindow window)
    : DomainContext(ElementArith(binary_field())), window_(window) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "semigroup needs generators");
  for (int g : generators)
    if (g <= 0) throw Error(ErrorCode::InvalidArgument, "semigroup generators must be positive");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  int g = 0;
  for (int s : generators) g = std::gcd(g, s);
  if (g != 1) throw Error(ErrorCode::NotCoprime, "semigroup generators have gcd " + std::to_string(g));
  if (window.ideal_max < 0 || window.element_margin < 1)
    throw Error(ErrorCode::InvalidArgument, "bad semigroup window");

  // Membership by dynamic programming until min(gens) consecutive members.
  std::vector<char> in{1};
  int run = 1;
  int last_gap = -1;
  const int smallest = generators.front();
  for (int n = 1; run < smallest; ++n) {
    bool member = false;
    for (int s : generators)
      if (s <= n && in[n - s]) member = true;
    in.push_back(member ? 1 : 0);
    if (member) {
      ++run;
    } else {
      run = 0;
      last_gap = n;
    }
  }
  conductor_ = last_gap + 1;
  for (int n = 1; n < conductor_; ++n)
    if (!in[n]) gaps_.push_back(n);

  // Keep only minimal generators of S.
  for (int s : generators) {
    bool redundant = false;
    for (int a = 1; a < s && !redundant; ++a)
      redundant = in_semigroup(a) && in_semigroup(s - a);
    if (!redundant) gens_.push_back(s);
  }
  max_gen_ = gens_.back();

  primes_.push_back({"(0)", 0, Module::zero()});
  std::vector<Element> mgens;
  for (int s : gens_) mgens.push_back(Element::monomial(s));
  primes_.push_back({"M", 1, span(mgens)});

  overrings_ = {
      {"D", OverringKind::Self, false, true, -1},
      {"K", OverringKind::Field, true, true, -1},
      {"k[[t]]", OverringKind::Valuation, true, conductor_ == 0, -1},
      {"D_(0)", OverringKind::Localization, true, true, 0},
      {"D_M", OverringKind::Localization, conductor_ == 0, true, 1},
  };
}

std::string NumericalSemigroupContext::name() const {
  std::ostringstream os;
  os << "NumSgp<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  os << ">";
  return os.str();
}

bool NumericalSemigroupContext::in_semigroup(int n) const {
  if (n < 0) return false;
  if (n >= conductor_) return true;
  return n == 0 || !std::binary_search(gaps_.begin(), gaps_.end(), n);
}

Module NumericalSemigroupContext::ideal_from(int min, const std::function<bool(int)>& member) const {
  SemigroupIdeal body{min, min + conductor_, {}};
  for (int n = min; n < body.threshold; ++n)
    if (n == min || member(n)) body.below.push_back(n);
  return Module::proper(std::move(body));
}

bool NumericalSemigroupContext::has(const Module& m, int n) const {
  if (m.is_zero()) return false;
  if (m.is_field()) return true;
  const auto& b = m.as<SemigroupIdeal>();
  if (n < b.min) return false;
  if (n >= b.threshold) return true;
  return std::binary_search(b.below.begin(), b.below.end(), n);
}

Module NumericalSemigroupContext::unit() const {
  return ideal_from(0, [this](int n) { return in_semigroup(n); });
}

Module NumericalSemigroupContext::span(const std::vector<Element>& gens) const {
  std::vector<int> exps;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_monomial())
      throw Error(ErrorCode::InvalidArgument, "semigroup backend handles monomial generators only");
    exps.push_back(g.value().major);
  }
  if (exps.empty()) return Module::zero();
  const int lo = *std::min_element(exps.begin(), exps.end());
  return ideal_from(lo, [&](int n) {
    return std::any_of(exps.begin(), exps.end(), [&](int e) { return in_semigroup(n - e); });
  });
}

Module NumericalSemigroupContext::add(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_add(a, b)) return *t;
  const int lo = std::min(a.as<SemigroupIdeal>().min, b.as<SemigroupIdeal>().min);
  return ideal_from(lo, [&](int n) { return has(a, n) || has(b, n); });
}

Module NumericalSemigroupContext::mul(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_mul(a, b)) return *t;
  const int ma = a.as<SemigroupIdeal>().min;
  const int mb = b.as<SemigroupIdeal>().min;
  return ideal_from(ma + mb, [&](int n) {
    for (int i = ma; i <= n - mb; ++i)
      if (has(a, i) && has(b, n - i)) return true;
    return false;
  });
}

Module NumericalSemigroupContext::intersect(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_intersect(a, b)) return *t;
  int lo = std::max(a.as<SemigroupIdeal>().min, b.as<SemigroupIdeal>().min);
  while (!(has(a, lo) && has(b, lo))) ++lo;
  return ideal_from(lo, [&](int n) { return has(a, n) && has(b, n); });
}

Module NumericalSemigroupContext::colon(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_colon(a, b)) return *t;
  const auto& ba = a.as<SemigroupIdeal>();
  const auto& bb = b.as<SemigroupIdeal>();
  std::vector<int> bgens;
  const auto gens_of_b = generators(b).value();
  for (const auto& g : gens_of_b) bgens.push_back(g.value().major);
  auto member = [&](int z) {
    return std::all_of(bgens.begin(), bgens.end(), [&](int y) { return has(a, z + y); });
  };
  int lo = ba.min - bb.min;
  while (!member(lo)) ++lo;
  return ideal_from(lo, member);
}

bool NumericalSemigroupContext::contains(const Module& m, const Element& x) const {
  if (x.is_zero() || m.is_field()) return true;
  if (m.is_zero()) return false;
  return std::all_of(x.terms().begin(), x.terms().end(),
                     [&](const Term& t) { return t.exponent.minor == 0 && has(m, t.exponent.major); });
}

bool NumericalSemigroupContext::leq(const Module& a, const Module& b) const {
  if (auto t = detail::trivial_leq(a, b)) return *t;
  const auto& ba = a.as<SemigroupIdeal>();
  const int top = std::max(ba.threshold, b.as<SemigroupIdeal>().threshold);
  for (int n = ba.min; n < top; ++n)
    if (has(a, n) && !has(b, n)) return false;
  return true;
}

std::optional<std::vector<Element>> NumericalSemigroupContext::generators(const Module& m) const {
  if (!m.is_proper()) return std::nullopt;
  const auto& body = m.as<SemigroupIdeal>();
  std::vector<Element> out;
  for (int n = body.min; n < body.threshold + max_gen_; ++n) {
    if (!has(m, n)) continue;
    if (std::none_of(gens_.begin(), gens_.end(), [&](int s) { return has(m, n - s); }))
      out.push_back(Element::monomial(n));
  }
  return out;
}

std::string NumericalSemigroupContext::format(const Module& m) const {
  if (m.is_zero()) return "0";
  if (m.is_field()) return "K";
  std::ostringstream os;
  os << "{";
  bool first = true;
  const auto gens_of_m = generators(m).value();
  for (const auto& g : gens_of_m) {
    os << (first ? "" : ",") << g.value().major;
    first = false;
  }
  os << "}";
  return os.str();
}

Module NumericalSemigroupContext::localize(const Module& m, std::size_t prime) const {
  if (prime >= primes_.size()) throw Error(ErrorCode::InvalidArgument, "prime index out of range");
  if (prime == 0) return m.is_zero() ? m : Module::field();
  return m;
}

Module NumericalSemigroupContext::extend(const Module& m, const OverringSpec& t) const {
  switch (t.kind) {
    case OverringKind::Self: return m;
    case OverringKind::Field: return m.is_zero() ? m : Module::field();
    case OverringKind::Localization: return localize(m, static_cast<std::size_t>(t.prime));
    case OverringKind::Valuation:
      if (!m.is_proper()) return m;
      return ideal_from(m.as<SemigroupIdeal>().min, [](int) { return true; });
  }
  return m;
}

Exponent NumericalSemigroupContext::overring_value(const Element& x, const OverringSpec& t) const {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "value of zero");
  if (t.kind == OverringKind::Field || (t.kind == OverringKind::Localization && t.prime == 0)) return {0, 0};
  if (t.kind == OverringKind::Valuation) return {x.value().major, 0};
  throw Error(ErrorCode::InvalidArgument, t.name + " is not a valuation overring");
}

std::optional<GaloisField::Code> NumericalSemigroupContext::residue(const Element& x,
                                                                    const OverringSpec& t) const {
  if (t.kind != OverringKind::Valuation) return std::nullopt;
  if (x.is_zero()) return 0;
  if (x.value().major < 0) return std::nullopt;
  for (const auto& term : x.terms())
    if (term.exponent == Exponent{0, 0}) return term.coeff;
  return 0;
}

std::vector<OverringSpec> NumericalSemigroupContext::valuation_family() const { return {overring("k[[t]]")}; }

std::vector<Element> NumericalSemigroupContext::window_elements() const {
  std::vector<Element> out;
  for (int n = -window_.element_margin; n <= conductor_ + window_.element_margin; ++n)
    out.push_back(Element::monomial(n));
  return out;
}

std::vector<Module> NumericalSemigroupContext::window_ideals() const {
  std::vector<Module> out;
  for (int m = 0; m <= window_.ideal_max; ++m) {
    std::vector<int> cand;
    for (int n = m + 1; n < m + conductor_ && n <= window_.ideal_max; ++n)
      if (!in_semigroup(n - m)) cand.push_back(n);
    if (cand.size() > 12) throw Error(ErrorCode::EnumerationBudgetExceeded, "too many window ideals");
    for (std::uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
      std::vector<Element> gens{Element::monomial(m)};
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (mask >> i & 1u) gens.push_back(Element::monomial(cand[i]));
      Module id = span(gens);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
    }
  }
  return out;
}

std::vector<Element> NumericalSemigroupContext::sample_scalars() const {
  return {Element::monomial(-1), Element::monomial(1), Element::monomial(2), Element::monomial(-3)};
}

std::vector<Module> NumericalSemigroupContext::fg_submodules(const Module& m) const {
  if (m.is_zero()) return {};
  if (m.is_field()) return {ideal_from(-window_.element_margin, [](int) { return true; })};
  return {m};
}

Module NumericalSemigroupContext::from_window_oracle(const std::function<bool(const Element&)>& pred) const {
  const int lo = -window_.element_margin;
  const int hi = conductor_ + window_.element_margin;
  std::vector<char> in;
  for (int n = lo; n <= hi; ++n) in.push_back(pred(Element::monomial(n)) ? 1 : 0);
  if (std::none_of(in.begin(), in.end(), [](char c) { return c != 0; })) return Module::zero();
  if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) return Module::field();
  int first = lo;
  while (!in[first - lo]) ++first;
  return ideal_from(first, [&](int n) { return n > hi || in[n - lo]; });
}

ContextPtr make_numsgp(const std::vector<int>& generators, SemigroupWindow window) {
  return std::make_shared<const NumericalSemigroupContext>(generators, window);
}

std::vector<PrimeSpec> prime_spectrum(const DomainContext& ctx) { return ctx.primes(); }

}  // namespace semistar
