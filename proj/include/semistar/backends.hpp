#ifndef SEMISTAR_BACKENDS_HPP
#define SEMISTAR_BACKENDS_HPP

#include <memory>
#include <vector>

#include "semistar/domain.hpp"

namespace semistar {

struct SemigroupWindow {
  int ideal_max = 12;       // enumerated ideals have generators in [0, ideal_max]
  int element_margin = 40;  // membership window is [-margin, conductor + margin]
};

// D = k[[S]] for a numerical semigroup S, restricted to monomial ideals.
class NumericalSemigroupContext final : public DomainContext {
 public:
  NumericalSemigroupContext(std::vector<int> generators, SemigroupWindow window);

  BackendKind kind() const override { return BackendKind::NumericalSemigroup; }
  std::string name() const override;

  const std::vector<int>& semigroup_generators() const { return gens_; }
  const std::vector<int>& gaps() const { return gaps_; }
  int frobenius() const { return conductor_ - 1; }
  int conductor() const { return conductor_; }
  bool in_semigroup(int n) const;

  Module unit() const override;
  Module span(const std::vector<Element>& gens) const override;
  Module add(const Module& a, const Module& b) const override;
  Module mul(const Module& a, const Module& b) const override;
  Module intersect(const Module& a, const Module& b) const override;
  Module colon(const Module& a, const Module& b) const override;
  bool contains(const Module& m, const Element& x) const override;
  bool leq(const Module& a, const Module& b) const override;
  std::optional<std::vector<Element>> generators(const Module& m) const override;
  std::string format(const Module& m) const override;

  const std::vector<PrimeSpec>& primes() const override { return primes_; }
  Module localize(const Module& m, std::size_t prime) const override;
  const std::vector<OverringSpec>& overrings() const override { return overrings_; }
  Module extend(const Module& m, const OverringSpec& t) const override;
  Exponent overring_value(const Element& x, const OverringSpec& t) const override;
  std::optional<GaloisField::Code> residue(const Element& x, const OverringSpec& t) const override;
  std::vector<OverringSpec> valuation_family() const override;

  std::vector<Element> window_elements() const override;
  std::vector<Module> window_ideals() const override;
  std::vector<Element> sample_scalars() const override;
  std::vector<Module> fg_submodules(const Module& m) const override;
  Module from_window_oracle(const std::function<bool(const Element&)>& pred) const override;

  // Ideal with least element `min` whose members are decided by `member`
  // on [min, min + conductor).
  Module ideal_from(int min, const std::function<bool(int)>& member) const;
  bool has(const Module& m, int n) const;

 private:
  std::vector<int> gens_;
  std::vector<int> gaps_;
  int conductor_ = 0;
  int max_gen_ = 1;
  SemigroupWindow window_;
  std::vector<PrimeSpec> primes_;
  std::vector<OverringSpec> overrings_;
};

struct ValuationWindow {
  int ideal_bound = 2;    // enumerated ideals Closed(g) with |g_i| <= ideal_bound
  int element_bound = 6;  // membership window: values with |v_i| <= element_bound
};

// Valuation domain with value group Z or Z^2 (lexicographic).
class ValuationContext final : public DomainContext {
 public:
  ValuationContext(int rank, ValuationWindow window);

  BackendKind kind() const override { return BackendKind::Valuation; }
  std::string name() const override;
  int rank() const override { return rank_; }

  Module unit() const override;
  Module span(const std::vector<Element>& gens) const override;
  Module add(const Module& a, const Module& b) const override;
  Module mul(const Module& a, const Module& b) const override;
  Module intersect(const Module& a, const Module& b) const override;
  Module colon(const Module& a, const Module& b) const override;
  bool contains(const Module& m, const Element& x) const override;
  bool leq(const Module& a, const Module& b) const override;
  std::optional<std::vector<Element>> generators(const Module& m) const override;
  std::string format(const Module& m) const override;

  const std::vector<PrimeSpec>& primes() const override { return primes_; }
  Module localize(const Module& m, std::size_t prime) const override;
  const std::vector<OverringSpec>& overrings() const override { return overrings_; }
  Module extend(const Module& m, const OverringSpec& t) const override;
  Exponent overring_value(const Element& x, const OverringSpec& t) const override;
  std::optional<GaloisField::Code> residue(const Element& x, const OverringSpec& t) const override;
  std::vector<OverringSpec> valuation_family() const override;

  std::vector<Element> window_elements() const override;
  std::vector<Module> window_ideals() const override;
  // Principal integral ideals up to twice the element bound.
  std::vector<Module> colon_ideals() const override;
  std::vector<Element> sample_scalars() const override;
  std::vector<Module> fg_submodules(const Module& m) const override;
  Module from_window_oracle(const std::function<bool(const Element&)>& pred) const override;

  static Module closed(Exponent g) { return Module::proper(ValueCut{ValueCut::Kind::Closed, g}); }
  static Module limit(int a) { return Module::proper(ValueCut{ValueCut::Kind::Limit, {a, 0}}); }

 private:
  int rank_;
  ValuationWindow window_;
  std::vector<PrimeSpec> primes_;
  std::vector<OverringSpec> overrings_;
};

// D = F_q + T F_{q^m}[[T]] inside K = F_{q^m}((T)), q prime. Elements are
// Laurent polynomials in T; the precision window [low, high] bounds the
// T-degrees an element may carry.
class PvdContext final : public DomainContext {
 public:
  PvdContext(int q, int m, int low, int high);

  BackendKind kind() const override { return BackendKind::Pvd; }
  std::string name() const override;

  int base_size() const { return q_; }
  int extension_degree() const { return m_; }
  int window_low() const { return low_; }
  int window_high() const { return high_; }
  std::uint64_t full_space() const { return full_; }
  std::uint64_t base_field_space() const;
  std::uint64_t span_of(std::uint64_t mask) const;

  Module unit() const override;
  Module span(const std::vector<Element>& gens) const override;
  Module add(const Module& a, const Module& b) const override;
  Module mul(const Module& a, const Module& b) const override;
  Module intersect(const Module& a, const Module& b) const override;
  Module colon(const Module& a, const Module& b) const override;
  bool contains(const Module& m, const Element& x) const override;
  bool leq(const Module& a, const Module& b) const override;
  std::optional<std::vector<Element>> generators(const Module& m) const override;
  std::string format(const Module& m) const override;

  const std::vector<PrimeSpec>& primes() const override { return primes_; }
  Module localize(const Module& m, std::size_t prime) const override;
  const std::vector<OverringSpec>& overrings() const override { return overrings_; }
  Module extend(const Module& m, const OverringSpec& t) const override;
  Exponent overring_value(const Element& x, const OverringSpec& t) const override;
  std::optional<GaloisField::Code> residue(const Element& x, const OverringSpec& t) const override;
  std::vector<OverringSpec> valuation_family() const override;

  std::vector<Element> window_elements() const override;
  std::vector<Module> window_ideals() const override;
  std::vector<Element> sample_scalars() const override;
  std::vector<Module> fg_submodules(const Module& m) const override;
  Module from_window_oracle(const std::function<bool(const Element&)>& pred) const override;
  void check_precision(const Element& x) const override;

  Module ideal(int degree, std::uint64_t subspace) const;
  std::vector<std::uint64_t> subspaces() const;

 private:
  int q_;
  int m_;
  int low_;
  int high_;
  std::uint64_t full_ = 0;
  std::vector<PrimeSpec> primes_;
  std::vector<OverringSpec> overrings_;
};

ContextPtr make_numsgp(const std::vector<int>& generators, SemigroupWindow window = {});
ContextPtr make_valuation(int rank, ValuationWindow window = {});
ContextPtr make_pvd(int q, int m, int low, int high);

std::vector<PrimeSpec> prime_spectrum(const DomainContext& ctx);

}  // namespace semistar

#endif
