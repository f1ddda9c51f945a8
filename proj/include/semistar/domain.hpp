#ifndef SEMISTAR_DOMAIN_HPP
#define SEMISTAR_DOMAIN_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semistar/element.hpp"
#include "semistar/error.hpp"
#include "semistar/module.hpp"

namespace semistar {

enum class BackendKind { NumericalSemigroup, Valuation, Pvd };

struct PrimeSpec {
  std::string name;
  int height = 0;
  Module ideal;  // the prime itself as a D-submodule of K; (0) is Module::zero()
};

enum class OverringKind { Self, Field, Valuation, Localization };

struct OverringSpec {
  std::string name;
  OverringKind kind = OverringKind::Self;
  bool valuation = false;  // T is a valuation ring (K counts, with the trivial valuation)
  bool flat = true;
  int prime = -1;  // for localizations, index into primes()
};

// A computable integral domain D with quotient field K. All D-submodules of K
// the library manipulates are Module values of this context; the lattice
// operations below are exact. Contexts are immutable once built and may be
// shared across threads.
class DomainContext {
 public:
  virtual ~DomainContext() = default;

  virtual BackendKind kind() const = 0;
  virtual std::string name() const = 0;
  virtual int rank() const { return 1; }
  const ElementArith& arith() const { return arith_; }

  virtual Module unit() const = 0;
  // Module generated by gens; zero entries are ignored.
  virtual Module span(const std::vector<Element>& gens) const = 0;
  virtual Module add(const Module& a, const Module& b) const = 0;
  virtual Module mul(const Module& a, const Module& b) const = 0;
  virtual Module intersect(const Module& a, const Module& b) const = 0;
  // {z in K : z b subset of a}
  virtual Module colon(const Module& a, const Module& b) const = 0;
  virtual bool contains(const Module& m, const Element& x) const = 0;
  virtual bool leq(const Module& a, const Module& b) const = 0;
  // Minimal generators when the module is finitely generated and nonzero.
  virtual std::optional<std::vector<Element>> generators(const Module& m) const = 0;
  virtual std::string format(const Module& m) const = 0;

  Module scale(const Element& x, const Module& m) const { return mul(span({x}), m); }
  bool is_integral(const Module& m) const { return leq(m, unit()); }

  virtual const std::vector<PrimeSpec>& primes() const = 0;
  // E * D_P
  virtual Module localize(const Module& m, std::size_t prime) const = 0;
  virtual const std::vector<OverringSpec>& overrings() const = 0;
  virtual Module extend(const Module& m, const OverringSpec& t) const = 0;
  // Value of a nonzero x under the valuation of a valuation overring.
  virtual Exponent overring_value(const Element& x, const OverringSpec& t) const = 0;
  // Residue of x modulo the maximal ideal of a valuation overring whose residue
  // field is the coefficient field; nullopt when x is not in T or unsupported.
  virtual std::optional<GaloisField::Code> residue(const Element& x, const OverringSpec& t) const = 0;
  // The declared complete family of valuation overrings.
  virtual std::vector<OverringSpec> valuation_family() const = 0;
  const OverringSpec& overring(std::string_view name) const;

  // Elements on which closure values are compared.
  virtual std::vector<Element> window_elements() const = 0;
  // Enumerated finitely generated fractional ideals, deterministic order.
  virtual std::vector<Module> window_ideals() const = 0;
  std::vector<Module> integral_window_ideals() const;
  // Integral f.g. ideals J for unions of colons (E:J); reaches far enough that
  // every window element of such a union is witnessed.
  virtual std::vector<Module> colon_ideals() const { return integral_window_ideals(); }
  // Nonzero scalars used for the x E^* = (xE)^* axiom.
  virtual std::vector<Element> sample_scalars() const = 0;
  // Finitely generated submodules whose union approximates m on the window.
  virtual std::vector<Module> fg_submodules(const Module& m) const = 0;
  // Best module matching a membership predicate on the window.
  virtual Module from_window_oracle(const std::function<bool(const Element&)>& pred) const = 0;
  // Throws PrecisionExceeded when x cannot be represented faithfully.
  virtual void check_precision(const Element& x) const { (void)x; }

  bool same_on_window(const Module& a, const Module& b) const;
  bool included_on_window(const Module& a, const Module& b) const;

 protected:
  explicit DomainContext(ElementArith arith) : arith_(std::move(arith)) {}

 private:
  ElementArith arith_;
};

using ContextPtr = std::shared_ptr<const DomainContext>;

// Finitely generated fractional ideal with its canonical generator list.
struct FracIdeal {
  ContextPtr ctx;
  std::vector<Element> generators;
  Module module;

  friend bool operator==(const FracIdeal& a, const FracIdeal& b) {
    return a.ctx == b.ctx && a.module == b.module;
  }
};

// Result of applying a closure: a membership oracle backed by a module value.
// `exact` is false when the module was reconstructed from window membership or
// from finitely many approximants, in which case equality is window equality.
struct ClosureValue {
  ContextPtr ctx;
  Module module;
  bool exact = true;
  std::string provenance;

  bool contains(const Element& x) const { return ctx->contains(module, x); }
  std::optional<FracIdeal> presentation() const;
};

bool same_closure(const ClosureValue& a, const ClosureValue& b);
bool closure_leq(const ClosureValue& a, const ClosureValue& b);

FracIdeal normalize(const std::vector<Element>& gens, const ContextPtr& ctx);
FracIdeal make_frac_ideal(const Module& m, const ContextPtr& ctx);
FracIdeal ideal_add(const FracIdeal& e, const FracIdeal& f);
FracIdeal ideal_mul(const FracIdeal& e, const FracIdeal& f);
ClosureValue ideal_intersect(const FracIdeal& e, const FracIdeal& f);
ClosureValue ideal_colon(const FracIdeal& e, const FracIdeal& f);
bool element_in(const Element& x, const FracIdeal& e);
bool element_in(const Element& x, const ClosureValue& c);

}  // namespace semistar

#endif
