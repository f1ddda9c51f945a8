#ifndef SEMISTAR_CALCULUS_HPP
#define SEMISTAR_CALCULUS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semistar/domain.hpp"

namespace semistar {

// Properties an operation is claimed to have. Never trusted: checks re-derive
// them on samples.
struct OpFlags {
  std::optional<bool> finite_type;
  std::optional<bool> stable;
  std::optional<bool> eab;
};

class SemistarOp {
 public:
  using Evaluator = std::function<ClosureValue(const Module&)>;

  SemistarOp(std::string name, ContextPtr ctx, Evaluator eval, OpFlags flags = {});

  const std::string& name() const noexcept { return name_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const OpFlags& claimed() const noexcept { return flags_; }

  ClosureValue apply(const Module& e) const;
  ClosureValue apply(const FracIdeal& e) const;
  ClosureValue operator()(const Module& e) const { return apply(e); }

 private:
  std::string name_;
  ContextPtr ctx_;
  Evaluator eval_;
  OpFlags flags_;
};

SemistarOp identity_op(const ContextPtr& ctx);
SemistarOp trivial_op(const ContextPtr& ctx);
SemistarOp v_op(const ContextPtr& ctx);
// Intersection of the localizations at the listed primes (indices into
// ctx->primes()); an empty list gives the trivial operation.
SemistarOp spectral_op(const ContextPtr& ctx, const std::vector<std::size_t>& delta);
SemistarOp wedge_op(const ContextPtr& ctx, const std::vector<std::string>& overrings);
// E -> union of F^* over finitely generated F inside E.
SemistarOp finite_type_op(const SemistarOp& op);
// E -> union of (E:J) over finitely generated integral J with J^* = D^*,
// decided element by element: x belongs iff ((E:x) cap D)^{*_f} = D^*.
SemistarOp stable_assoc(const SemistarOp& op);
// Same union, summed over the enumerated integral window ideals.
SemistarOp stable_assoc_enumerated(const SemistarOp& op, std::size_t budget = 4096);
// Spectral operation over the quasi-maximal ideals of op_f.
SemistarOp stable_assoc_qmax(const SemistarOp& op);

struct AbResult {
  ClosureValue value;
  bool stabilized = false;
  std::size_t examined = 0;
};
// Union of ((FH)^* : H) over enumerated H, doubling the number of H until two
// consecutive doublings leave the union unchanged or the budget runs out.
AbResult ab_assoc(const SemistarOp& op, const Module& f, std::size_t budget = 256);
SemistarOp ab_op(const SemistarOp& op, std::size_t budget = 256);

struct LocalizingSystem {
  ContextPtr ctx;
  std::string name;
  std::function<bool(const Module&)> member;  // on nonzero integral ideals
  bool finite_type = false;
  std::optional<std::vector<std::size_t>> avoided;  // I in F iff I is in none of these primes

  bool contains(const Module& i) const;
};

LocalizingSystem localizing_system_of(const SemistarOp& op);
LocalizingSystem spectral_localizing_system(const ContextPtr& ctx, const std::vector<std::size_t>& avoided);
// All spectral localizing systems of a finite-spectrum backend, deduplicated.
std::vector<LocalizingSystem> enumerate_localizing_systems(const ContextPtr& ctx);
SemistarOp op_of_localizing_system(const LocalizingSystem& f);
// Members among the integral window ideals; EnumerationBudgetExceeded beyond budget.
std::vector<Module> localizing_members(const LocalizingSystem& f, std::size_t budget = 4096);
// First violation of the upward-closure or residual axiom on window ideals.
std::optional<std::string> localizing_axiom_violation(const LocalizingSystem& f);
bool localizing_leq(const LocalizingSystem& a, const LocalizingSystem& b);

struct QuasiSpectrum {
  std::vector<std::size_t> primes;
  std::vector<std::size_t> maximals;
};
QuasiSpectrum quasi_spectrum(const SemistarOp& op);
bool is_quasi_star_ideal(const Module& i, const SemistarOp& op);
bool star_invertible(const Module& i, const SemistarOp& op);

struct EabBounds {
  int max_exponent = 1 << 20;  // generators' T-degree / semigroup exponent bound
  std::size_t max_pool = 64;
};
struct EabTriple {
  Module f, g, h;
};
std::optional<EabTriple> eab_witness_search(const SemistarOp& op, const EabBounds& bounds = {});
bool verify_eab_triple(const SemistarOp& op, const EabTriple& t);

bool op_leq(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples);
bool op_equal(const SemistarOp& a, const SemistarOp& b, const std::vector<Module>& samples);

// A valuation overring T of D viewed as its own rank-one valuation context.
struct OverringTransfer {
  ContextPtr base;
  ContextPtr target;
  OverringSpec overring;
  // D-module that happens to be a T-module, as a module of target.
  std::optional<Module> up(const Module& m) const;
  // Module of target, as a D-module.
  Module down(const Module& m) const;
};
OverringTransfer overring_transfer(const ContextPtr& ctx, const std::string& overring);
// E^{*_i} := E^* for T-modules E.
SemistarOp transfer_to_overring(const SemistarOp& op, const OverringTransfer& t);
// E^{*^i} := (ET)^* for the operation * on T.
SemistarOp transfer_from_overring(const SemistarOp& op_on_t, const OverringTransfer& t);

// Names: d, e, v, t, w, b, spectral:P,M  wedge:V,K  finite:<op>  stable_of:<op>
// ab_of:<op>  from_ls:P,M  (prime and overring lists may be wrapped in braces).
SemistarOp make_op(const ContextPtr& ctx, std::string_view name);
std::vector<std::size_t> prime_indices(const ContextPtr& ctx, std::string_view list);

}  // namespace semistar

#endif
