#ifndef SEMISTAR_POLY_HPP
#define SEMISTAR_POLY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semistar/calculus.hpp"
#include "semistar/domain.hpp"

namespace semistar {

// Laurent polynomial in X over K: coeffs[i] is the coefficient of X^(lo + i).
// Normalized so that the first and last coefficients are nonzero; zero has no
// coefficients.
struct Poly {
  int lo = 0;
  std::vector<Element> coeffs;

  static Poly constant(const Element& c);
  static Poly monomial(const Element& c, int degree);
  static Poly from_coeffs(std::vector<Element> coeffs, int lo = 0);

  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const { return lo + static_cast<int>(coeffs.size()) - 1; }
  bool is_polynomial() const { return is_zero() || lo >= 0; }
  bool is_x_monomial() const { return coeffs.size() == 1; }
  Element coeff(int k) const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_add(const ElementArith& ar, const Poly& a, const Poly& b);
Poly poly_sub(const ElementArith& ar, const Poly& a, const Poly& b);
Poly poly_mul(const ElementArith& ar, const Poly& a, const Poly& b);
Poly poly_scale(const ElementArith& ar, const Poly& a, const Element& c);
// Exact quotient a / b, or nullopt when b does not divide a. Throws Undecided
// when the leading coefficient of b is not a monomial.
std::optional<Poly> poly_divide(const ElementArith& ar, const Poly& a, const Poly& b);
std::string format_poly(const DomainContext& ctx, const Poly& p);

struct RationalFunction {
  Poly num;
  Poly den;

  static RationalFunction of(Poly p);
  bool is_zero() const { return num.is_zero(); }
};
// The Laurent polynomial equal to z, when there is one.
std::optional<Poly> as_laurent(const ElementArith& ar, const RationalFunction& z);
std::string format_rational(const DomainContext& ctx, const RationalFunction& z);

// Ideal of D[X] generated by X-monomials, stored level by level: the
// coefficients of X^k in its elements form levels[k - lo]; levels below lo are
// zero and levels above the last repeat the last one.
struct GradedIdeal {
  int lo = 0;
  std::vector<Module> levels;

  Module level(int k) const;
  int top() const { return lo + static_cast<int>(levels.size()) - 1; }
  friend bool operator==(const GradedIdeal&, const GradedIdeal&) = default;
};

GradedIdeal graded_normalize(const DomainContext& ctx, GradedIdeal g);
GradedIdeal graded_extended(const Module& e);
GradedIdeal graded_add(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal graded_mul(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal graded_intersect(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal graded_colon(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal graded_extend(const DomainContext& ctx, const GradedIdeal& a, const OverringSpec& t);
bool graded_leq(const DomainContext& ctx, const GradedIdeal& a, const GradedIdeal& b);
bool graded_contains(const DomainContext& ctx, const GradedIdeal& a, const Poly& z);
std::string format_graded(const DomainContext& ctx, const GradedIdeal& a);

// Finitely generated ideal of D[X]. `graded` is filled when every generator is
// an X-monomial; `extended_from` marks ideals built as E[X].
struct PolyIdeal {
  ContextPtr ctx;
  std::vector<Poly> generators;
  std::optional<GradedIdeal> graded;
  std::optional<Module> extended_from;
};

PolyIdeal make_poly_ideal(const ContextPtr& ctx, std::vector<Poly> generators);
PolyIdeal extended_ideal(const ContextPtr& ctx, const Module& e);
PolyIdeal graded_poly_ideal(const ContextPtr& ctx, const GradedIdeal& g);
std::string format_poly_ideal(const PolyIdeal& a);

// Membership oracle for an operation on D[X].
class PolyOp {
 public:
  using Member = std::function<bool(const RationalFunction&, const PolyIdeal&)>;
  PolyOp(std::string name, ContextPtr ctx, Member member);

  const std::string& name() const noexcept { return name_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  bool member(const RationalFunction& z, const PolyIdeal& a) const;

 private:
  std::string name_;
  ContextPtr ctx_;
  Member member_;
};

FracIdeal content(const ContextPtr& ctx, const Poly& f);
Module content_module(const DomainContext& ctx, const Poly& f);

// z in A T[X] for one overring T. Throws Undecided when neither a positive
// nor a negative certificate is available.
bool in_extension_poly(const PolyIdeal& a, const OverringSpec& t, const RationalFunction& z);
// z in A T(X) for a valuation overring T (or K).
bool in_nagata_extension(const PolyIdeal& a, const OverringSpec& t, const RationalFunction& z);

PolyOp ext_bracket(const ContextPtr& ctx, const std::vector<std::string>& family);
PolyOp ext_paren(const ContextPtr& ctx, const std::vector<std::string>& family);
PolyOp ext_angle(const ContextPtr& ctx, const std::vector<std::string>& family);
PolyOp identity_poly(const ContextPtr& ctx);
// v on D[X], for ideals generated by X-monomials.
PolyOp v_poly(const ContextPtr& ctx);

// Membership in Na(D,*) with D^* and D^{*~} computed once.
class NagataRing {
 public:
  explicit NagataRing(SemistarOp op);
  bool contains(const RationalFunction& h) const;
  const SemistarOp& op() const noexcept { return op_; }

 private:
  SemistarOp op_;
  ClosureValue dstar_;
  ClosureValue tilde_;
};

bool nagata_member(const RationalFunction& h, const SemistarOp& op);
// x in E Na(D,*) cap K, searched over contents J with J^* = D^*.
bool nagata_extended_member(const Element& x, const Module& e, const SemistarOp& op);
bool kronecker_member(const ContextPtr& ctx, const RationalFunction& h, const std::vector<OverringSpec>& family);
bool kronecker_principal_check(const ContextPtr& ctx, const std::vector<Element>& generators,
                               const std::vector<OverringSpec>& family);

// A^{[*~]} as the union of (A:F) over enumerated F with F^* = D^*.
PolyOp bracket_tilde(const SemistarOp& op, std::size_t budget = 4096);
// The same closure as the intersection of A D_Q[X] over quasi-maximal Q.
PolyOp bracket_tilde_spectral(const SemistarOp& op);
bool bracket_tilde_member(const RationalFunction& z, const PolyIdeal& a, const SemistarOp& op);

SemistarOp induced_op(const PolyOp& op);
// Graded sample elements: polynomials and fractions with the given scalars.
std::vector<RationalFunction> poly_samples(const ContextPtr& ctx, const std::vector<Element>& scalars);
std::vector<RationalFunction> poly_samples_for(const ContextPtr& ctx, const Module& e);
bool is_extension(const PolyOp& ext, const SemistarOp& op, const std::vector<Module>& samples);
bool is_strict_extension(const PolyOp& ext, const SemistarOp& op, const std::vector<Module>& samples);
bool equivalent(const PolyOp& a, const PolyOp& b, const std::vector<Module>& samples);
bool strictly_equivalent(const PolyOp& a, const PolyOp& b, const std::vector<Module>& samples);

struct PolyLocalizingSystem {
  LocalizingSystem base;
  bool contains(const PolyIdeal& j) const;
};
PolyLocalizingSystem localizing_poly(const LocalizingSystem& f);
PolyOp op_of_poly_localizing_system(const PolyLocalizingSystem& f);
std::optional<std::string> poly_localizing_violation(const PolyLocalizingSystem& f, const std::vector<PolyIdeal>& samples);

struct MultSetSpec {
  enum class Kind { Generators, Content, Avoidance };
  Kind kind = Kind::Generators;
  std::vector<Poly> generators;
  std::optional<SemistarOp> op;
  std::vector<std::size_t> avoided;

  static MultSetSpec of_generators(std::vector<Poly> gens);
  static MultSetSpec of_content(const SemistarOp& op);
  static MultSetSpec of_avoidance(std::vector<std::size_t> primes);
};

bool mult_set_member(const ContextPtr& ctx, const Poly& g, const MultSetSpec& s);
std::vector<std::size_t> delta_of(const ContextPtr& ctx, const MultSetSpec& s);
std::vector<std::size_t> nabla_of(const ContextPtr& ctx, const MultSetSpec& s);
bool extended_saturation_member(const ContextPtr& ctx, const Poly& g, const MultSetSpec& s);
ClosureValue circ_S(const ContextPtr& ctx, const Module& e, const MultSetSpec& s);
SemistarOp circ_op(const ContextPtr& ctx, const MultSetSpec& s);

struct BPolyReport {
  bool holds = false;
  int bound_m = 0;
  std::size_t examined = 0;
  std::string detail;
};
BPolyReport b_poly_check(const ContextPtr& ctx, const Module& e, std::size_t budget = 512);

struct PolyTriple {
  PolyIdeal f, g, h;
};
// Monomial triple in D[X] over the PVD with (FG)V[X] in (FH)V[X] but G V[X]
// not in H V[X]; throws SearchFailed when the bounded search finds nothing.
PolyTriple bracket_eab_witness(const ContextPtr& pvd);
bool verify_bracket_eab(const PolyOp& op, const PolyTriple& t, std::string* detail = nullptr);

// First pair (f, g) among the samples with c(fg) != c(f)c(g), if any.
std::optional<std::pair<Poly, Poly>> gauss_content_failure(const ContextPtr& ctx, const std::vector<Poly>& samples);

}  // namespace semistar

#endif
