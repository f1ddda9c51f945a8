#include <algorithm>

#include "doctest.h"

#include "semistar/backends.hpp"
#include "semistar/poly.hpp"

using namespace semistar;

namespace {

Element t(int n) { return Element::monomial(n); }
Element t2(int a, int b) { return Element::monomial(Exponent{a, b}); }

Poly poly(std::vector<Element> coeffs) { return Poly::from_coeffs(std::move(coeffs)); }

RationalFunction frac(Poly num, Poly den) { return {std::move(num), std::move(den)}; }
RationalFunction of(Poly p) { return RationalFunction::of(std::move(p)); }

Module sg(const ContextPtr& ctx, std::vector<int> exps) {
  std::vector<Element> gens;
  for (int e : exps) gens.push_back(t(e));
  return ctx->span(gens);
}

std::vector<Module> some_ideals(const ContextPtr& ctx, std::size_t n) {
  auto all = ctx->window_ideals();
  std::vector<Module> out;
  const std::size_t stride = std::max<std::size_t>(1, all.size() / n);
  for (std::size_t i = 0; i < all.size(); i += stride) out.push_back(all[i]);
  return out;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
  auto ctx = make_numsgp({3, 4, 5});
  const auto& ar = ctx->arith();
  const Poly a = poly({t(0), t(0)});
  const Poly sq = poly_mul(ar, a, a);
  CHECK(sq == poly({t(0), Element{}, t(0)}));
  CHECK(poly_divide(ar, sq, a) == a);
  CHECK_FALSE(poly_divide(ar, poly({t(0)}), a).has_value());
  CHECK(poly_sub(ar, sq, sq).is_zero());
  CHECK(as_laurent(ar, frac(sq, a)) == a);
  CHECK_FALSE(as_laurent(ar, frac(poly({t(0)}), a)).has_value());
}

TEST_CASE("content") {
  auto ctx = make_numsgp({3, 4, 5});
  CHECK(ctx->format(content(ctx, poly({t(3), t(5)})).module) == "{3,5}");
  CHECK(content(ctx, poly({t(0), t(0)})).module == ctx->unit());
  CHECK(ctx->format(content(ctx, poly({t(3), t(4)})).module) == "{3,4}");
  CHECK_THROWS_AS(content(ctx, Poly{}), Error);
}

TEST_CASE("nagata membership") {
  auto ctx = make_numsgp({3, 4, 5});
  auto v = v_op(ctx);
  CHECK(nagata_member(frac(poly({t(0)}), poly({t(0), t(3)})), v));
  CHECK_FALSE(nagata_member(frac(poly({t(0)}), poly({t(3), t(4)})), v));
  CHECK(nagata_member(of(poly({t(3), t(0), t(7)})), v));
  CHECK_THROWS_AS(nagata_member(of(poly({t(0)})), trivial_op(ctx)), Error);
  // Constants of Na(D,*) are D^{*~}.
  auto w = stable_assoc(v);
  for (const auto& x : ctx->window_elements())
    CHECK(nagata_member(of(Poly::constant(x)), v) == w(ctx->unit()).contains(x));
}

TEST_CASE("kronecker membership") {
  auto ctx = make_numsgp({3, 4, 5});
  const std::vector<OverringSpec> fam{ctx->overring("k[[t]]")};
  CHECK_FALSE(kronecker_member(ctx, frac(poly({t(3), t(5)}), poly({t(4)})), fam));
  CHECK(kronecker_member(ctx, frac(poly({t(4), t(6)}), poly({t(3), t(5)})), fam));
  CHECK(kronecker_member(ctx, of(Poly{}), fam));
  CHECK_THROWS_AS(kronecker_member(ctx, of(poly({t(1)})), {}), Error);
  CHECK(kronecker_principal_check(ctx, {t(3), t(5)}, fam));
  CHECK(kronecker_principal_check(ctx, {t(4)}, fam));

  auto pvd = make_pvd(2, 2, -6, 12);
  const std::vector<OverringSpec> pf{pvd->overring("V"), pvd->overring("K")};
  CHECK(kronecker_principal_check(pvd, {t(1), Element::monomial(2, 2)}, pf));
}

TEST_CASE("bracket, paren and angle on a DVR") {
  auto dvr = make_valuation(1);
  const std::vector<std::string> fam{"V"};
  auto bracket = ext_bracket(dvr, fam);
  auto paren = ext_paren(dvr, fam);
  auto angle = ext_angle(dvr, fam);
  const PolyIdeal q = make_poly_ideal(dvr, {poly({t(1)}), poly({t(0), t(0)})});
  const auto one = of(poly({t(0)}));
  CHECK_FALSE(bracket.member(one, q));
  CHECK(angle.member(one, q));
  CHECK(paren.member(one, q));

  const PolyIdeal dx = extended_ideal(dvr, dvr->unit());
  const auto inv = frac(poly({t(0)}), poly({t(0), t(0)}));
  CHECK(paren.member(inv, dx));
  CHECK_FALSE(angle.member(inv, dx));
  CHECK_FALSE(bracket.member(inv, dx));
  CHECK_THROWS_AS(ext_bracket(dvr, {"W"}), Error);
  CHECK_THROWS_AS(ext_bracket(dvr, {}), Error);

  // Principal E: every closure of E[X] contains E[X].
  const PolyIdeal ex = extended_ideal(dvr, ValuationContext::closed({2, 0}));
  const auto z = of(poly({t(2), t(3)}));
  CHECK(bracket.member(z, ex));
  CHECK(angle.member(z, ex));
  CHECK(paren.member(z, ex));
  CHECK_FALSE(bracket.member(of(poly({t(1)})), ex));
}

TEST_CASE("gauss content over a valuation domain") {
  auto dvr = make_valuation(1);
  std::vector<Poly> samples{poly({t(0), t(1)}), poly({t(2), t(0), t(1)}), poly({t(1), t(1)}), poly({t(3)})};
  CHECK_FALSE(gauss_content_failure(dvr, samples).has_value());
  auto ctx = make_numsgp({3, 4, 5});
  CHECK(gauss_content_failure(ctx, {poly({t(3), t(4)}), poly({t(3), t(5)})}).has_value());
}

TEST_CASE("induced operations") {
  auto pvd = make_pvd(2, 2, -6, 12);
  auto samples = some_ideals(pvd, 12);
  CHECK(op_equal(induced_op(ext_paren(pvd, {"V"})), wedge_op(pvd, {"V"}), samples));
  CHECK(op_equal(induced_op(ext_bracket(pvd, {"D"})), identity_op(pvd), samples));
  CHECK(op_equal(induced_op(identity_poly(pvd)), identity_op(pvd), samples));

  auto ctx = make_numsgp({3, 4, 5});
  auto ns = some_ideals(ctx, 10);
  CHECK(op_equal(induced_op(v_poly(ctx)), v_op(ctx), ns));
}

TEST_CASE("extensions and equivalence") {
  auto pvd = make_pvd(2, 2, -6, 12);
  auto samples = some_ideals(pvd, 6);
  const std::vector<std::string> fam{"V"};
  auto wedge = wedge_op(pvd, fam);
  auto bracket = ext_bracket(pvd, fam);
  auto angle = ext_angle(pvd, fam);
  auto paren = ext_paren(pvd, fam);
  CHECK(is_strict_extension(bracket, wedge, samples));
  CHECK(is_strict_extension(angle, wedge, samples));
  CHECK(is_extension(paren, wedge, samples));
  CHECK_FALSE(is_strict_extension(paren, wedge, samples));
  CHECK(equivalent(bracket, angle, samples));
  CHECK(equivalent(bracket, paren, samples));
  CHECK(strictly_equivalent(bracket, angle, samples));
  CHECK_FALSE(strictly_equivalent(bracket, paren, samples));
  CHECK(strictly_equivalent(paren, paren, samples));
}

TEST_CASE("wedge fixing D matches the extensions fixing D[X]") {
  auto pvd = make_pvd(2, 2, -6, 12);
  const auto dx = extended_ideal(pvd, pvd->unit());
  const auto alpha = of(poly({Element::monomial(0, 2)}));
  CHECK_FALSE(pvd->contains(pvd->unit(), Element::monomial(0, 2)));
  CHECK(ext_bracket(pvd, {"V"}).member(alpha, dx));
  CHECK(ext_angle(pvd, {"V"}).member(alpha, dx));
  auto dvr = make_valuation(1);
  const auto dvx = extended_ideal(dvr, dvr->unit());
  for (const auto& x : dvr->window_elements()) {
    const auto z = of(Poly::constant(x));
    CHECK(ext_bracket(dvr, {"V"}).member(z, dvx) == dvr->contains(dvr->unit(), x));
    CHECK(ext_angle(dvr, {"V"}).member(z, dvx) == dvr->contains(dvr->unit(), x));
  }
}

TEST_CASE("bracket tilde") {
  auto ctx = make_numsgp({3, 4, 5});
  auto v = v_op(ctx);
  auto enumerated = bracket_tilde(v);
  auto spectral = bracket_tilde_spectral(v);
  const std::vector<PolyIdeal> ideals{
      extended_ideal(ctx, sg(ctx, {3, 5})),
      make_poly_ideal(ctx, {poly({t(3)}), Poly::monomial(t(4), 1)}),
      make_poly_ideal(ctx, {Poly::monomial(t(5), 1), Poly::monomial(t(0), 2)}),
  };
  const std::vector<RationalFunction> zs{of(poly({t(3)})), of(poly({t(4), t(4)})), of(poly({t(0), t(5)})),
                                         of(Poly::monomial(t(0), 2)), of(poly({t(6), Element{}, t(1)}))};
  for (const auto& a : ideals)
    for (const auto& z : zs) {
      const bool direct = spectral.member(z, a);
      CHECK(enumerated.member(z, a) == direct);
      CHECK(bracket_tilde_member(z, a, v) == direct);
      CHECK(identity_poly(ctx).member(z, a) == direct);
    }
  CHECK_THROWS_AS(bracket_tilde(v, 3), Error);
}

TEST_CASE("localizing systems on D[X]") {
  auto ctx = make_numsgp({3, 4, 5});
  const auto m = prime_indices(ctx, "M");
  auto fd = localizing_poly(spectral_localizing_system(ctx, m));
  CHECK(fd.contains(extended_ideal(ctx, ctx->unit())));
  CHECK_FALSE(fd.contains(extended_ideal(ctx, sg(ctx, {3, 4, 5}))));
  auto all = localizing_poly(spectral_localizing_system(ctx, prime_indices(ctx, "(0)")));
  CHECK(all.contains(extended_ideal(ctx, sg(ctx, {3, 4, 5}))));

  std::vector<PolyIdeal> samples;
  for (const auto& i : some_ideals(ctx, 6)) {
    if (!ctx->leq(i, ctx->unit())) continue;
    samples.push_back(extended_ideal(ctx, i));
    samples.push_back(graded_poly_ideal(ctx, graded_add(*ctx, graded_extended(i), {1, {ctx->unit()}})));
  }
  CHECK_FALSE(poly_localizing_violation(fd, samples).has_value());
  CHECK_FALSE(poly_localizing_violation(all, samples).has_value());

  // F^v = {D} on the local domain, so *_F[X] is d and matches [v~].
  auto v = v_op(ctx);
  auto lifted = op_of_poly_localizing_system(localizing_poly(localizing_system_of(v)));
  auto tilde = bracket_tilde_spectral(v);
  const std::vector<RationalFunction> zs{of(poly({t(3)})), of(poly({t(1), t(5)})), of(Poly::monomial(t(4), 2))};
  for (const auto& a : samples)
    for (const auto& z : zs) CHECK(lifted.member(z, a) == tilde.member(z, a));
}

TEST_CASE("extended saturation") {
  auto ctx = make_numsgp({3, 4, 5});
  const auto s = MultSetSpec::of_generators({poly({t(0), t(0)})});
  CHECK(delta_of(ctx, s).size() == 2);
  CHECK(extended_saturation_member(ctx, poly({t(0), t(0)}), s));
  CHECK_FALSE(extended_saturation_member(ctx, poly({t(3), t(4)}), s));
  CHECK_THROWS_AS(extended_saturation_member(ctx, Poly{}, s), Error);
  CHECK(mult_set_member(ctx, poly_mul(ctx->arith(), poly({t(0), t(0)}), poly({t(0), t(0)})), s));
  CHECK_FALSE(mult_set_member(ctx, poly({t(0), t(3)}), s));
  CHECK_THROWS_AS(MultSetSpec::of_generators({Poly{}}), Error);

  // Content-type sets of a finite-type stable operation are saturated.
  const auto c = MultSetSpec::of_content(stable_assoc(v_op(ctx)));
  const std::vector<Poly> gs{poly({t(0), t(3)}), poly({t(3), t(4)}), poly({t(4), t(0), t(5)}), poly({t(5)}),
                             poly({t(0)})};
  for (const auto& g : gs) CHECK(extended_saturation_member(ctx, g, c) == mult_set_member(ctx, g, c));
}

TEST_CASE("circ operations") {
  auto ctx = make_numsgp({3, 4, 5});
  auto samples = some_ideals(ctx, 8);
  const auto s = MultSetSpec::of_generators({poly({t(0), t(0)})});
  CHECK(nabla_of(ctx, s) == prime_indices(ctx, "M"));
  CHECK(op_equal(circ_op(ctx, s), identity_op(ctx), samples));
  const auto z = MultSetSpec::of_avoidance(prime_indices(ctx, "(0)"));
  CHECK(nabla_of(ctx, z) == prime_indices(ctx, "(0)"));
  CHECK(op_equal(circ_op(ctx, z), trivial_op(ctx), samples));

  auto v2 = make_valuation(2);
  const auto p = MultSetSpec::of_avoidance(prime_indices(v2, "P"));
  const Module e = ValuationContext::closed({1, 3});
  CHECK(circ_S(v2, e, p).module == v2->localize(e, prime_indices(v2, "P").at(0)));
  auto vs = some_ideals(v2, 6);
  auto circ = circ_op(v2, p);
  CHECK(op_equal(stable_assoc(circ), circ, vs));
}

TEST_CASE("b on D[X]") {
  auto ctx = make_numsgp({3, 4, 5});
  auto principal = b_poly_check(ctx, sg(ctx, {4}), 4096);
  CHECK(principal.holds);
  auto r = b_poly_check(ctx, sg(ctx, {3, 5}), 4096);
  CHECK(r.holds);
  CHECK(r.bound_m >= 0);
  auto pvd = make_pvd(2, 2, -6, 12);
  auto p = b_poly_check(pvd, pvd->unit(), 4096);
  INFO(p.detail);
  CHECK(p.holds);
  const auto ab = ab_assoc(identity_op(pvd), pvd->unit());
  CHECK(ab.stabilized);
  CHECK(ab.value.module == pvd->extend(pvd->unit(), pvd->overring("V")));
  CHECK_THROWS_AS(b_poly_check(ctx, sg(ctx, {3, 5}), 2), Error);
}

TEST_CASE("bracket b is not eab on the PVD") {
  auto pvd = make_pvd(2, 2, -2, 10);
  auto op = ext_bracket(pvd, {"V", "K"});
  const auto w = bracket_eab_witness(pvd);
  std::string detail;
  CHECK(verify_bracket_eab(op, w, &detail));

  auto m = [](int a, int b) { return Poly::monomial(Element::monomial(a), b); };
  const PolyTriple known{make_poly_ideal(pvd, {m(1, 0), m(0, 1)}), make_poly_ideal(pvd, {m(2, 0), m(1, 1), m(0, 2)}),
                         make_poly_ideal(pvd, {m(2, 0), m(0, 2)})};
  CHECK(verify_bracket_eab(op, known, &detail));
  CHECK_FALSE(verify_bracket_eab(ext_bracket(pvd, {"K"}), known, &detail));
  CHECK_THROWS_AS(bracket_eab_witness(make_pvd(2, 2, -2, 6)), Error);
  CHECK_THROWS_AS(bracket_eab_witness(make_numsgp({3, 4, 5})), Error);
}
