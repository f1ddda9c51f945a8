#include "doctest.h"

#include "semistar/backends.hpp"
#include "semistar/calculus.hpp"

using namespace semistar;

namespace {

Module sg(const ContextPtr& ctx, std::vector<int> exps) {
  std::vector<Element> gens;
  for (int e : exps) gens.push_back(Element::monomial(e));
  return ctx->span(gens);
}

std::size_t prime(const ContextPtr& ctx, const std::string& name) { return prime_indices(ctx, name).at(0); }

}  // namespace

TEST_CASE("divisorial closure on <3,4,5>") {
  auto ctx = make_numsgp({3, 4, 5});
  auto v = v_op(ctx);
  CHECK(ctx->format(v(sg(ctx, {3, 5})).module) == "{3,4,5}");
  CHECK(v(sg(ctx, {7})).module == sg(ctx, {7}));
  CHECK(v(ctx->unit()).module == ctx->unit());
  CHECK_FALSE(star_invertible(sg(ctx, {3, 5}), v));
  CHECK(star_invertible(sg(ctx, {4}), v));
}

TEST_CASE("spectral and wedge operations") {
  auto ctx = make_numsgp({3, 4, 5});
  auto d = identity_op(ctx);
  auto samples = ctx->window_ideals();
  CHECK(op_equal(spectral_op(ctx, {prime(ctx, "M")}), d, samples));
  CHECK(op_equal(spectral_op(ctx, {prime(ctx, "(0)")}), trivial_op(ctx), samples));
  CHECK(op_equal(spectral_op(ctx, {}), trivial_op(ctx), samples));
  CHECK(op_equal(wedge_op(ctx, {"K"}), trivial_op(ctx), samples));
  CHECK(op_equal(wedge_op(ctx, {"D"}), d, samples));
  CHECK_THROWS_AS(wedge_op(ctx, {"nope"}), Error);

  auto v2 = make_valuation(2);
  auto sp = spectral_op(v2, {prime(v2, "P")});
  auto c = sp(ValuationContext::closed({1, 5}));
  CHECK(c.contains(Element::monomial(Exponent{1, -7})));
  CHECK_FALSE(c.contains(Element::monomial(Exponent{0, 0})));

  auto pvd = make_pvd(2, 2, -6, 12);
  auto b = wedge_op(pvd, {"V"});
  CHECK(b(pvd->unit()).module == pvd->extend(pvd->unit(), pvd->overring("V")));
  CHECK_FALSE(pvd->leq(b(pvd->unit()).module, pvd->unit()));
}

TEST_CASE("stable closure and quasi spectrum") {
  auto ctx = make_numsgp({3, 4, 5});
  auto v = v_op(ctx);
  auto w = stable_assoc(v);
  const Module e = sg(ctx, {3, 5});
  CHECK(same_closure(w(e), ClosureValue{ctx, e, true, ""}));
  CHECK(ctx->format(v(e).module) == "{3,4,5}");
  auto samples = ctx->window_ideals();
  CHECK(op_equal(stable_assoc(identity_op(ctx)), identity_op(ctx), samples));
  CHECK(op_equal(stable_assoc(trivial_op(ctx)), trivial_op(ctx), samples));
  CHECK(op_equal(w, stable_assoc_qmax(v), samples));
  CHECK(op_equal(w, stable_assoc_enumerated(v), samples));
  CHECK(op_leq(w, finite_type_op(v), samples));
  CHECK(op_leq(finite_type_op(v), v, samples));

  auto qs = quasi_spectrum(v);
  REQUIRE(qs.maximals.size() == 1);
  CHECK(ctx->primes()[qs.maximals[0]].name == "M");
  CHECK(quasi_spectrum(trivial_op(ctx)).primes.empty());
  CHECK(is_quasi_star_ideal(ctx->primes()[1].ideal, v));
  CHECK_FALSE(is_quasi_star_ideal(e, v));
  CHECK(is_quasi_star_ideal(ctx->unit(), v));
  CHECK_THROWS_AS(is_quasi_star_ideal(sg(ctx, {1}), v), Error);

  auto v2 = make_valuation(2);
  auto q2 = quasi_spectrum(spectral_op(v2, {prime(v2, "P")}));
  REQUIRE(q2.maximals.size() == 1);
  CHECK(v2->primes()[q2.maximals[0]].name == "P");
}

TEST_CASE("stability fails for v and holds for spectral operations") {
  auto ctx = make_numsgp({3, 4, 5});
  auto ideals = ctx->window_ideals();
  auto stable_on = [&](const SemistarOp& op) {
    for (const auto& a : ideals)
      for (const auto& b : ideals)
        if (!same_closure(op(ctx->intersect(a, b)),
                          ClosureValue{ctx, ctx->intersect(op(a).module, op(b).module), true, ""}))
          return false;
    return true;
  };
  CHECK_FALSE(stable_on(v_op(ctx)));
  CHECK(stable_on(spectral_op(ctx, {1})));
}

TEST_CASE("localizing systems") {
  auto ctx = make_numsgp({3, 4, 5});
  auto fd = localizing_system_of(identity_op(ctx));
  auto members = localizing_members(fd);
  REQUIRE(members.size() == 1);
  CHECK(members[0] == ctx->unit());
  CHECK(localizing_members(localizing_system_of(v_op(ctx))).size() == 1);
  auto fe = localizing_system_of(trivial_op(ctx));
  CHECK(localizing_members(fe).size() == ctx->integral_window_ideals().size());
  CHECK_FALSE(localizing_axiom_violation(fd));
  CHECK_FALSE(localizing_axiom_violation(fe));

  auto v1 = make_valuation(1);
  auto all = spectral_localizing_system(v1, {});
  CHECK(op_equal(op_of_localizing_system(all), trivial_op(v1), v1->window_ideals()));

  auto v2 = make_valuation(2);
  auto systems = enumerate_localizing_systems(v2);
  CHECK(systems.size() == 3);
  for (const auto& f : systems) {
    CHECK_FALSE(localizing_axiom_violation(f));
    for (const auto& g : systems)
      CHECK(localizing_leq(f, g) == op_leq(op_of_localizing_system(f), op_of_localizing_system(g), v2->window_ideals()));
  }
  for (std::size_t p = 0; p < v2->primes().size(); ++p) {
    auto sp = spectral_op(v2, {p});
    auto round = op_of_localizing_system(localizing_system_of(sp));
    CHECK(op_equal(round, sp, v2->window_ideals()));
  }
  CHECK_FALSE(op_equal(op_of_localizing_system(localizing_system_of(v_op(ctx))), v_op(ctx), ctx->window_ideals()));
}

TEST_CASE("eab witness search and ab closure") {
  auto v1 = make_valuation(1);
  CHECK_FALSE(eab_witness_search(identity_op(v1)).has_value());
  auto r = ab_assoc(identity_op(v1), ValuationContext::closed({2, 0}));
  CHECK(r.stabilized);
  CHECK(v1->same_on_window(r.value.module, ValuationContext::closed({2, 0})));

  auto ctx = make_numsgp({3, 4, 5});
  const Module f = sg(ctx, {3, 5});
  auto da = ab_assoc(identity_op(ctx), f);
  const Module m = ctx->primes()[1].ideal;
  CHECK(ctx->included_on_window(ctx->colon(ctx->mul(f, m), m), da.value.module));
  CHECK(ctx->included_on_window(f, da.value.module));
  auto b = make_op(ctx, "b");
  CHECK(ctx->included_on_window(da.value.module, b(f).module));

  auto found = eab_witness_search(v_op(ctx), {10, 64});
  if (found) CHECK(verify_eab_triple(v_op(ctx), *found));
}

TEST_CASE("overring transfer") {
  auto pvd = make_pvd(2, 2, -6, 12);
  auto t = overring_transfer(pvd, "V");
  auto dv = identity_op(t.target);
  auto up = transfer_from_overring(dv, t);
  CHECK(up(pvd->unit()).module == pvd->extend(pvd->unit(), pvd->overring("V")));
  auto down = transfer_to_overring(identity_op(pvd), t);
  for (const auto& e : t.target->window_ideals()) CHECK(down(e).module == e);
  auto samples = pvd->window_ideals();
  CHECK(op_equal(finite_type_op(up), transfer_from_overring(finite_type_op(dv), t), samples));
  CHECK_THROWS_AS(overring_transfer(pvd, "D_M"), Error);
}

TEST_CASE("operations by name") {
  auto ctx = make_numsgp({3, 4, 5});
  auto samples = ctx->window_ideals();
  CHECK(make_op(ctx, "v").name() == "v");
  CHECK(op_equal(make_op(ctx, "spectral:{M}"), identity_op(ctx), samples));
  CHECK(op_equal(make_op(ctx, "from_ls:M"), identity_op(ctx), samples));
  CHECK(op_leq(make_op(ctx, "w"), make_op(ctx, "t"), samples));
  CHECK(op_leq(make_op(ctx, "t"), make_op(ctx, "v"), samples));
  CHECK_THROWS_AS(make_op(ctx, "q"), Error);
  CHECK_THROWS_AS(make_op(ctx, "spectral:Q"), Error);
}
