#include "doctest.h"

#include "semistar/backends.hpp"

using namespace semistar;

namespace {

Element t(int n, GaloisField::Code c = 1) { return Element::monomial(n, c); }

Module sg(const ContextPtr& ctx, std::vector<int> exps) {
  std::vector<Element> gens;
  for (int e : exps) gens.push_back(t(e));
  return ctx->span(gens);
}

}  // namespace

TEST_CASE("numerical semigroup construction") {
  auto ctx = make_numsgp({3, 4, 5});
  const auto& s = dynamic_cast<const NumericalSemigroupContext&>(*ctx);
  CHECK(s.frobenius() == 2);
  CHECK(s.gaps() == std::vector<int>{1, 2});
  CHECK(s.conductor() == 3);

  auto n = make_numsgp({1});
  CHECK(dynamic_cast<const NumericalSemigroupContext&>(*n).gaps().empty());

  CHECK_THROWS_AS(make_numsgp({2, 4}), Error);
  try {
    make_numsgp({2, 4});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
  auto red = make_numsgp({3, 6, 4, 5, 7});
  CHECK(dynamic_cast<const NumericalSemigroupContext&>(*red).semigroup_generators() == std::vector<int>{3, 4, 5});
}

TEST_CASE("semigroup ideal arithmetic") {
  auto ctx = make_numsgp({3, 4, 5});
  const Module a = sg(ctx, {3, 5});
  CHECK(ctx->contains(a, t(7)));  // 7 = 3 + 4
  CHECK_FALSE(ctx->contains(a, t(4)));
  CHECK(ctx->format(ctx->mul(a, a)) == "{6,8}");
  CHECK(ctx->format(ctx->add(sg(ctx, {3}), sg(ctx, {4}))) == "{3,4}");
  CHECK(ctx->format(ctx->intersect(sg(ctx, {3}), sg(ctx, {4}))) == "{7,8,9}");
  CHECK(ctx->format(ctx->colon(ctx->unit(), a)) == "{0,1,2}");
  CHECK(ctx->format(ctx->unit()) == "{0}");
  CHECK(ctx->leq(a, ctx->unit()));
  CHECK(ctx->format(ctx->primes()[1].ideal) == "{3,4,5}");
}

TEST_CASE("semigroup lattice properties on the window") {
  auto ctx = make_numsgp({3, 4, 5});
  auto ideals = ctx->window_ideals();
  CHECK(ideals.size() > 20);
  for (const auto& a : ideals) {
    for (const auto& b : ideals) {
      const Module ab = ctx->mul(a, b);
      CHECK(ctx->leq(a, ctx->colon(ab, b)));
      CHECK(ctx->leq(ctx->mul(ctx->colon(a, b), b), a));
      CHECK(ctx->add(a, b) == ctx->add(b, a));
      CHECK(ctx->leq(ctx->intersect(a, b), a));
    }
    CHECK(ctx->span(*ctx->generators(a)) == a);
  }
}

TEST_CASE("valuation backend") {
  auto v1 = make_valuation(1);
  CHECK(v1->primes().size() == 2);
  auto v2 = make_valuation(2);
  CHECK(v2->primes().size() == 3);
  CHECK(v2->primes()[1].name == "P");
  try {
    make_valuation(3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRank);
  }
  const Module e = ValuationContext::closed({1, 5});
  const Module loc = v2->localize(e, 1);
  CHECK(loc == ValuationContext::limit(0));
  CHECK(v2->contains(loc, Element::monomial(Exponent{1, -7})));
  CHECK_FALSE(v2->contains(loc, Element::monomial(Exponent{0, 0})));

  const Module p = v2->primes()[1].ideal;
  CHECK(v2->mul(p, p) == ValuationContext::limit(1));
  CHECK(v2->colon(v2->unit(), p) == ValuationContext::limit(-1));
  CHECK(v2->colon(p, p) == ValuationContext::limit(-1));
  for (const auto& a : v2->window_ideals())
    for (const auto& b : v2->window_ideals()) CHECK(v2->mul(v2->colon(a, b), b) == a);
}

TEST_CASE("pvd backend") {
  auto ctx = make_pvd(2, 2, -6, 12);
  const auto& pvd = dynamic_cast<const PvdContext&>(*ctx);
  const Module d = ctx->unit();
  const Module m = ctx->primes()[1].ideal;
  const Module v = ctx->extend(d, ctx->overring("V"));
  CHECK(ctx->contains(v, Element::monomial(0, 2)));
  CHECK_FALSE(ctx->contains(d, Element::monomial(0, 2)));
  CHECK(ctx->colon(d, m) == v);
  CHECK(ctx->colon(m, m) == v);
  CHECK(pvd.subspaces().size() == 4);
  CHECK(ctx->window_ideals().size() == 19 * 4);
  CHECK_THROWS_AS(make_pvd(2, 2, 0, 1), Error);
  try {
    ctx->check_precision(Element::monomial(13));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrecisionExceeded);
  }
  for (const auto& a : ctx->window_ideals()) {
    CHECK(ctx->span(*ctx->generators(a)) == a);
    for (const auto& b : ctx->window_ideals()) {
      CHECK(ctx->leq(a, ctx->colon(ctx->mul(a, b), b)));
      CHECK(ctx->leq(ctx->mul(ctx->colon(a, b), b), a));
    }
  }
}
