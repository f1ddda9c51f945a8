#include <algorithm>

#include "semistar/calculus.hpp"

namespace semistar {

namespace {

bool closure_meets_d_in(const Module& i, const SemistarOp& op) {
  const auto ctx = op.context();
  const auto c = op(i);
  const ClosureValue trace{ctx, ctx->intersect(c.module, ctx->unit()), c.exact, "trace"};
  return same_closure(trace, ClosureValue{ctx, i, true, "ideal"});
}

int max_exponent(const ContextPtr& ctx, const Module& m) {
  const auto gens = ctx->generators(m);
  if (!gens) return 1 << 30;
  int top = -(1 << 30);
  for (const auto& g : *gens)
    for (const auto& t : g.terms()) top = std::max(top, t.exponent.major);
  return top;
}

}  // namespace

QuasiSpectrum quasi_spectrum(const SemistarOp& op) {
  const auto ctx = op.context();
  const auto& primes = ctx->primes();
  QuasiSpectrum out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (!primes[i].ideal.is_zero() && closure_meets_d_in(primes[i].ideal, op)) out.primes.push_back(i);
  for (auto i : out.primes) {
    const bool maximal = std::none_of(out.primes.begin(), out.primes.end(), [&](std::size_t j) {
      return j != i && ctx->leq(primes[i].ideal, primes[j].ideal) && !(primes[i].ideal == primes[j].ideal);
    });
    if (maximal) out.maximals.push_back(i);
  }
  return out;
}

bool is_quasi_star_ideal(const Module& i, const SemistarOp& op) {
  const auto ctx = op.context();
  if (!ctx->is_integral(i)) throw Error(ErrorCode::NotIntegral, ctx->format(i) + " is not contained in D");
  return closure_meets_d_in(i, op);
}

bool star_invertible(const Module& i, const SemistarOp& op) {
  const auto ctx = op.context();
  const Module d = ctx->unit();
  return same_closure(op(ctx->mul(i, ctx->colon(d, i))), op(d));
}

bool verify_eab_triple(const SemistarOp& op, const EabTriple& t) {
  const auto ctx = op.context();
  return closure_leq(op(ctx->mul(t.f, t.g)), op(ctx->mul(t.f, t.h))) && !closure_leq(op(t.g), op(t.h));
}

std::optional<EabTriple> eab_witness_search(const SemistarOp& op, const EabBounds& bounds) {
  const auto ctx = op.context();
  std::vector<Module> pool;
  for (auto& m : ctx->window_ideals()) {
    if (pool.size() >= bounds.max_pool) break;
    if (max_exponent(ctx, m) <= bounds.max_exponent) pool.push_back(std::move(m));
  }
  const std::size_t n = pool.size();
  std::vector<ClosureValue> star;
  for (const auto& m : pool) star.push_back(op(m));
  std::vector<std::vector<std::optional<ClosureValue>>> prod(n, std::vector<std::optional<ClosureValue>>(n));
  auto product = [&](std::size_t a, std::size_t b) -> const ClosureValue& {
    if (a > b) std::swap(a, b);
    if (!prod[a][b]) prod[a][b] = op(ctx->mul(pool[a], pool[b]));
    return *prod[a][b];
  };
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (g == h || closure_leq(star[g], star[h])) continue;
      for (std::size_t f = 0; f < n; ++f)
        if (closure_leq(product(f, g), product(f, h))) return EabTriple{pool[f], pool[g], pool[h]};
    }
  }
  return std::nullopt;
}

}  // namespace semistar
