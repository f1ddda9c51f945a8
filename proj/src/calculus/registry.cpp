#include <algorithm>
#include <cctype>

#include "semistar/calculus.hpp"

namespace semistar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view list) {
  list = trim(list);
  if (list.size() >= 2 && list.front() == '{' && list.back() == '}') list = trim(list.substr(1, list.size() - 2));
  std::vector<std::string> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = trim(list.substr(0, comma));
    if (item.empty()) throw Error(ErrorCode::ParseError, "empty item in list");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

std::vector<std::size_t> prime_indices(const ContextPtr& ctx, std::string_view list) {
  std::vector<std::size_t> out;
  const auto& primes = ctx->primes();
  for (const auto& name : split_list(list)) {
    auto it = std::find_if(primes.begin(), primes.end(), [&](const PrimeSpec& p) { return p.name == name; });
    if (it == primes.end()) throw Error(ErrorCode::UnknownName, "unknown prime " + name + " in " + ctx->name());
    out.push_back(static_cast<std::size_t>(it - primes.begin()));
  }
  return out;
}

SemistarOp make_op(const ContextPtr& ctx, std::string_view name) {
  name = trim(name);
  if (name == "d") return identity_op(ctx);
  if (name == "e") return trivial_op(ctx);
  if (name == "v") return v_op(ctx);
  if (name == "t") return finite_type_op(v_op(ctx));
  if (name == "w") return stable_assoc(v_op(ctx));
  if (name == "b") {
    std::vector<std::string> names;
    for (const auto& t : ctx->valuation_family()) names.push_back(t.name);
    return wedge_op(ctx, names);
  }
  if (starts_with(name, "spectral:")) return spectral_op(ctx, prime_indices(ctx, name.substr(9)));
  if (starts_with(name, "wedge:")) return wedge_op(ctx, split_list(name.substr(6)));
  if (starts_with(name, "finite:")) return finite_type_op(make_op(ctx, name.substr(7)));
  if (starts_with(name, "stable_of:")) return stable_assoc(make_op(ctx, name.substr(10)));
  if (starts_with(name, "ab_of:")) return ab_op(make_op(ctx, name.substr(6)));
  if (starts_with(name, "from_ls:"))
    return op_of_localizing_system(spectral_localizing_system(ctx, prime_indices(ctx, name.substr(8))));
  throw Error(ErrorCode::UnknownName, "unknown operation '" + std::string(name) + "'");
}

}  // namespace semistar
