#include <cctype>
#include <sstream>

#include "semistar/calculus.hpp"
#include "semistar/harness.hpp"

namespace semistar {

namespace {

[[noreturn]] void parse_error(const std::string& expr, std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos) + " in '" + expr + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

long long to_int(const std::string& s, const std::string& expr) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    parse_error(expr, 0, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) parse_error(expr, 0, "expected an integer, got '" + s + "'");
  return v;
}

// n | t^n | t^(a,b) | c*t^n
Element parse_term(const std::string& raw, const ContextPtr& ctx, const std::string& expr) {
  std::string s = trim(raw);
  if (s.empty()) parse_error(expr, 0, "empty term");
  GaloisField::Code coeff = 1;
  if (const auto star = s.find('*'); star != std::string::npos) {
    const auto c = to_int(trim(s.substr(0, star)), expr);
    if (c <= 0 || static_cast<std::size_t>(c) >= ctx->arith().field().order())
      parse_error(expr, 0, "coefficient " + std::to_string(c) + " is not a nonzero field element");
    coeff = static_cast<GaloisField::Code>(c);
    s = trim(s.substr(star + 1));
  }
  if (s.empty() || s[0] != 't') return Element::monomial(static_cast<int>(to_int(s, expr)), coeff);
  if (s == "t") return Element::monomial(1, coeff);
  if (s.size() < 3 || s[1] != '^') parse_error(expr, 0, "malformed monomial '" + s + "'");
  std::string e = s.substr(2);
  if (e.front() == '(') {
    if (e.back() != ')') parse_error(expr, 0, "unbalanced exponent '" + e + "'");
    e = e.substr(1, e.size() - 2);
    const auto comma = e.find(',');
    if (comma == std::string::npos) return Element::monomial(static_cast<int>(to_int(trim(e), expr)), coeff);
    const auto a = to_int(trim(e.substr(0, comma)), expr);
    const auto b = to_int(trim(e.substr(comma + 1)), expr);
    return Element::monomial(Exponent{static_cast<int>(a), static_cast<int>(b)}, coeff);
  }
  return Element::monomial(static_cast<int>(to_int(e, expr)), coeff);
}

Element parse_element(const std::string& s, const ContextPtr& ctx, const std::string& expr) {
  Element out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || (s[i] == '+' && depth == 0)) {
      out = ctx->arith().add(out, parse_term(s.substr(start, i - start), ctx, expr));
      start = i + 1;
    }
  }
  return out;
}

Module parse_ideal(const std::string& s, const ContextPtr& ctx, const std::string& expr) {
  if (s == "D") return ctx->unit();
  if (s == "K") return Module::field();
  if (s == "0") return Module::zero();
  if (s.front() == '(') {
    const std::string body = s.substr(1, s.size() - 2);
    std::vector<Element> gens;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '(') ++depth;
      if (i < body.size() && body[i] == ')') --depth;
      if (i == body.size() || (body[i] == ',' && depth == 0)) {
        gens.push_back(parse_element(body.substr(start, i - start), ctx, expr));
        start = i + 1;
      }
    }
    for (const auto& g : gens)
      if (!g.is_zero()) return ctx->span(gens);
    return Module::zero();
  }
  for (const auto& p : ctx->primes())
    if (p.name == s) return p.ideal;
  throw Error(ErrorCode::UnknownName, "unknown ideal '" + s + "'");
}

std::string format_element(const ContextPtr& ctx, const Element& x) {
  if (ctx->kind() == BackendKind::NumericalSemigroup && x.is_monomial() && x.leading_coeff() == 1)
    return std::to_string(x.value().major);
  return ctx->arith().format(x, ctx->rank());
}

std::string format_module(const ContextPtr& ctx, const Module& m) {
  if (m.is_zero()) return "0";
  if (m.is_field()) return "K";
  if (ctx->leq(m, ctx->unit()) && ctx->leq(ctx->unit(), m)) return "D";
  const auto gens = ctx->generators(m);
  if (!gens) return ctx->format(m);
  std::string out = "(";
  for (std::size_t i = 0; i < gens->size(); ++i) out += (i ? "," : "") + format_element(ctx, (*gens)[i]);
  return out + ")";
}

}  // namespace

std::string eval_expression(const ContextPtr& ctx, const std::string& raw) {
  const std::string expr = trim(raw);
  if (expr.empty()) parse_error(raw, 0, "empty expression");
  std::size_t pos = 0;
  std::string ideal;
  if (expr[0] == '(') {
    int depth = 0;
    for (; pos < expr.size(); ++pos) {
      if (expr[pos] == '(') ++depth;
      if (expr[pos] == ')' && --depth == 0) break;
    }
    if (pos == expr.size()) parse_error(expr, 0, "unbalanced parentheses");
    ideal = expr.substr(0, ++pos);
  } else {
    pos = expr.find('^');
    if (pos == std::string::npos) pos = expr.size();
    ideal = trim(expr.substr(0, pos));
  }
  Module m = parse_ideal(ideal, ctx, expr);

  // ^op chains; op names may carry braces but never '^'
  while (pos < expr.size()) {
    if (expr[pos] != '^') parse_error(expr, pos, "expected '^'");
    const auto next = expr.find('^', pos + 1);
    const std::string name = trim(expr.substr(pos + 1, next == std::string::npos ? std::string::npos : next - pos - 1));
    if (name.empty()) parse_error(expr, pos, "missing operation name");
    const auto value = make_op(ctx, name)(m);
    m = value.module;
    pos = next == std::string::npos ? expr.size() : next;
  }
  return format_module(ctx, m);
}

}  // namespace semistar
