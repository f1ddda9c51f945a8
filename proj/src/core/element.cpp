#include "semistar/element.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "semistar/error.hpp"

namespace semistar {

Element::Element(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    if (!terms_.empty() && terms_.back().exponent == t.exponent)
      throw Error(ErrorCode::InvalidArgument, "duplicate exponent in element terms");
    terms_.push_back(t);
  }
}

Exponent Element::value() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  return terms_.front().exponent;
}

GaloisField::Code Element::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero");
  return terms_.front().coeff;
}

bool operator<(const Element& a, const Element& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const Term& x, const Term& y) {
        if (x.exponent != y.exponent) return x.exponent < y.exponent;
        return x.coeff < y.coeff;
      });
}

Element ElementArith::add(const Element& a, const Element& b) const {
  std::map<Exponent, GaloisField::Code> acc;
  for (const auto& t : a.terms()) acc[t.exponent] = t.coeff;
  for (const auto& t : b.terms()) {
    auto& c = acc[t.exponent];
    c = field_->add(c, t.coeff);
  }
  std::vector<Term> out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  return Element(std::move(out));
}

Element ElementArith::neg(const Element& a) const {
  std::vector<Term> out;
  for (const auto& t : a.terms()) out.push_back({t.exponent, field_->neg(t.coeff)});
  return Element(std::move(out));
}

Element ElementArith::mul(const Element& a, const Element& b) const {
  std::map<Exponent, GaloisField::Code> acc;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      auto& c = acc[x.exponent + y.exponent];
      c = field_->add(c, field_->mul(x.coeff, y.coeff));
    }
  std::vector<Term> out;
  for (const auto& [e, c] : acc)
    if (c != 0) out.push_back({e, c});
  return Element(std::move(out));
}

Element ElementArith::scale(const Element& a, GaloisField::Code c) const {
  if (c == 0) return {};
  std::vector<Term> out;
  for (const auto& t : a.terms()) out.push_back({t.exponent, field_->mul(t.coeff, c)});
  return Element(std::move(out));
}

Element ElementArith::inverse(const Element& a) const {
  if (!a.is_monomial()) throw Error(ErrorCode::NotInvertible, "only monomials are inverted exactly");
  const auto& t = a.terms().front();
  return Element::monomial(-t.exponent, field_->inv(t.coeff));
}

std::string ElementArith::format(const Element& a, int rank) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff != 1) os << '[' << t.coeff << ']';
    os << "t^";
    if (rank == 2)
      os << '(' << t.exponent.major << ',' << t.exponent.minor << ')';
    else
      os << t.exponent.major;
  }
  return os.str();
}

}  // namespace semistar
