#ifndef SEMISTAR_ELEMENT_HPP
#define SEMISTAR_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semistar/galois_field.hpp"

namespace semistar {

// A point of the value group Z or Z^2, compared lexicographically. Rank-one
// backends keep the second coordinate at zero.
struct Exponent {
  int major = 0;
  int minor = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;

  Exponent operator+(const Exponent& o) const { return {major + o.major, minor + o.minor}; }
  Exponent operator-(const Exponent& o) const { return {major - o.major, minor - o.minor}; }
  Exponent operator-() const { return {-major, -minor}; }
};

struct Term {
  Exponent exponent;
  GaloisField::Code coeff = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

// An element of the quotient field K, written as a finite sum of terms
// c * t^g with coefficients in a finite field and exponents in the value
// group. Terms are kept sorted by exponent with no zero coefficients, so the
// first term carries the valuation and the leading coefficient.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Term> terms);

  static Element monomial(Exponent e, GaloisField::Code c = 1) { return Element({{e, c}}); }
  static Element monomial(int e, GaloisField::Code c = 1) { return monomial(Exponent{e, 0}, c); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Valuation (lexicographic minimum of the support); requires nonzero.
  Exponent value() const;
  GaloisField::Code leading_coeff() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b);

 private:
  std::vector<Term> terms_;
};

// Exact arithmetic on Element for one coefficient field. Shared read-only by a
// backend and everything built on it.
class ElementArith {
 public:
  explicit ElementArith(std::shared_ptr<const GaloisField> field) : field_(std::move(field)) {}

  const GaloisField& field() const noexcept { return *field_; }

  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, GaloisField::Code c) const;
  // Exact inverse. Only monomials are units of the Laurent representation;
  // anything else raises NotInvertible.
  Element inverse(const Element& a) const;

  Element one() const { return Element::monomial(Exponent{0, 0}); }

  std::string format(const Element& a, int rank) const;

 private:
  std::shared_ptr<const GaloisField> field_;
};

}  // namespace semistar

#endif
