#ifndef SEMISTAR_GALOIS_FIELD_HPP
#define SEMISTAR_GALOIS_FIELD_HPP

#include <cstdint>
#include <vector>

namespace semistar {

// Finite field GF(p^m), p prime. Elements are encoded as integers in
// [0, p^m) whose base-p digits are the coefficients of a polynomial in a
// fixed root of the defining modulus. The prime subfield GF(p) is exactly
// the codes [0, p).
class GaloisField {
 public:
  using Code = std::uint32_t;

  GaloisField(int p, int m);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  Code order() const noexcept { return order_; }

  Code add(Code a, Code b) const { return add_[a * order_ + b]; }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;

  bool in_prime_subfield(Code a) const noexcept { return a < static_cast<Code>(p_); }

  // Coefficients of the defining modulus, constant term first (monic, degree m).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

 private:
  int p_;
  int m_;
  Code order_;
  std::vector<int> modulus_;
  std::vector<Code> add_;
  std::vector<Code> neg_;
  std::vector<Code> exp_;
  std::vector<int> log_;
};

}  // namespace semistar

#endif
