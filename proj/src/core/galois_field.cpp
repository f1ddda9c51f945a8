#include "semistar/galois_field.hpp"

#include "semistar/error.hpp"

namespace semistar {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> to_digits(GaloisField::Code a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

GaloisField::Code from_digits(const std::vector<int>& d, int p) {
  GaloisField::Code a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + static_cast<GaloisField::Code>(*it);
  return a;
}

// Multiplies by the root x modulo the monic modulus.
std::vector<int> times_root(const std::vector<int>& d, const std::vector<int>& modulus, int p) {
  const int m = static_cast<int>(d.size());
  std::vector<int> out(m, 0);
  const int carry = d[m - 1];
  for (int i = m - 1; i > 0; --i) out[i] = d[i - 1];
  out[0] = 0;
  for (int i = 0; i < m; ++i) out[i] = ((out[i] - carry * modulus[i]) % p + p) % p;
  return out;
}

}  // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field characteristic must be prime");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  order_ = 1;
  for (int i = 0; i < m; ++i) {
    order_ *= static_cast<Code>(p);
    if (order_ > (1u << 16)) throw Error(ErrorCode::InvalidArgument, "field too large");
  }

  add_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  for (Code a = 0; a < order_; ++a) {
    auto da = to_digits(a, p, m);
    std::vector<int> dn(m);
    for (int i = 0; i < m; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = from_digits(dn, p);
    for (Code b = 0; b < order_; ++b) {
      auto db = to_digits(b, p, m);
      std::vector<int> ds(m);
      for (int i = 0; i < m; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * order_ + b] = from_digits(ds, p);
    }
  }

  // Search monic moduli of degree m (lower coefficients enumerated as a
  // code) for one whose root generates the multiplicative group.
  const Code group = order_ - 1;
  for (Code low = 0; low < order_; ++low) {
    std::vector<int> modulus = to_digits(low, p, m);
    std::vector<int> power(m, 0);
    power[0] = 1;
    std::vector<Code> exps;
    exps.reserve(group);
    bool primitive = true;
    for (Code k = 0; k < group; ++k) {
      Code c = from_digits(power, p);
      if (k > 0 && c == 1) {
        primitive = false;
        break;
      }
      if (c == 0) {
        primitive = false;
        break;
      }
      exps.push_back(c);
      power = times_root(power, modulus, p);
    }
    if (!primitive || from_digits(power, p) != 1) continue;
    modulus_ = modulus;
    modulus_.push_back(1);
    exp_ = std::move(exps);
    log_.assign(order_, -1);
    for (Code k = 0; k < group; ++k) log_[exp_[k]] = static_cast<int>(k);
    return;
  }
  throw Error(ErrorCode::InvalidArgument, "no primitive modulus found");
}

GaloisField::Code GaloisField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const auto group = static_cast<int>(order_ - 1);
  return exp_[(log_[a] + log_[b]) % group];
}

GaloisField::Code GaloisField::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::NotInvertible, "zero has no inverse in a field");
  const auto group = static_cast<int>(order_ - 1);
  return exp_[(group - log_[a]) % group];
}

}  // namespace semistar
