#include "rhh/field.hpp"

#include <string>

#include "rhh/error.hpp"

namespace rhh {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), inv_p_(1.0 / static_cast<double>(p)) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not a prime <= 65536");
  }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const noexcept {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorCode::BadParameter, "inverse of zero");
  return pow(a, p_ - 2);
}

Residue PrimeField::binomial(unsigned n, unsigned k) const {
  if (k > n) return 0;
  // Lucas' theorem keeps this exact for any n.
  Residue result = 1;
  while (n > 0 || k > 0) {
    unsigned ni = n % p_, ki = k % p_;
    if (ki > ni) return 0;
    Residue num = 1, den = 1;
    for (unsigned i = 0; i < ki; ++i) {
      num = mul(num, static_cast<Residue>(ni - i));
      den = mul(den, static_cast<Residue>(i + 1));
    }
    result = mul(result, mul(num, inv(den)));
    n /= p_;
    k /= p_;
  }
  return result;
}

}  // namespace rhh
