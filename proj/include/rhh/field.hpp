#pragma once

#include <cstdint>
#include <vector>

namespace rhh {

using Residue = std::uint32_t;

/// The prime field F_p. Moduli are limited to p <= 2^16 so that a product of
/// two residues plus a residue fits comfortably in 64 bits and, for p < 2^15,
/// in the 31-bit lanes used by the vector kernels.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  double inv_p() const noexcept { return inv_p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  /// Symmetric lift to (-p/2, p/2], used only for printing.
  std::int64_t lift(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  /// (-1)^e as a residue.
  Residue sign(long e) const noexcept { return (e % 2 == 0) ? 1 : p_ - 1; }
  /// Binomial coefficient C(n, k) reduced mod p.
  Residue binomial(unsigned n, unsigned k) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  double inv_p_;
};

bool is_prime(std::uint32_t n);

using Vector = std::vector<Residue>;

}  // namespace rhh
