#pragma once

// Independent reference computations used by the tests. Nothing here goes
// through the library's linear algebra.

#include <cstdint>
#include <vector>

namespace rhh::oracle {

/// Polynomials in F_p[x]/(x^n) as coefficient vectors of length n.
struct TruncatedPoly {
  std::uint32_t p;
  int n;

  using Poly = std::vector<long>;

  long mod(long v) const { return ((v % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p); }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) r[static_cast<std::size_t>(i + j)] = mod(r[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]);
    return r;
  }
  Poly derivative(const Poly& a) const {
    Poly r(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) r[static_cast<std::size_t>(i - 1)] = mod(static_cast<long>(i) * a[static_cast<std::size_t>(i)]);
    return r;
  }
  /// The derivation with D(x) = q applied to f: f'(x) q(x).
  Poly apply(const Poly& q, const Poly& f) const { return mul(derivative(f), q); }
  Poly monomial(int k) const {
    Poly r(static_cast<std::size_t>(n), 0);
    if (k < n) r[static_cast<std::size_t>(k)] = 1;
    return r;
  }
  /// [D_q1, D_q2](x) = D_q1(q2) - D_q2(q1).
  Poly bracket(const Poly& q1, const Poly& q2) const {
    Poly a = apply(q1, q2), b = apply(q2, q1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod(a[i] - b[i]);
    return a;
  }
  /// D_q^k(x) by iterating the derivation on the polynomial x.
  Poly power(const Poly& q, std::uint64_t k) const {
    Poly f = monomial(1);
    for (std::uint64_t i = 0; i < k; ++i) f = apply(q, f);
    return f;
  }
};

/// W(1;1): basis e_i = x^{i+1} d/dx, i = -1..p-2, stored at index i + 1.
struct Witt {
  std::uint32_t p;
  /// Coefficient vector of [e_i, e_j] = (j - i) e_{i+j}.
  std::vector<long> bracket(int i, int j) const {
    std::vector<long> r(p, 0);
    int k = i + j;
    if (k >= -1 && k <= static_cast<int>(p) - 2)
      r[static_cast<std::size_t>(k + 1)] = ((j - i) % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p);
    return r;
  }
  /// e_0^[p] = e_0, all other basis p-maps vanish.
  std::vector<long> pmap(int i) const {
    std::vector<long> r(p, 0);
    if (i == 0) r[1] = 1;
    return r;
  }
};

}  // namespace rhh::oracle
