#pragma once

#include <functional>

#include "rhh/hochschild.hpp"

namespace rhh::test {

/// Degree-1 cochain on a one-object algebra from the images of basis elements
/// (given in the complex's own basis).
inline Cochain derivation_cochain(const CochainComplex& cx, const std::vector<Vector>& images) {
  Cochain c = cx.zero(1);
  const auto& l = cx.layout(1);
  for (std::size_t t = 0; t < l.num_tuples(); ++t) {
    int u = l.tuple(t)[0];
    for (std::size_t k = 0; k < l.block_size(t); ++k) c.coeffs[l.offset(t) + k] = images[static_cast<std::size_t>(u)][k];
  }
  c.normalized = cx.is_normalized(c);
  return c;
}

/// Value of a one-object cochain on a basis tuple, as a dense vector.
inline Vector eval(const CochainComplex& cx, const Cochain& x, std::vector<int> tuple) {
  const auto& l = cx.layout(x.degree);
  std::size_t t = x.degree == 0 ? l.find(std::vector<int>{0}) : l.find(tuple);
  Vector v(l.block_size(t));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x.coeffs[l.offset(t) + k];
  return v;
}

// Product of basis-coordinate vectors in a one-object algebra, computed from
// the structure constants alone.
inline Vector times(const FDCategory& c, const Vector& a, const Vector& b) { return c.multiply(a, b); }

inline Vector unit_vec(std::size_t d, int i) {
  Vector v(d, 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

// Linear extension of a one-object degree-1 cochain.
inline Vector apply1(const CochainComplex& cx, const Cochain& x, const Vector& v) {
  const PrimeField& f = cx.field();
  Vector out(cx.category().dim(), 0);
  for (std::size_t u = 0; u < v.size(); ++u) {
    if (v[u] == 0) continue;
    Vector xu = eval(cx, x, {static_cast<int>(u)});
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(v[u], xu[k]));
  }
  return out;
}

inline Vector apply2(const CochainComplex& cx, const Cochain& x, const Vector& a, const Vector& b) {
  const PrimeField& f = cx.field();
  Vector out(cx.category().dim(), 0);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t w = 0; w < b.size(); ++w) {
      Residue c = f.mul(a[u], b[w]);
      if (c == 0) continue;
      Vector xv = eval(cx, x, {static_cast<int>(u), static_cast<int>(w)});
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.add(out[k], f.mul(c, xv[k]));
    }
  return out;
}

inline Vector vadd(const PrimeField& f, Vector a, const Vector& b, Residue c = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(c, b[i]));
  return a;
}

}  // namespace rhh::test
