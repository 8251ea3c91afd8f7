#include <string>

#include "rhh/error.hpp"
#include "rhh/hh1.hpp"
#include "rhh/hochschild.hpp"

namespace rhh {

Vector derivation_commutator(const FDCategory& c, std::span<const Residue> d1, std::span<const Residue> d2) {
  DerivationCoords dc(c);
  PrimeMatrix m1 = dc.to_matrix(d1), m2 = dc.to_matrix(d2);
  PrimeMatrix a = m1 * m2, b = m2 * m1;
  Vector va = dc.from_matrix(a), vb = dc.from_matrix(b);
  axpy(c.field(), va, vb, c.field().p() - 1);
  return va;
}

Vector derivation_power(const FDCategory& c, std::span<const Residue> d, std::uint64_t k) {
  DerivationCoords dc(c);
  PrimeMatrix m = dc.to_matrix(d);
  PrimeMatrix r = PrimeMatrix::identity(c.field(), c.dim());
  for (std::uint64_t i = 0; i < k; ++i) r = r * m;
  return dc.from_matrix(r);
}

HH1 compute_hh1(const FDCategory& a) {
  FDCategory c = a;
  PrimeMatrix der = derivations(c);
  PrimeMatrix inn = inner_derivations(c);
  QuotientBasis q = quotient(der, inn);
  const std::size_t n = q.dim();
  RestrictedLie l = zero_lie(c.field().p(), n);
  std::vector<Vector> reps = q.class_basis.row_vectors();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) l.bracket[i][j] = quotient_coords(q, derivation_commutator(c, reps[i], reps[j]));
    l.pmap[i] = quotient_coords(q, derivation_power(c, reps[i], c.field().p()));
  }
  return HH1{std::move(c), std::move(der), std::move(inn), std::move(q), std::move(l)};
}

RestrictedLie hh1_restricted(const FDCategory& a) { return compute_hh1(a).lie; }

Vector hh1_class(const HH1& h, std::span<const Residue> derivation) { return quotient_coords(h.quotient, derivation); }

Vector hh1_representative(const HH1& h, std::span<const Residue> coords) { return quotient_lift(h.quotient, coords); }

Vector hh1_p_power(const HH1& h, std::span<const Residue> coords) {
  Vector d = hh1_representative(h, coords);
  return hh1_class(h, derivation_power(h.category, d, h.category.field().p()));
}

namespace {

Cochain derivation_cochain(const CochainComplex& cx, std::span<const Residue> d) {
  const FDCategory& c = cx.category();
  DerivationCoords dc(c);
  const auto& l = cx.layout(1);
  Cochain x = cx.zero(1);
  for (std::size_t u = 0; u < c.dim(); ++u) {
    int ui = static_cast<int>(u);
    std::size_t t = l.find(std::span<const int>(&ui, 1));
    for (std::size_t k = 0; k < l.block_size(t); ++k) x.coeffs[l.offset(t) + k] = d[dc.offset(ui) + k];
  }
  x.normalized = cx.is_normalized(x);
  return x;
}

std::string vec_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

CrosscheckReport crosscheck_hh1(const FDCategory& a) {
  CrosscheckReport rep;
  HH1 h = compute_hh1(with_unit_basis(a));
  CochainComplex cx(h.category);
  const PrimeField& f = cx.field();
  rep.fast_dim = h.lie.dim;
  rep.complex_dim = cx.hh(1, true).dim();
  auto miss = [&](std::string m) {
    rep.match = false;
    rep.mismatches.push_back(std::move(m));
  };
  if (rep.fast_dim != rep.complex_dim) {
    miss("dimension " + std::to_string(rep.fast_dim) + " vs " + std::to_string(rep.complex_dim));
    return rep;
  }
  const std::size_t n = rep.fast_dim;
  std::vector<Cochain> xs;
  PrimeMatrix cls(f, 0, n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(derivation_cochain(cx, h.quotient.class_basis.row(i)));
    cls.append_row(class_of(cx, xs.back()).coords);
  }
  if (rank(cls) != n) {
    miss("representatives are dependent in the complex");
    return rep;
  }
  auto expected = [&](const Vector& coords) { return mul(coords, cls); };
  for (std::size_t i = 0; i < n; ++i) {
    Vector got = p_power_class(cx, class_of(cx, xs[i])).coords;
    if (got != expected(h.lie.pmap[i]))
      miss("p-map of basis " + std::to_string(i) + ": complex " + vec_str(got) + ", derivations " +
           vec_str(expected(h.lie.pmap[i])));
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = class_of(cx, bracket(cx, xs[i], xs[j])).coords;
      if (b != expected(h.lie.bracket[i][j]))
        miss("bracket (" + std::to_string(i) + "," + std::to_string(j) + "): complex " + vec_str(b) +
             ", derivations " + vec_str(expected(h.lie.bracket[i][j])));
    }
  }
  return rep;
}

}  // namespace rhh
