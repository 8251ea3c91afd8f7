#include <string>

#include "rhh/error.hpp"
#include "rhh/hochschild.hpp"

namespace rhh {

// ∂x(u_1..u_{n+1}) = x(u_1..u_n) u_{n+1} + (-1)^{n+1} u_1 x(u_2..u_{n+1})
//                  + (-1)^n Σ_i (-1)^{i-1} x(.., u_i u_{i+1}, ..)
PrimeMatrix differential_matrix(const CochainComplex& cx, int degree, bool normalized) {
  const auto& cat = cx.category();
  const PrimeField& f = cx.field();
  const int n = degree;
  const auto& lin = cx.layout(n);
  const auto& lout = cx.layout(n + 1);
  const std::size_t rows = normalized ? lin.normalized_size() : lin.size();
  const std::size_t cols = normalized ? lout.normalized_size() : lout.size();
  if (rows * cols > cx.limits().max_matrix_entries)
    throw Error(ErrorCode::ResourceBound, "differential in degree " + std::to_string(n) + " needs a " +
                                              std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
  PrimeMatrix d(f, rows, cols);

  auto row_base = [&](std::size_t t) -> long {
    if (t == CochainLayout::npos) return -1;
    return normalized ? lin.normalized_offset(t) : static_cast<long>(lin.offset(t));
  };
  auto add = [&](std::size_t r, std::size_t c, Residue v) { d(r, c) = f.add(d(r, c), v); };
  const Residue sign_left = (n + 1) % 2 == 0 ? 1 : f.p() - 1;

  std::vector<int> sub(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < lout.num_tuples(); ++t) {
    long cb = normalized ? lout.normalized_offset(t) : static_cast<long>(lout.offset(t));
    if (cb < 0) continue;
    const std::size_t col = static_cast<std::size_t>(cb);
    auto tup = lout.tuple(t);
    const int first = tup.front(), last = tup.back();

    // x(u_1..u_n) u_{n+1}
    {
      std::size_t ti;
      if (n == 0) {
        int obj = cat.target(first);
        ti = lin.find(std::span<const int>(&obj, 1));
      } else {
        ti = lin.find(tup.first(static_cast<std::size_t>(n)));
      }
      long rb = row_base(ti);
      if (rb >= 0) {
        const auto& blk = cat.hom(lin.source(ti), lin.target(ti));
        for (std::size_t k = 0; k < blk.size(); ++k)
          for (const auto& c : cat.compose(blk[k], last))
            add(static_cast<std::size_t>(rb) + k, col + static_cast<std::size_t>(cat.local_index(c.index)), c.coeff);
      }
    }
    // (-1)^{n+1} u_1 x(u_2..u_{n+1})
    {
      std::size_t ti;
      if (n == 0) {
        int obj = cat.source(first);
        ti = lin.find(std::span<const int>(&obj, 1));
      } else {
        ti = lin.find(tup.subspan(1));
      }
      long rb = row_base(ti);
      if (rb >= 0) {
        const auto& blk = cat.hom(lin.source(ti), lin.target(ti));
        for (std::size_t k = 0; k < blk.size(); ++k)
          for (const auto& c : cat.compose(first, blk[k]))
            add(static_cast<std::size_t>(rb) + k, col + static_cast<std::size_t>(cat.local_index(c.index)),
                f.mul(sign_left, c.coeff));
      }
    }
    // (-1)^n (-1)^{i-1} x(.., u_i u_{i+1}, ..)
    for (int i = 1; i <= n; ++i) {
      const Residue sgn = (n + i - 1) % 2 == 0 ? 1 : f.p() - 1;
      for (int j = 0, w = 0; j <= n; ++j) {
        if (j == i) continue;
        sub[static_cast<std::size_t>(w++)] = tup[static_cast<std::size_t>(j)];
      }
      const auto& prod = cat.compose(tup[static_cast<std::size_t>(i) - 1], tup[static_cast<std::size_t>(i)]);
      for (const auto& c : prod) {
        sub[static_cast<std::size_t>(i) - 1] = c.index;
        long rb = row_base(lin.find(sub));
        if (rb < 0) continue;
        const std::size_t block = lout.block_size(t);
        for (std::size_t k = 0; k < block; ++k) add(static_cast<std::size_t>(rb) + k, col + k, f.mul(sgn, c.coeff));
      }
    }
  }
  return d;
}

HHSpace cohomology(const CochainComplex& cx, int degree, bool normalized) {
  if (degree < 0) throw Error(ErrorCode::DegreeUnderflow, "negative cohomological degree " + std::to_string(degree));
  if (degree == 0) normalized = true;
  PrimeMatrix z = left_kernel_basis(differential_matrix(cx, degree, normalized));
  const auto& lin = cx.layout(degree);
  const std::size_t dim = normalized ? lin.normalized_size() : lin.size();
  PrimeMatrix b(cx.field(), 0, dim);
  if (degree > 0) b = row_space_basis(differential_matrix(cx, degree - 1, normalized));
  return HHSpace{degree, normalized, quotient(z, b)};
}

CohomologyClass class_of(const CochainComplex& cx, const Cochain& x, bool normalized) {
  if (x.degree == 0) normalized = true;
  const HHSpace& h = cx.hh(x.degree, normalized);
  Vector v = cx.coordinates(x, normalized);
  return CohomologyClass{x.degree, normalized, quotient_coords(h.quotient, v), x};
}

CohomologyClass class_from_coords(const CochainComplex& cx, int degree, std::span<const Residue> coords,
                                  bool normalized) {
  if (degree == 0) normalized = true;
  const HHSpace& h = cx.hh(degree, normalized);
  if (coords.size() != h.dim())
    throw Error(ErrorCode::DimensionMismatch, "class coordinates have length " + std::to_string(coords.size()) +
                                                  ", HH^" + std::to_string(degree) + " has dimension " +
                                                  std::to_string(h.dim()));
  Vector v = quotient_lift(h.quotient, coords);
  Cochain rep = cx.from_coordinates(degree, v, normalized);
  return CohomologyClass{degree, normalized, Vector(coords.begin(), coords.end()), std::move(rep)};
}

Cochain random_cocycle(const CochainComplex& cx, int degree, Rng& rng, bool normalized) {
  const HHSpace& h = cx.hh(degree, normalized);
  std::uniform_int_distribution<Residue> dist(0, cx.field().p() - 1);
  Vector coords(h.quotient.cocycle_basis.rows());
  for (auto& c : coords) c = dist(rng);
  return cx.from_coordinates(degree, mul(coords, h.quotient.cocycle_basis), normalized);
}

bool same_class(const CochainComplex& cx, const Cochain& x, const Cochain& y, bool normalized) {
  if (x.degree != y.degree) return false;
  Vector a = class_of(cx, x, normalized).coords;
  Vector b = class_of(cx, y, normalized).coords;
  return a == b;
}

}  // namespace rhh
