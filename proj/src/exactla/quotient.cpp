#include "rhh/error.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

QuotientBasis quotient(const PrimeMatrix& z, const PrimeMatrix& b) {
  const PrimeField& f = z.field();
  if (z.cols() != b.cols() && b.rows() > 0) {
    throw Error(ErrorCode::DimensionMismatch, "quotient ambient dimensions differ");
  }
  const std::size_t n = z.cols();
  QuotientBasis q{n,
                  PrimeMatrix(f, 0, n),
                  {},
                  PrimeMatrix(f, 0, n),
                  PrimeMatrix(f, 0, n),
                  PrimeMatrix(f, 0, 0)};

  RrefResult zr = rref(z);
  q.cocycle_basis = zr.reduced.row_slice(0, zr.rank);
  q.cocycle_pivots = zr.pivots;
  if (b.rows() > 0) q.boundary_basis = row_space_basis(b);

  EchelonBasis zspan(f, n);
  for (std::size_t i = 0; i < q.cocycle_basis.rows(); ++i) zspan.insert(q.cocycle_basis.row(i));
  for (std::size_t i = 0; i < q.boundary_basis.rows(); ++i) {
    if (!zspan.contains(q.boundary_basis.row(i))) {
      throw Error(ErrorCode::ContainmentViolation,
                  "boundary basis row " + std::to_string(i) + " is not in the cocycle space");
    }
  }

  EchelonBasis span(f, n);
  for (std::size_t i = 0; i < q.boundary_basis.rows(); ++i) span.insert(q.boundary_basis.row(i));
  for (std::size_t i = 0; i < q.cocycle_basis.rows(); ++i) {
    if (span.insert(q.cocycle_basis.row(i))) q.class_basis.append_row(q.cocycle_basis.row(i));
  }

  // Coordinates of each Z basis row against [boundary; classes], via rref of [K | I].
  const std::size_t zb = q.boundary_basis.rows();
  const std::size_t zc = q.class_basis.rows();
  const std::size_t zdim = zb + zc;
  q.projection = PrimeMatrix(f, zdim, zc);
  if (zdim == 0) return q;
  PrimeMatrix k = q.boundary_basis.vconcat(q.class_basis);
  RrefResult kr = rref(k.hconcat(PrimeMatrix::identity(f, zdim)));
  // kr.reduced = [R | T] with R = T K, R rows 0..zdim-1 have pivots in the K block.
  PrimeMatrix t = kr.reduced.col_slice(n, zdim);
  for (std::size_t i = 0; i < zdim; ++i) {
    auto zrow = q.cocycle_basis.row(i);
    // coords of zrow against R rows are its entries at R's pivot columns
    Vector rc(zdim, 0);
    for (std::size_t j = 0; j < zdim; ++j) rc[j] = zrow[kr.pivots[j]];
    Vector kc = mul(rc, t);
    for (std::size_t j = 0; j < zc; ++j) q.projection(i, j) = kc[zb + j];
  }
  return q;
}

namespace {
Vector cocycle_coords(const QuotientBasis& q, std::span<const Residue> v, bool& inside) {
  Vector zc(q.cocycle_basis.rows(), 0);
  for (std::size_t i = 0; i < zc.size(); ++i) zc[i] = v[q.cocycle_pivots[i]];
  Vector back = mul(zc, q.cocycle_basis);
  inside = true;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (back[j] != v[j]) {
      inside = false;
      break;
    }
  }
  return zc;
}
}  // namespace

bool in_cocycles(const QuotientBasis& q, std::span<const Residue> v) {
  if (v.size() != q.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "vector length");
  bool inside = false;
  cocycle_coords(q, v, inside);
  return inside;
}

Vector quotient_coords(const QuotientBasis& q, std::span<const Residue> v) {
  if (v.size() != q.ambient_dim) throw Error(ErrorCode::DimensionMismatch, "vector length");
  bool inside = false;
  Vector zc = cocycle_coords(q, v, inside);
  if (!inside) throw Error(ErrorCode::NotACocycle, "vector is not in the cocycle space");
  if (q.dim() == 0) return {};
  return mul(zc, q.projection);
}

Vector quotient_lift(const QuotientBasis& q, std::span<const Residue> coords) {
  if (coords.size() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "class coordinate length");
  if (q.dim() == 0) return Vector(q.ambient_dim, 0);
  return mul(coords, q.class_basis);
}

}  // namespace rhh
