#include <algorithm>
#include <string>

#include "rhh/error.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

RrefResult rref(PrimeMatrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
    std::size_t pr = next_row;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(pr, next_row);
    // Entries left of col in the pivot row are already zero.
    auto pivot_tail = m.row(next_row).subspan(col);
    Residue inv = f.inv(m(next_row, col));
    if (inv != 1) scale(f, pivot_tail, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      Residue x = m(r, col);
      if (x != 0) axpy(f, m.row(r).subspan(col), pivot_tail, f.neg(x));
    }
    pivots.push_back(col);
    ++next_row;
  }
  std::size_t rank = pivots.size();
  return {std::move(m), rank, std::move(pivots)};
}

std::size_t rank(const PrimeMatrix& m) { return rref(m).rank; }

PrimeMatrix kernel_basis(const PrimeMatrix& m) {
  const PrimeField& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  PrimeMatrix basis(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

PrimeMatrix left_kernel_basis(const PrimeMatrix& m) {
  const PrimeField& f = m.field();
  if (m.rows() == 0) return PrimeMatrix(f, 0, 0);
  RrefResult r = rref(m.hconcat(PrimeMatrix::identity(f, m.rows())));
  // Rows past the pivots living in the M block have zero M part.
  std::size_t first = 0;
  while (first < r.rank && r.pivots[first] < m.cols()) ++first;
  return r.reduced.row_slice(first, m.rows() - first).col_slice(m.cols(), m.rows());
}

PrimeMatrix row_space_basis(const PrimeMatrix& m) {
  RrefResult r = rref(m);
  return r.reduced.row_slice(0, r.rank);
}

EchelonBasis::EchelonBasis(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

Vector EchelonBasis::reduce(std::span<const Residue> v) const {
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "echelon reduce length");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue x = w[pivots_[i]];
    if (x != 0) axpy(field_, w, rows_[i], field_.neg(x));
  }
  return w;
}

bool EchelonBasis::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

bool EchelonBasis::insert(std::span<const Residue> v) {
  Vector w = reduce(v);
  auto it = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (it == w.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - w.begin());
  scale(field_, w, field_.inv(w[piv]));
  // Keep existing rows reduced at the new pivot so reduce() stays one pass.
  for (auto& row : rows_) {
    Residue x = row[piv];
    if (x != 0) axpy(field_, row, w, field_.neg(x));
  }
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

}  // namespace rhh

namespace rhh {

std::optional<Vector> solve(const PrimeMatrix& m, std::span<const Residue> b) {
  const PrimeField& f = m.field();
  if (b.size() != m.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side has length " + std::to_string(b.size()) + ", matrix has " +
                                                  std::to_string(m.rows()) + " rows");
  PrimeMatrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r] % f.p();
  }
  RrefResult rr = rref(std::move(aug));
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < rr.rank; ++i) {
    std::size_t pc = rr.pivots[i];
    if (pc == m.cols()) return std::nullopt;
    x[pc] = rr.reduced(i, m.cols());
  }
  return x;
}

std::optional<PrimeMatrix> inverse(const PrimeMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RrefResult rr = rref(m.hconcat(PrimeMatrix::identity(m.field(), n)));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] >= n)) return std::nullopt;
  return rr.reduced.col_slice(n, n);
}

}  // namespace rhh
