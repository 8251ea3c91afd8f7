#include <algorithm>
#include <string>

#include "rhh/error.hpp"
#include "rhh/matrix.hpp"
#include "rhh/simd.hpp"

namespace rhh {

PrimeMatrix::PrimeMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

PrimeMatrix::PrimeMatrix(PrimeField field, std::size_t cols, const std::vector<std::vector<long>>& rows)
    : field_(field), rows_(rows.size()), cols_(cols), data_(rows.size() * cols, 0) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has wrong length");
    }
    for (std::size_t c = 0; c < cols; ++c) data_[r * cols + c] = field_.from_int(rows[r][c]);
  }
}

PrimeMatrix PrimeMatrix::identity(PrimeField field, std::size_t n) {
  PrimeMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PrimeMatrix PrimeMatrix::from_rows(PrimeField field, std::size_t cols, std::span<const Vector> rows) {
  PrimeMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(r) + " has wrong length");
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vector PrimeMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

std::vector<Vector> PrimeMatrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void PrimeMatrix::append_row(std::span<const Residue> v) {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "append_row length");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void PrimeMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

void PrimeMatrix::add_row_multiple(std::size_t dst, std::size_t src, Residue c) {
  axpy(field_, row(dst), row(src), c);
}

void PrimeMatrix::scale_row(std::size_t r, Residue c) { scale(field_, row(r), c); }

PrimeMatrix PrimeMatrix::transpose() const {
  PrimeMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PrimeMatrix PrimeMatrix::row_slice(std::size_t first, std::size_t count) const {
  PrimeMatrix m(field_, count, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_, m.data_.begin());
  return m;
}

PrimeMatrix PrimeMatrix::col_slice(std::size_t first, std::size_t count) const {
  PrimeMatrix m(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = row(r).subspan(first, count);
    std::copy(src.begin(), src.end(), m.row(r).begin());
  }
  return m;
}

PrimeMatrix PrimeMatrix::hconcat(const PrimeMatrix& other) const {
  if (other.rows_ != rows_) throw Error(ErrorCode::DimensionMismatch, "hconcat row counts");
  PrimeMatrix m(field_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto a = row(r);
    auto b = other.row(r);
    auto dst = m.row(r);
    std::copy(a.begin(), a.end(), dst.begin());
    std::copy(b.begin(), b.end(), dst.begin() + cols_);
  }
  return m;
}

PrimeMatrix PrimeMatrix::vconcat(const PrimeMatrix& other) const {
  if (other.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "vconcat column counts");
  PrimeMatrix m(field_, rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + data_.size());
  return m;
}

bool PrimeMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

PrimeMatrix operator*(const PrimeMatrix& a, const PrimeMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  PrimeMatrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Residue x = a(i, k);
      if (x != 0) axpy(a.field(), c.row(i), b.row(k), x);
    }
  }
  return c;
}

Vector mul(std::span<const Residue> v, const PrimeMatrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector-matrix shapes");
  Vector out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) axpy(m.field(), out, m.row(k), v[k]);
  }
  return out;
}

Vector mul(const PrimeMatrix& m, std::span<const Residue> v) {
  if (v.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
  const PrimeField& f = m.field();
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < v.size(); ++c) {
      acc += static_cast<std::uint64_t>(row[c]) * v[c];
      if ((c & 1023) == 1023) acc %= f.p();
    }
    out[r] = static_cast<Residue>(acc % f.p());
  }
  return out;
}

void axpy(const PrimeField& f, std::span<Residue> dst, std::span<const Residue> src, Residue c) {
  if (dst.size() != src.size()) throw Error(ErrorCode::DimensionMismatch, "axpy lengths");
  if (c == 0) return;
  simd::kernels_for(f.p()).axpy(dst.data(), src.data(), dst.size(), c, f.p(), f.inv_p());
}

void scale(const PrimeField& f, std::span<Residue> dst, Residue c) {
  simd::kernels_for(f.p()).scale(dst.data(), dst.size(), c, f.p(), f.inv_p());
}

bool is_zero(std::span<const Residue> v) {
  return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace rhh
