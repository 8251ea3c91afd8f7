#pragma once

// Exact dense linear algebra over F_p.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rhh/field.hpp"

namespace rhh {

/// Dense row-major matrix of canonical residues.
class PrimeMatrix {
 public:
  PrimeMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Rows are reduced mod p; every row must have `cols` entries.
  PrimeMatrix(PrimeField field, std::size_t cols, const std::vector<std::vector<long>>& rows);

  static PrimeMatrix identity(PrimeField field, std::size_t n);
  /// Stacks vectors of equal length as rows.
  static PrimeMatrix from_rows(PrimeField field, std::size_t cols, std::span<const Vector> rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Residue> v);
  void swap_rows(std::size_t a, std::size_t b);
  /// row(dst) += c * row(src)
  void add_row_multiple(std::size_t dst, std::size_t src, Residue c);
  void scale_row(std::size_t r, Residue c);

  PrimeMatrix transpose() const;
  /// Rows [first, first+count).
  PrimeMatrix row_slice(std::size_t first, std::size_t count) const;
  /// Columns [first, first+count) of every row.
  PrimeMatrix col_slice(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation [this | other].
  PrimeMatrix hconcat(const PrimeMatrix& other) const;
  /// Vertical concatenation.
  PrimeMatrix vconcat(const PrimeMatrix& other) const;

  bool is_zero() const;

  friend bool operator==(const PrimeMatrix& a, const PrimeMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

PrimeMatrix operator*(const PrimeMatrix& a, const PrimeMatrix& b);
/// Row vector times matrix.
Vector mul(std::span<const Residue> v, const PrimeMatrix& m);
/// Matrix times column vector.
Vector mul(const PrimeMatrix& m, std::span<const Residue> v);

// Vector helpers; all operands share the field's modulus.
void axpy(const PrimeField& f, std::span<Residue> dst, std::span<const Residue> src, Residue c);
void scale(const PrimeField& f, std::span<Residue> dst, Residue c);
bool is_zero(std::span<const Residue> v);

struct RrefResult {
  PrimeMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen leftmost column first, then
/// topmost remaining row, so the result is reproducible bit for bit.
RrefResult rref(PrimeMatrix m);

std::size_t rank(const PrimeMatrix& m);

/// Rows form a basis of {v : M v = 0}.
PrimeMatrix kernel_basis(const PrimeMatrix& m);

/// Rows form a basis of {v : v M = 0}.
PrimeMatrix left_kernel_basis(const PrimeMatrix& m);

/// Nonzero rows of rref(m): a reduced basis of the row space.
PrimeMatrix row_space_basis(const PrimeMatrix& m);

/// Some x with M x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const PrimeMatrix& m, std::span<const Residue> b);

/// Inverse of a square matrix, or nothing when it is singular.
std::optional<PrimeMatrix> inverse(const PrimeMatrix& m);

/// Incrementally built echelon basis; used to test membership and extend bases.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces v against the basis; returns the remainder.
  Vector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;
  /// Adds v if independent; returns whether it was added.
  bool insert(std::span<const Residue> v);
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<Vector> rows_;            // each monic at its pivot
  std::vector<std::size_t> pivots_;
};

/// Cocycles modulo boundaries, realized on row spaces inside a common ambient space.
struct QuotientBasis {
  std::size_t ambient_dim = 0;
  PrimeMatrix cocycle_basis;            // rref, rows span Z
  std::vector<std::size_t> cocycle_pivots;
  PrimeMatrix boundary_basis;           // rref, rows span B
  PrimeMatrix class_basis;              // coset representatives, rows in Z
  PrimeMatrix projection;               // dim Z x dim(Z/B): Z-coordinates to class coordinates

  std::size_t dim() const noexcept { return class_basis.rows(); }
};

/// Quotient Z/B of row spaces. Throws ContainmentViolation when B is not inside Z.
QuotientBasis quotient(const PrimeMatrix& z, const PrimeMatrix& b);

/// Coordinates of the coset [v]. Throws NotACocycle when v is not in Z.
Vector quotient_coords(const QuotientBasis& q, std::span<const Residue> v);

/// Whether v lies in the row space of the cocycle basis.
bool in_cocycles(const QuotientBasis& q, std::span<const Residue> v);

/// Linear combination of class representatives.
Vector quotient_lift(const QuotientBasis& q, std::span<const Residue> coords);

}  // namespace rhh
