#include "rhh/algebra.hpp"
#include "rhh/error.hpp"

namespace rhh {

PrimeMatrix center(const FDCategory& c) {
  const PrimeField& f = c.field();
  const std::size_t d = c.dim();
  std::vector<int> vars;  // endomorphism basis elements
  std::vector<int> var_of(d, -1);
  for (std::size_t u = 0; u < d; ++u) {
    if (c.source(static_cast<int>(u)) == c.target(static_cast<int>(u))) {
      var_of[u] = static_cast<int>(vars.size());
      vars.push_back(static_cast<int>(u));
    }
  }
  PrimeMatrix eqs(f, 0, vars.size());
  for (std::size_t e = 0; e < d; ++e) {
    int a = c.source(static_cast<int>(e)), b = c.target(static_cast<int>(e));
    const auto& blk = c.hom(a, b);
    PrimeMatrix rows(f, blk.size(), vars.size());
    for (int u : c.hom(b, b))
      for (const auto& t : c.compose(u, static_cast<int>(e)))
        rows(static_cast<std::size_t>(c.local_index(t.index)), static_cast<std::size_t>(var_of[static_cast<std::size_t>(u)])) =
            f.add(rows(static_cast<std::size_t>(c.local_index(t.index)), static_cast<std::size_t>(var_of[static_cast<std::size_t>(u)])), t.coeff);
    for (int v : c.hom(a, a))
      for (const auto& t : c.compose(static_cast<int>(e), v))
        rows(static_cast<std::size_t>(c.local_index(t.index)), static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])) =
            f.sub(rows(static_cast<std::size_t>(c.local_index(t.index)), static_cast<std::size_t>(var_of[static_cast<std::size_t>(v)])), t.coeff);
    eqs = eqs.vconcat(rows);
  }
  PrimeMatrix ker = kernel_basis(eqs);
  PrimeMatrix out(f, ker.rows(), d);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t i = 0; i < vars.size(); ++i) out(r, static_cast<std::size_t>(vars[i])) = ker(r, i);
  return out;
}

DerivationCoords::DerivationCoords(const FDCategory& c) : cat_(&c) {
  offsets_.resize(c.dim());
  for (std::size_t u = 0; u < c.dim(); ++u) {
    offsets_[u] = size_;
    size_ += c.hom(c.source(static_cast<int>(u)), c.target(static_cast<int>(u))).size();
  }
}

PrimeMatrix DerivationCoords::to_matrix(std::span<const Residue> v) const {
  if (v.size() != size_) throw Error(ErrorCode::DimensionMismatch, "derivation vector length");
  const FDCategory& c = *cat_;
  PrimeMatrix m(c.field(), c.dim(), c.dim());
  for (std::size_t u = 0; u < c.dim(); ++u) {
    const auto& blk = c.hom(c.source(static_cast<int>(u)), c.target(static_cast<int>(u)));
    for (std::size_t k = 0; k < blk.size(); ++k) m(static_cast<std::size_t>(blk[k]), u) = v[offsets_[u] + k];
  }
  return m;
}

Vector DerivationCoords::from_matrix(const PrimeMatrix& m) const {
  const FDCategory& c = *cat_;
  Vector v(size_, 0);
  for (std::size_t u = 0; u < c.dim(); ++u) {
    const auto& blk = c.hom(c.source(static_cast<int>(u)), c.target(static_cast<int>(u)));
    for (std::size_t k = 0; k < blk.size(); ++k) v[offsets_[u] + k] = m(static_cast<std::size_t>(blk[k]), u);
    for (std::size_t r = 0; r < c.dim(); ++r) {
      if (m(r, u) != 0 && (c.source(static_cast<int>(r)) != c.source(static_cast<int>(u)) ||
                           c.target(static_cast<int>(r)) != c.target(static_cast<int>(u)))) {
        throw Error(ErrorCode::DimensionMismatch, "linear map does not preserve hom blocks");
      }
    }
  }
  return v;
}

namespace {

// Rows of the Leibniz system: one block of rows per composable basis pair, then D(id_a) = 0.
PrimeMatrix leibniz_system(const FDCategory& c, const DerivationCoords& dc) {
  const PrimeField& f = c.field();
  const std::size_t d = c.dim();
  std::vector<Vector> rows;
  for (std::size_t g = 0; g < d; ++g) {
    for (std::size_t e = 0; e < d; ++e) {
      int gi = static_cast<int>(g), ei = static_cast<int>(e);
      if (c.source(gi) != c.target(ei)) continue;
      const auto& out_blk = c.hom(c.source(ei), c.target(gi));
      std::vector<Vector> eq(out_blk.size(), Vector(dc.size(), 0));
      for (const auto& t : c.compose(gi, ei)) {
        for (std::size_t k = 0; k < out_blk.size(); ++k) {
          auto& x = eq[k][dc.offset(t.index) + k];
          x = f.add(x, t.coeff);
        }
      }
      const auto& gblk = c.hom(c.source(gi), c.target(gi));
      for (std::size_t k = 0; k < gblk.size(); ++k)
        for (const auto& s : c.compose(gblk[k], ei)) {
          auto& x = eq[static_cast<std::size_t>(c.local_index(s.index))][dc.offset(gi) + k];
          x = f.sub(x, s.coeff);
        }
      const auto& eblk = c.hom(c.source(ei), c.target(ei));
      for (std::size_t k = 0; k < eblk.size(); ++k)
        for (const auto& s : c.compose(gi, eblk[k])) {
          auto& x = eq[static_cast<std::size_t>(c.local_index(s.index))][dc.offset(ei) + k];
          x = f.sub(x, s.coeff);
        }
      for (auto& r : eq)
        if (!is_zero(r)) rows.push_back(std::move(r));
    }
  }
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    const auto& blk = c.hom(static_cast<int>(a), static_cast<int>(a));
    std::vector<Vector> eq(blk.size(), Vector(dc.size(), 0));
    for (const auto& t : c.unit(static_cast<int>(a)))
      for (std::size_t k = 0; k < blk.size(); ++k) eq[k][dc.offset(t.index) + k] = t.coeff;
    for (auto& r : eq)
      if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return PrimeMatrix::from_rows(f, dc.size(), rows);
}

}  // namespace

PrimeMatrix derivations(const FDCategory& c) {
  DerivationCoords dc(c);
  return kernel_basis(leibniz_system(c, dc));
}

bool is_derivation(const FDCategory& c, std::span<const Residue> v) {
  DerivationCoords dc(c);
  return is_zero(mul(leibniz_system(c, dc), v));
}

PrimeMatrix inner_derivations(const FDCategory& c) {
  const PrimeField& f = c.field();
  DerivationCoords dc(c);
  const std::size_t d = c.dim();
  std::vector<Vector> gens;
  for (std::size_t z = 0; z < d; ++z) {
    int zi = static_cast<int>(z);
    int a = c.source(zi);
    if (a != c.target(zi)) continue;
    Vector v(dc.size(), 0);
    for (std::size_t e = 0; e < d; ++e) {
      int ei = static_cast<int>(e);
      if (c.target(ei) == a)
        for (const auto& t : c.compose(zi, ei)) {
          auto& x = v[dc.offset(ei) + static_cast<std::size_t>(c.local_index(t.index))];
          x = f.add(x, t.coeff);
        }
      if (c.source(ei) == a)
        for (const auto& t : c.compose(ei, zi)) {
          auto& x = v[dc.offset(ei) + static_cast<std::size_t>(c.local_index(t.index))];
          x = f.sub(x, t.coeff);
        }
    }
    gens.push_back(std::move(v));
  }
  if (gens.empty()) return PrimeMatrix(f, 0, dc.size());
  return row_space_basis(PrimeMatrix::from_rows(f, dc.size(), gens));
}

}  // namespace rhh
