#include <algorithm>
#include <cmath>
#include <string>

#include "rhh/error.hpp"
#include "rhh/liealg.hpp"

namespace rhh {

std::string to_string(TorusMode m) { return m == TorusMode::Exact ? "exact" : "greedy lower bound"; }

namespace {

std::vector<Vector> unit_vectors(std::size_t n) {
  std::vector<Vector> e(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

PrimeMatrix span_of(const PrimeField& f, std::size_t n, const std::vector<Vector>& vs) {
  return row_space_basis(PrimeMatrix::from_rows(f, n, vs));
}

std::vector<std::size_t> derived_series(const RestrictedLie& l) {
  const PrimeField f = l.field();
  std::vector<std::size_t> dims{l.dim};
  std::vector<Vector> cur = unit_vectors(l.dim);
  for (;;) {
    std::vector<Vector> next;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) next.push_back(lie_bracket(l, cur[i], cur[j]));
    PrimeMatrix b = span_of(f, l.dim, next);
    if (b.rows() == dims.back()) break;
    dims.push_back(b.rows());
    cur = b.row_vectors();
    if (cur.empty()) break;
  }
  return dims;
}

std::vector<std::size_t> lower_central_series(const RestrictedLie& l) {
  const PrimeField f = l.field();
  std::vector<std::size_t> dims{l.dim};
  std::vector<Vector> e = unit_vectors(l.dim), cur = e;
  for (;;) {
    std::vector<Vector> next;
    for (const auto& a : e)
      for (const auto& c : cur) next.push_back(lie_bracket(l, a, c));
    PrimeMatrix b = span_of(f, l.dim, next);
    if (b.rows() == dims.back()) break;
    dims.push_back(b.rows());
    cur = b.row_vectors();
    if (cur.empty()) break;
  }
  return dims;
}

// Coordinates of v in the span of the rows of an rref basis, or nothing.
std::optional<Vector> coords_in(const PrimeMatrix& basis, std::span<const Residue> v) {
  return solve(basis.transpose(), v);
}

// Shared torus test on the row span of an rref basis. Returns nothing when the
// span is not a restricted subalgebra.
std::optional<bool> torus_test(const RestrictedLie& l, const PMap& pm, const PrimeMatrix& basis) {
  const std::size_t k = basis.rows();
  const PrimeField f = l.field();
  bool abelian = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector b = lie_bracket(l, basis.row(i), basis.row(j));
      if (is_zero(b)) continue;
      abelian = false;
      if (!coords_in(basis, b)) return std::nullopt;
    }
  PrimeMatrix pmat(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coords_in(basis, pm(basis.row(i)));
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) pmat(i, j) = (*c)[j];
  }
  if (!abelian) return false;
  return rank(pmat) == k;
}

double gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= (std::pow(double(p), double(n - i)) - 1) / (std::pow(double(p), double(i + 1)) - 1);
  return r;
}

// Calls visit(basis) for every k-dimensional subspace of F_p^n in canonical
// order (pivot sets lexicographic, then free entries); stops when visit returns true.
template <class Visit>
bool for_each_subspace(const PrimeField& f, std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  if (k == 0) return visit(PrimeMatrix(f, 0, n));
  for (;;) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.push_back({r, c});
    std::vector<Residue> vals(free.size(), 0);
    for (;;) {
      PrimeMatrix m(f, k, n);
      for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
      for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = vals[i];
      if (visit(m)) return true;
      std::size_t i = 0;
      for (; i < vals.size(); ++i) {
        if (++vals[i] < f.p()) break;
        vals[i] = 0;
      }
      if (i == vals.size()) break;
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (piv[i] < n - k + i) {
        ++piv[i];
        for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
  }
}

TorusResult greedy_torus(const RestrictedLie& l, const PMap& pm, std::size_t budget) {
  const PrimeField f = l.field();
  const std::size_t n = l.dim;
  TorusResult res;
  res.mode = TorusMode::GreedyLowerBound;
  PrimeMatrix t(f, 0, n);
  std::size_t spent = 0;
  bool grew = true;
  while (grew && spent < budget) {
    grew = false;
    Vector v(n, 0);
    // walk nonzero vectors in counting order
    for (;;) {
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++v[i] < f.p()) break;
        v[i] = 0;
      }
      if (i == n || ++spent > budget) break;
      bool central = true;
      for (std::size_t r = 0; r < t.rows() && central; ++r) central = is_zero(lie_bracket(l, t.row(r), v));
      if (!central) continue;
      std::vector<Vector> gens = t.row_vectors();
      Vector w = v;
      for (std::size_t s = 0; s <= n; ++s) {
        gens.push_back(w);
        w = pm(w);
      }
      PrimeMatrix cand = span_of(f, n, gens);
      if (cand.rows() <= t.rows()) continue;
      auto ok = torus_test(l, pm, cand);
      if (ok && *ok) {
        t = cand;
        grew = true;
        break;
      }
    }
  }
  res.dim = t.rows();
  res.basis = t.row_vectors();
  return res;
}

}  // namespace

PrimeMatrix lie_center(const RestrictedLie& l) {
  const PrimeField f = l.field();
  PrimeMatrix m(f, l.dim, l.dim * l.dim);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      for (std::size_t k = 0; k < l.dim; ++k) m(i, j * l.dim + k) = l.bracket[i][j][k];
  return row_space_basis(left_kernel_basis(m));
}

bool is_torus(const RestrictedLie& l, const PrimeMatrix& rows) {
  if (rows.cols() != l.dim) throw Error(ErrorCode::DimensionMismatch, "subspace lives in the wrong ambient space");
  PMap pm(l);
  PrimeMatrix basis = row_space_basis(rows);
  auto r = torus_test(l, pm, basis);
  if (!r) throw Error(ErrorCode::NotASubalgebra, "subspace is not closed under bracket and p-map");
  return *r;
}

TorusResult max_torus(const RestrictedLie& l, std::size_t budget) {
  const PrimeField f = l.field();
  const std::size_t n = l.dim;
  PMap pm(l);
  double total = 0;
  for (std::size_t k = 1; k <= n; ++k) total += gaussian_binomial(l.p, n, k);
  if (total > static_cast<double>(budget)) return greedy_torus(l, pm, budget);
  TorusResult res;
  for (std::size_t k = n; k >= 1; --k) {
    bool found = for_each_subspace(f, n, k, [&](const PrimeMatrix& b) {
      auto ok = torus_test(l, pm, b);
      if (ok && *ok) {
        res.dim = k;
        res.basis = b.row_vectors();
        return true;
      }
      return false;
    });
    if (found) break;
  }
  return res;
}

Fingerprint fingerprint(const RestrictedLie& l, std::size_t torus_budget) {
  const PrimeField f = l.field();
  Fingerprint fp;
  fp.dim = l.dim;
  PrimeMatrix z = lie_center(l);
  fp.center_dim = z.rows();
  fp.derived_series = derived_series(l);
  fp.lower_central_series = lower_central_series(l);
  // on the center the p-map is additive, hence F_p-linear
  PMap pm(l);
  const std::size_t c = z.rows();
  PrimeMatrix pz(f, c, c);
  for (std::size_t i = 0; i < c; ++i) {
    auto co = coords_in(z, pm(z.row(i)));
    if (!co) throw Error(ErrorCode::IncoherentPMap, "p-map does not preserve the center");
    for (std::size_t j = 0; j < c; ++j) pz(i, j) = (*co)[j];
  }
  fp.center_pmap_rank = rank(pz);
  PrimeMatrix pw = PrimeMatrix::identity(f, c);
  for (std::size_t i = 0; i < c; ++i) pw = pw * pz;
  fp.center_p_nilradical = c - rank(pw);
  TorusResult t = max_torus(l, torus_budget);
  fp.max_torus = t.dim;
  fp.torus_mode = t.mode;
  return fp;
}

}  // namespace rhh
