#include <random>
#include <string>

#include "rhh/error.hpp"
#include "rhh/liealg.hpp"

namespace rhh {

RestrictedLie zero_lie(std::uint32_t p, std::size_t dim) {
  PrimeField f(p);
  RestrictedLie l;
  l.p = f.p();
  l.dim = dim;
  l.bracket.assign(dim, std::vector<Vector>(dim, Vector(dim, 0)));
  l.pmap.assign(dim, Vector(dim, 0));
  return l;
}

Vector lie_bracket(const RestrictedLie& l, std::span<const Residue> u, std::span<const Residue> v) {
  const PrimeField f = l.field();
  Vector out(l.dim, 0);
  for (std::size_t i = 0; i < l.dim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < l.dim; ++j) {
      if (v[j] == 0) continue;
      axpy(f, out, l.bracket[i][j], f.mul(u[i], v[j]));
    }
  }
  return out;
}

PrimeMatrix ad(const RestrictedLie& l, std::span<const Residue> v) {
  PrimeMatrix m(l.field(), l.dim, l.dim);
  Vector e(l.dim, 0);
  for (std::size_t j = 0; j < l.dim; ++j) {
    e[j] = 1;
    Vector col = lie_bracket(l, v, e);
    e[j] = 0;
    for (std::size_t i = 0; i < l.dim; ++i) m(i, j) = col[i];
  }
  return m;
}

RestrictedLie transport(const RestrictedLie& l, const PrimeMatrix& g) {
  if (g.rows() != l.dim || g.cols() != l.dim) throw Error(ErrorCode::DimensionMismatch, "basis change has wrong shape");
  auto ginv = inverse(g);
  if (!ginv) throw Error(ErrorCode::BadParameter, "basis change is singular");
  PMap pm(l);
  RestrictedLie out = zero_lie(l.p, l.dim);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < l.dim; ++j) {
    Vector c(l.dim);
    for (std::size_t i = 0; i < l.dim; ++i) c[i] = g(i, j);
    cols.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < l.dim; ++a) {
    for (std::size_t b = 0; b < l.dim; ++b) out.bracket[a][b] = mul(*ginv, lie_bracket(l, cols[a], cols[b]));
    out.pmap[a] = mul(*ginv, pm(cols[a]));
  }
  return out;
}

RestrictedReport verify_restricted(const RestrictedLie& l) {
  RestrictedReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  const std::size_t n = l.dim;
  if (!is_prime(l.p)) {
    fail("p = " + std::to_string(l.p) + " is not prime");
    return rep;
  }
  bool shape = l.bracket.size() == n && l.pmap.size() == n;
  for (std::size_t i = 0; shape && i < n; ++i) {
    shape = shape && l.bracket[i].size() == n && l.pmap[i].size() == n;
    for (std::size_t j = 0; shape && j < n; ++j) shape = l.bracket[i][j].size() == n;
  }
  if (!shape) {
    fail("structure constants do not match dimension " + std::to_string(n));
    return rep;
  }
  const PrimeField f = l.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(l.bracket[i][i])) fail("[e" + std::to_string(i) + ", e" + std::to_string(i) + "] != 0");
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector s = l.bracket[i][j];
      axpy(f, s, l.bracket[j][i], 1);
      if (!is_zero(s)) fail("antisymmetry fails for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  }
  if (!rep.ok) return rep;

  std::vector<Vector> e(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = lie_bracket(l, e[i], l.bracket[j][k]);
        axpy(f, s, lie_bracket(l, e[j], l.bracket[k][i]), 1);
        axpy(f, s, lie_bracket(l, e[k], l.bracket[i][j]), 1);
        if (!is_zero(s))
          fail("Jacobi fails for (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
      }
  for (std::size_t i = 0; i < n; ++i) {
    PrimeMatrix a = ad(l, e[i]);
    PrimeMatrix ap = PrimeMatrix::identity(f, n);
    for (std::uint32_t k = 0; k < l.p; ++k) ap = ap * a;
    if (!(ad(l, l.pmap[i]) == ap)) fail("ad(e" + std::to_string(i) + "^[p]) != ad(e" + std::to_string(i) + ")^p");
  }
  if (!rep.ok) return rep;

  // u(L) is associative iff the right regular action by letters satisfies the
  // defining relations on every PBW monomial.
  std::size_t total = 1;
  bool too_big = false;
  for (std::size_t i = 0; i < n && !too_big; ++i) {
    total *= l.p;
    too_big = total > (std::size_t{1} << 20);
  }
  if (too_big) {
    rep.enveloping_check = "skipped";
    return rep;
  }
  try {
    EnvelopingAlgebra env(l);
    std::vector<std::size_t> monos;
    if (total <= kExhaustiveEnvelopingDim) {
      rep.enveloping_check = "exhaustive";
      for (std::size_t m = 0; m < total; ++m) monos.push_back(m);
    } else {
      rep.enveloping_check = "sampled";
      std::mt19937_64 rng(0x5eed);
      // low-degree monomials exercise every relation cheaply
      for (std::size_t i = 0; i < n; ++i) monos.push_back(env.letter(i));
      monos.push_back(0);
      for (int s = 0; s < 24; ++s) monos.push_back(static_cast<std::size_t>(rng() % total));
    }
    for (std::size_t m : monos) {
      EnvelopingAlgebra::Element x{{m, 1}};
      for (std::size_t j = 0; j < n; ++j) {
        EnvelopingAlgebra::Element ej = env.from_lie(e[j]);
        EnvelopingAlgebra::Element xj = env.mul(x, ej);
        for (std::size_t k = j + 1; k < n; ++k) {
          EnvelopingAlgebra::Element ek = env.from_lie(e[k]);
          EnvelopingAlgebra::Element lhs = env.mul(xj, ek);
          EnvelopingAlgebra::Element rhs = env.mul(env.mul(x, ek), ej);
          EnvelopingAlgebra::Element br = env.mul(x, env.from_lie(l.bracket[j][k]));
          for (const auto& [mono, c] : rhs) lhs[mono] = f.sub(lhs.count(mono) ? lhs[mono] : 0, c);
          for (const auto& [mono, c] : br) lhs[mono] = f.sub(lhs.count(mono) ? lhs[mono] : 0, c);
          bool zero = true;
          for (const auto& [mono, c] : lhs) zero = zero && c == 0;
          if (!zero) {
            fail("u(L) relation e" + std::to_string(j) + "e" + std::to_string(k) + " - e" + std::to_string(k) + "e" +
                 std::to_string(j) + " fails on monomial " + std::to_string(m));
            return rep;
          }
        }
        EnvelopingAlgebra::Element pw = x;
        for (std::uint32_t s = 0; s < l.p; ++s) pw = env.mul(pw, ej);
        EnvelopingAlgebra::Element pm = env.mul(x, env.from_lie(l.pmap[j]));
        for (const auto& [mono, c] : pm) pw[mono] = f.sub(pw.count(mono) ? pw[mono] : 0, c);
        bool zero = true;
        for (const auto& [mono, c] : pw) zero = zero && c == 0;
        if (!zero) {
          fail("u(L) relation e" + std::to_string(j) + "^p = e" + std::to_string(j) + "^[p] fails on monomial " +
               std::to_string(m));
          return rep;
        }
      }
    }
  } catch (const Error& err) {
    fail(err.what());
  }
  return rep;
}

}  // namespace rhh
