#include <random>
#include <vector>

#include "doctest.h"
#include "rhh/error.hpp"
#include "rhh/matrix.hpp"

using namespace rhh;

namespace {

PrimeMatrix random_matrix(const PrimeField& f, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  PrimeMatrix m(f, r, c);
  std::uniform_int_distribution<Residue> d(0, f.p() - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Counts {v : M v = 0} by enumerating F_p^cols.
std::size_t brute_kernel_size(const PrimeMatrix& m) {
  const std::uint32_t p = m.field().p();
  std::size_t total = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) total *= p;
  std::size_t count = 0;
  Vector v(m.cols(), 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      v[j] = static_cast<Residue>(c % p);
      c /= p;
    }
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < m.cols(); ++j) s += static_cast<std::uint64_t>(m(i, j)) * v[j];
      zero = s % p == 0;
    }
    if (zero) ++count;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("rref examples") {
  PrimeField f2(2), f5(5);
  auto z = rref(PrimeMatrix(f2, 3, 4));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());
  CHECK(z.reduced.is_zero());

  auto id = rref(PrimeMatrix::identity(f2, 3));
  CHECK(id.rank == 3);
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.reduced.row_vectors() == PrimeMatrix::identity(f2, 3).row_vectors());

  PrimeMatrix m(f5, 2, {{1, 2}, {2, 4}});
  auto r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced.row_vector(0) == Vector{1, 2});
}

TEST_CASE("rref is idempotent and reproducible") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField f(p);
    for (int t = 0; t < 20; ++t) {
      PrimeMatrix m = random_matrix(f, 1 + t % 6, 1 + (t * 7) % 8, rng);
      auto a = rref(m);
      auto b = rref(a.reduced);
      CHECK(a.reduced.row_vectors() == b.reduced.row_vectors());
      CHECK(a.rank == b.rank);
      CHECK(a.pivots == rref(m).pivots);
    }
  }
}

TEST_CASE("kernel examples") {
  PrimeField f2(2), f3(3);
  CHECK(kernel_basis(PrimeMatrix::identity(f3, 2)).rows() == 0);
  PrimeMatrix zero(f2, 3, 3);
  PrimeMatrix k = kernel_basis(zero);
  CHECK(k.rows() == 3);
  CHECK(rank(k) == 3);

  // Over F_2 the only nonzero solution of x + y = 0 is (1,1).
  PrimeMatrix m(f2, 2, {{1, 1}});
  CHECK(brute_kernel_size(m) == 2);
  PrimeMatrix kb = kernel_basis(m);
  REQUIRE(kb.rows() == 1);
  CHECK(kb.row_vector(0) == Vector{1, 1});
}

TEST_CASE("rank-nullity and kernel vectors against enumeration") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (int t = 0; t < 30; ++t) {
      std::size_t rows = 1 + static_cast<std::size_t>(t % 5);
      std::size_t cols = 1 + static_cast<std::size_t>((t * 3) % (p == 5 ? 4 : 5));
      PrimeMatrix m = random_matrix(f, rows, cols, rng);
      if (t % 4 == 0) m.append_row(m.row_vector(0));
      PrimeMatrix k = kernel_basis(m);
      std::size_t r = rank(m);
      CHECK(r + k.rows() == m.cols());
      CHECK(ipow(p, k.rows()) == brute_kernel_size(m));
      for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero(mul(m, k.row(i))));

      PrimeMatrix lk = left_kernel_basis(m);
      CHECK(lk.rows() + r == m.rows());
      for (std::size_t i = 0; i < lk.rows(); ++i) CHECK(is_zero(mul(lk.row(i), m)));
    }
  }
}

TEST_CASE("quotient examples") {
  PrimeField f2(2);
  PrimeMatrix z = PrimeMatrix::identity(f2, 2);
  QuotientBasis q0 = quotient(z, PrimeMatrix(f2, 0, 2));
  CHECK(q0.dim() == 2);

  QuotientBasis qf = quotient(z, z);
  CHECK(qf.dim() == 0);
  CHECK(quotient_coords(qf, Vector{1, 1}).empty());

  PrimeMatrix b(f2, 2, {{1, 1}});
  QuotientBasis q = quotient(z, b);
  CHECK(q.dim() == 1);
  CHECK(quotient_coords(q, Vector{1, 0}) == quotient_coords(q, Vector{0, 1}));
  CHECK(quotient_coords(q, Vector{1, 0}) == Vector{1});
  CHECK(quotient_coords(q, Vector{1, 1}) == Vector{0});

  PrimeMatrix bad(f2, 2, {{1, 0}});
  PrimeMatrix zsmall(f2, 2, {{0, 1}});
  CHECK_THROWS_AS(quotient(zsmall, bad), Error);
  try {
    quotient(zsmall, bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContainmentViolation);
  }
  try {
    quotient_coords(quotient(zsmall, PrimeMatrix(f2, 0, 2)), Vector{1, 0});
    FAIL("expected NotACocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACocycle);
  }
}

TEST_CASE("quotient invariants and coset constancy") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    const std::size_t n = 6;
    PrimeMatrix zg = random_matrix(f, 4, n, rng);
    PrimeMatrix mix = random_matrix(f, 2, 4, rng);
    PrimeMatrix bg = mix * zg;  // B inside Z
    QuotientBasis q = quotient(zg, bg);
    CHECK(q.dim() == rank(zg) - rank(bg));
    CHECK(rank(q.class_basis) == q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
      Vector e(q.dim(), 0);
      e[i] = 1;
      CHECK(quotient_coords(q, q.class_basis.row(i)) == e);
      CHECK(quotient_coords(q, quotient_lift(q, e)) == e);
    }
    CHECK(quotient_coords(q, Vector(n, 0)) == Vector(q.dim(), 0));
    std::uniform_int_distribution<Residue> d(0, p - 1);
    for (int t = 0; t < 100; ++t) {
      Vector cz(4), cb(2);
      for (auto& c : cz) c = d(rng);
      for (auto& c : cb) c = d(rng);
      Vector v = mul(cz, zg);
      Vector b = mul(cb, bg);
      Vector vb = v;
      axpy(f, vb, b, 1);
      CHECK(in_cocycles(q, v));
      CHECK(quotient_coords(q, vb) == quotient_coords(q, v));
    }
    if (q.dim() > 0) {
      Vector b0 = bg.rows() ? bg.row_vector(0) : Vector(n, 0);
      Vector v = q.class_basis.row_vector(0);
      axpy(f, v, b0, 1);
      Vector e(q.dim(), 0);
      e[0] = 1;
      CHECK(quotient_coords(q, v) == e);
    }
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(23);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField f(p);
    for (int t = 0; t < 20; ++t) {
      PrimeMatrix m = random_matrix(f, 4, 4, rng);
      auto inv = inverse(m);
      if (rank(m) == 4) {
        REQUIRE(inv.has_value());
        CHECK((m * *inv).row_vectors() == PrimeMatrix::identity(f, 4).row_vectors());
        CHECK((*inv * m).row_vectors() == PrimeMatrix::identity(f, 4).row_vectors());
      } else {
        CHECK_FALSE(inv.has_value());
      }
      PrimeMatrix a = random_matrix(f, 3, 5, rng);
      Vector x(5);
      for (std::size_t i = 0; i < 5; ++i) x[i] = static_cast<Residue>((i * 3 + static_cast<std::size_t>(t)) % p);
      Vector b = mul(a, x);
      auto s = solve(a, b);
      REQUIRE(s.has_value());
      CHECK(mul(a, *s) == b);
    }
  }
  PrimeField f3(3);
  PrimeMatrix m(f3, 2, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(m, Vector{1, 0}).has_value());
}
