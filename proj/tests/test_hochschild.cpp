#include <vector>

#include "doctest.h"
#include "rhh/error.hpp"
#include "rhh/hochschild.hpp"
#include "support.hpp"

using namespace rhh;
using rhh::test::derivation_cochain;
using rhh::test::eval;
using rhh::test::times;
using rhh::test::unit_vec;
using rhh::test::apply1;
using rhh::test::apply2;
using rhh::test::vadd;

namespace {

std::vector<std::size_t> hh_dims(const FDCategory& a, int max_degree, bool normalized) {
  CochainComplex cx(a);
  std::vector<std::size_t> dims;
  for (int n = 0; n <= max_degree; ++n) dims.push_back(cohomology(cx, n, normalized).dim());
  return dims;
}

}  // namespace

TEST_CASE("brace with one degree-1 input composes the maps") {
  CochainComplex cx(truncated_poly(3, 3));
  Rng rng(11);
  Cochain x = cx.random(1, rng, false), y = cx.random(1, rng, false);
  Cochain xy = brace(cx, x, std::vector<Cochain>{y});
  CHECK(xy.degree == 1);
  for (int f = 0; f < 3; ++f) CHECK(eval(cx, xy, {f}) == apply1(cx, x, eval(cx, y, {f})));
}

TEST_CASE("brace of a degree-2 cochain with a degree-1 cochain inserts in both slots") {
  CochainComplex cx(qci(3, 2, 2, 2));
  const PrimeField& f = cx.field();
  Rng rng(12);
  Cochain x = cx.random(2, rng, false), y = cx.random(1, rng, false);
  Cochain xy = brace(cx, x, std::vector<Cochain>{y});
  const std::size_t d = cx.category().dim();
  for (int a = 0; a < static_cast<int>(d); ++a)
    for (int b = 0; b < static_cast<int>(d); ++b) {
      Vector expect = vadd(f, apply2(cx, x, eval(cx, y, {a}), unit_vec(d, b)),
                           apply2(cx, x, unit_vec(d, a), eval(cx, y, {b})));
      CHECK(eval(cx, xy, {a, b}) == expect);
    }
}

TEST_CASE("x{m} in degree 1 is x applied to the product") {
  CochainComplex cx(qci(3, 2, 2, 2));
  Rng rng(13);
  Cochain x = cx.random(1, rng, false);
  Cochain xm = brace(cx, x, std::vector<Cochain>{cx.multiplication()});
  const auto& c = cx.category();
  const std::size_t d = c.dim();
  for (int a = 0; a < static_cast<int>(d); ++a)
    for (int b = 0; b < static_cast<int>(d); ++b)
      CHECK(eval(cx, xm, {a, b}) == apply1(cx, x, times(c, unit_vec(d, a), unit_vec(d, b))));
}

TEST_CASE("brace degree bookkeeping") {
  CochainComplex cx(truncated_poly(2, 2));
  Cochain x1 = cx.zero(1), c0 = cx.zero(0);
  CHECK_THROWS_AS(brace(cx, x1, std::vector<Cochain>{c0, c0}), Error);
  try {
    brace(cx, x1, std::vector<Cochain>{c0, c0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeUnderflow);
  }
  // fewer slots than inputs but nonnegative degree: zero
  Cochain x1y = brace(cx, x1, std::vector<Cochain>{cx.multiplication(), cx.multiplication()});
  CHECK(x1y.degree == 3);
  CHECK(is_zero(x1y.coeffs));
}

TEST_CASE("differential of the multiplication vanishes") {
  for (const char* e : {"truncated_poly(2,2)", "qci(3,2,2,2)", "matrix_over(truncated_poly(2,2),2)",
                        "full_two_object(truncated_poly(3,2))", "elem_abelian(2,2)"}) {
    CAPTURE(e);
    CochainComplex cx(catalog(e));
    CHECK(is_zero(differential(cx, cx.multiplication()).coeffs));
  }
}

TEST_CASE("degree-1 differential matches x(f)g - x(fg) + f x(g)") {
  CochainComplex cx(qci(5, 2, 2, 3));
  const auto& c = cx.category();
  const PrimeField& f = cx.field();
  Rng rng(14);
  Cochain x = cx.random(1, rng, false);
  Cochain dx = differential(cx, x);
  const std::size_t d = c.dim();
  for (int a = 0; a < static_cast<int>(d); ++a)
    for (int b = 0; b < static_cast<int>(d); ++b) {
      Vector ua = unit_vec(d, a), ub = unit_vec(d, b);
      Vector expect = times(c, apply1(cx, x, ua), ub);
      expect = vadd(f, expect, apply1(cx, x, times(c, ua, ub)), f.p() - 1);
      expect = vadd(f, expect, times(c, ua, apply1(cx, x, ub)));
      CHECK(eval(cx, dx, {a, b}) == expect);
    }
}

TEST_CASE("differential of a degree-1 cochain on F_2[x]/x^2 with f(x) = 1") {
  CochainComplex cx(truncated_poly(2, 2));
  Cochain dd = derivation_cochain(cx, {{0, 0}, {1, 0}});
  CHECK(eval(cx, differential(cx, dd), {1, 1}) == Vector{0, 0});
}

TEST_CASE("degree-0 differential is the inner derivation up to sign") {
  for (const char* e : {"qci(3,2,2,2)", "matrix_over(truncated_poly(2,1),2)", "morita_context(truncated_poly(2,2),2)"}) {
    CAPTURE(e);
    FDCategory a = with_unit_basis(catalog(e));
    CochainComplex cx(a);
    PrimeMatrix inn = inner_derivations(a);
    const auto& l0 = cx.layout(0);
    PrimeMatrix images(cx.field(), 0, cx.layout(1).size());
    for (std::size_t i = 0; i < l0.size(); ++i) {
      Cochain c = cx.zero(0);
      c.coeffs[i] = 1;
      images.append_row(differential(cx, c).coeffs);
    }
    CHECK(row_space_basis(images) == row_space_basis(inn));
  }
}

TEST_CASE("differential squares to zero and agrees with the assembled matrix") {
  for (const char* e : {"truncated_poly(2,3)", "truncated_poly(3,3)", "qci(3,2,2,2)", "elem_abelian(2,2)",
                        "matrix_over(truncated_poly(2,1),2)", "full_two_object(truncated_poly(2,2))",
                        "matrix_over(truncated_poly(2,2),2)"}) {
    CAPTURE(e);
    CochainComplex cx(catalog(e));
    Rng rng(15);
    int top = cx.category().dim() > 4 ? 2 : 3;
    for (int n = 0; n <= top; ++n) {
      CAPTURE(n);
      for (bool normalized : {false, true}) {
        Cochain x = cx.random(n, rng, normalized);
        Cochain dx = differential(cx, x);
        CHECK(is_zero(differential(cx, dx).coeffs));
        PrimeMatrix dm = differential_matrix(cx, n, normalized);
        Vector via_matrix = mul(cx.coordinates(x, normalized), dm);
        CHECK(cx.coordinates(dx, normalized) == via_matrix);
      }
    }
  }
}

TEST_CASE("Hochschild dimensions of truncated polynomial rings") {
  // periodic resolution: all dims n when p | n, otherwise n, n-1, n-1, ...
  CHECK(hh_dims(truncated_poly(2, 2), 4, true) == std::vector<std::size_t>{2, 2, 2, 2, 2});
  CHECK(hh_dims(truncated_poly(3, 3), 3, true) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(hh_dims(truncated_poly(2, 3), 3, true) == std::vector<std::size_t>{3, 2, 2, 2});
  CHECK(hh_dims(truncated_poly(5, 2), 3, true) == std::vector<std::size_t>{2, 1, 1, 1});
  CHECK(hh_dims(truncated_poly(2, 2), 3, false) == std::vector<std::size_t>{2, 2, 2, 2});
}

TEST_CASE("separable and Morita-equivalent algebras") {
  CHECK(hh_dims(matrix_over(truncated_poly(2, 1), 2), 2, true) == std::vector<std::size_t>{1, 0, 0});
  CHECK(hh_dims(matrix_over(truncated_poly(2, 2), 2), 2, true) == std::vector<std::size_t>{2, 2, 2});
  CHECK(hh_dims(full_two_object(truncated_poly(2, 2)), 2, true) == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("HH^0 is the center and HH^1 is Der/Inn") {
  for (const char* e : {"truncated_poly(3,3)", "qci(3,2,2,2)", "elem_abelian(2,2)", "opposite(qci(3,2,2,2))",
                        "matrix_over(truncated_poly(2,2),2)", "morita_context(truncated_poly(2,2),2)"}) {
    CAPTURE(e);
    FDCategory a = catalog(e);
    CochainComplex cx(a);
    CHECK(cx.hh(0, true).dim() == center(a).rows());
    CHECK(cx.hh(1, true).dim() == derivations(a).rows() - inner_derivations(a).rows());
  }
}

TEST_CASE("resource cap on the cochain space") {
  Limits lim;
  lim.max_cochain_dim = 100;
  CochainComplex cx(truncated_poly(2, 3), lim);
  CHECK_NOTHROW(cx.layout(2));
  try {
    cx.layout(4);
    FAIL("expected ResourceBound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceBound);
  }
}

TEST_CASE("cup product: examples, unit, associativity, relation to m{x,y}") {
  CochainComplex cx(truncated_poly(2, 2));
  Cochain dd = derivation_cochain(cx, {{0, 0}, {1, 0}});
  Cochain sq = cup(cx, dd, dd);
  CHECK(eval(cx, sq, {1, 1}) == Vector{1, 0});
  CHECK(is_zero(cup(cx, dd, cx.zero(3)).coeffs));

  for (const char* e : {"qci(3,2,2,2)", "truncated_poly(5,3)", "full_two_object(truncated_poly(3,2))"}) {
    CAPTURE(e);
    CochainComplex c3(catalog(e));
    const PrimeField& f = c3.field();
    Rng rng(16);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        Cochain x = c3.random(a, rng, false), y = c3.random(b, rng, false), z = c3.random(1, rng, false);
        CHECK(cup(c3, c3.unit(), y).coeffs == y.coeffs);
        CHECK(cup(c3, x, c3.unit()).coeffs == x.coeffs);
        CHECK(cup(c3, cup(c3, x, y), z).coeffs == cup(c3, x, cup(c3, y, z)).coeffs);
        Cochain mb = brace(c3, c3.multiplication(), std::vector<Cochain>{x, y});
        Residue s = f.sign(a * (b + 1));
        CHECK(cup(c3, x, y).coeffs == c3.scale(mb, s).coeffs);
      }
  }
}

TEST_CASE("cup is graded-commutative and the bracket satisfies Jacobi on cohomology") {
  for (const char* e : {"truncated_poly(3,3)", "qci(3,2,2,2)", "truncated_poly(5,2)"}) {
    CAPTURE(e);
    CochainComplex cx(catalog(e));
    const PrimeField& f = cx.field();
    Rng rng(17);
    for (int trial = 0; trial < 5; ++trial)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
          Cochain x = random_cocycle(cx, a, rng), y = random_cocycle(cx, b, rng);
          Cochain xy = cup(cx, x, y), yx = cup(cx, y, x);
          CHECK(same_class(cx, xy, cx.scale(yx, f.sign(a * b))));
          if (a == 0 || b == 0) continue;
          for (int c = 1; c <= 2; ++c) {
            Cochain z = random_cocycle(cx, c, rng);
            // [x,[y,z]] = [[x,y],z] + (-1)^{|x'||y'|} [y,[x,z]] in shifted degrees
            Cochain t1 = bracket(cx, x, bracket(cx, y, z));
            Cochain t2 = bracket(cx, bracket(cx, x, y), z);
            Cochain t3 = bracket(cx, y, bracket(cx, x, z));
            CHECK(same_class(cx, t1, cx.axpy(t2, t3, f.sign((a - 1) * (b - 1)))));
          }
        }
  }
}

TEST_CASE("bracket examples") {
  CochainComplex cx(truncated_poly(2, 2));
  Cochain d = derivation_cochain(cx, {{0, 0}, {1, 0}});
  Cochain xd = derivation_cochain(cx, {{0, 0}, {0, 1}});
  CHECK(same_class(cx, bracket(cx, d, xd), d));

  CochainComplex c3(truncated_poly(3, 3));
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    Cochain x = c3.random(1 + 2 * (trial % 2), rng, false);
    CHECK(is_zero(bracket(c3, x, x).coeffs));
  }
  CHECK_THROWS_AS(reduced_square(c3, c3.random(1, rng, false)), Error);
  Cochain x2 = c3.random(2, rng, true);
  CHECK(reduced_square(c3, x2).degree == 3);
}

TEST_CASE("p-power classes of derivations of truncated polynomial rings") {
  {
    CochainComplex cx(truncated_poly(2, 2));
    Cochain d = derivation_cochain(cx, {{0, 0}, {1, 0}});
    Cochain xd = derivation_cochain(cx, {{0, 0}, {0, 1}});
    CHECK(is_zero(p_power_class(cx, class_of(cx, d)).coords));
    CHECK(p_power_class(cx, class_of(cx, xd)).coords == class_of(cx, xd).coords);
  }
  {
    CochainComplex cx(truncated_poly(3, 3));
    Cochain d = derivation_cochain(cx, {{0, 0, 0}, {1, 0, 0}, {0, 2, 0}});
    Cochain xd = derivation_cochain(cx, {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    Cochain x2d = derivation_cochain(cx, {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(p_power_class(cx, class_of(cx, xd)).coords == class_of(cx, xd).coords);
    CHECK(is_zero(p_power_class(cx, class_of(cx, d)).coords));
    CHECK(is_zero(p_power_class(cx, class_of(cx, x2d)).coords));
    CHECK_THROWS_AS(p_power_class(cx, class_of(cx, cx.unit())), Error);
  }
}

TEST_CASE("p-power is semilinear and representative-independent") {
  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "qci(3,2,2,2)"}) {
    CAPTURE(e);
    CochainComplex cx(catalog(e));
    const PrimeField& f = cx.field();
    Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
      Cochain x = random_cocycle(cx, 1, rng);
      Cochain y = cx.random(0, rng, true);
      CohomologyClass base = p_power_class(cx, class_of(cx, x));
      Cochain shifted = cx.add(x, differential(cx, y));
      CHECK(p_power_class(cx, class_of(cx, shifted)).coords == base.coords);
      Residue alpha = static_cast<Residue>(rng() % f.p());
      Vector scaled = p_power_class(cx, class_of(cx, cx.scale(x, alpha))).coords;
      Vector expect = base.coords;
      for (auto& v : expect) v = f.mul(v, f.pow(alpha, f.p()));
      CHECK(scaled == expect);
    }
  }
}

TEST_CASE("brace preserves normalization structurally") {
  CochainComplex cx(qci(3, 2, 2, 2));
  Rng rng(20);
  for (int a = 1; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b) {
      Cochain x = cx.random(a, rng, true), y = cx.random(b, rng, true);
      Cochain full = brace(cx, x, std::vector<Cochain>{y}, BraceEval::Full);
      CHECK(cx.is_normalized(full));
      CHECK(full.coeffs == brace(cx, x, std::vector<Cochain>{y}).coeffs);
    }
}

TEST_CASE("zeta") {
  CochainComplex cx(truncated_poly(3, 3));
  const PrimeField& f = cx.field();
  Rng rng(21);
  Cochain x = random_cocycle(cx, 1, rng);
  ZetaResult z = zeta(cx, x, ZetaRange::BothPositive);
  REQUIRE(z.components.size() == 1);
  CHECK(z.components.at(2).coeffs == cx.scale(cup(cx, x, x), f.p() - 1).coeffs);
  CHECK(is_zero(zeta(cx, cx.zero(1), ZetaRange::AllowJZero).components.at(2).coeffs));
  // every term carries i + j = p - 1 copies of x, so zeta(a x) = a^(p-1) zeta(x)
  for (int trial = 0; trial < 20; ++trial) {
    Cochain y = cx.random(1, rng, true);
    Residue alpha = static_cast<Residue>(rng() % 3);
    for (auto range : {ZetaRange::BothPositive, ZetaRange::AllowJZero}) {
      ZetaResult a = zeta(cx, cx.scale(y, alpha), range), b = zeta(cx, y, range);
      for (const auto& [deg, comp] : b.components)
        CHECK(a.components.at(deg).coeffs == cx.scale(comp, f.pow(alpha, 2)).coeffs);
    }
  }
  CHECK_THROWS_AS(zeta(cx, cx.zero(2), ZetaRange::BothPositive), Error);
  CochainComplex c2(truncated_poly(2, 2));
  CHECK_THROWS_AS(zeta(c2, c2.zero(1), ZetaRange::BothPositive), Error);
}

TEST_CASE("restriction to a full subcategory") {
  FDCategory b = full_two_object(truncated_poly(2, 2));
  CochainComplex cb(b);
  std::vector<int> all{0, 1}, first{0};
  Restriction id(cb, all);
  Rng rng(22);
  Cochain x = cb.random(2, rng, false);
  CHECK(id.apply(x).coeffs == x.coeffs);

  Restriction r(cb, first);
  CHECK(r.apply(cb.multiplication()).coeffs == r.target().multiplication().coeffs);
  for (int trial = 0; trial < 50; ++trial) {
    int a = static_cast<int>(rng() % 3) + 1, c = static_cast<int>(rng() % 3);
    Cochain u = cb.random(a, rng, false), v = cb.random(c, rng, false);
    const CochainComplex& s = r.target();
    CHECK(r.apply(brace(cb, u, std::vector<Cochain>{v})).coeffs ==
          brace(s, r.apply(u), std::vector<Cochain>{r.apply(v)}).coeffs);
  }
  std::vector<int> none;
  CHECK_THROWS_AS(Restriction(cb, none), Error);
}
