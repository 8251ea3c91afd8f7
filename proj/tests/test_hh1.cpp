#include "doctest.h"
#include "oracles.hpp"
#include "rhh/hh1.hpp"

using namespace rhh;

namespace {

// D(x) of a derivation of a one-object truncated polynomial ring.
std::vector<long> image_of_x(const HH1& h, std::span<const Residue> d) {
  DerivationCoords dc(h.category);
  std::vector<long> q(h.category.dim());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = d[dc.offset(1) + k];
  return q;
}

}  // namespace

TEST_CASE("hh1 of F_2[x]/x^2") {
  HH1 h = compute_hh1(truncated_poly(2, 2));
  REQUIRE(h.lie.dim == 2);
  // representatives by rref: first D(x) = 1, then D(x) = x
  CHECK(image_of_x(h, h.quotient.class_basis.row(0)) == std::vector<long>{1, 0});
  CHECK(image_of_x(h, h.quotient.class_basis.row(1)) == std::vector<long>{0, 1});
  CHECK(h.lie.bracket[0][1] == Vector{1, 0});
  CHECK(h.lie.pmap[0] == Vector{0, 0});
  CHECK(h.lie.pmap[1] == Vector{0, 1});
}

TEST_CASE("hh1 of F_3[x]/x^3 is W(1;1)") {
  HH1 h = compute_hh1(truncated_poly(3, 3));
  REQUIRE(h.lie.dim == 3);
  oracle::Witt w{3};
  for (int i = 0; i < 3; ++i) {
    CHECK(image_of_x(h, h.quotient.class_basis.row(static_cast<std::size_t>(i))) ==
          oracle::TruncatedPoly{3, 3}.monomial(i));
    for (int j = 0; j < 3; ++j) {
      auto b = w.bracket(i - 1, j - 1);
      Vector expect(b.begin(), b.end());
      CHECK(h.lie.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == expect);
    }
    auto pm = w.pmap(i - 1);
    CHECK(h.lie.pmap[static_cast<std::size_t>(i)] == Vector(pm.begin(), pm.end()));
  }
}

TEST_CASE("hh1 of a separable algebra vanishes") {
  CHECK(hh1_restricted(matrix_over(truncated_poly(2, 1), 2)).dim == 0);
}

TEST_CASE("fast path agrees with the cochain complex") {
  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "qci(3,2,2,2)", "truncated_poly(2,3)",
                        "full_two_object(truncated_poly(2,2))"}) {
    CAPTURE(e);
    CrosscheckReport r = crosscheck_hh1(catalog(e));
    CHECK(r.match);
    for (const auto& m : r.mismatches) MESSAGE(m);
  }
}

TEST_CASE("p-fold composites of derivations are derivations and the p-map is semilinear") {
  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "truncated_poly(5,2)", "elem_abelian(2,2)",
                        "qci(3,2,2,2)", "opposite(qci(3,2,2,2))", "qci(5,2,2,2)", "matrix_over(truncated_poly(2,2),2)",
                        "matrix_over(truncated_poly(2,1),2)", "full_two_object(truncated_poly(2,2))"}) {
    CAPTURE(e);
    HH1 h = compute_hh1(catalog(e));
    const PrimeField& f = h.category.field();
    for (std::size_t i = 0; i < h.der.rows(); ++i) {
      Vector dp = derivation_power(h.category, h.der.row(i), f.p());
      CHECK(is_derivation(h.category, dp));
      for (Residue alpha = 0; alpha < f.p(); ++alpha) {
        Vector d = h.der.row_vector(i);
        scale(f, d, alpha);
        Vector lhs = derivation_power(h.category, d, f.p());
        Vector rhs = dp;
        scale(f, rhs, f.pow(alpha, f.p()));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("p-map on HH^1 is independent of the inner part") {
  HH1 h = compute_hh1(matrix_over(truncated_poly(2, 2), 2));
  REQUIRE(h.inn.rows() > 0);
  const PrimeField& f = h.category.field();
  for (std::size_t i = 0; i < h.quotient.dim(); ++i) {
    Vector d = h.quotient.class_basis.row_vector(i);
    Vector base = hh1_class(h, derivation_power(h.category, d, f.p()));
    for (std::size_t k = 0; k < h.inn.rows(); ++k) {
      Vector dk = d;
      axpy(f, dk, h.inn.row(k), 1);
      CHECK(hh1_class(h, derivation_power(h.category, dk, f.p())) == base);
    }
  }
}
