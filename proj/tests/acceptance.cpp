// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rhh/error.hpp"
#include "rhh/hh1.hpp"
#include "rhh/io.hpp"
#include "rhh/liealg.hpp"
#include "rhh/verify.hpp"

using namespace rhh;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

using Check = std::function<void(Outcome&)>;

bool run(int n, const char* title, double budget_s, const Check& fn) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    fn(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what();
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s) {
    out.ok = false;
    out.detail << "over time budget of " << budget_s << " s; ";
  }
  std::printf("[%s] %d %s (%.2f s) %s\n", out.ok ? "PASS" : "FAIL", n, title, s, out.detail.str().c_str());
  std::fflush(stdout);
  return out.ok;
}

Vector to_vector(const std::vector<long>& v, const PrimeField& f) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.from_int(v[i]);
  return r;
}

RestrictedLie witt(std::uint32_t p) {
  oracle::Witt w{p};
  PrimeField f(p);
  RestrictedLie l = zero_lie(p, p);
  for (int i = 0; i < static_cast<int>(p); ++i) {
    for (int j = 0; j < static_cast<int>(p); ++j)
      l.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_vector(w.bracket(i - 1, j - 1), f);
    l.pmap[static_cast<std::size_t>(i)] = to_vector(w.pmap(i - 1), f);
  }
  return l;
}

RestrictedLie abelian(std::uint32_t p, std::vector<Vector> pmap) {
  RestrictedLie l = zero_lie(p, pmap.size());
  l.pmap = std::move(pmap);
  return l;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

Vector random_vec(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (auto& x : v) x = static_cast<Residue>(rng() % f.p());
  return v;
}

PrimeMatrix random_invertible(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    PrimeMatrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g(i, j) = static_cast<Residue>(rng() % f.p());
    if (rank(g) == n) return g;
  }
}

PrimeMatrix matrix_power(const PrimeMatrix& m, std::uint64_t k) {
  PrimeMatrix r = PrimeMatrix::identity(m.field(), m.rows());
  for (std::uint64_t i = 0; i < k; ++i) r = r * m;
  return r;
}

// The derivation of F_p[x]/x^n with D(x) = q, in DerivationCoords. Basis
// element m of truncated_poly is x^m with local coordinates by monomial.
Vector poly_derivation(const FDCategory& c, const oracle::TruncatedPoly& tp, const std::vector<long>& q) {
  DerivationCoords dc(c);
  Vector v(dc.size(), 0);
  for (int m = 0; m < tp.n; ++m) {
    auto img = tp.apply(q, tp.monomial(m));
    for (int k = 0; k < tp.n; ++k)
      v[dc.offset(m) + static_cast<std::size_t>(k)] = c.field().from_int(img[static_cast<std::size_t>(k)]);
  }
  return v;
}

// ---------------------------------------------------------------- 1

void witt_reproduction(Outcome& o) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const int n = static_cast<int>(p);
    HH1 h = compute_hh1(truncated_poly(p, n));
    const PrimeField& f = h.category.field();
    o.require(h.lie.dim == p, "dim HH^1 != p for p=" + std::to_string(p));
    if (h.lie.dim != p) continue;
    oracle::TruncatedPoly tp{p, n};
    oracle::Witt w{p};

    // G: column i+1 is the class of x^{i+1} d/dx
    PrimeMatrix g(f, p, p);
    std::vector<Vector> der(p);
    for (int i = -1; i <= n - 2; ++i) {
      auto k = static_cast<std::size_t>(i + 1);
      der[k] = poly_derivation(h.category, tp, tp.monomial(i + 1));
      o.require(is_derivation(h.category, der[k]), "x^k d/dx is not a derivation");
      Vector cls = hh1_class(h, der[k]);
      for (std::size_t r = 0; r < p; ++r) g(r, k) = cls[r];
    }
    o.require(rank(g) == p, "Witt basis not independent in HH^1");

    for (int i = -1; i <= n - 2; ++i) {
      auto ki = static_cast<std::size_t>(i + 1);
      Vector ei = unit_vector(p, ki);
      Vector gi = mul(g, ei);
      for (int j = -1; j <= n - 2; ++j) {
        auto kj = static_cast<std::size_t>(j + 1);
        // oracle: commutator of derivations on x, then the Witt formula
        // (coordinate t of a Witt vector is the coefficient of x^t)
        auto comm = tp.bracket(tp.monomial(i + 1), tp.monomial(j + 1));
        auto wb = w.bracket(i, j);
        o.require(to_vector(comm, f) == to_vector(wb, f), "derivation commutator differs from (j-i)e_{i+j}");
        Vector lhs = lie_bracket(h.lie, gi, mul(g, unit_vector(p, kj)));
        Vector rhs = mul(g, to_vector(wb, f));
        o.require(lhs == rhs, "bracket [e" + std::to_string(i) + ",e" + std::to_string(j) + "] mismatch, p=" +
                                  std::to_string(p));
      }
      // oracle: D^p(x) by iterating the derivation on x
      auto dp = tp.power(tp.monomial(i + 1), p);
      Vector oracle_cls = hh1_class(h, poly_derivation(h.category, tp, dp));
      o.require(oracle_cls == mul(g, to_vector(w.pmap(i), f)), "derivation iteration differs from Witt p-map");
      o.require(p_eval(h.lie, gi) == oracle_cls, "p-map of e" + std::to_string(i) + " mismatch, p=" +
                                                     std::to_string(p));
    }
    o.require(is_restricted_isomorphism(witt(p), h.lie, g), "G is not a restricted isomorphism");
    o.detail << "p=" << p << " dim " << h.lie.dim << "; ";
  }
}

// ---------------------------------------------------------------- 2

void complex_consistency(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& e : builtin_catalog()) {
    FDCategory a = catalog(e);
    CochainComplex cx(a);
    if (a.dim() <= 4) {
      for (int n = 0; n <= 3; ++n) {
        o.require(cx.hh(n, true).dim() == cx.hh(n, false).dim(),
                  e + ": normalized and full HH^" + std::to_string(n) + " differ");
        ++compared;
      }
    }
    o.require(cx.hh(0, true).dim() == rank(center(a)), e + ": HH^0 != center");
    std::size_t outer = rank(derivations(a)) - rank(inner_derivations(a));
    o.require(cx.hh(1, true).dim() == outer, e + ": HH^1 != Der - Inn");
  }
  o.detail << builtin_catalog().size() << " algebras, " << compared << " normalized/full comparisons; ";
}

// ---------------------------------------------------------------- 3

void power_welldefined(Outcome& o) {
  std::size_t runs = 0, trials = 0;
  for (const auto& e : builtin_catalog()) {
    CochainComplex cx(catalog(e));
    for (int degree : {1, 3}) {
      if (degree == 3 && cx.category().dim() > 3) continue;
      WellDefinedReport r = check_power_welldefined(cx, degree, 100, 1000 + runs);
      o.require(r.ok(), e + " degree " + std::to_string(degree) + ": " + std::to_string(r.failures.size()) +
                            " failures");
      ++runs;
      trials += r.trials;
    }
  }
  o.detail << runs << " runs, " << trials << " trials; ";
}

// ---------------------------------------------------------------- 4

void restrictedness(Outcome& o) {
  std::mt19937_64 rng(404);
  std::size_t elements = 0;
  for (const auto& e : builtin_catalog()) {
    HH1 h = compute_hh1(catalog(e));
    const PrimeField f = h.lie.field();
    std::vector<Vector> xs;
    for (std::size_t i = 0; i < h.lie.dim; ++i) xs.push_back(unit_vector(h.lie.dim, i));
    if (h.lie.dim > 0)
      for (int t = 0; t < 50; ++t) xs.push_back(random_vec(f, h.lie.dim, rng));
    for (const auto& x : xs) {
      Vector xp = hh1_p_power(h, x);
      for (Residue alpha = 0; alpha < f.p(); ++alpha) {
        Vector ax = x;
        scale(f, ax, alpha);
        Vector expect = xp;
        scale(f, expect, f.pow(alpha, f.p()));
        o.require(hh1_p_power(h, ax) == expect, e + ": (ax)^[p] != a^p x^[p]");
      }
      o.require(ad(h.lie, xp) == matrix_power(ad(h.lie, x), f.p()), e + ": ad(x^[p]) != ad(x)^p");
      ++elements;
    }
    RestrictedReport r = verify_restricted(h.lie);
    o.require(r.ok, e + ": verify_restricted failed");
  }
  o.detail << builtin_catalog().size() << " algebras, " << elements << " elements; ";
}

// ---------------------------------------------------------------- 5

void morita_instance(Outcome& o) {
  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "qci(3,2,2,2)"}) {
    MoritaReport r = check_morita_instance(catalog(e), 2, 50, 5);
    o.require(r.transfer_bijective && r.transfer_preserves_bracket && r.transfer_preserves_pmap,
              std::string(e) + ": entrywise transfer is not a restricted isomorphism");
    o.require(r.iso.verdict == IsoVerdict::Isomorphic, std::string(e) + ": iso_search says " + to_string(r.iso.verdict));
    o.require(r.ok(), std::string(e) + ": report not ok");
    o.detail << e << " " << r.dim_a << "~" << r.dim_m << "; ";
  }
}

// ---------------------------------------------------------------- 6

void appendix_identities(Outcome& o) {
  const SignConvention& c = default_convention();
  o.require(c.undetermined.empty(), "default convention leaves entries undetermined");

  io::SuiteResult s = io::run_suite("appendix", 42, 100);
  o.require(s.failures == 0, "appendix suite: " + std::to_string(s.failures) + " failures");
  std::vector<std::uint32_t> primes;
  for (const auto& r : s.report["results"]) {
    auto p = catalog(r["algebra"].get<std::string>()).field().p();
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  o.require(primes.size() == 3, "appendix suite does not cover p in {2,3,5}");

  struct Case {
    int n;
    const char* algebra;
  };
  for (Case k : {Case{2, "truncated_poly(2,2)"}, Case{2, "truncated_poly(3,3)"}, Case{3, "truncated_poly(3,3)"},
                 Case{4, "truncated_poly(2,2)"}, Case{4, "truncated_poly(2,3)"}, Case{3, "truncated_poly(5,5)"}}) {
    CochainComplex cx(catalog(k.algebra));
    Rng rng(static_cast<std::uint64_t>(k.n) * 977);
    for (int t = 0; t < 20; ++t) {
      int deg = (cx.category().dim() <= 3 && t % 2 == 1) ? 3 : 1;
      o.require(check_turchin(cx, random_cocycle(cx, deg, rng), k.n, c),
                "Turchin n=" + std::to_string(k.n) + " on " + k.algebra);
    }
  }

  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "truncated_poly(5,5)", "qci(3,2,2,2)"}) {
    CochainComplex cx(catalog(e));
    const int p = static_cast<int>(cx.field().p());
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
      int deg = (cx.category().dim() <= 3 && t % 2 == 1) ? 3 : 1;
      Cochain x = random_cocycle(cx, deg, rng);
      o.require(is_zero(differential(cx, iterated_power(cx, x, p)).coeffs), std::string(e) + ": d(x^[p]) != 0");
    }
  }

  std::vector<FDCategory> more = resolution_algebras();
  for (const char* e : {"truncated_poly(3,2)", "truncated_poly(5,2)", "qci(5,2,2,2)", "opposite(qci(3,2,2,2))"})
    more.push_back(catalog(e));
  SignConvention wider = resolve_signs(more);
  o.require(wider == c && wider.undetermined.empty(), "convention changes when algebras are added");
  std::string d = describe(c);
  std::replace(d.begin(), d.end(), '\n', ',');
  o.detail << "convention " << d << "; ";
}

// ---------------------------------------------------------------- 7

void restriction_functoriality(Outcome& o) {
  for (const char* e : {"truncated_poly(2,2)", "truncated_poly(3,3)", "qci(3,2,2,2)"}) {
    CochainComplex big(morita_context(catalog(e), 2));
    std::vector<Failure> out;
    std::size_t bad = restriction_failures(big, 50, 77, &out);
    o.require(bad == 0, std::string(e) + ": " + std::to_string(bad) + " restriction failures");
    o.detail << e << " 50 trials; ";
  }
}

// ---------------------------------------------------------------- 8

void invariant_toolkit(Outcome& o) {
  std::mt19937_64 rng(808);
  struct Test {
    std::string name;
    RestrictedLie lie;
    std::optional<HH1> h;
  };
  std::vector<Test> ls;
  ls.push_back({"abelian p=2 rank 0", abelian(2, {{0}}), {}});
  ls.push_back({"abelian p=2 rank 1", abelian(2, {{1}}), {}});
  ls.push_back({"abelian p=3 rank 1", abelian(3, {{1}}), {}});
  ls.push_back({"abelian p=2 dim 2", abelian(2, {{0, 1}, {1, 1}}), {}});
  ls.push_back({"abelian p=3 dim 3", abelian(3, {{0, 1, 0}, {0, 0, 1}, {2, 0, 0}}), {}});
  for (const auto& e : builtin_catalog()) {
    FDCategory a = catalog(e);
    if (a.field().p() > 3) continue;
    HH1 h = compute_hh1(a);
    if (h.lie.dim == 0 || h.lie.dim > 3) continue;
    ls.push_back({e, h.lie, h});
  }

  for (const auto& t : ls) {
    const RestrictedLie& l = t.lie;
    const PrimeField f = l.field();
    RestrictedReport r = verify_restricted(l);
    o.require(r.ok && r.enveloping_check == "exhaustive", t.name + ": enveloping check " + r.enveloping_check);
    EnvelopingAlgebra env(l);
    for (int k = 0; k < 20; ++k) {
      Vector v = random_vec(f, l.dim, rng);
      Vector pe = p_eval(l, v);
      o.require(env.power(env.from_lie(v), f.p()) == env.from_lie(pe), t.name + ": v^p in u(L) != p_eval(v)");
      if (t.h) {
        o.require(pe == hh1_p_power(*t.h, v), t.name + ": p_eval differs from the derivation p-th power");
      } else {
        // abelian: (Σ v_i e_i)^[p] = Σ v_i^p e_i^[p]
        Vector expect(l.dim, 0);
        for (std::size_t i = 0; i < l.dim; ++i) axpy(f, expect, l.pmap[i], f.pow(v[i], f.p()));
        o.require(pe == expect, t.name + ": p_eval differs from the abelian formula");
      }
    }
    Fingerprint base = fingerprint(l);
    for (int k = 0; k < 20; ++k) {
      RestrictedLie g = transport(l, random_invertible(f, l.dim, rng));
      o.require(fingerprint(g) == base, t.name + ": fingerprint changed under basis change");
    }
  }

  for (std::uint32_t p : {2u, 3u}) {
    RestrictedLie r0 = abelian(p, {{0}}), r1 = abelian(p, {{1}});
    o.require(fingerprint(r0) != fingerprint(r1), "rank-0 and rank-1 fingerprints agree");
    o.require(iso_search(r0, r1).verdict == IsoVerdict::NonIsomorphic, "rank-0 vs rank-1 not reported distinct");
  }
  o.detail << ls.size() << " restricted Lie algebras; ";
}

// ---------------------------------------------------------------- 9

void zeta_report(Outcome& o) {
  io::SuiteResult a = io::run_suite("zeta", 2026, 50);
  io::SuiteResult b = io::run_suite("zeta", 2026, 50);
  o.require(a.report.dump() == b.report.dump(), "ζ report is not byte-identical across runs");
  std::size_t both = 0, allow = 0;
  for (const auto& r : a.report["results"]) {
    o.require(catalog(r["algebra"].get<std::string>()).field().p() == 3, "ζ run outside p = 3");
    o.require(r["cocycles"].get<std::size_t>() + r["non_cocycles"].get<std::size_t>() == 50, "ζ trial count");
    std::string range = r["range"].get<std::string>();
    (range == "i,j >= 1" ? both : allow) += 1;
    if (r["algebra"] == "truncated_poly(3,3)")
      o.detail << "[" << range << "] cocycles " << r["cocycles"].get<std::size_t>() << "/50, rep-independent "
               << r["representative_independent"].get<std::size_t>() << "; ";
  }
  o.require(both > 0 && allow > 0, "both index ranges must be reported");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "Witt algebra reproduction", 5, witt_reproduction);
  ok &= run(2, "complex consistency", 30, complex_consistency);
  ok &= run(3, "p-power well-definedness", 600, power_welldefined);
  ok &= run(4, "restrictedness of HH^1", 600, restrictedness);
  ok &= run(5, "Morita instance", 600, morita_instance);
  ok &= run(6, "brace identities", 600, appendix_identities);
  ok &= run(7, "restriction functoriality", 600, restriction_functoriality);
  ok &= run(8, "invariant toolkit", 600, invariant_toolkit);
  ok &= run(9, "zeta experiment", 600, zeta_report);
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 1;
}
