#include <string>

#include "rhh/error.hpp"
#include "rhh/verify.hpp"

namespace rhh {

namespace {

// Degree-1 cochain -> derivation coordinates and back.
Vector cochain_to_derivation(const CochainComplex& cx, const Cochain& x) {
  const FDCategory& c = cx.category();
  DerivationCoords dc(c);
  const auto& l = cx.layout(1);
  Vector d(dc.size(), 0);
  for (int u = 0; u < static_cast<int>(c.dim()); ++u) {
    std::size_t t = l.find(std::span<const int>(&u, 1));
    for (std::size_t k = 0; k < l.block_size(t); ++k) d[dc.offset(u) + k] = x.coeffs[l.offset(t) + k];
  }
  return d;
}

Cochain derivation_to_cochain(const CochainComplex& cx, std::span<const Residue> d) {
  const FDCategory& c = cx.category();
  DerivationCoords dc(c);
  const auto& l = cx.layout(1);
  Cochain x = cx.zero(1);
  for (int u = 0; u < static_cast<int>(c.dim()); ++u) {
    std::size_t t = l.find(std::span<const int>(&u, 1));
    for (std::size_t k = 0; k < l.block_size(t); ++k) x.coeffs[l.offset(t) + k] = d[dc.offset(u) + k];
  }
  x.normalized = cx.is_normalized(x);
  return x;
}

bool is_cocycle(const CochainComplex& cx, const Cochain& x) { return is_zero(differential(cx, x).coeffs); }

}  // namespace

WellDefinedReport check_power_welldefined(const CochainComplex& cx, int degree, std::size_t trials,
                                          std::uint64_t seed) {
  if (degree % 2 == 0)
    throw Error(ErrorCode::ParityViolation, "p-power well-definedness needs odd degree, got " + std::to_string(degree));
  const PrimeField& f = cx.field();
  const int p = static_cast<int>(f.p());
  WellDefinedReport rep;
  rep.degree = degree;
  rep.trials = trials;
  rep.seed = seed;
  Rng rng(seed);

  std::vector<Cochain> basis;  // HH^1 representatives for the ad check
  if (degree == 1) {
    const HHSpace& h = cx.hh(1, true);
    for (std::size_t i = 0; i < h.dim(); ++i)
      basis.push_back(cx.from_coordinates(1, h.quotient.class_basis.row(i), true));
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    Cochain x = random_cocycle(cx, degree, rng);
    Cochain y = trial == 0 ? cx.zero(degree - 1) : cx.random(degree - 1, rng, true);
    Cochain x2 = cx.add(x, differential(cx, y));
    Cochain xp = iterated_power(cx, x, p);
    Cochain x2p = iterated_power(cx, x2, p);
    auto fail = [&](std::size_t& counter, const char* check, std::map<std::string, Vector> extra = {}) {
      ++counter;
      Failure fl{check, trial, {{"x", x.coeffs}, {"y", y.coeffs}}};
      fl.witness.merge(extra);
      rep.failures.push_back(std::move(fl));
    };
    if (!is_cocycle(cx, xp) || !is_cocycle(cx, x2p)) {
      fail(rep.cocycle_failures, "cocycle", {{"x^[p]", xp.coeffs}, {"(x+dy)^[p]", x2p.coeffs}});
      continue;
    }
    if (!same_class(cx, xp, x2p)) fail(rep.class_failures, "class", {{"x^[p]", xp.coeffs}, {"(x+dy)^[p]", x2p.coeffs}});
    if (degree != 1) continue;

    for (std::size_t j = 0; j < basis.size(); ++j) {
      Cochain lhs = bracket(cx, xp, basis[j]);
      Cochain rhs = basis[j];
      for (int k = 0; k < p; ++k) rhs = bracket(cx, x, rhs);
      if (!same_class(cx, lhs, rhs)) {
        fail(rep.ad_failures, "ad", {{"e", basis[j].coeffs}, {"[x^[p],e]", lhs.coeffs}, {"ad(x)^p e", rhs.coeffs}});
        break;
      }
    }
    Vector d = cochain_to_derivation(cx, x);
    Cochain dp = derivation_to_cochain(cx, derivation_power(cx.category(), d, f.p()));
    if (!same_class(cx, xp, dp)) fail(rep.hh1_failures, "hh1", {{"x^[p]", xp.coeffs}, {"D^p", dp.coeffs}});
  }
  return rep;
}

bool MoritaReport::ok() const {
  return transfer_bijective && transfer_preserves_bracket && transfer_preserves_pmap &&
         fingerprint_a == fingerprint_m && iso.verdict == IsoVerdict::Isomorphic && restriction_failures == 0;
}

std::size_t restriction_failures(const CochainComplex& big, std::size_t trials, std::uint64_t seed,
                                 std::vector<Failure>* out) {
  std::size_t count = 0;
  Rng rng(seed);
  const int objects = static_cast<int>(big.category().num_objects());
  std::vector<Restriction> rs;
  for (int o = 0; o < objects; ++o) rs.emplace_back(big, std::span<const int>(&o, 1));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const int dx = 1 + static_cast<int>(trial % 2);
    Cochain x = big.random(dx, rng, false);
    Cochain y = big.random(1, rng, false);
    for (const Restriction& r : rs) {
      const CochainComplex& small = r.target();
      Cochain rx = r.apply(x), ry = r.apply(y);
      auto check = [&](const char* name, const Cochain& lhs, const Cochain& rhs) {
        if (lhs.coeffs == rhs.coeffs) return;
        ++count;
        if (out) out->push_back({name, trial, {{"x", x.coeffs}, {"y", y.coeffs}, {"restricted", lhs.coeffs}, {"computed", rhs.coeffs}}});
      };
      check("restrict brace", r.apply(brace(big, x, std::span<const Cochain>(&y, 1))),
            brace(small, rx, std::span<const Cochain>(&ry, 1)));
      check("restrict cup", r.apply(cup(big, x, y)), cup(small, rx, ry));
      check("restrict differential", r.apply(differential(big, x)), differential(small, rx));
    }
  }
  return count;
}

MoritaReport check_morita_instance(const FDCategory& a, int n, std::size_t restriction_trials, std::uint64_t seed) {
  if (a.num_objects() != 1) throw Error(ErrorCode::BadParameter, "the Morita check needs a one-object algebra");
  FDCategory m = matrix_over(a, n);
  const PrimeField& f = a.field();
  MoritaReport rep;
  HH1 ha = compute_hh1(a);
  HH1 hm = compute_hh1(m);
  rep.dim_a = ha.lie.dim;
  rep.dim_m = hm.lie.dim;

  // Entrywise extension: D(E_rc (x) u) = E_rc (x) D(u).
  const std::size_t da = a.dim();
  DerivationCoords dca(a), dcm(m);
  PrimeMatrix t(f, rep.dim_m, rep.dim_a);
  bool derivations_ok = true;
  for (std::size_t j = 0; j < rep.dim_a; ++j) {
    PrimeMatrix d = dca.to_matrix(ha.quotient.class_basis.row(j));
    PrimeMatrix big(f, m.dim(), m.dim());
    for (std::size_t rc = 0; rc < static_cast<std::size_t>(n * n); ++rc)
      for (std::size_t u = 0; u < da; ++u)
        for (std::size_t v = 0; v < da; ++v) big(rc * da + v, rc * da + u) = d(v, u);
    Vector dm = dcm.from_matrix(big);
    if (!is_derivation(m, dm)) {
      derivations_ok = false;
      break;
    }
    Vector col = hh1_class(hm, dm);
    for (std::size_t i = 0; i < rep.dim_m; ++i) t(i, j) = col[i];
  }
  if (derivations_ok) {
    rep.transfer = t;
    rep.transfer_bijective = rep.dim_a == rep.dim_m && rank(t) == rep.dim_a;
    auto image = [&](std::span<const Residue> v) { return mul(t, v); };
    rep.transfer_preserves_bracket = true;
    rep.transfer_preserves_pmap = true;
    for (std::size_t i = 0; i < rep.dim_a; ++i) {
      Vector ei(rep.dim_a, 0);
      ei[i] = 1;
      if (image(ha.lie.pmap[i]) != p_eval(hm.lie, image(ei))) rep.transfer_preserves_pmap = false;
      for (std::size_t j = 0; j < rep.dim_a; ++j) {
        Vector ej(rep.dim_a, 0);
        ej[j] = 1;
        if (image(ha.lie.bracket[i][j]) != lie_bracket(hm.lie, image(ei), image(ej)))
          rep.transfer_preserves_bracket = false;
      }
    }
  }
  rep.fingerprint_a = fingerprint(ha.lie);
  rep.fingerprint_m = fingerprint(hm.lie);
  rep.iso = iso_search(ha.lie, hm.lie);

  CochainComplex ctx(morita_context(a, n));
  rep.restriction_trials = restriction_trials;
  rep.restriction_failures = restriction_failures(ctx, restriction_trials, seed);
  return rep;
}

ZetaReport zeta_experiment(const CochainComplex& cx, ZetaRange range, int degree, std::size_t trials,
                           std::uint64_t seed) {
  ZetaReport rep;
  rep.range = range;
  rep.trials = trials;
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Cochain x = random_cocycle(cx, degree, rng);
    Cochain y = cx.random(degree - 1, rng, true);
    ZetaResult z1 = zeta(cx, x, range);
    ZetaResult z2 = zeta(cx, cx.add(x, differential(cx, y)), range);
    if (z1.cocycle) {
      ++rep.cocycles;
    } else {
      ++rep.non_cocycles;
    }
    if (!z1.cocycle || !z2.cocycle) {
      ++rep.rep_incomparable;
      continue;
    }
    bool same = true;
    for (const auto& [deg, c] : z1.classes) {
      auto it = z2.classes.find(deg);
      if (it == z2.classes.end() || it->second.coords != c.coords) same = false;
    }
    if (same) {
      ++rep.rep_independent;
    } else {
      ++rep.rep_dependent;
    }
  }
  return rep;
}

}  // namespace rhh
