#include <string>

#include "rhh/error.hpp"
#include "rhh/liealg.hpp"

namespace rhh {

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NonIsomorphic: return "non-isomorphic";
    case IsoVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Vector column(const PrimeMatrix& g, std::size_t j) {
  Vector c(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) c[i] = g(i, j);
  return c;
}

// How to rebuild a basis of L from generators: each element is a generator,
// a bracket of two earlier elements, or the p-map of an earlier one.
struct Step {
  enum Kind { Generator, Bracket, PPower } kind;
  std::size_t a = 0, b = 0;
};

struct Construction {
  std::vector<Vector> elements;
  std::vector<Step> steps;
  std::size_t generators = 0;
};

Construction generate(const RestrictedLie& l, const PMap& pm) {
  const PrimeField f = l.field();
  Construction c;
  EchelonBasis span(f, l.dim);
  auto add = [&](Vector v, Step s) {
    if (!span.insert(v)) return false;
    c.elements.push_back(std::move(v));
    c.steps.push_back(s);
    return true;
  };
  for (std::size_t i = 0; i < l.dim; ++i) {
    Vector e(l.dim, 0);
    e[i] = 1;
    if (!add(e, {Step::Generator, c.generators, 0})) continue;
    ++c.generators;
    bool grew = true;
    while (grew) {
      grew = false;
      const std::size_t m = c.elements.size();
      for (std::size_t a = 0; a < m; ++a) {
        grew = add(pm(c.elements[a]), {Step::PPower, a, 0}) || grew;
        for (std::size_t b = a + 1; b < m; ++b)
          grew = add(lie_bracket(l, c.elements[a], c.elements[b]), {Step::Bracket, a, b}) || grew;
      }
    }
  }
  return c;
}

// Isomorphism-invariant data of a single element.
std::vector<std::size_t> signature(const RestrictedLie& l, const PMap& pm, std::span<const Residue> v) {
  const PrimeField f = l.field();
  std::vector<std::size_t> sig;
  PrimeMatrix a = ad(l, v), pw = a;
  for (std::size_t k = 0; k < l.dim; ++k) {
    sig.push_back(rank(pw));
    pw = pw * a;
  }
  std::vector<Vector> orbit;
  Vector w(v.begin(), v.end());
  for (std::size_t k = 0; k <= l.dim; ++k) {
    orbit.push_back(w);
    sig.push_back(rank(PrimeMatrix::from_rows(f, l.dim, orbit)));
    w = pm(w);
  }
  return sig;
}

bool check_iso(const RestrictedLie& a, const RestrictedLie& b, const PMap& pb, const PrimeMatrix& g) {
  if (a.p != b.p || a.dim != b.dim || g.rows() != b.dim || g.cols() != a.dim) return false;
  if (rank(g) != a.dim) return false;
  std::vector<Vector> img;
  for (std::size_t j = 0; j < a.dim; ++j) img.push_back(column(g, j));
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (mul(g, a.pmap[i]) != pb(img[i])) return false;
    for (std::size_t j = i + 1; j < a.dim; ++j)
      if (mul(g, a.bracket[i][j]) != lie_bracket(b, img[i], img[j])) return false;
  }
  return true;
}

}  // namespace

bool is_restricted_isomorphism(const RestrictedLie& a, const RestrictedLie& b, const PrimeMatrix& g) {
  return check_iso(a, b, PMap(b), g);
}

IsoResult iso_search(const RestrictedLie& a, const RestrictedLie& b, std::size_t budget) {
  IsoResult res;
  if (a.p != b.p) {
    res.verdict = IsoVerdict::NonIsomorphic;
    res.reason = "different characteristic";
    return res;
  }
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  if (!(fa == fb)) {
    res.verdict = IsoVerdict::NonIsomorphic;
    if (fa.dim != fb.dim) res.reason = "dimension differs";
    else if (fa.center_dim != fb.center_dim) res.reason = "center dimension differs";
    else if (fa.derived_series != fb.derived_series) res.reason = "derived series differs";
    else if (fa.lower_central_series != fb.lower_central_series) res.reason = "lower central series differs";
    else if (fa.center_pmap_rank != fb.center_pmap_rank) res.reason = "p-map rank on the center differs";
    else if (fa.center_p_nilradical != fb.center_p_nilradical) res.reason = "p-nilradical of the center differs";
    else res.reason = "maximal torus dimension differs";
    // differing torus values are only an obstruction when both are exact
    if (fa.max_torus != fb.max_torus && (fa.torus_mode != TorusMode::Exact || fb.torus_mode != TorusMode::Exact) &&
        fa.dim == fb.dim && fa.center_dim == fb.center_dim && fa.derived_series == fb.derived_series &&
        fa.lower_central_series == fb.lower_central_series && fa.center_pmap_rank == fb.center_pmap_rank &&
        fa.center_p_nilradical == fb.center_p_nilradical) {
      res.verdict = IsoVerdict::Inconclusive;
      res.reason = "torus lower bounds differ";
    } else {
      return res;
    }
  }
  const PrimeField f = a.field();
  const std::size_t n = a.dim;
  if (n == 0) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = PrimeMatrix(f, 0, 0);
    res.reason = "zero algebras";
    return res;
  }
  if (a.bracket == b.bracket && a.pmap == b.pmap) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = PrimeMatrix::identity(f, n);
    res.reason = "identical structure constants";
    return res;
  }
  PMap pa(a), pb(b);
  Construction con = generate(a, pa);
  PrimeMatrix emat(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) emat(i, j) = con.elements[j][i];
  PrimeMatrix einv = *inverse(emat);

  // candidate images per generator, filtered by element signatures
  std::vector<std::vector<Vector>> cands(con.generators);
  {
    std::vector<Vector> all;
    Vector v(n, 0);
    for (;;) {
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++v[i] < f.p()) break;
        v[i] = 0;
      }
      if (i == n) break;
      all.push_back(v);
    }
    std::vector<std::vector<std::size_t>> sig_b;
    for (const auto& w : all) sig_b.push_back(signature(b, pb, w));
    for (std::size_t s = 0, g = 0; s < con.steps.size(); ++s) {
      if (con.steps[s].kind != Step::Generator) continue;
      auto sg = signature(a, pa, con.elements[s]);
      for (std::size_t k = 0; k < all.size(); ++k)
        if (sig_b[k] == sg) cands[g].push_back(all[k]);
      ++g;
    }
  }
  for (const auto& c : cands)
    if (c.empty()) {
      res.verdict = IsoVerdict::NonIsomorphic;
      res.reason = "a generator has no element of matching signature";
      return res;
    }

  std::vector<std::size_t> pick(con.generators, 0);
  std::vector<Vector> img(n);
  for (;;) {
    if (res.candidates_tried >= budget) {
      res.verdict = IsoVerdict::Inconclusive;
      res.reason = "search budget exhausted";
      return res;
    }
    ++res.candidates_tried;
    try {
      for (std::size_t s = 0, g = 0; s < con.steps.size(); ++s) {
        const Step& st = con.steps[s];
        if (st.kind == Step::Generator) img[s] = cands[g][pick[g]], ++g;
        else if (st.kind == Step::Bracket) img[s] = lie_bracket(b, img[st.a], img[st.b]);
        else img[s] = pb(img[st.a]);
      }
      PrimeMatrix imat(f, n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) imat(i, j) = img[j][i];
      PrimeMatrix g = imat * einv;
      if (check_iso(a, b, pb, g)) {
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = g;
        res.reason = "witness found and verified";
        return res;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IncoherentPMap) throw;
    }
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < cands[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  res.verdict = IsoVerdict::NonIsomorphic;
  res.reason = "exhaustive search over generator images found no isomorphism";
  return res;
}

}  // namespace rhh
