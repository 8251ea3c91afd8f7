#include <algorithm>
#include <random>

#include "rhh/error.hpp"
#include "rhh/hh1.hpp"
#include "rhh/io.hpp"

namespace rhh::io {

namespace {

Rng seeded(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(index)};
  return Rng(seq);
}

void guard_derivation_system(const FDCategory& c, const Limits& limits) {
  const std::size_t d = c.dim();
  DerivationCoords dc(c);
  const double entries = static_cast<double>(d) * static_cast<double>(d) * static_cast<double>(d) *
                         static_cast<double>(dc.size());
  if (entries > static_cast<double>(limits.max_matrix_entries))
    throw Error(ErrorCode::ResourceBound, "derivation system for dimension " + std::to_string(d) + " exceeds the matrix cap");
}

Json lie_summary(const RestrictedLie& l) {
  RestrictedReport vr = verify_restricted(l);
  Json out = to_json(l);
  out["verify_restricted"] = {{"ok", vr.ok}, {"enveloping_check", vr.enveloping_check}, {"violations", vr.violations}};
  out["fingerprint"] = to_json(fingerprint(l));
  return out;
}

Json result_header(const std::string& suite, const std::string& algebra, std::uint64_t seed, std::size_t trials) {
  return {{"suite", suite}, {"algebra", algebra}, {"seed", seed}, {"trials", trials}};
}

// ---------------------------------------------------------------- appendix

struct AppendixAlgebra {
  const char* expr;
  int max_degree;
};

Json appendix_one(const AppendixAlgebra& entry, std::size_t index, std::uint64_t seed, std::size_t trials,
                  std::size_t& failures) {
  const SignConvention& conv = default_convention();
  CochainComplex cx(catalog(entry.expr));
  const int p = static_cast<int>(cx.field().p());
  Rng rng = seeded(seed, index);
  const int md = entry.max_degree;
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a <= md; ++a)
    for (int b = 0; b <= md; ++b) {
      if (a + b > 0) pairs.push_back({a, b});
      for (int c = 1; c <= md; ++c) triples.push_back({a, b, c});
    }
  Json fl = Json::array();
  std::size_t rel1 = 0, rel2 = 0, turchin = 0, degenerate = 0;
  auto record = [&](const char* check, std::size_t trial, std::map<std::string, Vector> w) {
    fl.push_back(to_json(Failure{check, trial, std::move(w)}));
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& pr = pairs[t % pairs.size()];
    Cochain x = cx.random(pr[0], rng, false), y = cx.random(pr[1], rng, false);
    ++rel1;
    if (!check_rel1(cx, x, y, conv)) record("rel1", t, {{"x", x.coeffs}, {"y", y.coeffs}});

    const auto& tr = triples[t % triples.size()];
    Cochain a = cx.random(tr[0], rng, false), b = cx.random(tr[1], rng, false), c = cx.random(tr[2], rng, false);
    ++rel2;
    if (!check_rel2(cx, a, b, c, conv)) record("rel2", t, {{"x", a.coeffs}, {"y", b.coeffs}, {"z", c.coeffs}});

    const int deg = (cx.category().dim() <= 3 && t % 2 == 1) ? 3 : 1;
    Cochain z = random_cocycle(cx, deg, rng);
    const int n = 2 + static_cast<int>(t % 4);
    ++turchin;
    if (!check_turchin(cx, z, n, conv)) record(n == p ? "turchin (n = p)" : "turchin", t, {{"x", z.coeffs}});
    if (p <= 5) {
      ++degenerate;
      Cochain zp = iterated_power(cx, z, p);
      if (!is_zero(differential(cx, zp).coeffs)) record("d(x^[p]) = 0", t, {{"x", z.coeffs}});
    }
  }
  failures += fl.size();
  Json out = result_header("appendix", entry.expr, seed, trials);
  out["p"] = p;
  out["checks"] = {{"rel1", rel1}, {"rel2", rel2}, {"turchin", turchin}, {"power_cocycle", degenerate}};
  out["failures"] = fl;
  return out;
}

Json suite_appendix(std::uint64_t seed, std::size_t trials, std::size_t& failures) {
  static const AppendixAlgebra algebras[] = {
      {"truncated_poly(2,2)", 2}, {"truncated_poly(2,3)", 2}, {"truncated_poly(3,3)", 2}, {"qci(3,2,2,2)", 2},
      {"truncated_poly(5,2)", 2}, {"truncated_poly(5,5)", 2}, {"matrix_over(truncated_poly(2,2),2)", 1}};
  Json results = Json::array();
  std::size_t i = 0;
  for (const auto& a : algebras) results.push_back(appendix_one(a, i++, seed, trials, failures));
  return results;
}

// ---------------------------------------------------------------- well-definedness

Json welldefined_one(const std::string& expr, int degree, std::uint64_t seed, std::size_t trials,
                     std::size_t& failures) {
  CochainComplex cx(catalog(expr));
  WellDefinedReport r = check_power_welldefined(cx, degree, trials, seed);
  failures += r.failures.size();
  Json out = result_header("welldefined", expr, seed, trials);
  out["degree"] = degree;
  out["counts"] = {{"cocycle", r.cocycle_failures}, {"class", r.class_failures}, {"ad", r.ad_failures},
                   {"hh1", r.hh1_failures}};
  Json fl = Json::array();
  for (const auto& f : r.failures) fl.push_back(to_json(f));
  out["failures"] = fl;
  return out;
}

Json suite_welldefined(std::uint64_t seed, std::size_t trials, std::size_t& failures) {
  Json results = Json::array();
  for (const auto& e : builtin_catalog()) {
    results.push_back(welldefined_one(e, 1, seed, trials, failures));
    if (catalog(e).dim() <= 3) results.push_back(welldefined_one(e, 3, seed, trials, failures));
  }
  return results;
}

// ---------------------------------------------------------------- Morita

Json suite_morita(std::uint64_t seed, std::size_t trials, std::size_t& failures) {
  static const char* algebras[] = {"truncated_poly(2,2)", "truncated_poly(3,3)", "qci(3,2,2,2)",
                                   "matrix_over(truncated_poly(2,1),2)"};
  Json results = Json::array();
  for (const char* e : algebras) {
    std::vector<Failure> restriction;
    MoritaReport r = check_morita_instance(catalog(e), 2, trials, seed);
    Json fl = Json::array();
    auto flag = [&](bool ok, const char* what) {
      if (!ok) fl.push_back({{"check", what}, {"trial", 0}, {"witness", Json::object()}});
    };
    flag(r.transfer_bijective, "transfer bijective");
    flag(r.transfer_preserves_bracket, "transfer preserves bracket");
    flag(r.transfer_preserves_pmap, "transfer preserves p-map");
    flag(r.fingerprint_a == r.fingerprint_m, "fingerprints equal");
    flag(r.iso.verdict == IsoVerdict::Isomorphic, "iso_search finds an isomorphism");
    if (r.restriction_failures > 0) {
      CochainComplex ctx(morita_context(catalog(e), 2));
      restriction_failures(ctx, trials, seed, &restriction);
      for (const auto& f : restriction) fl.push_back(to_json(f));
    }
    failures += fl.size();
    Json out = result_header("morita", std::string("matrix_over(") + e + ",2)", seed, trials);
    out["dims"] = {r.dim_a, r.dim_m};
    out["fingerprint_a"] = to_json(r.fingerprint_a);
    out["fingerprint_m"] = to_json(r.fingerprint_m);
    out["transfer"] = r.transfer ? to_json(*r.transfer) : Json();
    out["iso_verdict"] = to_string(r.iso.verdict);
    out["witness"] = r.iso.witness ? to_json(*r.iso.witness) : Json();
    out["restriction_trials"] = r.restriction_trials;
    out["failures"] = fl;
    results.push_back(out);
  }
  return results;
}

// ---------------------------------------------------------------- ζ

Json suite_zeta(std::uint64_t seed, std::size_t trials) {
  static const char* algebras[] = {"truncated_poly(3,3)", "truncated_poly(3,2)", "qci(3,2,2,2)"};
  Json results = Json::array();
  for (const char* e : algebras) {
    CochainComplex cx(catalog(e));
    for (ZetaRange range : {ZetaRange::BothPositive, ZetaRange::AllowJZero}) {
      ZetaReport z = zeta_experiment(cx, range, 1, trials, seed);
      Json out = result_header("zeta", e, seed, trials);
      out["range"] = range == ZetaRange::BothPositive ? "i,j >= 1" : "i >= 1, j >= 0";
      out["degree"] = 1;
      out["cocycles"] = z.cocycles;
      out["non_cocycles"] = z.non_cocycles;
      out["representative_independent"] = z.rep_independent;
      out["representative_dependent"] = z.rep_dependent;
      out["incomparable"] = z.rep_incomparable;
      out["failures"] = Json::array();
      results.push_back(out);
    }
  }
  return results;
}

}  // namespace

Json compute_report(const InputDocument& doc, const ComputeOptions& opt) {
  Json out;
  out["format_version"] = kFormatVersion;
  out["command"] = "compute";
  out["input"] = {{"id", doc.id}, {"kind", to_string(doc.kind)}, {"p", doc.p}};
  if (doc.lie) {
    out["restricted_lie"] = lie_summary(*doc.lie);
    return out;
  }
  const FDCategory& c = *doc.category;
  Limits limits;
  if (opt.cap_bytes > 0) {
    limits.max_cochain_dim = static_cast<std::size_t>(opt.cap_bytes / sizeof(Residue));
    limits.max_matrix_entries = static_cast<std::size_t>(opt.cap_bytes / sizeof(Residue));
  }
  if (opt.degree_max < 0) throw Error(ErrorCode::BadParameter, "degree-max must be >= 0");
  guard_derivation_system(c, limits);
  out["algebra"] = {{"dim", c.dim()}, {"objects", c.objects()}};
  CochainComplex cx(c, limits);
  Json dims = Json::array();
  for (int n = 0; n <= opt.degree_max; ++n) dims.push_back(cx.hh(n, opt.normalized).dim());
  out["complex"] = opt.normalized ? "normalized" : "full";
  out["hh_dims"] = dims;
  out["hh1"] = lie_summary(hh1_restricted(c));
  return out;
}

Json compare_report(const InputDocument& a, const InputDocument& b, std::size_t budget) {
  auto lie_of = [](const InputDocument& d) {
    if (d.lie) return *d.lie;
    Limits limits;
    guard_derivation_system(*d.category, limits);
    return hh1_restricted(*d.category);
  };
  RestrictedLie la = lie_of(a), lb = lie_of(b);
  Fingerprint fa = fingerprint(la), fb = fingerprint(lb);
  Json out;
  out["format_version"] = kFormatVersion;
  out["command"] = "compare";
  out["a"] = {{"id", a.id}, {"fingerprint", to_json(fa)}};
  out["b"] = {{"id", b.id}, {"fingerprint", to_json(fb)}};
  out["budget"] = budget;
  IsoResult r = iso_search(la, lb, budget);
  out["iso_search"] = {{"verdict", to_string(r.verdict)}, {"candidates_tried", r.candidates_tried}, {"reason", r.reason}};
  if (r.witness) out["iso_search"]["witness"] = to_json(*r.witness);
  if (r.verdict == IsoVerdict::NonIsomorphic && !(fa == fb)) {
    out["verdict"] = "distinguished: not stably equivalent of Morita type (HH^1 restricted invariants differ: " +
                     r.reason + ")";
    return out;
  }
  switch (r.verdict) {
    case IsoVerdict::Isomorphic:
      out["verdict"] = "HH^1 restricted Lie algebras isomorphic (no stable-equivalence claim)";
      break;
    case IsoVerdict::NonIsomorphic:
      out["verdict"] = "distinguished: HH^1 restricted Lie algebras not isomorphic (" + r.reason + ")";
      break;
    case IsoVerdict::Inconclusive:
      out["verdict"] = "inconclusive: " + r.reason;
      break;
  }
  return out;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, std::size_t trials) {
  static const std::vector<std::string> names{"appendix", "welldefined", "morita", "zeta"};
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::BadParameter, "unknown suite '" + suite + "'");
  SuiteResult res;
  Json results = Json::array();
  auto append = [&](Json part) {
    for (auto& r : part) results.push_back(std::move(r));
  };
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    if (name == "appendix") append(suite_appendix(seed, trials, res.failures));
    if (name == "welldefined") append(suite_welldefined(seed, trials, res.failures));
    if (name == "morita") append(suite_morita(seed, trials, res.failures));
    if (name == "zeta") append(suite_zeta(seed, trials));
  }
  Json out;
  out["format_version"] = kFormatVersion;
  out["command"] = "verify";
  out["suite"] = suite;
  out["seed"] = seed;
  out["trials"] = trials;
  if (suite == "appendix" || suite == "all") {
    const SignConvention& c = default_convention();
    Json conv = {{"rel1", c.rel1}, {"rel2", c.rel2}, {"turchin", c.turchin}, {"undetermined", c.undetermined}};
    out["sign_convention"] = conv;
  }
  out["results"] = results;
  out["failure_count"] = res.failures;
  res.report = std::move(out);
  return res;
}

}  // namespace rhh::io
