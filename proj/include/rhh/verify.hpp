#pragma once

// Element-level verification of the brace identities, the p-power, the Morita
// instance of the transfer isomorphism, and the ζ experiment.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhh/hh1.hpp"
#include "rhh/hochschild.hpp"
#include "rhh/liealg.hpp"

namespace rhh {

/// Sign exponents (0 for +1, 1 for -1) of the three identity families.
///
///   rel1:    ∂(x{y}) - ∂x{y} - (-1)^{|x|-1} x{∂y} = (-1)^a (x⌣y - (-1)^b y⌣x)
///            with (a, b) indexed by (|x| mod 2, |y| mod 2).
///   rel2:    (x⌣y){z} = (-1)^c x⌣(y{z}) + (-1)^d (x{z})⌣y
///            with (c, d) indexed by (|x|, |y|, |z|) mod 2.
///   Turchin: ∂(x^{[n]}) = (-1)^e Σ_{i=1}^{n-1} (-1)^{ni + k i} C(n,i) x^{[i]}⌣x^{[n-i]}
///            with (e, k) indexed by n = 2..5.
///
/// Records that agree on every term whose binomial is nonzero mod p are
/// identified; the smallest is kept.
struct SignConvention {
  std::array<std::array<int, 2>, 4> rel1{};
  std::array<std::array<int, 2>, 8> rel2{};
  std::array<std::array<int, 2>, 6> turchin{};  // index n, entries 2..5 used
  /// Entries no odd-characteristic sample could pin down.
  std::vector<std::string> undetermined;

  friend bool operator==(const SignConvention& a, const SignConvention& b) {
    return a.rel1 == b.rel1 && a.rel2 == b.rel2 && a.turchin == b.turchin;
  }
};

std::string describe(const SignConvention& c);

/// Which brace implementation the checks use; DropSignsFault exists to trip the resolver.
struct HarnessOptions {
  BraceEval brace_mode = BraceEval::Auto;
};

struct ResolveOptions {
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  int max_rel_degree = 2;
  HarnessOptions harness;
};

/// Enumerates sign records per identity class in canonical order and keeps
/// those consistent with every sample. Throws NoConsistentConvention when a
/// class has no survivor, AmbiguousConvention when odd-characteristic data
/// leaves two records that predict different identities. BadParameter on an
/// empty list.
SignConvention resolve_signs(const std::vector<FDCategory>& algebras, const ResolveOptions& opt = {});

/// The algebras the built-in convention is resolved on.
std::vector<FDCategory> resolution_algebras();
/// resolve_signs(resolution_algebras()), computed once.
const SignConvention& default_convention();

bool check_rel1(const CochainComplex& cx, const Cochain& x, const Cochain& y, const SignConvention& c,
                const HarnessOptions& h = {});
bool check_rel2(const CochainComplex& cx, const Cochain& x, const Cochain& y, const Cochain& z,
                const SignConvention& c, const HarnessOptions& h = {});
/// Requires |x| odd (ParityViolation), ∂x = 0 (NotACocycle) and 2 <= n <= 5 (BadParameter).
bool check_turchin(const CochainComplex& cx, const Cochain& x, int n, const SignConvention& c,
                   const HarnessOptions& h = {});

struct Failure {
  std::string check;
  std::size_t trial = 0;
  std::map<std::string, Vector> witness;
};

struct WellDefinedReport {
  int degree = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t cocycle_failures = 0;       // ∂(x^{[p]}) != 0
  std::size_t class_failures = 0;         // class((x+∂y)^{[p]}) != class(x^{[p]})
  std::size_t ad_failures = 0;            // degree 1: [x^{[p]}, e] vs ad(x)^p e
  std::size_t hh1_failures = 0;           // degree 1: p-power class vs the derivation fast path
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

/// Requires odd degree (ParityViolation).
WellDefinedReport check_power_welldefined(const CochainComplex& cx, int degree, std::size_t trials,
                                          std::uint64_t seed);

struct MoritaReport {
  std::size_t dim_a = 0;
  std::size_t dim_m = 0;
  bool transfer_bijective = false;
  bool transfer_preserves_bracket = false;
  bool transfer_preserves_pmap = false;
  /// Column j: image of the j-th HH^1(A) basis class in HH^1(M_n(A)) coordinates.
  std::optional<PrimeMatrix> transfer;
  Fingerprint fingerprint_a, fingerprint_m;
  IsoResult iso;
  /// Restrictions of the two-object context to each object commute with brace, cup and ∂.
  std::size_t restriction_trials = 0;
  std::size_t restriction_failures = 0;
  bool ok() const;
};

/// Throws ResourceBound when M_n(A) exceeds the caps.
MoritaReport check_morita_instance(const FDCategory& a, int n, std::size_t restriction_trials = 50,
                                   std::uint64_t seed = 42);

/// Restriction from the context category to each object, tested on random cochains.
std::size_t restriction_failures(const CochainComplex& big, std::size_t trials, std::uint64_t seed,
                                 std::vector<Failure>* out = nullptr);

struct ZetaReport {
  ZetaRange range = ZetaRange::BothPositive;
  std::size_t trials = 0;
  std::size_t cocycles = 0;
  std::size_t non_cocycles = 0;
  std::size_t rep_independent = 0;
  std::size_t rep_dependent = 0;
  /// Trials where either evaluation was not a cocycle, so classes could not be compared.
  std::size_t rep_incomparable = 0;
};

/// Per trial: a random cocycle x of the given odd degree and a random cochain y;
/// records whether ζ(x) is a cocycle and whether ζ(x + ∂y) has the same class.
ZetaReport zeta_experiment(const CochainComplex& cx, ZetaRange range, int degree, std::size_t trials,
                           std::uint64_t seed);

}  // namespace rhh
