#pragma once

// Finite-dimensional restricted Lie algebras over F_p.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rhh/algebra.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

struct RestrictedLie {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  /// bracket[i][j] = coordinates of [e_i, e_j].
  std::vector<std::vector<Vector>> bracket;
  /// pmap[i] = coordinates of e_i^[p].
  std::vector<Vector> pmap;
  /// Optional basis labels, carried through serialization.
  std::vector<std::string> names;

  PrimeField field() const { return PrimeField(p); }
  friend bool operator==(const RestrictedLie&, const RestrictedLie&) = default;
};

/// Zero structure of the given dimension.
RestrictedLie zero_lie(std::uint32_t p, std::size_t dim);

Vector lie_bracket(const RestrictedLie& l, std::span<const Residue> u, std::span<const Residue> v);
/// ad(v) acting on column vectors: column j is [v, e_j].
PrimeMatrix ad(const RestrictedLie& l, std::span<const Residue> v);

/// The restricted enveloping algebra u(L) with PBW basis e_1^{a_1}..e_n^{a_n},
/// 0 <= a_i < p; monomial index = Σ a_i p^{i-1}.
class EnvelopingAlgebra {
 public:
  /// Throws ResourceBound when p^n is too large to index.
  explicit EnvelopingAlgebra(const RestrictedLie& l);

  const RestrictedLie& lie() const noexcept { return lie_; }
  std::size_t dim() const noexcept { return dim_; }
  std::vector<int> exponents(std::size_t mono) const;
  std::size_t monomial(std::span<const int> exps) const;
  /// Index of the degree-1 monomial e_i.
  std::size_t letter(std::size_t i) const;

  /// Sparse element: monomial index -> coefficient.
  using Element = std::map<std::size_t, Residue>;
  Element mul(const Element& a, const Element& b) const;
  Element from_lie(std::span<const Residue> v) const;
  /// v^p computed in u(L).
  Element power(const Element& a, std::uint64_t k) const;

  /// Product of two basis monomials. Throws RewriteDivergence past the step bound.
  const Element& mul_monomials(std::size_t a, std::size_t b) const;

 private:
  const Element& mul_letter(std::size_t mono, std::size_t k) const;
  void add_into(Element& acc, const Element& x, Residue c) const;

  RestrictedLie lie_;
  PrimeField f_;
  std::size_t n_;
  std::size_t dim_;
  std::vector<std::size_t> stride_;
  mutable std::map<std::pair<std::size_t, std::size_t>, Element> letter_memo_;
  mutable std::map<std::pair<std::size_t, std::size_t>, Element> mono_memo_;
  mutable std::size_t steps_ = 0;
  mutable std::size_t depth_ = 0;
};

/// u(L) as a one-object category (validated). Throws ResourceBound past kMaxCatalogDim.
FDCategory restricted_enveloping(const RestrictedLie& l);

struct RestrictedReport {
  bool ok = true;
  std::vector<std::string> violations;
  /// "exhaustive", "sampled" or "skipped": how u(L) associativity was checked.
  std::string enveloping_check;
};

/// Antisymmetry, Jacobi, ad(e_i^[p]) = ad(e_i)^p, and associativity of u(L):
/// exhaustive when p^n <= kExhaustiveEnvelopingDim, sampled otherwise.
RestrictedReport verify_restricted(const RestrictedLie& l);
inline constexpr std::size_t kExhaustiveEnvelopingDim = 128;

/// v^[p] read off from the p-th power in u(L). Throws IncoherentPMap when the
/// power leaves the Lie part.
Vector p_eval(const RestrictedLie& l, std::span<const Residue> v);

/// p-map evaluation with a shared enveloping algebra and memo of results.
class PMap {
 public:
  explicit PMap(const RestrictedLie& l);
  const Vector& operator()(std::span<const Residue> v) const;
  const RestrictedLie& lie() const noexcept { return env_.lie(); }

 private:
  EnvelopingAlgebra env_;
  mutable std::map<Vector, Vector> memo_;
};

/// Structure transported along the basis change whose columns are the new basis.
/// Throws BadParameter when g is singular.
RestrictedLie transport(const RestrictedLie& l, const PrimeMatrix& g);

// ---------------------------------------------------------------- invariants

enum class TorusMode { Exact, GreedyLowerBound };
std::string to_string(TorusMode m);

struct TorusResult {
  std::size_t dim = 0;
  TorusMode mode = TorusMode::Exact;
  /// Basis of a torus of that dimension (rows).
  std::vector<Vector> basis;
};

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_series;
  std::vector<std::size_t> lower_central_series;
  std::size_t center_pmap_rank = 0;
  std::size_t center_p_nilradical = 0;
  std::size_t max_torus = 0;
  TorusMode torus_mode = TorusMode::Exact;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline constexpr std::size_t kDefaultTorusBudget = 1'000'000;

/// Rows: basis of the center.
PrimeMatrix lie_center(const RestrictedLie& l);
Fingerprint fingerprint(const RestrictedLie& l, std::size_t torus_budget = kDefaultTorusBudget);

/// Throws NotASubalgebra when the span of `rows` is not closed under bracket and p-map.
bool is_torus(const RestrictedLie& l, const PrimeMatrix& rows);
TorusResult max_torus(const RestrictedLie& l, std::size_t budget = kDefaultTorusBudget);

enum class IsoVerdict { Isomorphic, NonIsomorphic, Inconclusive };
std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Inconclusive;
  /// Column j is the image of e_j of the first algebra.
  std::optional<PrimeMatrix> witness;
  std::string reason;
  std::size_t candidates_tried = 0;
};

/// Whether g (columns = images of basis vectors) is a bijective restricted homomorphism.
bool is_restricted_isomorphism(const RestrictedLie& a, const RestrictedLie& b, const PrimeMatrix& g);

IsoResult iso_search(const RestrictedLie& a, const RestrictedLie& b, std::size_t budget = 1'000'000);

}  // namespace rhh
