#pragma once

// The Hochschild cochain complex C*(A, A) of a finite-dimensional category,
// its brace operations, and the structure built from them.
//
// A degree-n cochain stores, for every composable basis tuple (u_1, ..., u_n)
// with u_i in hom(a_{n-i}, a_{n-i+1}), its value in hom(a_0, a_n) in local
// coordinates. Tuples are ordered lexicographically by object tuple
// (a_n, ..., a_0), then by basis tuple. Degree-0 cochains have one block per
// object. The complex works in a basis where every identity is a basis
// element, so normalized cochains are exactly those vanishing on tuples that
// contain an identity.

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "rhh/algebra.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

struct Limits {
  /// Coefficient-space cap: largest cochain space (entries) that will be built.
  std::size_t max_cochain_dim = 2'000'000;
  /// Largest differential matrix (entries) that cohomology() will assemble.
  std::size_t max_matrix_entries = 150'000'000;
};

class CochainLayout {
 public:
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t normalized_size() const noexcept { return normalized_size_; }
  std::size_t num_tuples() const noexcept { return offsets_.size(); }

  /// Basis indices of tuple t (empty for degree 0).
  std::span<const int> tuple(std::size_t t) const {
    return {tuples_.data() + t * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
  }
  std::size_t offset(std::size_t t) const { return offsets_[t]; }
  /// Offset in the normalized coordinate space, or -1 when the tuple contains an identity.
  long normalized_offset(std::size_t t) const { return norm_offsets_[t]; }
  /// Source object a_0 and target object a_n of the value block.
  int source(std::size_t t) const { return sources_[t]; }
  int target(std::size_t t) const { return targets_[t]; }
  std::size_t block_size(std::size_t t) const { return block_sizes_[t]; }

  /// Tuple id of a composable basis tuple; for degree 0 pass {object}.
  std::size_t find(std::span<const int> tuple) const;
  /// Tuple id from a precomputed radix key (sum of u_i * D^(n-i)).
  std::size_t find_key(std::uint64_t key) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend class CochainComplex;

 private:
  int degree_ = 0;
  std::size_t dim_ = 0;  // D, used for keys
  std::size_t size_ = 0;
  std::size_t normalized_size_ = 0;
  std::vector<int> tuples_;
  std::vector<std::size_t> offsets_;
  std::vector<long> norm_offsets_;
  std::vector<int> sources_, targets_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::int32_t> table_;
  std::unordered_map<std::uint64_t, std::int32_t> map_;
};

struct Cochain {
  int degree = 0;
  Vector coeffs;
  /// Set when the cochain is known to vanish on tuples containing an identity.
  bool normalized = false;
};

using Rng = std::mt19937_64;

struct HHSpace {
  int degree = 0;
  bool normalized = true;
  QuotientBasis quotient;
  std::size_t dim() const noexcept { return quotient.dim(); }
};

struct CohomologyClass {
  int degree = 0;
  bool normalized = true;
  Vector coords;
  Cochain representative;
};

class CochainComplex {
 public:
  explicit CochainComplex(const FDCategory& c, Limits limits = {});

  const FDCategory& category() const noexcept { return cat_; }
  const PrimeField& field() const noexcept { return cat_.field(); }
  const Limits& limits() const noexcept { return limits_; }

  /// Cached, built on first use. Throws ResourceBound past the coefficient cap.
  const CochainLayout& layout(int degree) const;

  Cochain zero(int degree) const;
  /// The composition m(g, f) = g∘f as a degree-2 cochain.
  const Cochain& multiplication() const;
  /// Degree-0 cochain picking out the identities.
  Cochain unit() const;
  /// Uniform coordinates; when normalized, only tuples without identities are filled.
  Cochain random(int degree, Rng& rng, bool normalized) const;

  /// Structural check: zero on every tuple containing an identity.
  bool is_normalized(const Cochain& x) const;

  /// Coordinates in the chosen complex (normalized coordinates drop identity tuples).
  Vector coordinates(const Cochain& x, bool normalized) const;
  Cochain from_coordinates(int degree, std::span<const Residue> v, bool normalized) const;

  /// Cached cohomology spaces.
  const HHSpace& hh(int degree, bool normalized) const;

  Cochain add(const Cochain& a, const Cochain& b) const;
  Cochain sub(const Cochain& a, const Cochain& b) const;
  Cochain scale(const Cochain& a, Residue c) const;
  Cochain axpy(const Cochain& a, const Cochain& b, Residue c) const;  // a + c b

 private:
  FDCategory cat_;
  Limits limits_;
  mutable std::mutex layout_mutex_;
  mutable std::mutex space_mutex_;
  mutable std::map<int, std::unique_ptr<CochainLayout>> layouts_;
  mutable std::map<std::pair<int, bool>, std::unique_ptr<HHSpace>> spaces_;
  std::unique_ptr<Cochain> mult_;
  std::vector<bool> is_identity_;
};

// ---------------------------------------------------------------- operations

enum class BraceEval {
  /// Skip tuples with identities when every input is normalized.
  Auto,
  /// Evaluate every output tuple (used to assert normalization structurally).
  Full,
  /// Drop the insertion signs. Fault injection for the sign-resolution tripwire only.
  DropSignsFault,
};

/// Uniform cocycle: random combination of a cocycle basis.
Cochain random_cocycle(const CochainComplex& cx, int degree, Rng& rng, bool normalized = true);

/// x{y_1, ..., y_s}: the signed sum over order-preserving parallel insertions,
/// the insertion of y_i contributing (-1)^{(inputs before y_i)(|y_i| + 1)}.
/// Throws DegreeUnderflow when the result degree would be negative.
Cochain brace(const CochainComplex& cx, const Cochain& x, std::span<const Cochain> ys, BraceEval mode = BraceEval::Auto);

/// Gerstenhaber circle product x∘y = x{y}.
Cochain circle(const CochainComplex& cx, const Cochain& x, const Cochain& y);

/// Cup product (x⌣y)(u_1..u_{n+m}) = x(u_1..u_n) ∘ y(u_{n+1}..u_{n+m}).
/// Relates to the brace form by x⌣y = (-1)^{|x|(|y|+1)} m{x, y}.
Cochain cup(const CochainComplex& cx, const Cochain& x, const Cochain& y);

/// ∂x = m{x} + (-1)^{|x|} x{m}.
Cochain differential(const CochainComplex& cx, const Cochain& x);

/// [x, y] = x∘y - (-1)^{(|x|-1)(|y|-1)} y∘x.
Cochain bracket(const CochainComplex& cx, const Cochain& x, const Cochain& y);

/// x∘x for |x| even. Throws WrongParity otherwise.
Cochain reduced_square(const CochainComplex& cx, const Cochain& x);

/// Left-iterated circle power x^{[k]} = (..(x∘x)∘..)∘x with k factors, k >= 1.
Cochain iterated_power(const CochainComplex& cx, const Cochain& x, int k);

/// Matrix of ∂ on C^n: row i is the image of the i-th basis cochain. Assembled
/// directly from the expanded formula, independently of brace().
PrimeMatrix differential_matrix(const CochainComplex& cx, int degree, bool normalized);

/// HH^n as cocycles modulo boundaries. Throws ResourceBound past the size caps.
HHSpace cohomology(const CochainComplex& cx, int degree, bool normalized);

/// Throws NotACocycle when x is not closed.
CohomologyClass class_of(const CochainComplex& cx, const Cochain& x, bool normalized = true);
CohomologyClass class_from_coords(const CochainComplex& cx, int degree, std::span<const Residue> coords,
                                  bool normalized = true);
/// Whether x - y is a boundary; both must be cocycles of the same degree.
bool same_class(const CochainComplex& cx, const Cochain& x, const Cochain& y, bool normalized = true);

/// Class of x^{[p]} for a class of odd degree. Throws WrongParity.
CohomologyClass p_power_class(const CochainComplex& cx, const CohomologyClass& c);

enum class ZetaRange {
  /// i, j >= 1 in i + j = p - 1.
  BothPositive,
  /// i >= 1, j >= 0, with x^{[0]} the unit cochain.
  AllowJZero,
};

struct ZetaResult {
  /// Homogeneous components of the sum, keyed by degree.
  std::map<int, Cochain> components;
  bool cocycle = false;
  /// Classes of the components; filled only when every component is a cocycle.
  std::map<int, CohomologyClass> classes;
};

/// ζ(x) = Σ_{i+j=p-1} ((-1)^i / i) x^{[i]} ⌣ x^{[j]} on an odd-degree cochain,
/// with the index range chosen by `range`. Throws WrongParity, EvenCharacteristic.
ZetaResult zeta(const CochainComplex& cx, const Cochain& x, ZetaRange range, bool normalized = true);

/// Restriction C*(B, B) -> C*(A, A) to the full subcategory A on `objects`.
class Restriction {
 public:
  /// Throws EmptySubset.
  Restriction(const CochainComplex& big, std::span<const int> objects);

  const CochainComplex& source() const noexcept { return *big_; }
  const CochainComplex& target() const noexcept { return *small_; }
  Cochain apply(const Cochain& x) const;

 private:
  const CochainComplex* big_;
  std::vector<int> objects_;
  std::vector<int> embedding_;
  std::unique_ptr<CochainComplex> small_;
};

}  // namespace rhh
