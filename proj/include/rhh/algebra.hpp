#pragma once

// Finite-dimensional k-linear categories over F_p, given by structure constants.
// A category with one object is a finite-dimensional algebra.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rhh/field.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

struct Term {
  int index;
  Residue coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Nonzero terms sorted by index.
using SparseVector = std::vector<Term>;

SparseVector to_sparse(std::span<const Residue> dense);
Vector to_dense(const SparseVector& v, std::size_t dim);

struct Morphism {
  std::string name;
  int source = 0;
  int target = 0;
};

/// Unvalidated structure constants. Indices refer to `basis`; a product entry
/// (g, f, v) states g∘f = v, and omitted composable pairs compose to zero.
struct RawCategory {
  std::uint32_t p = 2;
  std::vector<std::string> objects;
  std::vector<Morphism> basis;
  struct Product {
    int left;
    int right;
    SparseVector value;
  };
  std::vector<Product> products;
  std::vector<SparseVector> units;  // one per object
};

class FDCategory {
 public:
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_objects() const noexcept { return objects_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const Morphism& morphism(int u) const { return basis_[static_cast<std::size_t>(u)]; }
  const std::vector<Morphism>& basis() const noexcept { return basis_; }
  int source(int u) const { return basis_[static_cast<std::size_t>(u)].source; }
  int target(int u) const { return basis_[static_cast<std::size_t>(u)].target; }

  /// Global indices of the basis of hom(a, b), in basis order.
  const std::vector<int>& hom(int a, int b) const { return blocks_[block_id(a, b)]; }
  int local_index(int u) const { return local_[static_cast<std::size_t>(u)]; }

  /// g∘f for composable basis elements (source(g) == target(f)).
  const SparseVector& compose(int g, int f) const { return comp_[static_cast<std::size_t>(g) * dim() + f]; }
  const SparseVector& unit(int a) const { return units_[static_cast<std::size_t>(a)]; }
  /// Global index of id_a when the identity is itself a basis element.
  std::optional<int> unit_index(int a) const { return unit_index_[static_cast<std::size_t>(a)]; }
  bool has_unit_basis() const;

  /// Product of two elements given in global coordinates.
  Vector multiply(std::span<const Residue> x, std::span<const Residue> y) const;

  RawCategory raw() const;

  /// Free-form label, e.g. the catalog expression that produced the category.
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  friend FDCategory validate_category(const RawCategory& raw);

 private:
  explicit FDCategory(PrimeField f) : field_(f) {}
  std::size_t block_id(int a, int b) const { return static_cast<std::size_t>(a) * objects_.size() + b; }

  PrimeField field_;
  std::vector<std::string> objects_;
  std::vector<Morphism> basis_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> local_;
  std::vector<SparseVector> comp_;
  std::vector<SparseVector> units_;
  std::vector<std::optional<int>> unit_index_;
  std::string label_;
};

/// Checks dimensions, block structure, associativity on every composable basis
/// triple and both unit laws on every basis element.
/// Throws AssociativityViolation / UnitViolation naming the offending indices.
FDCategory validate_category(const RawCategory& raw);

/// Isomorphic category whose basis contains every identity id_a. For each
/// object the basis element at the first nonzero coordinate of id_a is replaced
/// by id_a. Returns a copy when the identities already are basis elements.
FDCategory with_unit_basis(const FDCategory& c);

/// Full subcategory on the listed objects (in the order given). Basis elements
/// keep their relative order. Throws EmptySubset.
FDCategory full_subcategory(const FDCategory& c, std::span<const int> objects);

/// For a full subcategory built by full_subcategory: the global index in `c`
/// of each basis element of the subcategory.
std::vector<int> subcategory_embedding(const FDCategory& c, std::span<const int> objects);

// ---------------------------------------------------------------- quivers

struct QuiverPresentation {
  std::uint32_t p = 2;
  std::vector<std::string> vertices;
  struct Arrow {
    std::string name;
    int source;
    int target;
  };
  std::vector<Arrow> arrows;
  /// A path is a list of arrow indices in composition order: {b, a} is b∘a.
  using Path = std::vector<int>;
  struct RelationTerm {
    long coeff;
    Path path;
  };
  std::vector<std::vector<RelationTerm>> relations;
  int truncation = 2;  // paths of length >= truncation vanish
};

/// kQ modulo (relations) and all paths of length >= truncation.
/// Throws TruncationTooSmall when a relation term is longer than the truncation,
/// BadParameter for non-parallel relations or terms of length < 2.
FDCategory from_quiver(const QuiverPresentation& q);

// ---------------------------------------------------------------- catalog

FDCategory truncated_poly(std::uint32_t p, int n);
FDCategory elem_abelian(std::uint32_t p, int r);
/// <x, y> / (x^a, y^b, yx - q xy), q != 0 mod p.
FDCategory qci(std::uint32_t p, int a, int b, long q);
FDCategory matrix_over(const FDCategory& a, int n);
FDCategory opposite(const FDCategory& a);
/// Two objects, all four hom-spaces equal to the algebra a.
FDCategory full_two_object(const FDCategory& a);
/// Objects P and Q = P^n for the algebra a: End(P) = a, End(Q) = M_n(a).
FDCategory morita_context(const FDCategory& a, int n);

/// Parses catalog expressions such as "matrix_over(truncated_poly(2,2),2)" or
/// "qci(3,2,2,2)". Throws ParseError or BadParameter.
FDCategory catalog(const std::string& expr);

/// Expressions of the built-in catalog the suites and property tests run over.
const std::vector<std::string>& builtin_catalog();

/// Largest basis size the catalog constructors build before refusing with ResourceBound.
inline constexpr std::size_t kMaxCatalogDim = 256;

// ---------------------------------------------------------------- linear data

/// Rows: families (z_a) in global coordinates with z_b∘f = f∘z_a for all basis f: a -> b.
PrimeMatrix center(const FDCategory& c);

/// Coordinates for block-preserving linear maps: D(u) in hom(source u, target u)
/// stored at offset(u) + local index. Matches the degree-1 cochain layout order
/// over basis elements.
class DerivationCoords {
 public:
  explicit DerivationCoords(const FDCategory& c);
  std::size_t size() const noexcept { return size_; }
  std::size_t offset(int u) const { return offsets_[static_cast<std::size_t>(u)]; }

  /// Block-preserving D x D matrix (column u = image of basis element u).
  PrimeMatrix to_matrix(std::span<const Residue> v) const;
  Vector from_matrix(const PrimeMatrix& m) const;

 private:
  const FDCategory* cat_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

/// Rows span {D : D(gf) = D(g)f + gD(f)} in DerivationCoords.
PrimeMatrix derivations(const FDCategory& c);
/// Rows span the derivations f -> c_b f - f c_a for c in the endomorphism blocks.
PrimeMatrix inner_derivations(const FDCategory& c);
/// Whether a block-preserving map (DerivationCoords) satisfies Leibniz on all basis pairs.
bool is_derivation(const FDCategory& c, std::span<const Residue> v);

}  // namespace rhh
