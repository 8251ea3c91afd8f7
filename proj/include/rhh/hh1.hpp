#pragma once

// HH^1 as a restricted Lie algebra, computed directly from derivations:
// bracket = commutator, p-map = p-fold composition.

#include <string>
#include <vector>

#include "rhh/algebra.hpp"
#include "rhh/liealg.hpp"
#include "rhh/matrix.hpp"

namespace rhh {

struct HH1 {
  /// Category whose basis the derivation coordinates refer to.
  FDCategory category;
  PrimeMatrix der;          // rows span Der, DerivationCoords
  PrimeMatrix inn;          // rows span Inn
  QuotientBasis quotient;   // Der / Inn; class_basis rows are the chosen representatives
  RestrictedLie lie;
};

/// Representatives are the rref rows of Der independent modulo Inn.
HH1 compute_hh1(const FDCategory& a);
RestrictedLie hh1_restricted(const FDCategory& a);

/// Class coordinates of a derivation (DerivationCoords). Throws NotACocycle for non-derivations.
Vector hh1_class(const HH1& h, std::span<const Residue> derivation);
/// Representative derivation of class coordinates.
Vector hh1_representative(const HH1& h, std::span<const Residue> coords);
/// Commutator D1 D2 - D2 D1.
Vector derivation_commutator(const FDCategory& c, std::span<const Residue> d1, std::span<const Residue> d2);
/// k-fold composition D^k.
Vector derivation_power(const FDCategory& c, std::span<const Residue> d, std::uint64_t k);
/// Class of the p-fold composition of a representative of the class `coords`.
Vector hh1_p_power(const HH1& h, std::span<const Residue> coords);

struct CrosscheckReport {
  bool match = true;
  std::size_t fast_dim = 0;
  std::size_t complex_dim = 0;
  std::vector<std::string> mismatches;
};

/// Compares the fast path against degree-1 classes of the normalized complex,
/// their bracket and p_power_class.
CrosscheckReport crosscheck_hh1(const FDCategory& a);

}  // namespace rhh
