#pragma once

#include <optional>
#include <span>
#include <vector>

#include "congruma/morphism.hpp"

namespace congruma {

/// Direct product with lexicographic element order (first factor most
/// significant) and componentwise operations.
struct Product {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> factors;
  std::vector<int> strides;

  Element index_of(std::span<const Element> tuple) const;
  std::vector<Element> tuple_of(Element e) const;

  /// The relation prod(parts): componentwise relatedness.
  Partition combine(std::span<const Partition> parts) const;

  /// Factorization theta = prod(theta_i) when it exists; std::nullopt when
  /// theta is not a product relation.
  std::optional<std::vector<Partition>> decompose(const Partition& theta) const;
};

/// Throws Error on signature mismatch.
Product direct_product(std::vector<AlgebraPtr> factors);

/// Componentwise morphism between two compatible products; verifies
/// Ker(prod f_i) = prod Ker(f_i).
Homomorphism product_hom(const Product& src, const Product& dst,
                         std::span<const Homomorphism> fs);

/// Quotient algebra A/theta with classes re-indexed by least representative.
struct Quotient {
  AlgebraPtr algebra;
  AlgebraPtr base;
  Partition theta;
  std::vector<Element> reps;  // class -> least base element
  Homomorphism projection;    // base -> algebra

  /// gamma/theta for gamma above theta.
  Partition push(const Partition& gamma) const;
  /// Preimage of a partition of the quotient.
  Partition lift(const Partition& q) const;
};

/// Throws Error when theta is not a congruence.
Quotient quotient(const AlgebraPtr& a, const Partition& theta);

/// Ordinal sum of bounded lattices: summands stacked bottom-up, the top of
/// each identified with the bottom of the next; glue points are owned by the
/// lower summand. A single summand sums to itself.
struct OrdinalSum {
  AlgebraPtr algebra;
  std::vector<AlgebraPtr> summands;
  std::vector<LatticeView> views;
  std::vector<int> offsets;  // global index of summand i's bottom

  int count() const { return static_cast<int>(summands.size()); }
  Element to_global(int summand, Element local) const;

  /// The congruence sum: non-glue blocks of each part plus merged glue
  /// blocks. Parts must be congruences of the summands.
  Partition combine(std::span<const Partition> parts) const;
};

/// Throws Error when a summand is not a bounded lattice.
OrdinalSum ordinal_sum(std::vector<AlgebraPtr> summands);

/// Stacked morphism between two ordinal sums of equal length.
Homomorphism ordinal_sum_hom(const OrdinalSum& src, const OrdinalSum& dst,
                             std::span<const Homomorphism> hs);

}  // namespace congruma
