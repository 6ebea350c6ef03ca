#pragma once

#include <span>
#include <utility>
#include <vector>

#include "congruma/algebra.hpp"
#include "congruma/partition.hpp"

namespace congruma {

/// Default refusal threshold for whole-lattice enumeration.
inline constexpr int kDefaultElementCap = 20;

struct ConOptions {
  int cap = kDefaultElementCap;
};

/// Exhaustive compatibility check: p is a congruence iff for every operation
/// and every pair of componentwise-related argument tuples the outputs are
/// related.
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Least congruence containing the given pairs, by worklist closure: a
/// union-find is seeded with the pairs; every merge (x,y) is propagated
/// through each operation slot against all assignments of the remaining
/// slots, to fixpoint.
Partition cg_generated(const FiniteAlgebra& a,
                       std::span<const std::pair<Element, Element>> pairs);

inline Partition cg_principal(const FiniteAlgebra& a, Element x, Element y) {
  std::pair<Element, Element> p{x, y};
  return cg_generated(a, std::span(&p, 1));
}

/// The full congruence lattice: all congruences in canonical (lexicographic)
/// order, the principal-congruence table, and the order/join/meet structure
/// over congruence indices.
struct CongruenceLattice {
  AlgebraPtr algebra;
  std::vector<Partition> cons;
  std::vector<std::vector<int>> principal;  // principal[a][b] = index of Cg(a,b)
  std::vector<std::vector<bool>> leq;       // leq[i][j]: cons[i] <= cons[j]
  std::vector<std::vector<int>> join_table;
  std::vector<std::vector<int>> meet_table;
  int delta_index = -1;
  int nabla_index = -1;

  int count() const { return static_cast<int>(cons.size()); }
  /// Index of the partition among the congruences, or -1.
  int index_of(const Partition& p) const;
  /// Indices i with theta <= cons[i].
  std::vector<int> up_set(int theta) const;
  /// Covering pairs of the congruence order, for diagrams.
  std::vector<std::pair<int, int>> covers() const;
};

/// Enumerates Con(A): all principal congruences are generated, then the set
/// {delta} + principals is closed under binary join; meets are verified to
/// stay inside. Throws CapExceeded when |A| exceeds opts.cap.
CongruenceLattice enumerate_con(const AlgebraPtr& a, const ConOptions& opts = {});

/// Exhaustive law checks over the congruence indices.
bool con_is_distributive(const CongruenceLattice& con);
bool con_is_modular(const CongruenceLattice& con);

}  // namespace congruma
