#pragma once

#include <vector>

#include "congruma/congruence.hpp"

namespace congruma {

/// Operation indices of a residuated-lattice signature
/// (join, meet, prod, impl, bot, top).
struct ResiduatedView {
  LatticeView lattice;
  int prod_op = -1, impl_op = -1;
};

/// Verifies the signature, the lattice laws, the commutative-monoid laws for
/// prod with unit top, and the residuation law
/// "a <= b -> c iff a * b <= c" exhaustively. Throws Error with the first
/// violated law otherwise.
ResiduatedView residuated_view(const FiniteAlgebra& a);

bool is_residuated_lattice(const FiniteAlgebra& a);

/// All filters (non-empty upward-closed subsets closed under prod) as sorted
/// element lists, ordered by size then lexicographically.
std::vector<std::vector<Element>> filters(const FiniteAlgebra& a,
                                          const ResiduatedView& v);

/// The congruence ~F = {(a,b) : a<->b in F} with a<->b = (a->b) meet (b->a).
Partition filter_congruence(const FiniteAlgebra& a, const ResiduatedView& v,
                            std::span<const Element> filter);

/// True when F |-> ~F is an order isomorphism from the filter lattice onto
/// Con(A) (bijective and inclusion-preserving both ways).
bool filters_match_congruences(const FiniteAlgebra& a, const ResiduatedView& v,
                               const CongruenceLattice& con);

}  // namespace congruma
