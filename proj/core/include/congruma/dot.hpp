#pragma once

#include <string>

#include "congruma/spectrum.hpp"

namespace congruma {

enum class DotWhat { AlgebraOrder, Con, Spec };

/// DOT digraph of a Hasse diagram: nodes in stable order labeled with
/// canonical renderings, edges the covering relation (lower -> upper).
/// AlgebraOrder requires a bounded-lattice signature.
std::string emit_dot(const SpectrumAnalysis& s, DotWhat what);

/// Order diagram of the algebra itself.
std::string emit_dot_order(const FiniteAlgebra& a);

}  // namespace congruma
