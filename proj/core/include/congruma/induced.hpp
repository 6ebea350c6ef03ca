#pragma once

#include "congruma/constructions.hpp"

namespace congruma {

/// A morphism between two quotient algebras, with both quotients attached.
struct InducedHom {
  Quotient source_q, target_q;
  Homomorphism hom;
};

/// The injective morphism A/f*(beta) -> B/beta, a/f*(beta) |-> f(a)/beta.
/// The commuting square with the two canonical projections is verified.
InducedHom induced_f_beta(const Homomorphism& f, const Partition& beta);

/// The morphism A/theta -> B/Cg_B(f(theta)), a/theta |-> f(a)/Cg_B(f(theta)).
InducedHom induced_f_bracket(const Homomorphism& f, const Partition& theta);

/// The map Con(B) -> Con(A/Ker f), beta |-> f*(beta)/Ker(f), applied to one
/// congruence of the target.
Partition phi_f(const Homomorphism& f, const Quotient& by_kernel,
                const Partition& beta);

/// LO via radicals: for every theta above Ker(f),
/// f*(radical(Cg_B(f(theta)))) equals radical(theta). Requires f admissible.
bool lo_char_radical(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst);

/// GU for embeddings via m-system avoidance: for every prime phi of the
/// source, every maximal proper congruence of the target avoiding the pair
/// set (source pairs outside phi) restricts back to exactly phi.
/// Throws Error when f is not injective.
bool gu_char_msystem(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst);

}  // namespace congruma
