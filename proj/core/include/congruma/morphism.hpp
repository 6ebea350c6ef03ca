#pragma once

#include <optional>
#include <string>
#include <vector>

#include "congruma/spectrum.hpp"

namespace congruma {

/// A compatibility-verified map between two finite algebras of the same
/// signature.
struct Homomorphism {
  AlgebraPtr source, target;
  std::vector<Element> map;

  Element operator()(Element e) const { return map[e]; }
  bool is_injective() const;
  bool is_surjective() const;
};

/// Verifies compatibility exhaustively; throws Error naming the first
/// violating operation and argument tuple.
Homomorphism validate_hom(AlgebraPtr source, AlgebraPtr target,
                          std::vector<Element> map);

Homomorphism identity_hom(const AlgebraPtr& a);

/// g after f. Throws Error when f's target is not g's source object.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

/// f*(beta) = {(a,b) : (f(a),f(b)) in beta}; a congruence of the source for
/// any congruence beta of the target.
Partition preimage(const Homomorphism& f, const Partition& beta);

/// Ker(f) = f*(delta).
Partition kernel(const Homomorphism& f);

/// f factored as embedding after surjection through its image subalgebra.
struct ImageFactorization {
  Subalgebra image;
  Homomorphism surjection;  // source -> image
  Homomorphism embedding;   // image -> target
};
ImageFactorization image_algebra(const Homomorphism& f);

/// Cg_B(f(theta)): least congruence of the target containing the image pairs.
Partition pushforward_cg(const Homomorphism& f, const Partition& theta);

enum class Verdict3 { No, Yes, NA };
std::string to_string(Verdict3 v);

/// Admissibility/GU/LO verdicts with canonical counterexamples. GU and LO are
/// n/a exactly when the morphism is not admissible.
struct MorphismVerdict {
  bool admissible = false;
  Verdict3 gu = Verdict3::NA;
  Verdict3 lo = Verdict3::NA;

  /// Prime of the target whose preimage is not prime.
  struct AdmissibilityWitness {
    Partition psi;         // prime of B
    Partition preimage;    // f*(psi), not prime in A
  };
  /// Triple (phi, psi, phi1) with phi <= psi primes of A, f*(phi1) = phi,
  /// and no psi1 above phi1 pulling back to psi.
  struct GuWitness {
    Partition phi, psi;    // primes of A
    Partition phi1;        // prime of B over phi
  };
  /// Prime above the kernel not hit by f*.
  struct LoWitness {
    Partition phi;         // prime of A above Ker(f)
  };
  std::optional<AdmissibilityWitness> adm_witness;
  std::optional<GuWitness> gu_witness;
  std::optional<LoWitness> lo_witness;
};

/// Full decision procedure. Admissibility by definition; GU by the criterion
/// "V_A(f*(psi)) inside f*(V_B(psi)) for every prime psi of B"; LO by
/// "V_A(Ker f) inside f*(Spec B)".
MorphismVerdict analyze_morphism(const Homomorphism& f,
                                 const SpectrumAnalysis& src,
                                 const SpectrumAnalysis& dst);

/// True when f* maps every closed set of Spec(B) onto a closed set of
/// Spec(A); requires f admissible.
bool spec_map_closed(const Homomorphism& f, const SpectrumAnalysis& src,
                     const SpectrumAnalysis& dst);

/// Verdict rendering: "admissible: yes|no", "GU: yes|no|n/a",
/// "LO: yes|no|n/a", followed by witness blocks.
std::string render_verdict(const MorphismVerdict& v, const Homomorphism& f);

}  // namespace congruma
