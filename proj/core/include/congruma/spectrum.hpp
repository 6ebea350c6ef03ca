#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congruma/congruence.hpp"

namespace congruma {

/// How commutators are computed. Meet (intersection) is exact when Con(A) is
/// distributive; the delta construction works in congruence-modular algebras
/// generally. Auto picks meet when Con(A) is distributive, delta otherwise.
enum class CommutatorStrategy { Auto, Meet, Delta };

/// Commutator of two congruences given as indices into `con`.
/// Throws Error when Meet is requested on a non-distributive Con(A).
Partition commutator(const CongruenceLattice& con, int i, int j,
                     CommutatorStrategy strategy = CommutatorStrategy::Auto);

/// Commutator of two congruences given as partitions; validates both.
Partition commutator(const CongruenceLattice& con, const Partition& alpha,
                     const Partition& beta,
                     CommutatorStrategy strategy = CommutatorStrategy::Auto);

/// comm[i][j] = index of [cons[i], cons[j]] for all congruence pairs.
std::vector<std::vector<int>> commutator_table(
    const CongruenceLattice& con,
    CommutatorStrategy strategy = CommutatorStrategy::Auto);

/// Spec/Max/Min/Con2 plus per-congruence flags, all as indices into the
/// canonical congruence list.
struct SpectralReport {
  struct PerCon {
    bool prime = false;
    bool maximal = false;
    bool minimal_prime = false;
    bool two_class = false;
    int class_count = 0;
  };
  std::vector<int> spec, max, min, con2;
  std::vector<PerCon> per_con;
  CommutatorStrategy strategy_used = CommutatorStrategy::Auto;
};

/// Everything the spectral decision procedures need about one algebra.
struct SpectrumAnalysis {
  CongruenceLattice con;
  std::vector<std::vector<int>> comm;
  SpectralReport report;

  const FiniteAlgebra& algebra() const { return *con.algebra; }
  bool is_prime(int theta) const { return report.per_con[theta].prime; }
};

SpectrumAnalysis analyze_spectrum(
    const AlgebraPtr& a, const ConOptions& opts = {},
    CommutatorStrategy strategy = CommutatorStrategy::Auto);
SpectrumAnalysis analyze_spectrum(
    CongruenceLattice con,
    CommutatorStrategy strategy = CommutatorStrategy::Auto);

/// theta != nabla and, for all principal pairs, [Cg(a,b),Cg(c,d)] <= theta
/// implies Cg(a,b) <= theta or Cg(c,d) <= theta.
bool is_prime(const CongruenceLattice& con,
              const std::vector<std::vector<int>>& comm, int theta);

/// V(theta): primes above theta. D(theta): the complementary primes.
std::vector<int> v_set(const SpectrumAnalysis& s, int theta);
std::vector<int> d_set(const SpectrumAnalysis& s, int theta);

/// Intersection of the primes above theta; nabla when V(theta) is empty.
Partition radical(const SpectrumAnalysis& s, int theta);

/// Least Stone-closed superset of a set of primes: V(meet of the set);
/// empty for the empty set. Throws Error when a member is not prime.
std::vector<int> stone_closure(const SpectrumAnalysis& s,
                               std::span<const int> primes);

/// Non-empty S with, for all (a,b),(c,d) in S,
/// [Cg(a,b),Cg(c,d)] intersecting S.
bool is_m_system(const SpectrumAnalysis& s,
                 std::span<const std::pair<Element, Element>> pairs);

/// Deterministic text block: one line per congruence in canonical order with
/// prime/maximal/minimal-prime/two-class flags, then the four index sets.
std::string render_report(const SpectrumAnalysis& s);

}  // namespace congruma
