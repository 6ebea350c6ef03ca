#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congruma/algebra.hpp"

namespace congruma {

/// An equivalence relation on {0..n-1} in canonical block form: block[e] is
/// the id of e's class, ids assigned in order of least member. Two Partition
/// values describe the same relation iff their vectors are equal.
struct Partition {
  std::vector<int> block;
  int num_blocks = 0;

  int size() const { return static_cast<int>(block.size()); }
  bool related(Element a, Element b) const { return block[a] == block[b]; }

  static Partition delta(int n);
  static Partition nabla(int n);
  /// From any block-id assignment (renumbers canonically).
  static Partition from_assignment(std::vector<int> raw);
  /// From explicit blocks; every element 0..n-1 must occur exactly once.
  static Partition from_blocks(int n,
                               const std::vector<std::vector<Element>>& blocks);

  bool is_delta() const { return num_blocks == size(); }
  bool is_nabla() const { return num_blocks == 1; }

  /// Refinement order: *this <= other (every block of *this lies inside a
  /// block of other). Carriers must agree.
  bool refines(const Partition& other) const;

  /// Blocks listed by least member, members ascending.
  std::vector<std::vector<Element>> blocks() const;

  /// All related pairs (a,b) with a < b.
  std::vector<std::pair<Element, Element>> pairs() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.block <=> b.block;
  }
};

/// Intersection of the two relations. Throws Error on carrier mismatch.
Partition meet(const Partition& p, const Partition& q);

/// Smallest equivalence containing both relations (transitive closure of the
/// union). Throws Error on carrier mismatch.
Partition join(const Partition& p, const Partition& q);

/// Canonical text rendering, e.g. {{0,x},{y,1}}: blocks sorted by least
/// member, elements by index, labels used when the algebra has them.
std::string render(const Partition& p, const FiniteAlgebra& a);
std::string render(const Partition& p);

/// Parses the canonical rendering back, resolving labels against `a`.
/// Throws Error on malformed text, unknown labels, or missing/duplicate
/// elements.
Partition parse_partition(const std::string& text, const FiniteAlgebra& a);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int b : p.block) {
      h ^= static_cast<std::size_t>(b) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace congruma
