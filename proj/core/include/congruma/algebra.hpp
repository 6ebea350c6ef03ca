#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congruma/error.hpp"

namespace congruma {

/// Elements of a finite algebra are dense indices 0..n-1. Labels, when
/// present, are presentation-only.
using Element = int;

/// A total finitary operation on a carrier of size n, stored as a dense
/// row-major table of n^arity entries. Nullary operations are 1-entry tables.
struct OperationTable {
  std::string name;
  int arity = 0;
  int carrier = 0;
  std::vector<Element> table;

  Element eval(std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * static_cast<std::size_t>(carrier) + a;
    return table[idx];
  }
  Element eval() const { return table[0]; }
  Element eval(Element a) const { return table[a]; }
  Element eval(Element a, Element b) const {
    return table[static_cast<std::size_t>(a) * carrier + b];
  }

  friend bool operator==(const OperationTable&, const OperationTable&) =
      default;
};

struct FiniteAlgebra;
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

/// A finite algebra given by operation tables over an indexed carrier.
/// Immutable after construction; safe to share across threads.
struct FiniteAlgebra {
  std::string name;
  int size = 0;
  std::vector<std::string> labels;  // empty => elements display as indices
  std::vector<OperationTable> ops;

  std::string label(Element e) const {
    return labels.empty() ? std::to_string(e) : labels[e];
  }
  /// Index of the named operation, or -1.
  int op_index(const std::string& opname) const {
    for (std::size_t i = 0; i < ops.size(); ++i)
      if (ops[i].name == opname) return static_cast<int>(i);
    return -1;
  }
  /// Element with the given label (or decimal index when unlabeled).
  std::optional<Element> element_of(const std::string& lbl) const;
  /// True when ops have the same names/arities in the same order as `other`.
  bool same_signature(const FiniteAlgebra& other) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

/// Same object or structurally equal value (algebras loaded twice from the
/// same file compare equal).
inline bool same_algebra(const AlgebraPtr& x, const AlgebraPtr& y) {
  return x.get() == y.get() || (x && y && *x == *y);
}

/// Validates tables and assembles an immutable algebra.
/// Throws Error naming the offending operation/tuple on any range or shape
/// violation; labels, when given, must be pairwise distinct.
AlgebraPtr make_algebra(std::string name, int size,
                        std::vector<OperationTable> ops,
                        std::vector<std::string> labels = {});

/// Hasse-diagram presentation of a bounded lattice: labels plus cover pairs
/// (lower, upper) as indices into `labels`.
struct BoundedLatticeSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  int bottom = -1;
  int top = -1;
};

/// Builds the algebra (join/2, meet/2, bot/0, top/0) of the order generated
/// by the covers. Throws Error with a witness pair when some pair lacks a
/// unique join or meet, when the covers are cyclic, or when bottom/top are
/// not extremal.
AlgebraPtr lattice_from_covers(const BoundedLatticeSpec& spec);

/// Carrier subset closed under all operations, with the induced algebra
/// re-indexed densely. carrier[i] is the parent element of sub-element i.
struct Subalgebra {
  AlgebraPtr algebra;
  std::vector<Element> carrier;
};

/// Smallest subalgebra containing `seed` (seed must be non-empty).
Subalgebra subalgebra_generate(const AlgebraPtr& parent,
                               std::span<const Element> seed);

/// Direct square A^2 with componentwise operations. Pair (a,b) has index
/// a*|A|+b.
struct SquareAlgebra {
  AlgebraPtr algebra;
  int base_size = 0;

  Element index_of(Element a, Element b) const { return a * base_size + b; }
  std::pair<Element, Element> pair_of(Element e) const {
    return {e / base_size, e % base_size};
  }
};

SquareAlgebra square_algebra(const AlgebraPtr& base);

/// Order-theoretic view of an algebra carrying a bounded-lattice signature
/// (join/meet/bot/top). leq is the order derived from join.
struct LatticeView {
  int size = 0;
  int join_op = -1, meet_op = -1;
  Element bottom = -1, top = -1;
  std::vector<std::vector<bool>> leq;

  Element join(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  /// Covering pairs (lower, upper), lexicographically ordered.
  std::vector<std::pair<Element, Element>> covers() const;
};

/// Extracts the lattice view, verifying that join/meet define a bounded
/// lattice order with bot/top extremal. Throws Error otherwise.
LatticeView lattice_view(const FiniteAlgebra& a);

/// True when the algebra carries a bounded-lattice signature that satisfies
/// the lattice laws (checked exhaustively).
bool is_bounded_lattice(const FiniteAlgebra& a);

/// Exhaustive distributivity check of a lattice view.
bool lattice_is_distributive(const LatticeView& v);

}  // namespace congruma
