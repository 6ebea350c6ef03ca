#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "congruma/algebra.hpp"
#include "congruma/morphism.hpp"
#include "congruma/partition.hpp"

namespace congruma {

/// An unresolved `hom` block: the algebra names and the label-level map.
struct HomSpec {
  std::string name;
  std::string source, target;
  std::vector<std::pair<std::string, std::string>> entries;
  int line = 0;
};

/// Everything one text document can carry: `algebra` blocks, `lattice`
/// blocks (already built), and `hom` blocks.
struct Document {
  std::vector<AlgebraPtr> algebras;
  std::vector<HomSpec> homs;

  AlgebraPtr find_algebra(const std::string& name) const;
};

/// Parses the line-oriented text format (`#` starts a comment):
///
///   algebra <name>
///   elements <n> [label0 label1 ...]
///   op <name> <arity>
///   <n^arity integers, row-major>
///
///   lattice <name>
///   elements <label...>
///   bottom <label>
///   top <label>
///   covers <a> < <b> ; <c> < <d> ; ...
///
///   hom <name> : <sourceAlgebraName> -> <targetAlgebraName>
///   map <srcLabel> -> <dstLabel> ; ...
///
/// Duplicate labels and malformed entries are rejected with line numbers.
Document parse_document(const std::string& text);

/// Reads and parses a file. Errors mention the path.
Document parse_file(const std::filesystem::path& path);

/// Resolves a hom against its document, falling back to sibling files
/// `<algebraName>.ua` in `dir` for algebras the document does not define.
Homomorphism resolve_hom(const HomSpec& spec, const Document& doc,
                         const std::filesystem::path& dir);

/// Canonical `.ua` text for an algebra (round-trips through parse_document).
std::string render_ua(const FiniteAlgebra& a);

/// A congruence argument: either a partition literal {{...},{...}} or a
/// generated form cg{(a,b),(c,d)}. Throws Error when the result is not a
/// congruence of `a`.
Partition parse_congruence_expr(const std::string& text,
                                const AlgebraPtr& a);

}  // namespace congruma
