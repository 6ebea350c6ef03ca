#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congruma/morphism.hpp"

namespace congruma {

/// One checkable fact set: an algebra entry (congruence lattice, spectrum,
/// optionally the filter correspondence for residuated lattices) or a
/// morphism entry (kernel and verdicts).
struct CorpusEntry {
  std::string id;         // e.g. "exadm/P" or "meproud/i"
  std::string group;      // manifest section prefix
  AlgebraPtr algebra;     // set for algebra entries
  std::optional<Homomorphism> hom;  // set for morphism entries

  // expected values (absent keys are not checked)
  std::optional<int> con_size;
  std::vector<std::string> con_blocks;   // canonical renderings, sorted
  std::vector<std::string> spec_blocks;  // canonical renderings, sorted
  std::optional<std::string> kernel_blocks;
  std::optional<bool> admissible;
  std::optional<Verdict3> gu, lo;
  std::optional<int> filt_size;          // residuated entries
  std::optional<bool> filt_iso;
};

/// Loads every algebra/hom file under `dir` plus the `expected.toml`
/// manifest. Throws Error when the corpus is malformed.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct CorpusMismatch {
  std::string entry_id;
  std::string field;
  std::string expected, actual;
};

struct CorpusReport {
  int entries_run = 0;
  std::vector<CorpusMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Recomputes every entry (optionally id-filtered by substring) and diffs
/// against the expected values.
CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const std::string& only = "");

std::string render_corpus_report(const CorpusReport& r);

}  // namespace congruma
