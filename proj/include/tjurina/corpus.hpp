#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tjurina/bounds.hpp"

namespace tjurina {

// Built-in example curve with expected invariants. Each expected value
// carries a provenance note; values tagged "derived" were frozen from the
// Macaulay oracle / exhaustive search and are cross-checked on every run.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> tags;
  std::string field_text;  // "Q" or "F <p>"
  std::string curve_text;  // empty when generated
  int random_degree = 0;   // > 0: seeded dense random curve of this degree
  std::string claimed_irreducibility = "unknown";

  std::optional<long> expect_tau, expect_sigma, expect_u;
  std::optional<long> expect_m_leaf, expect_m_factors;
  std::optional<long> expect_m_leaf_min;             // lower bound only
  std::optional<bool> expect_all_clusters_qh;        // weighted-homogeneous local models
  std::map<std::string, std::string> provenance;     // invariant -> note

  bool matches_filter(const std::string& filter) const;
};

const std::vector<CorpusEntry>& builtin_corpus();

PlaneCurve corpus_curve(const CorpusEntry& entry, uint64_t seed);
FieldSpec corpus_field(const CorpusEntry& entry);

struct CorpusEntryResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
  BoundsReport report;
};

CorpusEntryResult run_corpus_entry(const CorpusEntry& entry, uint64_t seed);

// Regenerated expected-value block for maintainer review (--bless).
std::string bless_corpus_entry(const CorpusEntry& entry, uint64_t seed);

}  // namespace tjurina
