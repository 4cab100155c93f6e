#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootdeform/deform.hpp"
#include "rootdeform/reduced.hpp"

namespace rootdeform {

struct Candidate {
  std::vector<int> v_minus;
  std::vector<int> v_plus;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Everything after ansatz_applicable is absent when the ansatz does not apply.
struct CandidateClassification {
  Candidate candidate;
  int order = 1;
  bool ansatz_applicable = false;
  std::optional<ConstraintReport> constraints;
  std::optional<bool> invariant;
  std::optional<bool> trivial;
  std::optional<RingScalar> det;
  std::optional<std::size_t> distinct_roots;
};

inline constexpr int kScanRankLimit = 16;

/// All subset pairs of the two color classes, ordered by (minus mask, plus
/// mask) where bit k of a mask selects the k-th vertex of that color.
/// Refuses rank > 16 unless allow_large is set.
std::vector<Candidate> enumerate_candidates(const RootSystem& rs, bool allow_large = false);

CandidateClassification classify(const RootSystem& rs, const Candidate& candidate);

struct ScanOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool allow_large = false;
};

/// Classifies every candidate, possibly concurrently; results come back in
/// enumeration order.
std::vector<CandidateClassification> scan(const RootSystem& rs, const ScanOptions& options = {});

/// One JSON object per line, newline-terminated.
std::string to_json_lines(const std::vector<CandidateClassification>& records);

}  // namespace rootdeform
