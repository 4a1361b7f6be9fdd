#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clawdec/regular_generator.hpp"

namespace clawdec {

struct SurveyOptions {
  int workers = 1;
  int split_row = 4;
  bool allow_large = false;
  // Completed subtrees are appended here and skipped on the next run.
  std::string checkpoint_path;
};

struct SurveyReport {
  int n = 0;
  int d = 4;
  int k = 3;
  std::int64_t total_generated = 0;
  std::int64_t non_decomposable = 0;
  std::int64_t rejected_by_independence = 0;
  std::vector<std::string> witnesses;  // graph6, ordered by canonical bytes
  std::uint64_t checksum = 0;
  double wall_seconds = 0;
  std::int64_t subtrees = 0;
  std::int64_t subtrees_resumed = 0;
};

// Order-independent fingerprint of one generated graph; the report checksum
// is their sum mod 2^64, so it does not depend on how work was split.
std::uint64_t graph_fingerprint(const CompactGraph& g);

// Every connected 4-regular graph on n vertices, checked for a claw
// decomposition. Stage 1 rejects graphs without an independent set of size
// n/3; stage 2 runs decide_claw_4regular.
// Throws NotDivisibleByThree, RefusedScale (n >= 18 without allow_large).
SurveyReport survey_claw(int n, const SurveyOptions& options = {});

}  // namespace clawdec
