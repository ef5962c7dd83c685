#pragma once

// Property checks shared by `ordwalk selftest` and the acceptance suite.
// Each check is exact; thresholds are fixed here.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ordwalk/json_io.hpp"

namespace ordwalk::checks {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  Json detail;
};

CheckResult oracle_equivalence();
CheckResult definitional_identities();
CheckResult trace_structure();
CheckResult stabilizer_soundness(std::uint64_t seed);
CheckResult separation_exactness(std::uint64_t seed);
CheckResult frechet_extraction(std::uint64_t seed);
CheckResult alpha1_merge_dominance(std::uint64_t seed);
CheckResult coloring_certificates();
CheckResult witness_productivity();
CheckResult coherence_stability();

/// Every check above, in order.
std::vector<CheckResult> run_all(std::uint64_t seed);

/// Full selftest report as JSON text; byte-identical for equal seeds.
std::string selftest_json(std::uint64_t seed);

/// Golden files written by the reference evaluator.
void generate_golden(const std::filesystem::path& dir);

struct GoldenDiff {
  std::string file;
  bool matches = false;
  std::string note;
};

/// Recomputes every golden file with the production path and compares.
std::vector<GoldenDiff> verify_golden(const std::filesystem::path& dir);

/// The fixed (beta, gamma) pairs of the coherence scan.
std::vector<std::pair<Ordinal, Ordinal>> coherence_pairs();

}  // namespace ordwalk::checks
