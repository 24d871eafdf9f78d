#pragma once

// Pipeline driver: configuration, stage composition
// (generate -> preprocess -> tile -> prune -> embed -> verify), and
// canonical machine-readable run reports.
//
// The canonical report is a pure function of the configuration: it carries
// no timings and no execution knobs (thread count), so replays and different
// thread counts produce byte-identical text.  Timing lines go to stderr when
// QRAMSEY_LOG=info.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qramsey/coloring.hpp"
#include "qramsey/families.hpp"
#include "qramsey/io.hpp"

namespace qramsey {

inline constexpr int exit_verified = 0;
inline constexpr int exit_honest_failure = 2;
inline constexpr int exit_breach = 3;
inline constexpr int exit_config = 4;

struct PipelineConfig {
  int s = 3;
  int n = 6;
  std::uint64_t N = 0;  // 0: the regime's population bound (paper mode)
  bool paper_exact = true;
  KvDoc oracle;  // descriptor without N; the pipeline supplies N
  int threads = 1;
  bool degree_checks = false;
  FinderOptions finder;
  std::vector<std::uint64_t> multipliers;  // engineering overrides
  std::vector<int> codim_maxes;
  std::string base_dir;  // resolves file-backed oracle paths
};

// Keys: mode, s, n, N, kind, p, parts, seed, m, file, degree-checks,
// clique-cap, pivot-fail-cap, exact-pool-cap, multipliers, codim-maxes.
// Thread count comes from the caller (flag or QRAMSEY_THREADS), never from
// the config document.
PipelineConfig config_from_kv(const KvDoc& doc);

// Canonical echo of everything that affects the run's result.
KvDoc config_to_kv(const PipelineConfig& cfg);

struct RunReport {
  int exit_code = exit_config;
  bool verified = false;
  std::string verdict;  // verified-success | honest-failure |
                        // invariant-breach | config-error
  std::string text;     // canonical structured-text report
  std::optional<Embedding> embedding;  // present on verified success
};

RunReport run_pipeline(const PipelineConfig& cfg);

}  // namespace qramsey
