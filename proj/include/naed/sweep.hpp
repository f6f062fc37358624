#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "naed/analysis.hpp"
#include "naed/noise.hpp"

namespace naed {

/// Grid experiment: for every (N, Q) cell, `reps` repetitions of `shots`
/// measurement shots, each rep seeded from (master_seed, linear run index).
struct SweepConfig {
  std::vector<int> n_list{2, 3, 4, 5};
  std::vector<int> q_list{1, 2, 3, 4, 5};
  std::uint64_t shots = 8192;
  int reps = 225;
  std::optional<StochasticModel> noise;
  std::uint64_t master_seed = 0;
  int threads = 0;  // 0: honor NAEDSIM_THREADS, else 1
};

struct RepResult {
  int rep = 0;
  std::uint64_t seed = 0;
  Tally tally;
  Metrics metrics;
};

struct CellResult {
  int n = 0;
  int q = 0;
  BitFlipCode code;
  std::vector<RepResult> reps;
  double mean_mu_full = 0.0;
  std::optional<double> mean_mu_naed;
  double mean_p_kept = 0.0;
};

struct SweepResult {
  SweepConfig config;
  std::vector<CellResult> cells;
};

/// Runs the whole grid. Throws ConfigError listing every offending cell when
/// some N*Q exceeds 25 (or N < 2), before any simulation starts.
SweepResult run_sweep(const SweepConfig& config);

std::string sweep_to_json(const SweepResult& result);
std::string sweep_to_csv(const SweepResult& result);

/// Exact error-injection study over one GHZ cell: for every logical-gate
/// boundary site and every physical qubit, the rejection probability and the
/// rate of corrupted logical values among accepted outcomes, computed on the
/// full output distribution (no sampling).
struct InjectCell {
  int site = -1;  // error inserted after this gate (-1: before everything)
  int qubit = 0;
  double rejection_rate = 0.0;
  double corruption_rate = 0.0;
};

struct InjectReport {
  int n = 0;
  int q = 0;
  InjectionSpec spec;  // site/qubit fields vary per cell
  std::vector<InjectCell> cells;
};

InjectReport inject_study(int n_logical, int q, ErrorKind kind,
                          double theta = 0.0, double phi = 0.0);

std::string inject_report_to_json(const InjectReport& report);
std::string inject_report_to_csv(const InjectReport& report);

/// Reshapes a sweep result into a heatmap-ready matrix CSV (rows N, columns
/// Q) for one metric (mu_full, mu_naed or p_kept), averaging over reps.
std::string plotdata_csv(const SweepResult& result, const std::string& metric);

/// Reads back a result file produced by sweep_to_json or sweep_to_csv.
SweepResult read_sweep_json(const std::string& text);
SweepResult read_sweep_csv(const std::string& text);

}  // namespace naed
