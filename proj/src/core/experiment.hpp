#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"
#include "core/tile_cover.hpp"

namespace fpgarepair {

/// Inclusive integer range.
struct Range {
  int lo = 0;
  int hi = 0;
};

/// Batch parameters. p and q count tiles, n is the tile side; the injected
/// block matrix is (n*p) x (n*q). Fault counts are drawn uniformly from
/// [3, n*p*q] (clamped when the upper bound is lower).
struct ExperimentConfig {
  int trials = 0;
  Range p_range{3, 7};
  Range q_range{3, 7};
  Range n_range{2, 5};
  std::uint64_t master_seed = 0;
};

struct TrialRecord {
  int p = 0;
  int q = 0;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Ratio q_r;
  Ratio q_c;
  int n_rows = 0;  // spare tiles under the Rows strategy
  int n_cols = 0;  // spare tiles under the Cols strategy
  Strategy chosen = Strategy::Cols;
  bool positive = false;  // chosen strategy needs <= as many spares as the other
};

struct ParamBucket {
  int trials = 0;
  int positives = 0;
};

struct BatchSummary {
  int trials_run = 0;
  int positives = 0;
  std::optional<double> positive_rate;  // empty when no trials ran
  std::map<int, ParamBucket> by_n;
  std::map<int, ParamBucket> by_p;
  std::map<int, ParamBucket> by_q;
};

struct BatchResult {
  std::vector<TrialRecord> records;
  BatchSummary summary;
};

/// Injects k faults into the (n*p)x(n*q) block matrix and solves the tile
/// cover both ways, recording the criterion's choice and whether it picked a
/// strategy at least as cheap as the alternative.
TrialRecord run_trial(int p, int q, int n, int k, std::uint64_t seed);

/// Per-trial seeds are pre-derived from the master seed by counter mixing, so
/// the record list is identical across runs regardless of scheduling.
BatchResult run_batch(const ExperimentConfig& cfg);

/// CSV body: header "trial,p,q,n,k,seed,q_r,q_c,n_rows,n_cols,chosen,positive"
/// plus one row per trial. Byte-stable for a fixed record list.
std::string batch_csv(const std::vector<TrialRecord>& records);

/// JSON summary with the positive rate and per-parameter breakdown.
std::string batch_summary_json(const BatchSummary& summary);

/// Writes PREFIX.csv and PREFIX.json via write-then-rename.
void export_report(const std::vector<TrialRecord>& records, const BatchSummary& summary,
                   const std::string& path_prefix);

}  // namespace fpgarepair
