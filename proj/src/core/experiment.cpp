#include "core/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "core/matrix_io.hpp"
#include "core/rng.hpp"

namespace fpgarepair {

namespace {

void check_range(Range r, const char* name) {
  if (r.lo < 1 || r.hi < r.lo)
    throw std::invalid_argument(std::string("invalid ") + name + " range [" +
                                std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]");
}

std::string fixed6(Ratio r) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", r.to_double());
  return buf;
}

}  // namespace

TrialRecord run_trial(int p, int q, int n, int k, std::uint64_t seed) {
  if (p < 1 || q < 1 || n < 1) throw std::invalid_argument("tile counts and side must be >= 1");
  const std::int64_t blocks = static_cast<std::int64_t>(n) * p * static_cast<std::int64_t>(n) * q;
  if (k < 0 || k > blocks)
    throw std::invalid_argument("fault count " + std::to_string(k) + " outside [0, " +
                                std::to_string(blocks) + "]");

  const FaultMatrix m = inject_faults(n * p, n * q, k, seed);
  const TileRepairResult solved = solve_tiles(m, n);

  TrialRecord rec;
  rec.p = p;
  rec.q = q;
  rec.n = n;
  rec.k = k;
  rec.seed = seed;
  rec.q_r = solved.q_r;
  rec.q_c = solved.q_c;
  rec.chosen = solved.strategy;
  if (solved.strategy == Strategy::Rows) {
    rec.n_rows = solved.spares_used;
    rec.n_cols = solved.spares_other_strategy;
  } else {
    rec.n_cols = solved.spares_used;
    rec.n_rows = solved.spares_other_strategy;
  }
  const int chosen_spares = rec.chosen == Strategy::Rows ? rec.n_rows : rec.n_cols;
  const int other_spares = rec.chosen == Strategy::Rows ? rec.n_cols : rec.n_rows;
  rec.positive = chosen_spares <= other_spares;
  return rec;
}

BatchResult run_batch(const ExperimentConfig& cfg) {
  if (cfg.trials < 0) throw std::invalid_argument("trial count must be >= 0");
  check_range(cfg.p_range, "p");
  check_range(cfg.q_range, "q");
  check_range(cfg.n_range, "n");

  // Pre-derive all trial seeds so results cannot depend on evaluation order.
  SplitMix64 seeder(cfg.master_seed);
  std::vector<std::uint64_t> trial_seeds(cfg.trials);
  for (auto& s : trial_seeds) s = seeder.next();

  BatchResult result;
  result.records.reserve(cfg.trials);
  for (int i = 0; i < cfg.trials; ++i) {
    SplitMix64 rng(trial_seeds[i]);
    const int p = rng.in_range(cfg.p_range.lo, cfg.p_range.hi);
    const int q = rng.in_range(cfg.q_range.lo, cfg.q_range.hi);
    const int n = rng.in_range(cfg.n_range.lo, cfg.n_range.hi);
    const int k_max = n * p * q;
    const int k = rng.in_range(std::min(3, k_max), k_max);
    result.records.push_back(run_trial(p, q, n, k, rng.next()));
  }

  BatchSummary& s = result.summary;
  s.trials_run = static_cast<int>(result.records.size());
  for (const auto& rec : result.records) {
    if (rec.positive) ++s.positives;
    auto tally = [&rec](ParamBucket& b) {
      ++b.trials;
      if (rec.positive) ++b.positives;
    };
    tally(s.by_n[rec.n]);
    tally(s.by_p[rec.p]);
    tally(s.by_q[rec.q]);
  }
  if (s.trials_run > 0)
    s.positive_rate = static_cast<double>(s.positives) / s.trials_run;
  return result;
}

std::string batch_csv(const std::vector<TrialRecord>& records) {
  std::string out = "trial,p,q,n,k,seed,q_r,q_c,n_rows,n_cols,chosen,positive\n";
  int trial = 0;
  for (const auto& r : records) {
    out += std::to_string(trial++) + ',' + std::to_string(r.p) + ',' + std::to_string(r.q) +
           ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' +
           std::to_string(r.seed) + ',' + fixed6(r.q_r) + ',' + fixed6(r.q_c) + ',' +
           std::to_string(r.n_rows) + ',' + std::to_string(r.n_cols) + ',' +
           strategy_name(r.chosen) + ',' + (r.positive ? "1" : "0") + '\n';
  }
  return out;
}

std::string batch_summary_json(const BatchSummary& summary) {
  nlohmann::ordered_json j;
  j["trials"] = summary.trials_run;
  j["positives"] = summary.positives;
  if (summary.positive_rate)
    j["positive_rate"] = *summary.positive_rate;
  else
    j["positive_rate"] = nullptr;
  const auto breakdown = [](const std::map<int, ParamBucket>& by) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [key, bucket] : by) {
      out[std::to_string(key)] = {
          {"trials", bucket.trials},
          {"positives", bucket.positives},
          {"positive_rate", static_cast<double>(bucket.positives) / bucket.trials}};
    }
    return out;
  };
  j["by_n"] = breakdown(summary.by_n);
  j["by_p"] = breakdown(summary.by_p);
  j["by_q"] = breakdown(summary.by_q);
  return j.dump(2) + "\n";
}

namespace {

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move " + tmp.string() + " into place");
  }
}

}  // namespace

void export_report(const std::vector<TrialRecord>& records, const BatchSummary& summary,
                   const std::string& path_prefix) {
  write_atomically(path_prefix + ".csv", batch_csv(records));
  write_atomically(path_prefix + ".json", batch_summary_json(summary));
}

}  // namespace fpgarepair
