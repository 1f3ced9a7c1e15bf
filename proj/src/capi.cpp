#include "fpgarepair.h"

#include <cstring>
#include <new>
#include <string>

#include "core/exact_cover.hpp"
#include "core/experiment.hpp"
#include "core/matrix_io.hpp"
#include "core/report.hpp"
#include "core/tile_cover.hpp"

using namespace fpgarepair;

struct fr_matrix {
  FaultMatrix matrix;
  TileConfig tile;
};

struct fr_line_plan {
  RepairPlan plan;
};

struct fr_tile_result {
  TileRepairResult result;
};

struct fr_batch {
  BatchResult batch;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Runs the body, translating exceptions into status codes.
template <typename Fn>
fr_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    set_error(e.what());
    return FR_ERR_PARSE;
  } catch (const CapacityError& e) {
    set_error(e.what());
    return FR_ERR_CAPACITY;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return FR_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return FR_ERR_IO;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return FR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return FR_ERR_INTERNAL;
  }
}

fr_status require(bool ok, const char* message) {
  if (!ok) {
    set_error(message);
    return FR_ERR_INVALID_ARGUMENT;
  }
  return FR_OK;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* fr_version(void) { return "0.1.0"; }

const char* fr_last_error(void) { return g_last_error.c_str(); }

void fr_string_free(char* s) { delete[] s; }

fr_status fr_matrix_parse(const char* text, fr_input_format format, fr_matrix** out) {
  if (fr_status st = require(text && out, "text and out must be non-null")) return st;
  return guarded([&] {
    InputFormat fmt = format == FR_INPUT_GRID        ? InputFormat::Grid
                      : format == FR_INPUT_FAULTLIST ? InputFormat::FaultList
                                                     : InputFormat::Auto;
    ParsedMatrix parsed = parse_fault_matrix(text, fmt);
    *out = new fr_matrix{std::move(parsed.matrix), parsed.tile};
    return FR_OK;
  });
}

fr_status fr_matrix_inject(int32_t rows, int32_t cols, int32_t tile_side, int32_t k,
                           uint64_t seed, fr_matrix** out) {
  if (fr_status st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    if (tile_side < 1) throw std::invalid_argument("tile side must be >= 1");
    *out = new fr_matrix{inject_faults(rows, cols, k, seed), TileConfig{tile_side}};
    return FR_OK;
  });
}

fr_status fr_matrix_pad(const fr_matrix* m, fr_matrix** out) {
  if (fr_status st = require(m && out, "matrix and out must be non-null")) return st;
  return guarded([&] {
    *out = new fr_matrix{pad_to_tile_multiple(m->matrix, m->tile.n), m->tile};
    return FR_OK;
  });
}

void fr_matrix_free(fr_matrix* m) { delete m; }

int32_t fr_matrix_rows(const fr_matrix* m) { return m ? m->matrix.rows() : 0; }
int32_t fr_matrix_cols(const fr_matrix* m) { return m ? m->matrix.cols() : 0; }
int32_t fr_matrix_tile_side(const fr_matrix* m) { return m ? m->tile.n : 0; }
int32_t fr_matrix_fault_count(const fr_matrix* m) { return m ? m->matrix.fault_count() : 0; }

int32_t fr_matrix_cell(const fr_matrix* m, int32_t row, int32_t col) {
  if (!m || row < 1 || row > m->matrix.rows() || col < 1 || col > m->matrix.cols()) return -1;
  return m->matrix.at(row, col) ? 1 : 0;
}

fr_status fr_matrix_serialize(const fr_matrix* m, char** out_text) {
  if (fr_status st = require(m && out_text, "matrix and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(serialize_grid(m->matrix, m->tile));
    return FR_OK;
  });
}

fr_status fr_matrix_render(const fr_matrix* m, const fr_tile_result* overlay, char** out_text) {
  if (fr_status st = require(m && out_text, "matrix and out must be non-null")) return st;
  return guarded([&] {
    *out_text =
        copy_string(render_ascii(m->matrix, m->tile, overlay ? &overlay->result : nullptr));
    return FR_OK;
  });
}

fr_status fr_solve_lines(const fr_matrix* m, int32_t spare_cols, int32_t spare_rows,
                         fr_line_plan** out) {
  if (fr_status st = require(m && out, "matrix and out must be non-null")) return st;
  return guarded([&] {
    SpareBudget budget;
    budget.spare_cols = spare_cols;
    budget.spare_rows = spare_rows;
    *out = new fr_line_plan{select_repair_plan(fault_coords(m->matrix), budget,
                                               m->matrix.rows(), m->matrix.cols())};
    return FR_OK;
  });
}

void fr_line_plan_free(fr_line_plan* plan) { delete plan; }

int32_t fr_line_plan_feasible(const fr_line_plan* plan) {
  return plan && plan->plan.feasible ? 1 : 0;
}

int32_t fr_line_plan_cover_size(const fr_line_plan* plan) {
  return plan ? plan->plan.chosen.size() : 0;
}

int32_t fr_line_plan_cover_count(const fr_line_plan* plan) {
  return plan ? static_cast<int32_t>(plan->plan.all_minimum.size()) : 0;
}

fr_status fr_line_plan_json(const fr_line_plan* plan, int32_t include_all_covers,
                            char** out_text) {
  if (fr_status st = require(plan && out_text, "plan and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(plan_json(plan->plan, include_all_covers != 0));
    return FR_OK;
  });
}

fr_status fr_line_plan_text(const fr_line_plan* plan, int32_t include_all_covers,
                            char** out_text) {
  if (fr_status st = require(plan && out_text, "plan and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(plan_text(plan->plan, include_all_covers != 0));
    return FR_OK;
  });
}

fr_status fr_solve_tiles(const fr_matrix* m, fr_strategy strategy, fr_tile_result** out) {
  if (fr_status st = require(m && out, "matrix and out must be non-null")) return st;
  return guarded([&] {
    std::optional<Strategy> forced;
    if (strategy == FR_STRATEGY_ROWS) forced = Strategy::Rows;
    if (strategy == FR_STRATEGY_COLS) forced = Strategy::Cols;
    *out = new fr_tile_result{solve_tiles(m->matrix, m->tile.n, forced)};
    return FR_OK;
  });
}

void fr_tile_result_free(fr_tile_result* result) { delete result; }

int32_t fr_tile_result_spares(const fr_tile_result* result) {
  return result ? result->result.spares_used : 0;
}

int32_t fr_tile_result_spares_other(const fr_tile_result* result) {
  return result ? result->result.spares_other_strategy : 0;
}

int32_t fr_tile_result_strategy(const fr_tile_result* result) {
  if (!result) return FR_STRATEGY_AUTO;
  return result->result.strategy == Strategy::Rows ? FR_STRATEGY_ROWS : FR_STRATEGY_COLS;
}

fr_status fr_tile_result_json(const fr_tile_result* result, char** out_text) {
  if (fr_status st = require(result && out_text, "result and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(tiles_json(result->result));
    return FR_OK;
  });
}

fr_status fr_tile_result_text(const fr_tile_result* result, char** out_text) {
  if (fr_status st = require(result && out_text, "result and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(tiles_text(result->result));
    return FR_OK;
  });
}

fr_status fr_experiment_run(const fr_experiment_config* config, fr_batch** out) {
  if (fr_status st = require(config && out, "config and out must be non-null")) return st;
  return guarded([&] {
    ExperimentConfig cfg;
    cfg.trials = config->trials;
    cfg.p_range = {config->p_min, config->p_max};
    cfg.q_range = {config->q_min, config->q_max};
    cfg.n_range = {config->n_min, config->n_max};
    cfg.master_seed = config->master_seed;
    *out = new fr_batch{run_batch(cfg)};
    return FR_OK;
  });
}

void fr_batch_free(fr_batch* batch) { delete batch; }

int32_t fr_batch_trials(const fr_batch* batch) {
  return batch ? batch->batch.summary.trials_run : 0;
}

double fr_batch_positive_rate(const fr_batch* batch) {
  if (!batch || !batch->batch.summary.positive_rate) return -1.0;
  return *batch->batch.summary.positive_rate;
}

fr_status fr_batch_csv(const fr_batch* batch, char** out_text) {
  if (fr_status st = require(batch && out_text, "batch and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(batch_csv(batch->batch.records));
    return FR_OK;
  });
}

fr_status fr_batch_summary_json(const fr_batch* batch, char** out_text) {
  if (fr_status st = require(batch && out_text, "batch and out must be non-null")) return st;
  return guarded([&] {
    *out_text = copy_string(batch_summary_json(batch->batch.summary));
    return FR_OK;
  });
}

fr_status fr_batch_export(const fr_batch* batch, const char* path_prefix) {
  if (fr_status st = require(batch && path_prefix, "batch and prefix must be non-null"))
    return st;
  return guarded([&] {
    export_report(batch->batch.records, batch->batch.summary, path_prefix);
    return FR_OK;
  });
}

uint64_t fr_exact_cost_estimate(int32_t fault_count, int32_t line_count) {
  try {
    if (line_count < 0) return estimate_complexity(fault_count);
    return estimate_complexity(fault_count, line_count);
  } catch (const std::exception&) {
    return 0;
  }
}

}  // extern "C"
