/*
 * fpgarepair - repair planning for FPGA logic-block matrices with multiple
 * faults. Two solvers behind one C API:
 *
 *   - exact spare row/column covers via CNF -> DNF expansion, with a
 *     minimum-size selection under a spare budget and a readdress map;
 *   - quasi-optimal spare-tile covers via band compression, structurization
 *     criteria and greedy traversal;
 *
 * plus a seeded Monte-Carlo harness that validates the criterion by running
 * both traversal strategies on injected fault sets.
 *
 * All handles are opaque; every fallible call returns fr_status and, on
 * failure, leaves a message in fr_last_error() (thread-local). Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with fr_string_free(). Row/column/band indices are 1-based
 * everywhere, matching the file formats.
 */

#ifndef FPGAREPAIR_H
#define FPGAREPAIR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define FR_API __declspec(dllexport)
#else
#define FR_API __attribute__((visibility("default")))
#endif

typedef enum fr_status {
  FR_OK = 0,
  FR_ERR_INVALID_ARGUMENT = 1, /* contract violation (bad counts, bounds, nulls) */
  FR_ERR_PARSE = 2,            /* malformed matrix/fault-list text */
  FR_ERR_CAPACITY = 3,         /* instance over a solver cap */
  FR_ERR_IO = 4,               /* file write failed */
  FR_ERR_INTERNAL = 5
} fr_status;

typedef enum fr_input_format {
  FR_INPUT_AUTO = 0, /* grid rows have no whitespace; fault lists do */
  FR_INPUT_GRID = 1,
  FR_INPUT_FAULTLIST = 2
} fr_input_format;

typedef enum fr_strategy {
  FR_STRATEGY_AUTO = 0, /* pick by the structurization criteria */
  FR_STRATEGY_ROWS = 1,
  FR_STRATEGY_COLS = 2
} fr_strategy;

typedef struct fr_matrix fr_matrix;         /* fault matrix + tile side */
typedef struct fr_line_plan fr_line_plan;   /* exact spare-line repair plan */
typedef struct fr_tile_result fr_tile_result; /* spare-tile cover */
typedef struct fr_batch fr_batch;           /* experiment records + summary */

FR_API const char* fr_version(void);

/* Message for the most recent failure on this thread; never NULL. */
FR_API const char* fr_last_error(void);

FR_API void fr_string_free(char* s);

/*
 * Matrix file format, both variants starting with the header line "p q n":
 * grid form has p rows of q characters from {0,1}; fault-list form has one
 * "i j" pair per line. fr_matrix_parse accepts the full file content.
 */
FR_API fr_status fr_matrix_parse(const char* text, fr_input_format format, fr_matrix** out);

/* k distinct faults drawn uniformly from a generator seeded with `seed`. */
FR_API fr_status fr_matrix_inject(int32_t rows, int32_t cols, int32_t tile_side, int32_t k,
                                  uint64_t seed, fr_matrix** out);

/* Zero-pads both dimensions up to the next multiple of the tile side. */
FR_API fr_status fr_matrix_pad(const fr_matrix* m, fr_matrix** out);

FR_API void fr_matrix_free(fr_matrix* m);

FR_API int32_t fr_matrix_rows(const fr_matrix* m);
FR_API int32_t fr_matrix_cols(const fr_matrix* m);
FR_API int32_t fr_matrix_tile_side(const fr_matrix* m);
FR_API int32_t fr_matrix_fault_count(const fr_matrix* m);
/* 1 faulty, 0 healthy, -1 out of range. */
FR_API int32_t fr_matrix_cell(const fr_matrix* m, int32_t row, int32_t col);

/* Canonical grid serialization (round-trips through fr_matrix_parse). */
FR_API fr_status fr_matrix_serialize(const fr_matrix* m, char** out_text);

/*
 * ASCII rendering: '.' healthy, 'X' faulty, tile-boundary rules every n
 * blocks. With an overlay, blocks covered by its spare tiles render as 'o'
 * (healthy) or '#' (faulty). overlay may be NULL.
 */
FR_API fr_status fr_matrix_render(const fr_matrix* m, const fr_tile_result* overlay,
                                  char** out_text);

/*
 * Exact solver: all minimum spare-line covers of the fault set, the chosen
 * cover under the budget (ties broken toward fewer rows), and the faulty ->
 * spare readdress map. Instances over the fault cap (default 24) return
 * FR_ERR_CAPACITY. An over-budget instance is NOT an error: the plan comes
 * back with feasible == 0 and the global minimum cover as a diagnostic.
 */
FR_API fr_status fr_solve_lines(const fr_matrix* m, int32_t spare_cols, int32_t spare_rows,
                                fr_line_plan** out);

FR_API void fr_line_plan_free(fr_line_plan* plan);
FR_API int32_t fr_line_plan_feasible(const fr_line_plan* plan);
FR_API int32_t fr_line_plan_cover_size(const fr_line_plan* plan);
FR_API int32_t fr_line_plan_cover_count(const fr_line_plan* plan); /* minimum covers */
/* include_all_covers != 0 additionally emits the complete irredundant DNF. */
FR_API fr_status fr_line_plan_json(const fr_line_plan* plan, int32_t include_all_covers,
                                   char** out_text);
FR_API fr_status fr_line_plan_text(const fr_line_plan* plan, int32_t include_all_covers,
                                   char** out_text);

/*
 * Tile solver: compresses the block matrix into row and column bands,
 * compares the structurization criteria, and covers the chosen bands
 * greedily. Both dimensions must be divisible by the tile side (see
 * fr_matrix_pad). FR_STRATEGY_ROWS/COLS force the traversal direction; the
 * other strategy's spare count is reported either way.
 */
FR_API fr_status fr_solve_tiles(const fr_matrix* m, fr_strategy strategy, fr_tile_result** out);

FR_API void fr_tile_result_free(fr_tile_result* result);
FR_API int32_t fr_tile_result_spares(const fr_tile_result* result);
FR_API int32_t fr_tile_result_spares_other(const fr_tile_result* result);
/* FR_STRATEGY_ROWS or FR_STRATEGY_COLS, as actually used. */
FR_API int32_t fr_tile_result_strategy(const fr_tile_result* result);
FR_API fr_status fr_tile_result_json(const fr_tile_result* result, char** out_text);
FR_API fr_status fr_tile_result_text(const fr_tile_result* result, char** out_text);

/*
 * Criterion-validation experiment: each trial injects k faults (k uniform in
 * [3, n*p*q], clamped) into an (n*p) x (n*q) block matrix with p, q, n drawn
 * from the inclusive ranges below, then solves both strategies. A trial is
 * positive when the criterion's choice needs no more spare tiles than the
 * alternative. Per-trial seeds derive from master_seed; equal configs give
 * byte-identical output.
 */
typedef struct fr_experiment_config {
  int32_t trials;
  int32_t p_min, p_max; /* matrix width in tiles */
  int32_t q_min, q_max; /* matrix height in tiles */
  int32_t n_min, n_max; /* tile side in blocks */
  uint64_t master_seed;
} fr_experiment_config;

FR_API fr_status fr_experiment_run(const fr_experiment_config* config, fr_batch** out);

FR_API void fr_batch_free(fr_batch* batch);
FR_API int32_t fr_batch_trials(const fr_batch* batch);
/* Fraction of positive trials; -1.0 when no trials ran. */
FR_API double fr_batch_positive_rate(const fr_batch* batch);
/* Header "trial,p,q,n,k,seed,q_r,q_c,n_rows,n_cols,chosen,positive" + rows. */
FR_API fr_status fr_batch_csv(const fr_batch* batch, char** out_text);
FR_API fr_status fr_batch_summary_json(const fr_batch* batch, char** out_text);
/* Writes PREFIX.csv and PREFIX.json, each via write-then-rename. */
FR_API fr_status fr_batch_export(const fr_batch* batch, const char* path_prefix);

/*
 * Cost model for the exact expansion: 2^faults * (1 + lines), saturating.
 * line_count < 0 uses the worst case lines = 2 * faults.
 */
FR_API uint64_t fr_exact_cost_estimate(int32_t fault_count, int32_t line_count);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FPGAREPAIR_H */
