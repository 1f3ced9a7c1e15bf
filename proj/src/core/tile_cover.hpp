#pragma once

#include <optional>
#include <vector>

#include "core/model.hpp"
#include "core/rational.hpp"

namespace fpgarepair {

enum class Strategy { Rows, Cols };

inline const char* strategy_name(Strategy s) { return s == Strategy::Rows ? "rows" : "cols"; }

/// OR-compression of the block matrix along one axis. RowBands folds every n
/// consecutive block rows into one band of length q; ColBands is symmetric.
struct CompressedMatrix {
  enum class BandAxis { RowBands, ColBands };

  BandAxis axis = BandAxis::RowBands;
  int bands = 0;
  int span = 0;
  int n = 1;
  std::vector<std::uint8_t> cells;  // bands x span, band-major

  bool at(int band, int pos) const {  // 1-based
    return cells[static_cast<std::size_t>(band - 1) * span + (pos - 1)] != 0;
  }
};

/// Per-band structurization bookkeeping: unit count, first/last unit index,
/// and the contribution ones/(high-low+1). Empty bands contribute 0.
struct BandStats {
  int ones = 0;
  int low = 0;   // 1-based; 0 when the band is empty
  int high = 0;
  Ratio contribution;
};

struct Structurization {
  Ratio total;
  std::vector<BandStats> bands;
};

/// One spare tile: covers blocks [start, start+n-1] along the band's span and
/// the n block rows (columns) of the band itself.
struct TilePlacement {
  CompressedMatrix::BandAxis axis = CompressedMatrix::BandAxis::RowBands;
  int band = 0;   // 1-based
  int start = 0;  // 1-based offset along the span

  bool operator==(const TilePlacement&) const = default;
};

struct GreedyCover {
  std::vector<TilePlacement> placements;
  std::vector<int> per_band;  // spare count per band
  int total = 0;
};

struct TileRepairResult {
  Strategy strategy = Strategy::Cols;
  Ratio q_r;
  Ratio q_c;
  std::vector<TilePlacement> placements;
  std::vector<int> per_band;
  int spares_used = 0;
  int spares_other_strategy = 0;
  std::optional<Ratio> quality;  // fault_total / spares_used; empty when no spares needed
  int fault_total = 0;
  int n = 1;
};

/// OR-folds every n rows (RowBands) or columns (ColBands). The compressed
/// axis must be divisible by n.
CompressedMatrix compress(const FaultMatrix& m, int n, CompressedMatrix::BandAxis axis);

/// Structurization criterion: sum over bands of ones/(H-L+1), exact rational.
Structurization structurization(const CompressedMatrix& c);

/// Rows iff q_r < q_c, Cols otherwise (ties go to Cols).
Strategy choose_strategy(Ratio q_r, Ratio q_c);

/// Per band, scan ascending and drop a tile at each first uncovered unit; the
/// tile spans that unit and the next n-1 positions. A window that would run
/// past the span is clamped to end at the span.
GreedyCover greedy_cover(const CompressedMatrix& c);

/// Q_cr = fault_total / spares. Empty when both are zero.
std::optional<Ratio> coverage_quality(int fault_total, int spares);

/// Full pipeline: both compressions, both criteria, strategy choice, greedy
/// traversal. `forced` overrides the criterion-based choice; both strategies'
/// spare counts are reported either way.
TileRepairResult solve_tiles(const FaultMatrix& m, int n,
                             std::optional<Strategy> forced = std::nullopt);

/// Independent per-band optimum: fewest length-n windows covering all units,
/// by exhaustive branch search over candidate window starts. span <= 24.
int brute_force_band_cover(const std::vector<std::uint8_t>& band, int n);

}  // namespace fpgarepair
