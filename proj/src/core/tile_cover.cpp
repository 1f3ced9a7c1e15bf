#include "core/tile_cover.hpp"

#include <algorithm>
#include <limits>

namespace fpgarepair {

CompressedMatrix compress(const FaultMatrix& m, int n, CompressedMatrix::BandAxis axis) {
  if (n < 1) throw std::invalid_argument("tile side must be >= 1");
  const bool row_bands = axis == CompressedMatrix::BandAxis::RowBands;
  const int folded = row_bands ? m.rows() : m.cols();
  if (folded % n != 0)
    throw std::invalid_argument(std::string(row_bands ? "row" : "column") + " count " +
                                std::to_string(folded) + " is not divisible by tile side " +
                                std::to_string(n));

  CompressedMatrix c;
  c.axis = axis;
  c.n = n;
  c.bands = folded / n;
  c.span = row_bands ? m.cols() : m.rows();
  c.cells.assign(static_cast<std::size_t>(c.bands) * c.span, 0);
  for (int band = 1; band <= c.bands; ++band) {
    for (int pos = 1; pos <= c.span; ++pos) {
      bool any = false;
      for (int off = 0; off < n && !any; ++off) {
        const int folded_index = (band - 1) * n + 1 + off;
        any = row_bands ? m.at(folded_index, pos) : m.at(pos, folded_index);
      }
      c.cells[static_cast<std::size_t>(band - 1) * c.span + (pos - 1)] = any ? 1 : 0;
    }
  }
  return c;
}

Structurization structurization(const CompressedMatrix& c) {
  Structurization s;
  s.total = Ratio(0, 1);
  for (int band = 1; band <= c.bands; ++band) {
    BandStats stats;
    for (int pos = 1; pos <= c.span; ++pos) {
      if (!c.at(band, pos)) continue;
      ++stats.ones;
      if (stats.low == 0) stats.low = pos;
      stats.high = pos;
    }
    if (stats.ones > 0) {
      stats.contribution = Ratio(stats.ones, stats.high - stats.low + 1);
      s.total = s.total + stats.contribution;
    }
    s.bands.push_back(stats);
  }
  return s;
}

Strategy choose_strategy(Ratio q_r, Ratio q_c) {
  return q_r < q_c ? Strategy::Rows : Strategy::Cols;
}

GreedyCover greedy_cover(const CompressedMatrix& c) {
  GreedyCover cover;
  const int max_start = std::max(1, c.span - c.n + 1);
  for (int band = 1; band <= c.bands; ++band) {
    int count = 0;
    int pos = 1;
    while (pos <= c.span) {
      if (!c.at(band, pos)) {
        ++pos;
        continue;
      }
      // Tile window [pos, pos+n-1], clamped so it stays on the chip; the
      // clamped window still contains the triggering cell.
      cover.placements.push_back({c.axis, band, std::min(pos, max_start)});
      ++count;
      pos += c.n;
    }
    cover.per_band.push_back(count);
    cover.total += count;
  }
  return cover;
}

std::optional<Ratio> coverage_quality(int fault_total, int spares) {
  if (spares < 0 || fault_total < 0) throw std::invalid_argument("negative argument");
  if (spares == 0) {
    if (fault_total != 0)
      throw std::logic_error("faults present but no spares placed");
    return std::nullopt;
  }
  return Ratio(fault_total, spares);
}

TileRepairResult solve_tiles(const FaultMatrix& m, int n, std::optional<Strategy> forced) {
  const auto rows_compressed = compress(m, n, CompressedMatrix::BandAxis::RowBands);
  const auto cols_compressed = compress(m, n, CompressedMatrix::BandAxis::ColBands);

  TileRepairResult result;
  result.n = n;
  result.q_r = structurization(rows_compressed).total;
  result.q_c = structurization(cols_compressed).total;
  result.strategy = forced.value_or(choose_strategy(result.q_r, result.q_c));

  auto chosen = greedy_cover(result.strategy == Strategy::Rows ? rows_compressed
                                                               : cols_compressed);
  const auto other = greedy_cover(result.strategy == Strategy::Rows ? cols_compressed
                                                                    : rows_compressed);
  result.placements = std::move(chosen.placements);
  result.per_band = std::move(chosen.per_band);
  result.spares_used = chosen.total;
  result.spares_other_strategy = other.total;
  result.fault_total = m.fault_count();
  result.quality = coverage_quality(result.fault_total, result.spares_used);
  return result;
}

namespace {

int min_windows(const std::vector<std::uint8_t>& band, int n, int from) {
  const int span = static_cast<int>(band.size());
  int first = -1;
  for (int pos = from; pos < span; ++pos) {
    if (band[pos]) {
      first = pos;
      break;
    }
  }
  if (first < 0) return 0;

  // Any cover must contain a window over `first`; try every in-bounds start.
  const int max_start = std::max(0, span - n);
  const int lo = std::max(0, first - n + 1);
  const int hi = std::min(first, max_start);
  int best = std::numeric_limits<int>::max();
  for (int start = lo; start <= hi; ++start) {
    const int rest = min_windows(band, n, std::max(first + 1, start + n));
    best = std::min(best, 1 + rest);
  }
  return best;
}

}  // namespace

int brute_force_band_cover(const std::vector<std::uint8_t>& band, int n) {
  if (band.size() > 24) throw CapacityError("band oracle capped at span 24");
  if (n < 1) throw std::invalid_argument("window length must be >= 1");
  return min_windows(band, n, 0);
}

}  // namespace fpgarepair
