#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpgarepair {

// Input data was malformed; message names the offending line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Instance exceeds a solver capacity bound (fault cap, span cap, ...).
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// p x q grid of logic blocks; a true cell marks a faulty block.
/// Indices are 1-based at the API surface, matching file formats and reports.
class FaultMatrix {
public:
  FaultMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int row, int col) const { return cells_[index(row, col)] != 0; }
  void set(int row, int col, bool faulty) { cells_[index(row, col)] = faulty ? 1 : 0; }

  int fault_count() const {
    int n = 0;
    for (auto c : cells_) n += c;
    return n;
  }

  bool operator==(const FaultMatrix& other) const = default;

private:
  std::size_t index(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
      throw std::out_of_range("cell index out of range");
    return static_cast<std::size_t>(row - 1) * cols_ + (col - 1);
  }

  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

/// 1-based coordinate of a faulty block.
struct FaultCoord {
  int row = 0;
  int col = 0;

  bool operator==(const FaultCoord&) const = default;
  auto operator<=>(const FaultCoord&) const = default;
};

/// Side length of a square spare tile, in blocks.
struct TileConfig {
  int n = 1;
};

/// Available spare lines. When explicit ids are absent they default to the
/// indices just past the functional grid (q+1..., p+1...).
struct SpareBudget {
  int spare_cols = 0;
  int spare_rows = 0;
  std::optional<std::vector<int>> spare_col_ids;
  std::optional<std::vector<int>> spare_row_ids;
};

enum class Axis { Column, Row };

inline const char* axis_name(Axis a) { return a == Axis::Column ? "col" : "row"; }

}  // namespace fpgarepair
