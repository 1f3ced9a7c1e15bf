#include "core/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "core/rng.hpp"
#include "core/tile_cover.hpp"

namespace fpgarepair {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::vector<int> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<int> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p != end) {
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc()) throw ParseError(line_no, "expected integer, got '" + line + "'");
    out.push_back(value);
    p = next;
  }
  return out;
}

}  // namespace

ParsedMatrix parse_fault_matrix(const std::string& text, InputFormat format) {
  const auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && blank(lines[first])) ++first;
  if (first == lines.size()) throw ParseError(1, "empty input, expected 'p q n' header");

  const auto header = parse_ints(lines[first], first + 1);
  if (header.size() != 3)
    throw ParseError(first + 1, "header must be 'p q n' (three integers)");
  const int p = header[0], q = header[1], n = header[2];
  if (p < 1 || q < 1) throw ParseError(first + 1, "matrix dimensions must be >= 1");
  if (n < 1) throw ParseError(first + 1, "tile side must be >= 1");

  // Non-blank data lines with their original 1-based line numbers.
  std::vector<std::pair<std::size_t, const std::string*>> data;
  for (std::size_t i = first + 1; i < lines.size(); ++i)
    if (!blank(lines[i])) data.emplace_back(i + 1, &lines[i]);

  if (format == InputFormat::Auto) {
    const bool spaced = std::any_of(data.begin(), data.end(), [](const auto& d) {
      return d.second->find_first_of(" \t") != std::string::npos;
    });
    format = (spaced || data.empty()) ? InputFormat::FaultList : InputFormat::Grid;
  }

  FaultMatrix m(p, q);
  if (format == InputFormat::Grid) {
    if (data.size() != static_cast<std::size_t>(p))
      throw ParseError(data.empty() ? first + 1 : data.back().first,
                       "expected " + std::to_string(p) + " grid rows, got " +
                           std::to_string(data.size()));
    for (int i = 0; i < p; ++i) {
      const auto& [line_no, row] = data[i];
      if (row->size() != static_cast<std::size_t>(q))
        throw ParseError(line_no, "ragged row: expected " + std::to_string(q) +
                                      " cells, got " + std::to_string(row->size()));
      for (int j = 0; j < q; ++j) {
        const char ch = (*row)[j];
        if (ch != '0' && ch != '1')
          throw ParseError(line_no, std::string("invalid cell character '") + ch + "'");
        m.set(i + 1, j + 1, ch == '1');
      }
    }
  } else {
    std::set<std::pair<int, int>> seen;
    for (const auto& [line_no, entry] : data) {
      const auto coords = parse_ints(*entry, line_no);
      if (coords.size() != 2) throw ParseError(line_no, "expected 'i j' fault coordinate");
      const int i = coords[0], j = coords[1];
      if (i < 1 || i > p || j < 1 || j > q)
        throw ParseError(line_no, "fault (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") outside the " + std::to_string(p) + "x" +
                                      std::to_string(q) + " grid");
      if (!seen.insert({i, j}).second)
        throw ParseError(line_no, "duplicate fault (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
      m.set(i, j, true);
    }
  }
  return ParsedMatrix{std::move(m), TileConfig{n}};
}

std::string serialize_grid(const FaultMatrix& m, TileConfig tile) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " " +
                    std::to_string(tile.n) + "\n";
  for (int i = 1; i <= m.rows(); ++i) {
    for (int j = 1; j <= m.cols(); ++j) out.push_back(m.at(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<FaultCoord> fault_coords(const FaultMatrix& m) {
  std::vector<FaultCoord> coords;
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) coords.push_back({i, j});
  return coords;
}

FaultMatrix inject_faults(int rows, int cols, int k, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  const std::int64_t total = static_cast<std::int64_t>(rows) * cols;
  if (k < 0 || k > total)
    throw std::invalid_argument("fault count " + std::to_string(k) + " outside [0, " +
                                std::to_string(total) + "]");

  // Partial Fisher-Yates over the cell indices.
  std::vector<std::int32_t> cells(total);
  for (std::int64_t i = 0; i < total; ++i) cells[i] = static_cast<std::int32_t>(i);
  SplitMix64 rng(seed);
  for (int i = 0; i < k; ++i) {
    const std::int64_t j = i + static_cast<std::int64_t>(rng.below(total - i));
    std::swap(cells[i], cells[j]);
  }

  FaultMatrix m(rows, cols);
  for (int i = 0; i < k; ++i)
    m.set(cells[i] / cols + 1, cells[i] % cols + 1, true);
  return m;
}

FaultMatrix pad_to_tile_multiple(const FaultMatrix& m, int n) {
  if (n < 1) throw std::invalid_argument("tile side must be >= 1");
  const auto round_up = [n](int d) { return (d + n - 1) / n * n; };
  const int rows = round_up(m.rows()), cols = round_up(m.cols());
  if (rows == m.rows() && cols == m.cols()) return m;
  FaultMatrix padded(rows, cols);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      if (m.at(i, j)) padded.set(i, j, true);
  return padded;
}

namespace {

// Block coverage mask from tile placements: placement (band b, start s) on
// RowBands covers block rows (b-1)n+1..bn and columns s..s+n-1.
std::vector<std::uint8_t> coverage_mask(const FaultMatrix& m, const TileRepairResult& overlay) {
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
  const int n = overlay.n;
  for (const auto& t : overlay.placements) {
    const bool row_bands = t.axis == CompressedMatrix::BandAxis::RowBands;
    const int band_lo = (t.band - 1) * n + 1;
    for (int a = band_lo; a < band_lo + n; ++a) {
      for (int b = t.start; b < t.start + n; ++b) {
        const int i = row_bands ? a : b;
        const int j = row_bands ? b : a;
        if (i >= 1 && i <= m.rows() && j >= 1 && j <= m.cols())
          covered[static_cast<std::size_t>(i - 1) * m.cols() + (j - 1)] = 1;
      }
    }
  }
  return covered;
}

}  // namespace

std::string render_ascii(const FaultMatrix& m, TileConfig tile, const TileRepairResult* overlay) {
  const int n = tile.n;
  const bool rules = n >= 2;
  std::vector<std::uint8_t> covered;
  if (overlay) covered = coverage_mask(m, *overlay);

  std::string out;
  std::string rule;
  if (rules) {
    for (int j = 1; j <= m.cols(); ++j) {
      rule.push_back('-');
      if (j % n == 0 && j != m.cols()) rule.push_back('+');
    }
  }
  for (int i = 1; i <= m.rows(); ++i) {
    if (rules && i != 1 && (i - 1) % n == 0) out += rule + "\n";
    for (int j = 1; j <= m.cols(); ++j) {
      const bool fault = m.at(i, j);
      const bool cov =
          overlay && covered[static_cast<std::size_t>(i - 1) * m.cols() + (j - 1)] != 0;
      char ch = fault ? 'X' : '.';
      if (cov) ch = fault ? '#' : 'o';
      out.push_back(ch);
      if (rules && j % n == 0 && j != m.cols()) out.push_back('|');
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace fpgarepair
