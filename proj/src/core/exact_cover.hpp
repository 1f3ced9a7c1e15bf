#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/model.hpp"

namespace fpgarepair {

/// One candidate covering line: a block column C_i or block row R_j.
/// The canonical variable numbering concatenates all touched columns
/// (ascending) followed by all touched rows (ascending).
struct LineId {
  Axis axis = Axis::Column;
  int index = 0;  // 1-based

  bool operator==(const LineId&) const = default;
  auto operator<=>(const LineId&) const = default;

  std::string name() const {
    return (axis == Axis::Column ? "C" : "R") + std::to_string(index);
  }
};

/// Fault/line incidence. Every fault column has exactly two unit entries:
/// its block column and its block row.
struct CoverageTable {
  std::vector<FaultCoord> faults;          // table columns
  std::vector<LineId> lines;               // table rows; columns first, then rows
  int column_line_count = 0;               // lines[0..column_line_count) have Axis::Column
  std::vector<std::vector<std::uint8_t>> incidence;  // lines x faults

  int line_position(LineId id) const;  // index into `lines`, -1 if absent
};

/// Two-literal disjunction covering one fault.
struct Clause {
  LineId column_line;
  LineId row_line;

  bool operator==(const Clause&) const = default;
};

/// Conjunction of lines, as a bit vector over the table's line ordering.
struct Term {
  std::uint64_t bits = 0;

  int size() const;
  bool contains(int line_pos) const { return (bits >> line_pos) & 1; }
  bool operator==(const Term&) const = default;
};

std::vector<LineId> term_lines(const Term& t, const CoverageTable& table);

struct Readdress {
  Axis axis = Axis::Column;
  int from = 0;
  int to = 0;

  bool operator==(const Readdress&) const = default;
};

struct RepairPlan {
  CoverageTable table;
  std::vector<Clause> cnf;
  std::vector<Term> dnf;          // absorption-closed, canonically ordered
  std::vector<Term> all_minimum;  // every feasible minimum-size term
  Term chosen;                    // global minimum diagnostic when infeasible
  std::vector<Readdress> readdress;
  std::uint64_t cost_estimate = 0;
  bool feasible = false;
};

inline constexpr int kDefaultFaultCap = 24;

/// Builds the incidence table for a deduplicated fault set.
CoverageTable build_coverage_table(const std::vector<FaultCoord>& faults);

/// One clause per fault, in fault order: (its column line OR its row line).
std::vector<Clause> synthesize_cnf(const CoverageTable& table);

/// Clause-by-clause product with absorption applied after every step.
/// Result is duplicate-free, antichain (no term contains another), ordered by
/// size then lexicographically over the line ordering.
std::vector<Term> expand_to_dnf(const CoverageTable& table, const std::vector<Clause>& cnf,
                                int fault_cap = kDefaultFaultCap);

/// All terms of minimum cardinality, in canonical order.
std::vector<Term> minimal_covers(const std::vector<Term>& dnf);

/// Exact pipeline: table -> CNF -> DNF -> feasible minimum selection under
/// the spare budget -> readdress map. Grid dimensions fix the synthesized
/// spare ids (q+1..., p+1...) and bound the fault coordinates.
RepairPlan select_repair_plan(const std::vector<FaultCoord>& faults, const SpareBudget& budget,
                              int grid_rows, int grid_cols, int fault_cap = kDefaultFaultCap);

/// 2^m + lines * 2^m; saturates at uint64 max.
std::uint64_t estimate_complexity(int fault_count, int line_count);

/// Worst case (lines = 2m): 2^m * (2m + 1).
std::uint64_t estimate_complexity(int fault_count);

struct BruteForceCover {
  Term cover;          // a minimum-cardinality covering set
  int size = 0;
  int matching_size = 0;  // max bipartite matching rows vs columns; equals size
};

/// Independent oracle: exhaustive subset enumeration in increasing size, plus
/// the maximum-matching cross-check. Distinct-line count <= 20.
BruteForceCover brute_force_min_cover(const std::vector<FaultCoord>& faults);

}  // namespace fpgarepair
