#include "core/exact_cover.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <set>

namespace fpgarepair {

int CoverageTable::line_position(LineId id) const {
  const auto it = std::find(lines.begin(), lines.end(), id);
  return it == lines.end() ? -1 : static_cast<int>(it - lines.begin());
}

int Term::size() const { return std::popcount(bits); }

std::vector<LineId> term_lines(const Term& t, const CoverageTable& table) {
  std::vector<LineId> out;
  for (std::size_t i = 0; i < table.lines.size(); ++i)
    if (t.contains(static_cast<int>(i))) out.push_back(table.lines[i]);
  return out;
}

CoverageTable build_coverage_table(const std::vector<FaultCoord>& faults) {
  if (faults.empty()) throw std::invalid_argument("fault set is empty");
  std::set<std::pair<int, int>> seen;
  std::set<int> touched_cols, touched_rows;
  for (const auto& f : faults) {
    if (f.row < 1 || f.col < 1) throw std::invalid_argument("fault coordinates are 1-based");
    if (!seen.insert({f.row, f.col}).second)
      throw std::invalid_argument("duplicate fault (" + std::to_string(f.row) + "," +
                                  std::to_string(f.col) + ")");
    touched_cols.insert(f.col);
    touched_rows.insert(f.row);
  }

  CoverageTable table;
  table.faults = faults;
  for (int c : touched_cols) table.lines.push_back({Axis::Column, c});
  table.column_line_count = static_cast<int>(table.lines.size());
  for (int r : touched_rows) table.lines.push_back({Axis::Row, r});

  table.incidence.assign(table.lines.size(),
                         std::vector<std::uint8_t>(faults.size(), 0));
  for (std::size_t l = 0; l < table.lines.size(); ++l) {
    const LineId& line = table.lines[l];
    for (std::size_t f = 0; f < faults.size(); ++f) {
      const bool hit = line.axis == Axis::Column ? faults[f].col == line.index
                                                 : faults[f].row == line.index;
      table.incidence[l][f] = hit ? 1 : 0;
    }
  }
  return table;
}

std::vector<Clause> synthesize_cnf(const CoverageTable& table) {
  std::vector<Clause> cnf;
  cnf.reserve(table.faults.size());
  for (const auto& f : table.faults)
    cnf.push_back({{Axis::Column, f.col}, {Axis::Row, f.row}});
  return cnf;
}

namespace {

// Ascending set-bit sequences compared lexicographically; with the sort by
// popcount first this fixes the canonical term order.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

bool canonical_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

// Removes duplicates and any term that is a superset of another.
void absorb(std::vector<std::uint64_t>& terms) {
  std::sort(terms.begin(), terms.end(), canonical_less);
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
  std::vector<std::uint64_t> kept;
  kept.reserve(terms.size());
  for (const std::uint64_t t : terms) {
    bool absorbed = false;
    for (const std::uint64_t k : kept) {
      if ((t & k) == k) {  // kept terms only get smaller-or-equal popcount
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(t);
  }
  terms = std::move(kept);
}

}  // namespace

std::vector<Term> expand_to_dnf(const CoverageTable& table, const std::vector<Clause>& cnf,
                                int fault_cap) {
  if (static_cast<int>(cnf.size()) > fault_cap)
    throw CapacityError("instance has " + std::to_string(cnf.size()) +
                        " faults, over the exact-solver cap of " + std::to_string(fault_cap) +
                        "; use the tile solver for large instances");
  if (table.lines.size() > 64)
    throw CapacityError("more than 64 candidate lines");

  std::vector<std::uint64_t> terms{0};  // product identity
  std::vector<std::uint64_t> next;
  for (const Clause& clause : cnf) {
    const int cpos = table.line_position(clause.column_line);
    const int rpos = table.line_position(clause.row_line);
    if (cpos < 0 || rpos < 0)
      throw std::invalid_argument("clause literal " +
                                  (cpos < 0 ? clause.column_line : clause.row_line).name() +
                                  " not in the coverage table");
    const std::uint64_t a = 1ULL << cpos, b = 1ULL << rpos;
    next.clear();
    for (const std::uint64_t t : terms) {
      if (t & (a | b)) {
        next.push_back(t);  // clause already satisfied
      } else {
        next.push_back(t | a);
        next.push_back(t | b);
      }
    }
    absorb(next);
    terms.swap(next);
  }

  std::vector<Term> out;
  out.reserve(terms.size());
  for (const std::uint64_t t : terms) out.push_back(Term{t});
  return out;
}

std::vector<Term> minimal_covers(const std::vector<Term>& dnf) {
  if (dnf.empty()) throw std::invalid_argument("empty DNF");
  int best = std::numeric_limits<int>::max();
  for (const auto& t : dnf) best = std::min(best, t.size());
  std::vector<Term> out;
  for (const auto& t : dnf)
    if (t.size() == best) out.push_back(t);
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.bits, b.bits); });
  return out;
}

std::uint64_t estimate_complexity(int fault_count, int line_count) {
  if (fault_count < 0 || line_count < 0) throw std::invalid_argument("negative argument");
  if (fault_count >= 64) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t base = 1ULL << fault_count;
  const std::uint64_t factor = 1 + static_cast<std::uint64_t>(line_count);
  if (base > std::numeric_limits<std::uint64_t>::max() / factor)
    return std::numeric_limits<std::uint64_t>::max();
  return base * factor;
}

std::uint64_t estimate_complexity(int fault_count) {
  return estimate_complexity(fault_count, 2 * fault_count);
}

RepairPlan select_repair_plan(const std::vector<FaultCoord>& faults, const SpareBudget& budget,
                              int grid_rows, int grid_cols, int fault_cap) {
  if (budget.spare_cols < 0 || budget.spare_rows < 0)
    throw std::invalid_argument("spare counts must be >= 0");
  if (grid_rows < 1 || grid_cols < 1)
    throw std::invalid_argument("grid dimensions must be >= 1");
  for (const auto& f : faults)
    if (f.row < 1 || f.row > grid_rows || f.col < 1 || f.col > grid_cols)
      throw std::invalid_argument("fault (" + std::to_string(f.row) + "," +
                                  std::to_string(f.col) + ") outside the grid");

  auto spare_ids = [](const std::optional<std::vector<int>>& explicit_ids, int count,
                      int functional_extent, const char* what) {
    std::vector<int> ids;
    if (explicit_ids) {
      ids = *explicit_ids;
      if (static_cast<int>(ids.size()) != count)
        throw std::invalid_argument(std::string("explicit ") + what +
                                    " id count does not match the budget");
      std::sort(ids.begin(), ids.end());
      for (int id : ids)
        if (id >= 1 && id <= functional_extent)
          throw std::invalid_argument(std::string("spare ") + what + " id " +
                                      std::to_string(id) + " lies in the functional region");
    } else {
      for (int i = 1; i <= count; ++i) ids.push_back(functional_extent + i);
    }
    return ids;
  };
  const auto spare_col_ids = spare_ids(budget.spare_col_ids, budget.spare_cols, grid_cols, "column");
  const auto spare_row_ids = spare_ids(budget.spare_row_ids, budget.spare_rows, grid_rows, "row");

  RepairPlan plan;
  plan.cost_estimate = estimate_complexity(static_cast<int>(faults.size()));
  if (faults.empty()) {
    plan.all_minimum = {Term{}};
    plan.feasible = true;
    return plan;
  }

  plan.table = build_coverage_table(faults);
  plan.cnf = synthesize_cnf(plan.table);
  plan.dnf = expand_to_dnf(plan.table, plan.cnf, fault_cap);

  const std::uint64_t col_mask = (plan.table.column_line_count == 64)
                                     ? ~0ULL
                                     : (1ULL << plan.table.column_line_count) - 1;
  const auto cols_used = [&](const Term& t) { return std::popcount(t.bits & col_mask); };
  const auto rows_used = [&](const Term& t) { return std::popcount(t.bits & ~col_mask); };
  const auto feasible = [&](const Term& t) {
    return cols_used(t) <= budget.spare_cols && rows_used(t) <= budget.spare_rows;
  };

  // Minimum feasible size, then fewer row literals, then lexicographic.
  const auto better = [&](const Term& a, const Term& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (rows_used(a) != rows_used(b)) return rows_used(a) < rows_used(b);
    return lex_less(a.bits, b.bits);
  };

  const Term* best_feasible = nullptr;
  for (const auto& t : plan.dnf) {
    if (!feasible(t)) continue;
    if (!best_feasible || better(t, *best_feasible)) best_feasible = &t;
  }

  if (!best_feasible) {
    plan.feasible = false;
    plan.chosen = minimal_covers(plan.dnf).front();  // diagnostic only
    return plan;
  }

  plan.feasible = true;
  plan.chosen = *best_feasible;
  for (const auto& t : plan.dnf)
    if (t.size() == best_feasible->size() && feasible(t)) plan.all_minimum.push_back(t);
  std::sort(plan.all_minimum.begin(), plan.all_minimum.end(),
            [](const Term& a, const Term& b) { return canonical_less(a.bits, b.bits); });

  // Faulty lines ascending onto spare ids ascending, per axis.
  int next_col = 0, next_row = 0;
  for (const LineId& line : term_lines(plan.chosen, plan.table)) {
    if (line.axis == Axis::Column)
      plan.readdress.push_back({Axis::Column, line.index, spare_col_ids[next_col++]});
    else
      plan.readdress.push_back({Axis::Row, line.index, spare_row_ids[next_row++]});
  }
  return plan;
}

namespace {

// Kuhn's augmenting-path matching; faults are edges between their row and
// column lines.
class BipartiteMatcher {
public:
  BipartiteMatcher(int left_count, int right_count)
      : adj_(left_count), match_right_(right_count, -1) {}

  void add_edge(int left, int right) { adj_[left].push_back(right); }

  int solve() {
    int matched = 0;
    for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
      visited_.assign(match_right_.size(), 0);
      if (try_augment(u)) ++matched;
    }
    return matched;
  }

private:
  bool try_augment(int u) {
    for (int v : adj_[u]) {
      if (visited_[v]) continue;
      visited_[v] = 1;
      if (match_right_[v] < 0 || try_augment(match_right_[v])) {
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_right_;
  std::vector<std::uint8_t> visited_;
};

}  // namespace

BruteForceCover brute_force_min_cover(const std::vector<FaultCoord>& faults) {
  const CoverageTable table = build_coverage_table(faults);
  const int line_count = static_cast<int>(table.lines.size());
  if (line_count > 20)
    throw CapacityError("brute-force oracle capped at 20 lines, instance has " +
                        std::to_string(line_count));

  // Fault -> line-position pair.
  std::vector<std::uint64_t> fault_masks;
  for (const auto& f : faults) {
    const int c = table.line_position({Axis::Column, f.col});
    const int r = table.line_position({Axis::Row, f.row});
    fault_masks.push_back((1ULL << c) | (1ULL << r));
  }
  const auto covers_all = [&](std::uint64_t subset) {
    return std::all_of(fault_masks.begin(), fault_masks.end(),
                       [subset](std::uint64_t fm) { return (subset & fm) != 0; });
  };

  BruteForceCover result;
  bool found = false;
  for (int size = 0; size <= line_count && !found; ++size) {
    // Gosper's hack: all size-subsets of line positions in increasing order.
    std::uint64_t subset = size == 0 ? 0 : (1ULL << size) - 1;
    const std::uint64_t limit = 1ULL << line_count;
    while (subset < limit) {
      if (covers_all(subset)) {
        result.cover = Term{subset};
        result.size = size;
        found = true;
        break;
      }
      if (subset == 0) break;
      const std::uint64_t c = subset & -subset;
      const std::uint64_t r = subset + c;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
  }

  std::map<int, int> row_ids, col_ids;
  for (const auto& f : faults) {
    row_ids.emplace(f.row, static_cast<int>(row_ids.size()));
    col_ids.emplace(f.col, static_cast<int>(col_ids.size()));
  }
  BipartiteMatcher matcher(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
  for (const auto& f : faults) matcher.add_edge(row_ids[f.row], col_ids[f.col]);
  result.matching_size = matcher.solve();
  return result;
}

}  // namespace fpgarepair
