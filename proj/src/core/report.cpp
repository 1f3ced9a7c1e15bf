#include "core/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace fpgarepair {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json lines_array(const Term& t, const CoverageTable& table) {
  ordered_json arr = ordered_json::array();
  for (const LineId& id : term_lines(t, table)) arr.push_back(id.name());
  return arr;
}

std::string join_lines(const Term& t, const CoverageTable& table) {
  std::string out;
  for (const LineId& id : term_lines(t, table)) {
    if (!out.empty()) out += ' ';
    out += id.name();
  }
  return out.empty() ? "(none)" : out;
}

std::string approx(Ratio r) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", r.to_double());
  return buf;
}

}  // namespace

std::string plan_json(const RepairPlan& plan, bool include_all_covers) {
  ordered_json j;
  j["faults"] = ordered_json::array();
  for (const auto& f : plan.table.faults)
    j["faults"].push_back({{"row", f.row}, {"col", f.col}});
  j["lines"] = ordered_json::array();
  for (const auto& line : plan.table.lines) j["lines"].push_back(line.name());
  j["cnf"] = ordered_json::array();
  for (const auto& clause : plan.cnf)
    j["cnf"].push_back({clause.column_line.name(), clause.row_line.name()});
  j["minimum_covers"] = ordered_json::array();
  for (const auto& t : plan.all_minimum) j["minimum_covers"].push_back(lines_array(t, plan.table));
  j["chosen"] = lines_array(plan.chosen, plan.table);
  j["readdress"] = ordered_json::array();
  for (const auto& r : plan.readdress)
    j["readdress"].push_back({{"from", r.from}, {"to", r.to}, {"axis", axis_name(r.axis)}});
  j["feasible"] = plan.feasible;
  j["cost_estimate"] = plan.cost_estimate;
  if (include_all_covers) {
    j["all_covers"] = ordered_json::array();
    for (const auto& t : plan.dnf) j["all_covers"].push_back(lines_array(t, plan.table));
  }
  return j.dump(2) + "\n";
}

std::string plan_text(const RepairPlan& plan, bool include_all_covers) {
  std::string out;
  out += "faults (" + std::to_string(plan.table.faults.size()) + "):";
  for (const auto& f : plan.table.faults)
    out += " (" + std::to_string(f.row) + "," + std::to_string(f.col) + ")";
  out += "\nlines (" + std::to_string(plan.table.lines.size()) + "):";
  for (const auto& line : plan.table.lines) out += " " + line.name();
  out += "\n";

  if (plan.feasible) {
    out += "minimum covers (" + std::to_string(plan.all_minimum.size()) + "):\n";
    for (const auto& t : plan.all_minimum) out += "  " + join_lines(t, plan.table) + "\n";
    out += "chosen: " + join_lines(plan.chosen, plan.table) + "\n";
    if (!plan.readdress.empty()) {
      out += "readdress:\n";
      for (const auto& r : plan.readdress)
        out += std::string("  ") + axis_name(r.axis) + " " + std::to_string(r.from) + " -> " +
               std::to_string(r.to) + "\n";
    }
    out += "feasible: yes\n";
  } else {
    out += "feasible: no\n";
    out += "smallest cover (size " + std::to_string(plan.chosen.size()) +
           ", over budget): " + join_lines(plan.chosen, plan.table) + "\n";
  }
  out += "cost estimate: " + std::to_string(plan.cost_estimate) + "\n";
  if (include_all_covers) {
    out += "all covers (" + std::to_string(plan.dnf.size()) + "):\n";
    for (const auto& t : plan.dnf) out += "  " + join_lines(t, plan.table) + "\n";
  }
  return out;
}

std::string tiles_json(const TileRepairResult& result) {
  ordered_json j;
  j["strategy"] = strategy_name(result.strategy);
  j["q_r"] = result.q_r.to_double();
  j["q_c"] = result.q_c.to_double();
  j["spares_used"] = result.spares_used;
  j["spares_other_strategy"] = result.spares_other_strategy;
  if (result.quality)
    j["quality"] = result.quality->to_double();
  else
    j["quality"] = nullptr;
  j["placements"] = ordered_json::array();
  for (const auto& t : result.placements) {
    const char* axis =
        t.axis == CompressedMatrix::BandAxis::RowBands ? "rows" : "cols";
    j["placements"].push_back({{"axis", axis}, {"band", t.band}, {"start", t.start}});
  }
  j["fault_total"] = result.fault_total;
  return j.dump(2) + "\n";
}

std::string tiles_text(const TileRepairResult& result) {
  std::string out;
  out += std::string("strategy: ") + strategy_name(result.strategy) + "\n";
  out += "Q_r: " + result.q_r.to_string() + " (~" + approx(result.q_r) + ")\n";
  out += "Q_c: " + result.q_c.to_string() + " (~" + approx(result.q_c) + ")\n";
  out += "spare tiles: " + std::to_string(result.spares_used) + " (other strategy: " +
         std::to_string(result.spares_other_strategy) + ")\n";
  if (result.quality)
    out += "quality: " + result.quality->to_string() + " (~" + approx(*result.quality) + ")\n";
  else
    out += "quality: n/a (no spares needed)\n";
  out += "fault total: " + std::to_string(result.fault_total) + "\n";
  if (!result.placements.empty()) {
    out += "placements (band, start):";
    for (const auto& t : result.placements)
      out += " (" + std::to_string(t.band) + "," + std::to_string(t.start) + ")";
    out += "\n";
  }
  return out;
}

}  // namespace fpgarepair
