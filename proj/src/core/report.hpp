#pragma once

#include <string>

#include "core/exact_cover.hpp"
#include "core/tile_cover.hpp"

namespace fpgarepair {

/// {faults[], lines[], cnf[][], minimum_covers[][], chosen[], readdress[],
///  feasible, cost_estimate}; include_all_covers adds the full DNF.
std::string plan_json(const RepairPlan& plan, bool include_all_covers = false);
std::string plan_text(const RepairPlan& plan, bool include_all_covers = false);

/// {strategy, q_r, q_c, spares_used, spares_other_strategy, quality,
///  placements[{axis,band,start}], fault_total}
std::string tiles_json(const TileRepairResult& result);
std::string tiles_text(const TileRepairResult& result);

}  // namespace fpgarepair
