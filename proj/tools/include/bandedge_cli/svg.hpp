#pragma once

#include <string>

#include "bandedge_cli/csv.hpp"

namespace bandedge::cli {

// Self-contained line chart: fixed 800x500 viewBox, first column on the
// x axis, one polyline per remaining column, legend from the header.
// Convenience output only; no styling knobs.
std::string to_svg(const Table& table, const std::string& title);

}  // namespace bandedge::cli
