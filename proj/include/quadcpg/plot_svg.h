#ifndef QUADCPG_PLOT_SVG_H_
#define QUADCPG_PLOT_SVG_H_

#include <string>

#include "quadcpg/rollout_io.h"

namespace quadcpg {

/// Three stacked panels over time: base velocity (vx), per-limb CPG frequency
/// (omega_*) and per-limb amplitude (r_*). Requires those columns and at
/// least one row; throws ParseError otherwise.
std::string render_rollout_svg(const CsvTable& table, const std::string& title = "");

}  // namespace quadcpg

#endif  // QUADCPG_PLOT_SVG_H_
