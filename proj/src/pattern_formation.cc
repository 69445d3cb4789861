#include "quadcpg/pattern_formation.h"

#include <cmath>
#include <string>

#include "quadcpg/robot_registry.h"

namespace quadcpg {

void PfParams::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("PfParams: ") + what);
  };
  require(std::isfinite(height) && height > 0.0, "height must be > 0");
  require(std::isfinite(step_length) && step_length >= 0.0,
          "step_length must be >= 0");
  require(std::isfinite(clearance) && clearance >= 0.0,
          "clearance must be >= 0");
  require(std::isfinite(penetration) && penetration >= 0.0,
          "penetration must be >= 0");
  require(std::isfinite(x_offset) && std::isfinite(z_offset) &&
              std::isfinite(y_nominal),
          "offsets must be finite");
}

PfParams PfParams::for_leg(Leg leg) const {
  PfParams out = *this;
  out.y_nominal = is_left(leg) ? std::abs(y_nominal) : -std::abs(y_nominal);
  return out;
}

bool in_swing(const OscillatorState& state) { return std::sin(state.theta) > 0.0; }

FootTarget foot_target(const OscillatorState& state, const PfParams& params) {
  const double s = std::sin(state.theta);
  const double x = params.x_offset - params.step_length * state.r * std::cos(state.theta);
  const double lift = s > 0.0 ? params.clearance : params.penetration;
  const double z = params.z_offset - params.height + lift * s;
  FootTarget target(x, params.y_nominal, z);
  if (!target.allFinite()) {
    throw DomainError("foot_target: non-finite result");
  }
  return target;
}

PfParams pf_params_from_descriptor(const RobotDescriptor& robot) {
  return robot.pf;
}

}  // namespace quadcpg
