#ifndef QUADCPG_PATTERN_FORMATION_H_
#define QUADCPG_PATTERN_FORMATION_H_

#include <Eigen/Core>

#include "quadcpg/common.h"
#include "quadcpg/rhythm_generator.h"

namespace quadcpg {

struct RobotDescriptor;

/// Per-robot foot-trajectory shape, SI units. y_nominal is the lateral foot
/// set-point in the hip frame; its sign follows the leg side (left > 0).
struct PfParams {
  double height = 0.0;        // h
  double step_length = 0.0;   // L_step
  double clearance = 0.0;     // L_clrnc
  double penetration = 0.0;   // L_pntr
  double x_offset = 0.0;
  double z_offset = 0.0;
  double y_nominal = 0.0;

  void validate() const;

  /// Copy with y_nominal mirrored for right legs (magnitude kept).
  PfParams for_leg(Leg leg) const;
};

/// Foot position target in the hip frame (x forward, z up).
using FootTarget = Eigen::Vector3d;

/// x = x_off - L_step r cos(theta);
/// z = z_off - h + L_clrnc sin(theta)  if sin(theta) > 0 (swing),
///     z_off - h + L_pntr  sin(theta)  otherwise (stance).
FootTarget foot_target(const OscillatorState& state, const PfParams& params);

/// True when the oscillator phase is in the swing half (sin(theta) > 0).
bool in_swing(const OscillatorState& state);

/// Fixed PF parameters of a registry robot (y_nominal as the left-side,
/// positive magnitude).
PfParams pf_params_from_descriptor(const RobotDescriptor& robot);

}  // namespace quadcpg

#endif  // QUADCPG_PATTERN_FORMATION_H_
