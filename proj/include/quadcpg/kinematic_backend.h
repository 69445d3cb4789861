#ifndef QUADCPG_KINEMATIC_BACKEND_H_
#define QUADCPG_KINEMATIC_BACKEND_H_

#include "quadcpg/dynamics_backend.h"
#include "quadcpg/robot_registry.h"

namespace quadcpg {

struct KinematicBackendConfig {
  double height_gain = 20.0;     // 1/s, base height servo while supported
  double attitude_gain = 10.0;   // 1/s, roll/pitch recovery with >= 2 contacts
  double contact_tolerance = 1e-9;  // m, foot counts as grounded at z <= tol
};

/// Simplified stand-in for rigid-body physics.
///
/// Commanded feet (FK of the desired joints) are the feet that touch the
/// world: grounded feet are anchored, so the base moves opposite to their mean
/// velocity in the body frame. Base height is servoed to its standing value
/// while any foot is grounded and follows a ballistic arc otherwise. With a
/// single grounded foot the base tips about it like an inverted pendulum;
/// with two or more, roll and pitch relax back to zero. Foot-ground contact
/// ignores base tilt.
///
/// Joints follow their targets through the massless PD balance
///   Kp (q_des - q) - Kd q_dot = tau_load,
/// integrated implicitly, where tau_load = -J^T f holds the body weight shared
/// by the grounded feet (f = m g / n_contacts, upward). Reported torques are
/// the PD law evaluated on the new joint state.
class KinematicBackend : public DynamicsBackend {
 public:
  explicit KinematicBackend(KinematicBackendConfig config = {});

  void reset(const RobotDescriptor& robot, const LegJoints& q_standing,
             std::uint64_t seed) override;
  void advance(const LegJoints& q_desired, double dt) override;
  const BackendState& state() const override { return state_; }

  /// Base/contact update from commanded feet (body frame) alone; joints are
  /// left untouched. `advance` calls this with FK of the desired joints.
  void advance_feet(const FeetPositions& commanded_feet, double dt);

  const FeetPositions& commanded_feet() const { return feet_; }
  double standing_height() const { return standing_height_; }

 private:
  void update_contacts();
  void update_joints(const LegJoints& q_desired, double dt);

  KinematicBackendConfig config_;
  RobotDescriptor robot_;
  bool has_robot_ = false;
  BackendState state_;
  FeetPositions feet_{};
  double standing_height_ = 0.0;
};

}  // namespace quadcpg

#endif  // QUADCPG_KINEMATIC_BACKEND_H_
