#ifndef QUADCPG_DYNAMICS_BACKEND_H_
#define QUADCPG_DYNAMICS_BACKEND_H_

#include <array>
#include <cstdint>

#include <Eigen/Core>

#include "quadcpg/kinematics.h"

namespace quadcpg {

struct RobotDescriptor;

/// World state reported by a backend after each integration step.
struct BackendState {
  Eigen::Vector3d base_position = Eigen::Vector3d::Zero();  // world, m
  Eigen::Vector3d base_rpy = Eigen::Vector3d::Zero();       // roll, pitch, yaw
  Eigen::Vector3d base_lin_vel = Eigen::Vector3d::Zero();   // world, m/s
  Eigen::Vector3d base_ang_vel = Eigen::Vector3d::Zero();   // rad/s
  LegJoints q{};
  LegJoints q_dot{};
  LegJoints tau{};
  std::array<bool, kNumLegs> contacts{};
  double time = 0.0;
};

/// Contract: given per-leg desired joint positions, advance the world by
/// exactly `dt`. Implementations must be deterministic given the reset seed.
class DynamicsBackend {
 public:
  virtual ~DynamicsBackend() = default;

  virtual void reset(const RobotDescriptor& robot, const LegJoints& q_standing,
                     std::uint64_t seed) = 0;
  virtual void advance(const LegJoints& q_desired, double dt) = 0;
  virtual const BackendState& state() const = 0;
};

}  // namespace quadcpg

#endif  // QUADCPG_DYNAMICS_BACKEND_H_
