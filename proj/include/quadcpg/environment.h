#ifndef QUADCPG_ENVIRONMENT_H_
#define QUADCPG_ENVIRONMENT_H_

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include <Eigen/Core>

#include "quadcpg/dynamics_backend.h"
#include "quadcpg/kinematics.h"
#include "quadcpg/rhythm_generator.h"
#include "quadcpg/robot_registry.h"

namespace quadcpg {

inline constexpr std::size_t kObservationSize = 49;

/// Sensory vector handed to the policy. Contains no joint-space quantities,
/// so its size is the same for every robot.
struct Observation {
  Eigen::Vector3d base_orientation = Eigen::Vector3d::Zero();  // roll, pitch, yaw
  Eigen::Vector3d base_lin_vel = Eigen::Vector3d::Zero();      // body frame
  Eigen::Vector3d base_ang_vel = Eigen::Vector3d::Zero();
  std::array<bool, kNumLegs> foot_contacts{};
  FeetPositions feet_positions{};  // body frame, FR FL RR RL
  std::array<double, kActionSize> prev_action{};
  CpgState cpg{};

  /// Flat layout: orientation(3) lin_vel(3) ang_vel(3) contacts(4)
  /// feet(12) prev_action(8) cpg(16, r r_dot theta theta_dot per leg).
  std::array<double, kObservationSize> to_vector() const;
};

struct RewardWeights {
  double forward = 8.0;
  double orientation = -0.25;
  double power = -1e-5;
};

struct RewardTerms {
  // raw quantities
  double forward_progress = 0.0;   // min(f_x, d_max), m
  double orientation_error = 0.0;  // |o_base - o_zero|, rad
  double power = 0.0;              // |tau . (q_dot_t - q_dot_{t-1})|
  // weighted contributions; total is their sum
  double forward_term = 0.0;
  double orientation_term = 0.0;
  double power_term = 0.0;
  double total = 0.0;
};

/// R = w1 min(f_x, d_max) + w2 |o_base| + w3 |tau . (q_dot_t - q_dot_prev)|.
/// The power term uses the joint velocity difference literally. Throws
/// DomainError when the joint-space vectors differ in length.
RewardTerms compute_reward(double f_x, double d_max, const Eigen::Vector3d& o_base,
                           std::span<const double> tau,
                           std::span<const double> q_dot,
                           std::span<const double> q_dot_prev,
                           const RewardWeights& weights = {});

struct EnvironmentConfig {
  CpgConfig cpg;
  double dt_control = 0.01;  // 100 Hz policy
  double v_cap = 1.5;        // m/s; d_max = v_cap * dt_control
  double fall_angle = 1.0;   // rad, |roll| or |pitch| beyond this ends the episode
  double min_height_fraction = 0.3;
  RewardWeights weights;

  std::size_t substeps() const;
  double d_max() const { return v_cap * dt_control; }
  void validate() const;
};

enum class Termination { kNone, kFall, kLowHeight };

std::string_view termination_name(Termination t);

struct StepInfo {
  RewardTerms reward;
  std::array<bool, kNumLegs> ik_fallback{};  // any substep used the fallback
  std::size_t ik_fallback_substeps = 0;
  std::array<std::size_t, kNumLegs> stance_substeps{};
  std::size_t substeps = 0;
  double sim_time = 0.0;
  Termination termination = Termination::kNone;
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

/// Observation assembly; foot positions come from FK of the backend joint
/// positions, never from backend foot sensors.
Observation build_observation(const RobotDescriptor& robot,
                              const BackendState& state, const CpgState& cpg,
                              const std::array<double, kActionSize>& prev_action);

/// Joint targets for the standing pose: every foot at (x_off, y_nominal,
/// z_off - h) in its hip frame.
LegJoints standing_joints(const RobotDescriptor& robot);

/// One robot, one backend, single-threaded. Independent instances share
/// nothing and may run concurrently.
class Environment {
 public:
  /// A null backend selects the built-in KinematicBackend.
  explicit Environment(RobotDescriptor robot, EnvironmentConfig config = {},
                       std::unique_ptr<DynamicsBackend> backend = nullptr);

  Observation reset(std::uint64_t seed,
                    std::span<const double, kNumLegs> initial_phases = kTrotPhases);

  /// Clamps the raw action, runs config.substeps() integration steps and
  /// scores the control step. Throws DomainError on non-finite actions and
  /// std::logic_error before reset() or after the episode ended.
  StepResult step(std::span<const double> action);

  const RobotDescriptor& robot() const { return robot_; }
  const EnvironmentConfig& config() const { return config_; }
  const BackendState& backend_state() const { return backend_->state(); }
  const CpgState& cpg_state() const { return cpg_; }
  const CpgCommand& command() const { return command_; }
  const FeetPositions& foot_targets() const { return targets_; }  // hip frame
  std::size_t control_steps() const { return steps_; }
  bool done() const { return done_; }

 private:
  RobotDescriptor robot_;
  EnvironmentConfig config_;
  std::unique_ptr<DynamicsBackend> backend_;
  std::array<PfParams, kNumLegs> leg_pf_{};

  CpgState cpg_{};
  CpgCommand command_{};
  FeetPositions targets_{};
  LegJoints q_desired_{};
  std::array<double, kActionSize> prev_action_{};
  std::vector<double> prev_q_dot_;
  std::size_t steps_ = 0;
  bool is_reset_ = false;
  bool done_ = false;
};

}  // namespace quadcpg

#endif  // QUADCPG_ENVIRONMENT_H_
