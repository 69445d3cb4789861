#include "quadcpg/environment.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "quadcpg/kinematic_backend.h"
#include "quadcpg/pattern_formation.h"

namespace quadcpg {

namespace {

std::vector<double> flatten(const LegJoints& joints) {
  std::vector<double> out;
  for (const auto& leg : joints) {
    const auto v = leg.values();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Eigen::Matrix3d rotation_from_rpy(const Eigen::Vector3d& rpy) {
  return (Eigen::AngleAxisd(rpy.z(), Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(rpy.y(), Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(rpy.x(), Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

}  // namespace

std::array<double, kObservationSize> Observation::to_vector() const {
  std::array<double, kObservationSize> v{};
  std::size_t k = 0;
  for (int i = 0; i < 3; ++i) v[k++] = base_orientation[i];
  for (int i = 0; i < 3; ++i) v[k++] = base_lin_vel[i];
  for (int i = 0; i < 3; ++i) v[k++] = base_ang_vel[i];
  for (bool c : foot_contacts) v[k++] = c ? 1.0 : 0.0;
  for (const auto& p : feet_positions) {
    for (int i = 0; i < 3; ++i) v[k++] = p[i];
  }
  for (double a : prev_action) v[k++] = a;
  for (const auto& s : cpg) {
    v[k++] = s.r;
    v[k++] = s.r_dot;
    v[k++] = s.theta;
    v[k++] = s.theta_dot;
  }
  return v;
}

RewardTerms compute_reward(double f_x, double d_max, const Eigen::Vector3d& o_base,
                           std::span<const double> tau,
                           std::span<const double> q_dot,
                           std::span<const double> q_dot_prev,
                           const RewardWeights& weights) {
  if (tau.size() != q_dot.size() || q_dot.size() != q_dot_prev.size()) {
    throw DomainError("compute_reward: tau, q_dot and q_dot_prev differ in length (" +
                      std::to_string(tau.size()) + ", " +
                      std::to_string(q_dot.size()) + ", " +
                      std::to_string(q_dot_prev.size()) + ")");
  }
  RewardTerms terms;
  terms.forward_progress = std::min(f_x, d_max);
  terms.orientation_error = o_base.norm();  // o_zero = 0
  double dot = 0.0;
  for (std::size_t j = 0; j < tau.size(); ++j) {
    dot += tau[j] * (q_dot[j] - q_dot_prev[j]);
  }
  terms.power = std::abs(dot);
  terms.forward_term = weights.forward * terms.forward_progress;
  terms.orientation_term = weights.orientation * terms.orientation_error;
  terms.power_term = weights.power * terms.power;
  terms.total = terms.forward_term + terms.orientation_term + terms.power_term;
  return terms;
}

std::size_t EnvironmentConfig::substeps() const {
  return static_cast<std::size_t>(std::llround(dt_control / cpg.dt_integration));
}

void EnvironmentConfig::validate() const {
  cpg.validate();
  if (!(dt_control > 0.0)) throw DomainError("EnvironmentConfig: dt_control must be > 0");
  const double ratio = dt_control / cpg.dt_integration;
  if (substeps() < 1 || std::abs(ratio - static_cast<double>(substeps())) > 1e-9) {
    throw DomainError(
        "EnvironmentConfig: dt_control must be an integer multiple of "
        "dt_integration");
  }
  if (!(v_cap >= 0.0)) throw DomainError("EnvironmentConfig: v_cap must be >= 0");
  if (!(fall_angle > 0.0)) throw DomainError("EnvironmentConfig: fall_angle must be > 0");
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kNone:
      return "none";
    case Termination::kFall:
      return "fall";
    case Termination::kLowHeight:
      return "low_height";
  }
  return "unknown";
}

Observation build_observation(const RobotDescriptor& robot,
                              const BackendState& state, const CpgState& cpg,
                              const std::array<double, kActionSize>& prev_action) {
  Observation obs;
  obs.base_orientation = state.base_rpy;
  const Eigen::Matrix3d world_from_body = rotation_from_rpy(state.base_rpy);
  obs.base_lin_vel = world_from_body.transpose() * state.base_lin_vel;
  obs.base_ang_vel = state.base_ang_vel;
  obs.foot_contacts = state.contacts;
  obs.feet_positions = fk_all_feet(robot, state.q);
  obs.prev_action = prev_action;
  obs.cpg = cpg;
  return obs;
}

LegJoints standing_joints(const RobotDescriptor& robot) {
  LegJoints q{};
  for (Leg leg : kAllLegs) {
    const PfParams pf = robot.pf.for_leg(leg);
    const FootTarget stand(pf.x_offset, pf.y_nominal, pf.z_offset - pf.height);
    q[index(leg)] = solve_leg_ik(robot.legs[index(leg)], stand).q;
  }
  return q;
}

Environment::Environment(RobotDescriptor robot, EnvironmentConfig config,
                         std::unique_ptr<DynamicsBackend> backend)
    : robot_(std::move(robot)), config_(config), backend_(std::move(backend)) {
  robot_.validate();
  config_.validate();
  if (!backend_) backend_ = std::make_unique<KinematicBackend>();
  for (Leg leg : kAllLegs) leg_pf_[index(leg)] = robot_.pf.for_leg(leg);
}

Observation Environment::reset(std::uint64_t seed,
                               std::span<const double, kNumLegs> initial_phases) {
  cpg_ = init_cpg(initial_phases, config_.cpg);
  command_ = CpgCommand{};
  prev_action_.fill(0.0);
  steps_ = 0;
  done_ = false;

  q_desired_ = standing_joints(robot_);
  backend_->reset(robot_, q_desired_, seed);
  for (Leg leg : kAllLegs) {
    const PfParams& pf = leg_pf_[index(leg)];
    targets_[index(leg)] = FootTarget(pf.x_offset, pf.y_nominal, pf.z_offset - pf.height);
  }
  prev_q_dot_ = flatten(backend_->state().q_dot);
  is_reset_ = true;
  return build_observation(robot_, backend_->state(), cpg_, prev_action_);
}

StepResult Environment::step(std::span<const double> action) {
  if (!is_reset_) throw std::logic_error("Environment::step called before reset()");
  if (done_) throw std::logic_error("Environment::step called after episode end");

  command_ = clamp_command(action);
  StepResult result;
  StepInfo& info = result.info;

  const double start_x = backend_->state().base_position.x();
  const std::size_t n_sub = config_.substeps();
  const double dt = config_.cpg.dt_integration;
  for (std::size_t k = 0; k < n_sub; ++k) {
    cpg_ = step_cpg(cpg_, command_, config_.cpg);
    bool fallback = false;
    for (std::size_t i = 0; i < kNumLegs; ++i) {
      targets_[i] = foot_target(cpg_[i], leg_pf_[i]);
      IkSolution sol = solve_leg_ik(robot_.legs[i], targets_[i]);
      if (!sol.reachable) {
        info.ik_fallback[i] = true;
        fallback = true;
      }
      q_desired_[i] = sol.q;
    }
    if (fallback) ++info.ik_fallback_substeps;
    backend_->advance(q_desired_, dt);
    const auto& contacts = backend_->state().contacts;
    for (std::size_t i = 0; i < kNumLegs; ++i) {
      if (contacts[i]) ++info.stance_substeps[i];
    }
  }
  info.substeps = n_sub;
  ++steps_;

  const BackendState& state = backend_->state();
  info.sim_time = state.time;
  const std::vector<double> q_dot = flatten(state.q_dot);
  const std::vector<double> tau = flatten(state.tau);
  info.reward = compute_reward(state.base_position.x() - start_x, config_.d_max(),
                               state.base_rpy, tau, q_dot, prev_q_dot_,
                               config_.weights);
  prev_q_dot_ = q_dot;
  prev_action_ = command_.flatten();

  if (std::abs(state.base_rpy.x()) > config_.fall_angle ||
      std::abs(state.base_rpy.y()) > config_.fall_angle) {
    info.termination = Termination::kFall;
  } else if (state.base_position.z() < config_.min_height_fraction * robot_.height_nominal) {
    info.termination = Termination::kLowHeight;
  }
  done_ = info.termination != Termination::kNone;

  result.observation = build_observation(robot_, state, cpg_, prev_action_);
  result.reward = info.reward.total;
  result.done = done_;
  return result;
}

}  // namespace quadcpg
