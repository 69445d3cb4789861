#include "quadcpg/kinematic_backend.h"

#include <cmath>
#include <stdexcept>

namespace quadcpg {

KinematicBackend::KinematicBackend(KinematicBackendConfig config)
    : config_(config) {}

void KinematicBackend::reset(const RobotDescriptor& robot,
                             const LegJoints& q_standing, std::uint64_t /*seed*/) {
  robot_ = robot;
  has_robot_ = true;
  state_ = BackendState{};

  double hip_z = 0.0;
  for (const auto& leg : robot_.legs) hip_z += leg.hip_offset.z();
  hip_z /= static_cast<double>(kNumLegs);
  standing_height_ = robot_.pf.height - robot_.pf.z_offset - hip_z;

  state_.base_position = Eigen::Vector3d(0.0, 0.0, standing_height_);
  state_.q = q_standing;
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    state_.q_dot[i] = JointVector(robot_.legs[i].dof);
    state_.tau[i] = JointVector(robot_.legs[i].dof);
  }
  feet_ = fk_all_feet(robot_, q_standing);
  update_contacts();
}

void KinematicBackend::update_contacts() {
  const double base_z = state_.base_position.z();
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    state_.contacts[i] = base_z + feet_[i].z() <= config_.contact_tolerance;
  }
}

void KinematicBackend::advance_feet(const FeetPositions& commanded_feet,
                                    double dt) {
  if (!has_robot_) throw std::logic_error("KinematicBackend: reset() first");
  if (!(dt > 0.0)) throw DomainError("KinematicBackend: dt must be > 0");

  // Stance set is the contact state at the start of the interval.
  int n_stance = 0;
  Eigen::Vector2d foot_vel_sum = Eigen::Vector2d::Zero();
  std::size_t support_leg = 0;
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    if (!state_.contacts[i]) continue;
    ++n_stance;
    support_leg = i;
    foot_vel_sum += (commanded_feet[i] - feet_[i]).head<2>() / dt;
  }

  Eigen::Vector3d& pos = state_.base_position;
  Eigen::Vector3d& vel = state_.base_lin_vel;
  Eigen::Vector3d& rpy = state_.base_rpy;
  Eigen::Vector3d& rates = state_.base_ang_vel;

  if (n_stance > 0) {
    const Eigen::Vector2d body_vel = -foot_vel_sum / n_stance;
    const double cy = std::cos(rpy.z());
    const double sy = std::sin(rpy.z());
    vel.x() = cy * body_vel.x() - sy * body_vel.y();
    vel.y() = sy * body_vel.x() + cy * body_vel.y();
    vel.z() = config_.height_gain * (standing_height_ - pos.z());
  } else {
    vel.z() -= kGravity * dt;  // flight: planar velocity held
  }
  pos += vel * dt;

  if (n_stance >= 2) {
    rates.x() = -config_.attitude_gain * rpy.x();
    rates.y() = -config_.attitude_gain * rpy.y();
  } else if (n_stance == 1) {
    // Centre of mass (body origin) relative to the single support point.
    const Eigen::Vector2d lever = -feet_[support_leg].head<2>();
    const double dist = lever.norm();
    if (dist > 1e-9) {
      const Eigen::Vector2d u = lever / dist;
      const double height = std::max(pos.z(), 1e-6);
      const double pendulum_sq = height * height + dist * dist;
      const double tilt = rpy.y() * u.x() - rpy.x() * u.y();
      const double lean = std::atan2(dist, height) + tilt;
      const double accel = kGravity * std::sin(lean) / std::sqrt(pendulum_sq);
      rates.y() += accel * u.x() * dt;
      rates.x() -= accel * u.y() * dt;
    }
  }
  rates.z() = 0.0;
  rpy += rates * dt;

  feet_ = commanded_feet;
  state_.time += dt;
  update_contacts();
}

void KinematicBackend::update_joints(const LegJoints& q_desired, double dt) {
  int n_contacts = 0;
  for (bool c : state_.contacts) n_contacts += c ? 1 : 0;
  const double load =
      n_contacts > 0 ? robot_.mass * kGravity / n_contacts : 0.0;
  const double kp = robot_.kp;
  const double kd = robot_.kd;

  for (std::size_t i = 0; i < kNumLegs; ++i) {
    const LegGeometry& geom = robot_.legs[i];
    JointVector& q = state_.q[i];
    JointVector& q_dot = state_.q_dot[i];
    JointVector& tau = state_.tau[i];

    Eigen::VectorXd tau_load = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(geom.dof));
    if (state_.contacts[i] && load > 0.0) {
      const Eigen::Vector3d ground_reaction(0.0, 0.0, load);
      tau_load = -leg_jacobian(geom, q).transpose() * ground_reaction;
    }
    for (std::size_t j = 0; j < geom.dof; ++j) {
      const double tl = tau_load[static_cast<Eigen::Index>(j)];
      const double q_new = (kd * q[j] + dt * (kp * q_desired[i][j] - tl)) / (kd + dt * kp);
      q_dot[j] = (q_new - q[j]) / dt;
      q[j] = q_new;
      tau[j] = kp * (q_desired[i][j] - q[j]) - kd * q_dot[j];
    }
  }
}

void KinematicBackend::advance(const LegJoints& q_desired, double dt) {
  if (!has_robot_) throw std::logic_error("KinematicBackend: reset() first");
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    if (q_desired[i].size() != robot_.legs[i].dof || !q_desired[i].all_finite()) {
      throw DomainError("KinematicBackend: bad desired joints for leg " +
                        std::string(kLegNames[i]));
    }
  }
  advance_feet(fk_all_feet(robot_, q_desired), dt);
  update_joints(q_desired, dt);
}

}  // namespace quadcpg
