#ifndef QUADCPG_KINEMATICS_H_
#define QUADCPG_KINEMATICS_H_

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>

#include <Eigen/Core>

#include "quadcpg/common.h"
#include "quadcpg/pattern_formation.h"

namespace quadcpg {

struct RobotDescriptor;

inline constexpr std::size_t kMaxLegDof = 4;

// Joint angle conventions (all in radians):
//  - zero joints: leg fully extended, pointing straight down;
//  - abduction rotates the leg plane about the body x axis;
//  - pitch joints rotate about the body y axis, positive moves the distal
//    point backward (-x);
//  - elbow-up: knee < 0 (knee joint behind the hip-foot line, Unitree style);
//    elbow-down: knee > 0 (knee points forward).
enum class KneeConfig { kElbowUp, kElbowDown };

/// Joint angles of one leg: [abduction, hip, knee] or
/// [abduction, hip, knee, foot].
class JointVector {
 public:
  JointVector() = default;
  explicit JointVector(std::size_t dof);
  JointVector(std::initializer_list<double> values);

  std::size_t size() const { return size_; }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<double> values() { return {values_.data(), size_}; }
  std::span<const double> values() const { return {values_.data(), size_}; }

  bool all_finite() const;
  bool operator==(const JointVector& other) const;

 private:
  std::array<double, kMaxLegDof> values_{};
  std::size_t size_ = 0;
};

using LegJoints = std::array<JointVector, kNumLegs>;
using FeetPositions = std::array<Eigen::Vector3d, kNumLegs>;

struct LegGeometry {
  Eigen::Vector3d hip_offset = Eigen::Vector3d::Zero();  // body -> abduction joint
  double abd_offset = 0.0;  // signed lateral hip-to-leg-plane distance (left > 0)
  std::array<double, 3> link_lengths{};  // only the first dof - 1 are used
  std::size_t dof = 3;
  KneeConfig knee_config = KneeConfig::kElbowUp;
  // 4-DoF legs: foot = ratio * knee. Supported: 0, -0.5, -1.
  double foot_knee_ratio = -0.5;

  std::size_t num_links() const { return dof - 1; }
  double max_reach() const;  // planar hip-to-foot distance, fully extended
  double min_reach() const;  // planar hip-to-foot distance, knee folded
  void validate() const;
};

struct IkSolution {
  JointVector q;
  bool reachable = true;  // false: q is the clamped-reach fallback
};

/// Thrown by the checked IK entry points for targets outside the workspace.
/// Carries the clamped-reach solution so callers can still act on it.
class OutOfWorkspaceError : public DomainError {
 public:
  OutOfWorkspaceError(const std::string& what, JointVector fallback)
      : DomainError(what), fallback_(fallback) {}
  const JointVector& fallback() const { return fallback_; }

 private:
  JointVector fallback_;
};

/// Foot position in the hip frame.
FootTarget fk_leg(const LegGeometry& geom, const JointVector& q);

/// 3 x dof position Jacobian of fk_leg.
Eigen::Matrix<double, 3, Eigen::Dynamic> leg_jacobian(const LegGeometry& geom,
                                                       const JointVector& q);

/// Analytical IK for either leg type. Never throws for unreachable targets;
/// returns the clamped-reach fallback with reachable = false instead.
IkSolution solve_leg_ik(const LegGeometry& geom, const FootTarget& target);

/// Two-link closed form (abduction resolved first from the y-z projection).
/// Throws OutOfWorkspaceError for unreachable targets.
JointVector ik_3dof(const LegGeometry& geom, const FootTarget& target);

/// Three-link closed form with the foot joint coupled to the knee.
/// Throws OutOfWorkspaceError for unreachable targets.
JointVector ik_4dof(const LegGeometry& geom, const FootTarget& target);

/// Feet in the body frame, legs ordered FR, FL, RR, RL.
FeetPositions fk_all_feet(const RobotDescriptor& robot, const LegJoints& q_all);

}  // namespace quadcpg

#endif  // QUADCPG_KINEMATICS_H_
