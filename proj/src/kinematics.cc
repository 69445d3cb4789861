#include "quadcpg/kinematics.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "quadcpg/robot_registry.h"

namespace quadcpg {

namespace {

constexpr double kReachTolerance = 1e-9;  // m

double knee_sign(KneeConfig config) {
  return config == KneeConfig::kElbowUp ? -1.0 : 1.0;
}

// Effective two-link lengths for the 4-DoF ratios that collapse exactly.
struct TwoLink {
  double upper;
  double lower;
};

TwoLink collapsed_links(const LegGeometry& g) {
  const auto& l = g.link_lengths;
  if (g.foot_knee_ratio == 0.0) return {l[0], l[1] + l[2]};
  return {l[0] + l[2], l[1]};  // ratio -1: distal link parallel to the thigh
}

// Leg-plane foot position relative to the hip pitch joint, after the hip
// rotation is removed (i.e. with hip = 0).
Eigen::Vector2d distal_chain(const LegGeometry& g, double knee) {
  const auto& l = g.link_lengths;
  double x = -l[1] * std::sin(knee);
  double z = -l[0] - l[1] * std::cos(knee);
  if (g.dof == 4) {
    const double foot_abs = (1.0 + g.foot_knee_ratio) * knee;
    x -= l[2] * std::sin(foot_abs);
    z -= l[2] * std::cos(foot_abs);
  }
  return {x, z};
}

struct PlanarTarget {
  double x;
  double leg_length;  // distance below the hip in the leg plane, >= 0
  double abduction;
  bool reachable;
};

PlanarTarget resolve_abduction(const LegGeometry& g, const FootTarget& p) {
  const double d = g.abd_offset;
  const double rho_sq = p.y() * p.y() + p.z() * p.z();
  const double lp_sq = rho_sq - d * d;
  bool reachable = true;
  double lp = 0.0;
  if (lp_sq < 0.0) {
    reachable = std::sqrt(rho_sq) >= std::abs(d) - kReachTolerance;
  } else {
    lp = std::sqrt(lp_sq);
  }
  // (y, z) = Rx(q0) * (d, -lp)
  double q0 = std::atan2(p.z(), p.y()) - std::atan2(-lp, d);
  q0 = std::remainder(q0, kTwoPi);
  return {p.x(), lp, q0, reachable};
}

// Knee angle from the planar hip-to-foot distance. Returns the clamped value
// and whether clamping was needed.
std::pair<double, bool> solve_knee(const LegGeometry& g, double dist) {
  const double lo = g.min_reach();
  const double hi = g.max_reach();
  const bool reachable =
      dist >= lo - kReachTolerance && dist <= hi + kReachTolerance;
  const double d = std::clamp(dist, lo, hi);
  const double sign = knee_sign(g.knee_config);
  const auto& l = g.link_lengths;

  double magnitude = 0.0;
  if (g.dof == 3 || g.foot_knee_ratio != -0.5) {
    const TwoLink tl =
        g.dof == 3 ? TwoLink{l[0], l[1]} : collapsed_links(g);
    const double c = (d * d - tl.upper * tl.upper - tl.lower * tl.lower) /
                     (2.0 * tl.upper * tl.lower);
    magnitude = std::acos(std::clamp(c, -1.0, 1.0));
  } else {
    // |p|^2 = l1^2 + l2^2 + l3^2 - 2 l1 l2 + 4 l1 l2 u^2 + 2 l3 (l1 + l2) u,
    // u = cos(knee / 2) in [0, 1]; increasing in u, so one admissible root.
    const double a = 4.0 * l[0] * l[1];
    const double b = 2.0 * l[2] * (l[0] + l[1]);
    const double c = l[0] * l[0] + l[1] * l[1] + l[2] * l[2] -
                     2.0 * l[0] * l[1] - d * d;
    const double disc = std::max(b * b - 4.0 * a * c, 0.0);
    // Numerically stable form of (-b + sqrt(disc)) / (2a) for c <= 0.
    const double u = (-2.0 * c) / (b + std::sqrt(disc));
    magnitude = 2.0 * std::acos(std::clamp(u, 0.0, 1.0));
  }
  return {sign * magnitude, reachable};
}

IkSolution solve(const LegGeometry& g, const FootTarget& target) {
  if (!target.allFinite()) {
    throw DomainError("leg IK: non-finite target");
  }
  const PlanarTarget pt = resolve_abduction(g, target);
  const double dist = std::hypot(pt.x, pt.leg_length);
  const auto [knee, knee_ok] = solve_knee(g, dist);

  // Direction of the foot from straight down (positive backward), minus the
  // same angle of the distal chain with hip = 0.
  const double phi = std::atan2(-pt.x, pt.leg_length);
  const Eigen::Vector2d local = distal_chain(g, knee);
  const double beta = std::atan2(-local.x(), -local.y());
  const double hip = phi - beta;

  IkSolution sol;
  sol.q = JointVector(g.dof);
  sol.q[0] = pt.abduction;
  sol.q[1] = hip;
  sol.q[2] = knee;
  if (g.dof == 4) sol.q[3] = g.foot_knee_ratio * knee;
  sol.reachable = pt.reachable && knee_ok;
  return sol;
}

[[noreturn]] void throw_out_of_workspace(const LegGeometry& g,
                                         const FootTarget& target,
                                         const JointVector& fallback) {
  std::ostringstream msg;
  msg << "target (" << target.x() << ", " << target.y() << ", " << target.z()
      << ") outside the leg workspace (reach " << g.min_reach() << " .. "
      << g.max_reach() << " m, lateral offset " << g.abd_offset << " m)";
  throw OutOfWorkspaceError(msg.str(), fallback);
}

}  // namespace

JointVector::JointVector(std::size_t dof) : size_(dof) {
  if (dof != 3 && dof != 4) {
    throw DomainError("JointVector: dof must be 3 or 4, got " +
                      std::to_string(dof));
  }
}

JointVector::JointVector(std::initializer_list<double> values)
    : JointVector(values.size()) {
  std::copy(values.begin(), values.end(), values_.begin());
}

bool JointVector::all_finite() const {
  return std::all_of(values_.begin(), values_.begin() + size_,
                     [](double v) { return std::isfinite(v); });
}

bool JointVector::operator==(const JointVector& other) const {
  return size_ == other.size_ &&
         std::equal(values_.begin(), values_.begin() + size_,
                    other.values_.begin());
}

double LegGeometry::max_reach() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < num_links(); ++i) sum += link_lengths[i];
  return sum;
}

double LegGeometry::min_reach() const {
  const auto& l = link_lengths;
  if (dof == 3) return std::abs(l[0] - l[1]);
  if (foot_knee_ratio == -0.5) return std::hypot(l[0] - l[1], l[2]);
  const TwoLink tl = collapsed_links(*this);
  return std::abs(tl.upper - tl.lower);
}

void LegGeometry::validate() const {
  if (dof != 3 && dof != 4) {
    throw DomainError("LegGeometry: dof must be 3 or 4");
  }
  for (std::size_t i = 0; i < num_links(); ++i) {
    if (!(link_lengths[i] > 0.0) || !std::isfinite(link_lengths[i])) {
      throw DomainError("LegGeometry: link lengths must be > 0");
    }
  }
  if (!hip_offset.allFinite() || !std::isfinite(abd_offset)) {
    throw DomainError("LegGeometry: offsets must be finite");
  }
  if (dof == 4 && foot_knee_ratio != 0.0 && foot_knee_ratio != -0.5 &&
      foot_knee_ratio != -1.0) {
    throw DomainError(
        "LegGeometry: foot_knee_ratio must be 0, -0.5 or -1 (closed-form "
        "cases)");
  }
}

FootTarget fk_leg(const LegGeometry& geom, const JointVector& q) {
  if (q.size() != geom.dof) {
    throw DomainError("fk_leg: joint vector has " + std::to_string(q.size()) +
                      " entries, leg has " + std::to_string(geom.dof) +
                      " DoF");
  }
  double x = 0.0;
  double zp = 0.0;
  double angle = 0.0;
  for (std::size_t i = 0; i < geom.num_links(); ++i) {
    angle += q[i + 1];
    x -= geom.link_lengths[i] * std::sin(angle);
    zp -= geom.link_lengths[i] * std::cos(angle);
  }
  const double d = geom.abd_offset;
  const double c0 = std::cos(q[0]);
  const double s0 = std::sin(q[0]);
  return {x, d * c0 - zp * s0, d * s0 + zp * c0};
}

Eigen::Matrix<double, 3, Eigen::Dynamic> leg_jacobian(const LegGeometry& geom,
                                                       const JointVector& q) {
  constexpr double kStep = 1e-6;
  Eigen::Matrix<double, 3, Eigen::Dynamic> jac(3, geom.dof);
  for (std::size_t j = 0; j < geom.dof; ++j) {
    JointVector plus = q;
    JointVector minus = q;
    plus[j] += kStep;
    minus[j] -= kStep;
    jac.col(static_cast<Eigen::Index>(j)) =
        (fk_leg(geom, plus) - fk_leg(geom, minus)) / (2.0 * kStep);
  }
  return jac;
}

IkSolution solve_leg_ik(const LegGeometry& geom, const FootTarget& target) {
  return solve(geom, target);
}

JointVector ik_3dof(const LegGeometry& geom, const FootTarget& target) {
  if (geom.dof != 3) throw DomainError("ik_3dof: leg is not 3-DoF");
  IkSolution sol = solve(geom, target);
  if (!sol.reachable) throw_out_of_workspace(geom, target, sol.q);
  return sol.q;
}

JointVector ik_4dof(const LegGeometry& geom, const FootTarget& target) {
  if (geom.dof != 4) throw DomainError("ik_4dof: leg is not 4-DoF");
  IkSolution sol = solve(geom, target);
  if (!sol.reachable) throw_out_of_workspace(geom, target, sol.q);
  return sol.q;
}

FeetPositions fk_all_feet(const RobotDescriptor& robot, const LegJoints& q_all) {
  FeetPositions feet{};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    feet[i] = robot.legs[i].hip_offset + fk_leg(robot.legs[i], q_all[i]);
  }
  return feet;
}

}  // namespace quadcpg
