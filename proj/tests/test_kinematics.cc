#include <cmath>
#include <random>

#include <Eigen/Geometry>

#include "doctest.h"
#include "quadcpg/environment.h"
#include "quadcpg/kinematics.h"
#include "quadcpg/robot_registry.h"

using namespace quadcpg;

namespace {

// Homogeneous-transform chain: abduction about x, lateral shift d, then each
// pitch joint about y followed by a link pointing down its local -z.
Eigen::Vector3d transform_chain(const LegGeometry& g, const JointVector& q) {
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  t.rotate(Eigen::AngleAxisd(q[0], Eigen::Vector3d::UnitX()));
  t.translate(Eigen::Vector3d(0.0, g.abd_offset, 0.0));
  for (std::size_t i = 0; i < g.num_links(); ++i) {
    t.rotate(Eigen::AngleAxisd(q[i + 1], Eigen::Vector3d::UnitY()));
    t.translate(Eigen::Vector3d(0.0, 0.0, -g.link_lengths[i]));
  }
  return t.translation();
}

LegGeometry leg3(KneeConfig knee, double d = 0.08) {
  LegGeometry g;
  g.abd_offset = d;
  g.link_lengths = {0.2, 0.2, 0.0};
  g.dof = 3;
  g.knee_config = knee;
  return g;
}

LegGeometry leg4(double ratio, double d = 0.06) {
  LegGeometry g;
  g.abd_offset = d;
  g.link_lengths = {0.16, 0.16, 0.10};
  g.dof = 4;
  g.foot_knee_ratio = ratio;
  g.knee_config = KneeConfig::kElbowUp;
  return g;
}

JointVector random_q(const LegGeometry& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> abd(-0.6, 0.6);
  std::uniform_real_distribution<double> hip(-1.2, 1.2);
  std::uniform_real_distribution<double> knee(0.05, kPi - 0.05);
  JointVector q(g.dof);
  q[0] = abd(rng);
  q[1] = hip(rng);
  q[2] = (g.knee_config == KneeConfig::kElbowUp ? -1.0 : 1.0) * knee(rng);
  if (g.dof == 4) q[3] = g.foot_knee_ratio * q[2];
  return q;
}

}  // namespace

TEST_CASE("straight leg") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  const FootTarget p = fk_leg(g, {0.0, 0.0, 0.0});
  CHECK(p.x() == 0.0);
  CHECK(p.y() == doctest::Approx(0.08));
  CHECK(p.z() == doctest::Approx(-0.4));
}

TEST_CASE("folded leg returns to the hip") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  const FootTarget p = fk_leg(g, {0.0, 0.0, kPi});
  CHECK(std::abs(p.x()) < 1e-15);
  CHECK(p.y() == doctest::Approx(0.08));
  CHECK(std::abs(p.z()) < 1e-15);
}

TEST_CASE("pitch convention: positive hip moves the foot backward") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  CHECK(fk_leg(g, {0.0, 0.3, 0.0}).x() < 0.0);
  CHECK(fk_leg(g, {0.3, 0.0, 0.0}).z() < -0.3);
}

TEST_CASE("FK matches the transform chain") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> any(-kPi, kPi);
  for (const LegGeometry& g :
       {leg3(KneeConfig::kElbowUp), leg3(KneeConfig::kElbowDown, -0.05), leg4(-0.5)}) {
    for (int i = 0; i < 1000; ++i) {
      JointVector q(g.dof);
      for (double& v : q.values()) v = any(rng);
      CHECK((fk_leg(g, q) - transform_chain(g, q)).norm() < 1e-12);
    }
  }
}

TEST_CASE("FK rejects a joint vector of the wrong size") {
  CHECK_THROWS_AS(fk_leg(leg3(KneeConfig::kElbowUp), {0.0, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(JointVector(5), DomainError);
}

TEST_CASE("full extension target gives zero joints") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  const JointVector q = ik_3dof(g, {0.0, 0.08, -0.4});
  for (double v : q.values()) CHECK(std::abs(v) < 1e-7);

  const LegGeometry g4 = leg4(-0.5);
  const JointVector q4 = ik_4dof(g4, {0.0, 0.06, -0.42});
  for (double v : q4.values()) CHECK(std::abs(v) < 1e-6);
}

TEST_CASE("IK recovers random elbow-up joints") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 10000) {
    const JointVector q = random_q(g, rng);
    // keep the foot below the hip so the abduction branch is unique
    if (-g.link_lengths[0] * std::cos(q[1]) - g.link_lengths[1] * std::cos(q[1] + q[2]) > -0.05)
      continue;
    const JointVector back = ik_3dof(g, fk_leg(g, q));
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(back[j] - q[j]) < 1e-9);
    ++checked;
  }
}

TEST_CASE("FK of IK reproduces the target for every leg type") {
  std::mt19937_64 rng(3);
  for (const LegGeometry& g :
       {leg3(KneeConfig::kElbowUp), leg3(KneeConfig::kElbowDown), leg4(-0.5), leg4(0.0),
        leg4(-1.0)}) {
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const FootTarget p = fk_leg(g, random_q(g, rng));
      const IkSolution s = solve_leg_ik(g, p);
      CHECK(s.reachable);
      worst = std::max(worst, (fk_leg(g, s.q) - p).norm());
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("elbow branches bend opposite ways to the same foot") {
  const FootTarget p(0.05, 0.08, -0.3);
  const JointVector up = ik_3dof(leg3(KneeConfig::kElbowUp), p);
  const JointVector down = ik_3dof(leg3(KneeConfig::kElbowDown), p);
  CHECK(up[2] < 0.0);
  CHECK(down[2] > 0.0);
  CHECK(up[2] == doctest::Approx(-down[2]));
  CHECK((fk_leg(leg3(KneeConfig::kElbowUp), up) - p).norm() < 1e-12);
  CHECK((fk_leg(leg3(KneeConfig::kElbowDown), down) - p).norm() < 1e-12);
}

TEST_CASE("4-DoF mirrored targets") {
  const LegGeometry g = leg4(-0.5);
  const JointVector a = ik_4dof(g, {0.07, 0.06, -0.3});
  const JointVector b = ik_4dof(g, {-0.07, 0.06, -0.3});
  CHECK(a[2] == doctest::Approx(b[2]));
  CHECK(a[3] == doctest::Approx(b[3]));
  CHECK(a[0] == doctest::Approx(b[0]));
  // hip angles mirror about the angle of the distal chain
  const Eigen::Vector3d chain = fk_leg(g, {0.0, 0.0, a[2], a[3]});
  const double beta = std::atan2(-chain.x(), -chain.z());
  CHECK(a[1] + beta == doctest::Approx(-(b[1] + beta)));
}

TEST_CASE("unreachable targets carry a clamped fallback") {
  const LegGeometry g = leg3(KneeConfig::kElbowUp);
  const FootTarget far(0.0, 0.08, -0.6);
  try {
    ik_3dof(g, far);
    FAIL("expected OutOfWorkspaceError");
  } catch (const OutOfWorkspaceError& e) {
    const FootTarget reached = fk_leg(g, e.fallback());
    CHECK(reached.z() == doctest::Approx(-0.4));
    CHECK(e.fallback().all_finite());
  }
  const IkSolution s = solve_leg_ik(g, far);
  CHECK_FALSE(s.reachable);
  CHECK(s.q.all_finite());

  CHECK_THROWS_AS(ik_4dof(leg4(-0.5), {0.0, 0.0, 0.0}), OutOfWorkspaceError);
  CHECK_THROWS_AS(ik_4dof(g, {0.0, 0.08, -0.3}), DomainError);
  CHECK_THROWS_AS(solve_leg_ik(g, {std::nan(""), 0.0, -0.3}), DomainError);
}

TEST_CASE("jacobian agrees with a perturbation of the transform chain") {
  const LegGeometry g = leg4(-0.5);
  const JointVector q{0.1, 0.4, -0.9, 0.45};
  const auto jac = leg_jacobian(g, q);
  for (std::size_t j = 0; j < 4; ++j) {
    JointVector p = q, m = q;
    p[j] += 1e-5;
    m[j] -= 1e-5;
    const Eigen::Vector3d col = (transform_chain(g, p) - transform_chain(g, m)) / 2e-5;
    CHECK((jac.col(static_cast<Eigen::Index>(j)) - col).norm() < 1e-7);
  }
}

TEST_CASE("whole-body FK") {
  const RobotDescriptor& a1 = RobotRegistry::builtin().get("A1");
  LegJoints zero;
  for (auto& q : zero) q = JointVector(3);
  const FeetPositions feet = fk_all_feet(a1, zero);
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    const auto& leg = a1.legs[i];
    CHECK(feet[i].x() == doctest::Approx(leg.hip_offset.x()));
    CHECK(feet[i].y() == doctest::Approx(leg.hip_offset.y() + leg.abd_offset));
    CHECK(feet[i].z() == doctest::Approx(-leg.max_reach()));
    CHECK((feet[i].y() > 0.0) == is_left(kAllLegs[i]));
  }

  const FeetPositions standing = fk_all_feet(a1, standing_joints(a1));
  for (const auto& f : standing) CHECK(f.z() == doctest::Approx(-0.30).epsilon(1e-9));

  std::mt19937_64 rng(5);
  LegJoints q;
  for (std::size_t i = 0; i < kNumLegs; ++i) q[i] = random_q(a1.legs[i], rng);
  const FeetPositions rnd = fk_all_feet(a1, q);
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    CHECK((rnd[i] - a1.legs[i].hip_offset - transform_chain(a1.legs[i], q[i])).norm() < 1e-12);
  }
}
