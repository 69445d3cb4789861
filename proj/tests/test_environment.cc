#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "quadcpg/environment.h"
#include "quadcpg/kinematic_backend.h"
#include "quadcpg/robot_registry.h"

using namespace quadcpg;

namespace {

const RobotDescriptor& robot(std::string_view name) { return RobotRegistry::builtin().get(name); }

std::array<double, kActionSize> shared(double mu, double omega) {
  std::array<double, kActionSize> a{};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    a[i] = mu;
    a[i + kNumLegs] = omega;
  }
  return a;
}

}  // namespace

TEST_CASE("observation layout") {
  for (const auto& r : RobotRegistry::builtin().robots()) {
    Environment env(r);
    const Observation obs = env.reset(0);
    CHECK(obs.to_vector().size() == kObservationSize);
    CHECK(kObservationSize == 49);
    CHECK(kActionSize == 8);
  }

  Environment env(robot("A1"));
  const Observation obs = env.reset(0);
  for (const auto& f : obs.feet_positions) CHECK(f.z() == doctest::Approx(-0.30).epsilon(1e-9));
  for (bool c : obs.foot_contacts) CHECK(c);

  const auto v = obs.to_vector();
  CHECK(v[9] == 1.0);                       // first contact flag
  CHECK(v[13 + 2] == obs.feet_positions[0].z());
  CHECK(v[33 + 2] == obs.cpg[0].theta);     // cpg block after prev action
  CHECK(v[33 + 4 + 2] == doctest::Approx(kPi));
}

TEST_CASE("reset is deterministic") {
  Environment a(robot("Go1"));
  Environment b(robot("Go1"));
  CHECK(a.reset(42).to_vector() == b.reset(42).to_vector());
  for (int i = 0; i < 30; ++i) {
    const auto ra = a.step(shared(1.3, 2.0));
    const auto rb = b.step(shared(1.3, 2.0));
    CHECK(ra.observation.to_vector() == rb.observation.to_vector());
    CHECK(ra.reward == rb.reward);
  }
}

TEST_CASE("reward") {
  const std::vector<double> zero(12, 0.0);
  SUBCASE("worked example") {
    // |tau . dq| = 2 from a single joint
    std::vector<double> tau(12, 0.0), dq(12, 0.0);
    tau[4] = 4.0;
    dq[4] = -0.5;
    const RewardTerms t =
        compute_reward(0.02, 0.015, Eigen::Vector3d(0.1, 0.0, 0.0), tau, dq, zero);
    CHECK(t.forward_progress == 0.015);
    CHECK(t.power == 2.0);
    CHECK(t.total == doctest::Approx(0.09498).epsilon(1e-12));
    CHECK(t.total == t.forward_term + t.orientation_term + t.power_term);
  }
  SUBCASE("all zero") {
    CHECK(compute_reward(0.0, 0.015, Eigen::Vector3d::Zero(), zero, zero, zero).total == 0.0);
  }
  SUBCASE("clip boundary") {
    const RewardTerms t = compute_reward(0.015, 0.015, Eigen::Vector3d::Zero(), zero, zero, zero);
    CHECK(t.forward_term == 8.0 * 0.015);
    CHECK(compute_reward(1.0, 0.015, Eigen::Vector3d::Zero(), zero, zero, zero).forward_term ==
          8.0 * 0.015);
  }
  SUBCASE("backward motion is not clipped from below") {
    CHECK(compute_reward(-0.01, 0.015, Eigen::Vector3d::Zero(), zero, zero, zero).total ==
          doctest::Approx(-0.08));
  }
  SUBCASE("length mismatch") {
    const std::vector<double> sixteen(16, 0.0);
    CHECK_THROWS_AS(compute_reward(0.0, 0.015, Eigen::Vector3d::Zero(), zero, sixteen, zero),
                    DomainError);
  }
}

TEST_CASE("omega = 0 gives no motion") {
  Environment env(robot("A1"));
  env.reset(1);
  for (int i = 0; i < 50; ++i) {
    const StepResult r = env.step(shared(1.0, 0.0));
    CHECK(r.info.reward.forward_progress == doctest::Approx(0.0).epsilon(1e-15));
  }
  CHECK(std::abs(env.backend_state().base_position.x()) < 1e-12);
}

TEST_CASE("step contract") {
  Environment env(robot("A1"));
  CHECK_THROWS_AS(env.step(shared(1.0, 1.0)), std::logic_error);
  env.reset(0);
  auto bad = shared(1.0, 1.0);
  bad[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(env.step(bad), DomainError);
  const std::vector<double> short_action(5, 1.0);
  CHECK_THROWS_AS(env.step(short_action), DomainError);

  const StepResult r = env.step(shared(9.0, -3.0));
  CHECK(r.observation.prev_action[0] == 4.0);
  CHECK(r.observation.prev_action[4] == 0.0);
  CHECK(r.info.substeps == 10);
  CHECK(r.info.sim_time == doctest::Approx(0.01));
}

TEST_CASE("trot keeps two feet down and swings the other pair") {
  Environment env(robot("A1"));
  env.reset(0);
  for (int i = 0; i < 120; ++i) env.step(shared(1.0, 2.5));
  for (int i = 0; i < 40; ++i) {
    const StepResult r = env.step(shared(1.0, 2.5));
    const auto& cpg = env.cpg_state();
    const auto& s = env.backend_state();
    for (std::size_t leg = 0; leg < kNumLegs; ++leg) {
      const double foot_z = s.base_position.z() + r.observation.feet_positions[leg].z();
      if (std::sin(cpg[leg].theta) > 1e-3) {
        CHECK_FALSE(s.contacts[leg]);
        CHECK(foot_z > 0.0);
      }
    }
    CHECK(r.info.ik_fallback_substeps == 0);
    CHECK_FALSE(r.done);
  }
}

TEST_CASE("kinematic backend anchoring") {
  const RobotDescriptor& a1 = robot("A1");
  KinematicBackend backend;
  backend.reset(a1, standing_joints(a1), 0);
  for (bool c : backend.state().contacts) CHECK(c);
  const double z0 = backend.state().base_position.z();
  CHECK(z0 == doctest::Approx(0.30));

  SUBCASE("static feet") {
    for (int i = 0; i < 100; ++i) backend.advance_feet(backend.commanded_feet(), 1e-3);
    CHECK(backend.state().base_lin_vel.norm() < 1e-15);
    CHECK(backend.state().base_position.x() == 0.0);
  }
  SUBCASE("one stance pair sweeping backward") {
    const double v = 0.8, dt = 1e-3;
    FeetPositions feet = backend.commanded_feet();
    // lift FL and RR
    feet[1].z() += 0.03;
    feet[2].z() += 0.03;
    backend.advance_feet(feet, dt);
    CHECK_FALSE(backend.state().contacts[1]);
    CHECK(backend.state().contacts[0]);
    for (int i = 0; i < 20; ++i) {
      feet[0].x() -= v * dt;
      feet[3].x() -= v * dt;
      const double x_before = backend.state().base_position.x();
      backend.advance_feet(feet, dt);
      CHECK(backend.state().base_lin_vel.x() == doctest::Approx(v).epsilon(1e-12));
      CHECK(backend.state().base_position.x() - x_before == doctest::Approx(v * dt).epsilon(1e-9));
    }
  }
  SUBCASE("no support means ballistic height") {
    FeetPositions feet = backend.commanded_feet();
    for (auto& f : feet) f.z() += 0.05;
    backend.advance_feet(feet, 1e-3);
    double vz = backend.state().base_lin_vel.z();
    backend.advance_feet(feet, 1e-3);
    CHECK(backend.state().base_lin_vel.z() == doctest::Approx(vz - kGravity * 1e-3));
  }
}

TEST_CASE("one trot cycle covers 4 L_step r") {
  // Displacement per cycle: two stance half-cycles, each sweeping 2 L_step r.
  const RobotDescriptor& a1 = robot("A1");
  Environment env(a1);
  env.reset(0);
  const double f = 2.0;
  for (int i = 0; i < 100; ++i) env.step(shared(1.0, f));
  const double r = env.cpg_state()[0].r;
  const double x0 = env.backend_state().base_position.x();
  for (int i = 0; i < 50; ++i) env.step(shared(1.0, f));  // 1 / f seconds
  const double dx = env.backend_state().base_position.x() - x0;
  CHECK(dx == doctest::Approx(4.0 * a1.pf.step_length * r).epsilon(0.02));
}

TEST_CASE("stance fraction per limb") {
  Environment env(robot("Solo"));
  env.reset(0);
  std::array<std::size_t, kNumLegs> stance{};
  std::size_t total = 0;
  for (int i = 0; i < 100; ++i) env.step(shared(1.0, 2.0));
  for (int i = 0; i < 300; ++i) {
    const StepResult r = env.step(shared(1.0, 2.0));
    for (std::size_t k = 0; k < kNumLegs; ++k) stance[k] += r.info.stance_substeps[k];
    total += r.info.substeps;
  }
  for (std::size_t s : stance) {
    CHECK(static_cast<double>(s) / static_cast<double>(total) == doctest::Approx(0.5).epsilon(0.02));
  }
}

TEST_CASE("falls are reported") {
  // three feet in phase and one opposite: single support half the cycle
  Environment env(robot("A1"));
  const std::array<double, 4> phases = {0.0, 0.0, 0.0, kPi};
  env.reset(0, phases);
  bool done = false;
  for (int i = 0; i < 1000 && !done; ++i) done = env.step(shared(1.0, 0.5)).done;
  CHECK(done);
  CHECK(env.done());
  CHECK_THROWS_AS(env.step(shared(1.0, 0.5)), std::logic_error);
}

TEST_CASE("power term is active during a gait") {
  Environment env(robot("A1"));
  env.reset(0);
  double power = 0.0;
  for (int i = 0; i < 100; ++i) power += env.step(shared(1.0, 2.5)).info.reward.power;
  CHECK(power > 0.0);
}

TEST_CASE("config validation") {
  EnvironmentConfig cfg;
  cfg.dt_control = 0.0105;
  CHECK_THROWS_AS(Environment(robot("A1"), cfg), DomainError);
  cfg = {};
  CHECK(cfg.substeps() == 10);
  CHECK(cfg.d_max() == doctest::Approx(0.015));
}
