#include <cmath>
#include <limits>

#include "doctest.h"
#include "quadcpg/pattern_formation.h"
#include "quadcpg/robot_registry.h"

using namespace quadcpg;

namespace {

PfParams a1_params() {
  PfParams p;
  p.height = 0.30;
  p.step_length = 0.13;
  p.clearance = 0.07;
  p.penetration = 0.01;
  p.x_offset = 0.0;
  return p;
}

OscillatorState at(double r, double theta) { return {r, 0.0, theta, 0.0}; }

}  // namespace

TEST_CASE("A1 swing apex and stance start") {
  const PfParams p = a1_params();
  const FootTarget apex = foot_target(at(1.0, kPi / 2.0), p);
  CHECK(apex.x() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(apex.z() == doctest::Approx(-0.23).epsilon(1e-15));

  // sin(0) = 0 is not > 0: stance branch
  CHECK_FALSE(in_swing(at(1.0, 0.0)));
  const FootTarget start = foot_target(at(1.0, 0.0), p);
  CHECK(start.x() == doctest::Approx(-0.13));
  CHECK(start.z() == doctest::Approx(-0.30));

  const FootTarget deepest = foot_target(at(1.0, 1.5 * kPi), p);
  CHECK(deepest.z() == doctest::Approx(-0.31));
}

TEST_CASE("zero amplitude pins x to the offset") {
  PfParams p = a1_params();
  p.x_offset = 0.037;
  for (int i = 0; i < 64; ++i) {
    const double th = kTwoPi * i / 64.0;
    CHECK(foot_target(at(0.0, th), p).x() == 0.037);
  }
}

TEST_CASE("z is continuous where the branch switches") {
  const PfParams p = a1_params();
  for (double th : {0.0, kPi, kTwoPi}) {
    const double eps = 1e-9;
    const double lo = foot_target(at(1.0, th - eps), p).z();
    const double hi = foot_target(at(1.0, th + eps), p).z();
    CHECK(std::abs(lo - hi) < 1e-10);
  }
}

TEST_CASE("for_leg signs y by side") {
  PfParams p = a1_params();
  p.y_nominal = 0.08;
  CHECK(p.for_leg(Leg::kFR).y_nominal == -0.08);
  CHECK(p.for_leg(Leg::kFL).y_nominal == 0.08);
  CHECK(p.for_leg(Leg::kRR).y_nominal == -0.08);
  CHECK(p.for_leg(Leg::kRL).y_nominal == 0.08);
  CHECK(foot_target(at(1.0, 0.3), p.for_leg(Leg::kRR)).y() == -0.08);
}

TEST_CASE("descriptor parameters come straight from the registry") {
  const auto& solo = pf_params_from_descriptor(RobotRegistry::builtin().get("Solo"));
  CHECK(solo.height == doctest::Approx(0.25));
  CHECK(solo.step_length == doctest::Approx(0.10));
  CHECK(solo.clearance == doctest::Approx(0.05));
  CHECK(solo.penetration == doctest::Approx(0.005));
  CHECK(solo.x_offset == doctest::Approx(0.037));

  const auto dog3 = pf_params_from_descriptor(RobotRegistry::builtin().get("Dog3"));
  CHECK(dog3.height == doctest::Approx(1.0));
  CHECK(dog3.step_length == doctest::Approx(0.36));
  CHECK(dog3.clearance == doctest::Approx(0.09));
  CHECK(dog3.penetration == doctest::Approx(0.02));
  CHECK(dog3.x_offset == 0.0);

  CHECK(pf_params_from_descriptor(RobotRegistry::builtin().get("Anymal-B")).penetration == 0.0);
}

TEST_CASE("invalid parameters") {
  PfParams p = a1_params();
  CHECK_NOTHROW(p.validate());
  p.height = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = a1_params();
  p.penetration = -0.01;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = a1_params();
  CHECK_THROWS_AS(foot_target(at(std::numeric_limits<double>::quiet_NaN(), 0.0), p),
                  DomainError);
}
