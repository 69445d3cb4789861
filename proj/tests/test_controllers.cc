#include <cmath>

#include "doctest.h"
#include "quadcpg/controllers.h"
#include "quadcpg/robot_registry.h"

using namespace quadcpg;

namespace {

const RobotDescriptor& robot(std::string_view name) { return RobotRegistry::builtin().get(name); }

struct GridBest {
  double mu = 0.0;
  double omega = 0.0;
  double value = -1e300;
};

// Dense grid over the clamped box, both edges included.
GridBest grid_search(const RobotDescriptor& r, int n, std::size_t horizon) {
  GridBest best;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double mu = kMuMin + (kMuMax - kMuMin) * i / (n - 1);
      const double omega = kOmegaMinHz + (kOmegaMaxHz - kOmegaMinHz) * j / (n - 1);
      const double v = evaluate_constant_command(r, mu, omega, horizon, 0);
      if (v > best.value) best = {mu, omega, v};
    }
  }
  return best;
}

}  // namespace

TEST_CASE("constant command policy") {
  ConstantCommandPolicy p(1.5, 2.0);
  const auto a = p.act(Observation{});
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    CHECK(a[i] == 1.5);
    CHECK(a[i + kNumLegs] == 2.0);
  }
  CHECK(p.initial_phases() == kTrotPhases);
  CHECK(p.describe().find("mu=1.5") != std::string::npos);

  CHECK_THROWS_AS(ConstantCommandPolicy(0.4, 1.0), DomainError);
  CHECK_THROWS_AS(ConstantCommandPolicy(1.0, 5.5), DomainError);
  CHECK_THROWS_AS(ConstantCommandPolicy(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(ConstantCommandPolicy(std::nan(""), 1.0), DomainError);
  CHECK_NOTHROW(ConstantCommandPolicy(0.5, 0.0));
  CHECK_NOTHROW(ConstantCommandPolicy(4.0, 5.0));
}

TEST_CASE("open-loop trot on A1") {
  Environment env(robot("A1"));
  auto policy = open_loop_trot(1.0, 2.5);
  const RolloutRecord rec = run_rollout(env, policy, 300, 0);
  REQUIRE(rec.rows.size() == 300);
  const double x1 = rec.rows[99].base_position.x();
  const double x3 = rec.rows.back().base_position.x();
  CHECK((x3 - x1) / 2.0 == doctest::Approx(1.30).epsilon(0.03));
}

TEST_CASE("zero frequency stands still") {
  Environment env(robot("Laikago"));
  ConstantCommandPolicy policy(1.0, 0.0);
  const RolloutRecord rec = run_rollout(env, policy, 200, 0);
  CHECK(std::abs(rec.rows.back().base_position.x()) < 1e-12);
  // only the power penalty of the feet settling onto the stance line remains
  const double ret = evaluate_constant_command(robot("Laikago"), 1.0, 0.0, 200, 0);
  CHECK(ret <= 0.0);
  CHECK(ret > -0.01);
}

TEST_CASE("early termination is recorded") {
  Environment env(robot("A1"));
  ConstantCommandPolicy policy(1.0, 0.5, {0.0, 0.0, 0.0, kPi});
  const RolloutRecord rec = run_rollout(env, policy, 1000, 0);
  REQUIRE(rec.termination_step.has_value());
  CHECK(*rec.termination_step == rec.rows.size());
  CHECK(rec.termination == Termination::kFall);
}

TEST_CASE("search basics") {
  SearchOptions opt;
  opt.horizon = 50;
  SUBCASE("budget of one") {
    opt.budget = 1;
    const SearchResult r = search_constant_command(robot("A1"), opt);
    REQUIRE(r.samples.size() == 1);
    CHECK(r.best_index == 0);
    CHECK(r.best_mu == r.samples[0].mu);
    CHECK(r.best_omega == r.samples[0].omega);
    CHECK(r.best_return == r.samples[0].episode_return);
  }
  SUBCASE("zero budget") {
    opt.budget = 0;
    CHECK_THROWS_AS(search_constant_command(robot("A1"), opt), DomainError);
  }
  SUBCASE("deterministic and independent of the thread count") {
    opt.budget = 24;
    opt.seed = 9;
    const SearchResult a = search_constant_command(robot("A1"), opt);
    const SearchResult b = search_constant_command(robot("A1"), opt);
    opt.threads = 4;
    const SearchResult c = search_constant_command(robot("A1"), opt);
    for (const SearchResult* other : {&b, &c}) {
      CHECK(other->best_index == a.best_index);
      CHECK(other->best_return == a.best_return);
      for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(other->samples[i].mu == a.samples[i].mu);
        CHECK(other->samples[i].episode_return == a.samples[i].episode_return);
      }
    }
    for (const auto& s : a.samples) {
      CHECK(s.mu >= kMuMin);
      CHECK(s.mu < kMuMax);
      CHECK(s.omega >= kOmegaMinHz);
      CHECK(s.omega < kOmegaMaxHz);
    }
    for (std::size_t i = 1; i < a.best_so_far.size(); ++i) {
      CHECK(a.best_so_far[i] >= a.best_so_far[i - 1]);
    }
    CHECK(a.best_so_far.back() == a.best_return);
  }
  SUBCASE("json") {
    opt.budget = 3;
    const SearchResult r = search_constant_command(robot("A1"), opt);
    const std::string j = search_result_json("A1", opt, r);
    CHECK(j.find("\"schema\": \"quadcpg-search/1\"") != std::string::npos);
    CHECK(j.find("\"argmax\"") != std::string::npos);
  }
}

TEST_CASE("random search against a dense grid") {
  const RobotDescriptor& a1 = robot("A1");
  SearchOptions opt;
  opt.budget = 200;
  const SearchResult r = search_constant_command(a1, opt);
  const GridBest g = grid_search(a1, 50, opt.horizon);
  MESSAGE("search best (mu=", r.best_mu, ", omega=", r.best_omega, ") = ", r.best_return,
          "; grid best (mu=", g.mu, ", omega=", g.omega, ") = ", g.value);
  CHECK(r.best_return >= 0.95 * g.value);
  CHECK(r.best_return <= g.value * 1.05);
  CHECK(r.best_omega == doctest::Approx(g.omega).epsilon(0.10));
}
