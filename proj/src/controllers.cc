#include "quadcpg/controllers.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace quadcpg {

ConstantCommandPolicy::ConstantCommandPolicy(double mu, double omega_hz,
                                             std::array<double, kNumLegs> phases)
    : mu_(mu), omega_(omega_hz), phases_(phases) {
  if (!(mu >= kMuMin && mu <= kMuMax)) {
    throw DomainError("constant command: mu " + format_double(mu) +
                      " outside [0.5, 4]");
  }
  if (!(omega_hz >= kOmegaMinHz && omega_hz <= kOmegaMaxHz)) {
    throw DomainError("constant command: omega " + format_double(omega_hz) +
                      " Hz outside [0, 5]");
  }
  for (double p : phases_) {
    if (!std::isfinite(p)) throw DomainError("constant command: non-finite phase");
  }
}

std::array<double, kActionSize> ConstantCommandPolicy::act(const Observation&) {
  std::array<double, kActionSize> a{};
  std::fill(a.begin(), a.begin() + kNumLegs, mu_);
  std::fill(a.begin() + kNumLegs, a.end(), omega_);
  return a;
}

std::string ConstantCommandPolicy::describe() const {
  std::ostringstream s;
  s << "constant(mu=" << format_double(mu_) << ", omega=" << format_double(omega_)
    << ", phases=[";
  for (std::size_t i = 0; i < kNumLegs; ++i) s << (i ? "," : "") << format_double(phases_[i]);
  s << "])";
  return s.str();
}

ConstantCommandPolicy open_loop_trot(double mu, double omega_hz) {
  return ConstantCommandPolicy(mu, omega_hz, kTrotPhases);
}

RolloutRecord run_rollout(Environment& env, PolicyAdapter& policy, std::size_t steps,
                          std::uint64_t seed) {
  RolloutRecord record;
  record.robot = env.robot().name;
  record.seed = seed;
  record.initial_phases = policy.initial_phases();
  record.rows.reserve(steps);

  policy.reset();
  Observation obs = env.reset(seed, record.initial_phases);
  for (std::size_t k = 0; k < steps; ++k) {
    const auto action = policy.act(obs);
    StepResult result = env.step(action);
    if (result.info.ik_fallback_substeps > 0) ++record.ik_fallback_steps;
    record.rows.push_back(make_row(env, result));
    obs = result.observation;
    if (result.done) {
      record.termination = result.info.termination;
      record.termination_step = k + 1;
      break;
    }
  }
  return record;
}

double evaluate_constant_command(const RobotDescriptor& robot, double mu,
                                 double omega_hz, std::size_t horizon,
                                 std::uint64_t seed, const EnvironmentConfig& config) {
  Environment env(robot, config);
  ConstantCommandPolicy policy(mu, omega_hz);
  Observation obs = env.reset(seed, policy.initial_phases());
  double total = 0.0;
  for (std::size_t k = 0; k < horizon; ++k) {
    StepResult r = env.step(policy.act(obs));
    total += r.reward;
    obs = r.observation;
    if (r.done) break;
  }
  return total;
}

namespace {

// Portable uniform draw in [0, 1): the engine sequence is fixed by the
// standard, std::uniform_real_distribution is not.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SearchResult search_constant_command(const RobotDescriptor& robot,
                                     const SearchOptions& options) {
  if (options.budget < 1) throw DomainError("search: budget must be >= 1");
  options.environment.validate();

  SearchResult result;
  std::mt19937_64 rng(options.seed);
  result.samples.resize(options.budget);
  for (auto& s : result.samples) {
    s.mu = kMuMin + (kMuMax - kMuMin) * unit_uniform(rng);
    s.omega = kOmegaMinHz + (kOmegaMaxHz - kOmegaMinHz) * unit_uniform(rng);
  }

  auto evaluate = [&](std::size_t i) {
    auto& s = result.samples[i];
    s.episode_return = evaluate_constant_command(robot, s.mu, s.omega, options.horizon,
                                                 options.seed, options.environment);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(
                                            options.threads,
                                            static_cast<unsigned>(options.budget)));
  if (threads == 1) {
    for (std::size_t i = 0; i < options.budget; ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < options.budget; i = next++) evaluate(i);
      });
    }
  }

  result.best_so_far.reserve(options.budget);
  for (std::size_t i = 0; i < options.budget; ++i) {
    if (i == 0 || result.samples[i].episode_return > result.best_return) {
      result.best_return = result.samples[i].episode_return;
      result.best_index = i;
    }
    result.best_so_far.push_back(result.best_return);
  }
  result.best_mu = result.samples[result.best_index].mu;
  result.best_omega = result.samples[result.best_index].omega;
  return result;
}

std::string search_result_json(const std::string& robot, const SearchOptions& options,
                               const SearchResult& result) {
  using nlohmann::json;
  json samples = json::array();
  for (const auto& s : result.samples) {
    samples.push_back({{"mu", s.mu}, {"omega", s.omega}, {"return", s.episode_return}});
  }
  json doc = {{"schema", "quadcpg-search/1"},
              {"robot", robot},
              {"seed", options.seed},
              {"budget", options.budget},
              {"horizon", options.horizon},
              {"argmax",
               {{"index", result.best_index},
                {"mu", result.best_mu},
                {"omega", result.best_omega},
                {"return", result.best_return}}},
              {"best_so_far", result.best_so_far},
              {"samples", samples}};
  return doc.dump(2) + "\n";
}

}  // namespace quadcpg
