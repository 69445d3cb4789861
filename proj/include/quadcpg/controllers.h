#ifndef QUADCPG_CONTROLLERS_H_
#define QUADCPG_CONTROLLERS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quadcpg/environment.h"
#include "quadcpg/rollout_io.h"

namespace quadcpg {

/// Supraspinal controller contract: observation in, raw 8-vector action out.
/// The environment clamps whatever comes back. External learned policies
/// plug in here.
class PolicyAdapter {
 public:
  virtual ~PolicyAdapter() = default;

  virtual std::array<double, kActionSize> act(const Observation& observation) = 0;

  /// Oscillator phases the episode should start from.
  virtual std::array<double, kNumLegs> initial_phases() const { return kTrotPhases; }

  /// Called before each episode.
  virtual void reset() {}

  virtual std::string describe() const { return "policy"; }
};

/// Emits the same (mu, omega) for every limb at every step.
class ConstantCommandPolicy : public PolicyAdapter {
 public:
  /// Rejects mu outside [0.5, 4] or omega outside [0, 5] Hz with DomainError.
  ConstantCommandPolicy(double mu, double omega_hz,
                        std::array<double, kNumLegs> phases = kTrotPhases);

  std::array<double, kActionSize> act(const Observation& observation) override;
  std::array<double, kNumLegs> initial_phases() const override { return phases_; }
  std::string describe() const override;

  double mu() const { return mu_; }
  double omega() const { return omega_; }

 private:
  double mu_;
  double omega_;
  std::array<double, kNumLegs> phases_;
};

/// Constant-command trot: FR/RL against FL/RR, half a cycle apart.
ConstantCommandPolicy open_loop_trot(double mu, double omega_hz);

/// Resets `env` with the policy's phases and runs up to `steps` control
/// steps, stopping early when the episode ends.
RolloutRecord run_rollout(Environment& env, PolicyAdapter& policy, std::size_t steps,
                          std::uint64_t seed);

/// Episodic return of a shared constant command with trot phases.
double evaluate_constant_command(const RobotDescriptor& robot, double mu,
                                 double omega_hz, std::size_t horizon,
                                 std::uint64_t seed,
                                 const EnvironmentConfig& config = {});

struct SearchOptions {
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  std::size_t horizon = 300;  // control steps per evaluation
  unsigned threads = 1;
  EnvironmentConfig environment;
};

struct SearchSample {
  double mu = 0.0;
  double omega = 0.0;
  double episode_return = 0.0;
};

struct SearchResult {
  double best_mu = 0.0;
  double best_omega = 0.0;
  double best_return = 0.0;
  std::size_t best_index = 0;
  std::vector<SearchSample> samples;  // in sampling order
  std::vector<double> best_so_far;    // running maximum of the returns
};

/// Uniform random search over the clamped (mu, omega) box with shared
/// commands and trot phases. Samples are drawn serially from the seed, so the
/// result does not depend on `threads`; ties go to the lowest sample index.
SearchResult search_constant_command(const RobotDescriptor& robot,
                                     const SearchOptions& options);

std::string search_result_json(const std::string& robot, const SearchOptions& options,
                               const SearchResult& result);

}  // namespace quadcpg

#endif  // QUADCPG_CONTROLLERS_H_
