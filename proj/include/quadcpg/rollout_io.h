#ifndef QUADCPG_ROLLOUT_IO_H_
#define QUADCPG_ROLLOUT_IO_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "quadcpg/environment.h"

namespace quadcpg {

inline constexpr std::string_view kRolloutSchema = "quadcpg-rollout/1";
inline constexpr std::string_view kTrajectorySchema = "quadcpg-trajectory/1";

/// One control step of a rollout.
struct RolloutRow {
  double t = 0.0;
  Eigen::Vector3d base_position = Eigen::Vector3d::Zero();
  Eigen::Vector3d base_rpy = Eigen::Vector3d::Zero();
  Eigen::Vector3d base_lin_vel = Eigen::Vector3d::Zero();  // world frame
  std::array<double, kNumLegs> r{};
  std::array<double, kNumLegs> theta{};
  std::array<double, kNumLegs> mu{};
  std::array<double, kNumLegs> omega{};
  FeetPositions foot_targets{};  // hip frame
  std::array<bool, kNumLegs> contacts{};
  RewardTerms reward;
};

struct RolloutRecord {
  std::string robot;
  std::uint64_t seed = 0;
  std::array<double, kNumLegs> initial_phases = kTrotPhases;
  std::vector<RolloutRow> rows;
  Termination termination = Termination::kNone;
  std::optional<std::size_t> termination_step;  // 1-based control step
  std::size_t ik_fallback_steps = 0;
};

struct RolloutSummary {
  std::size_t steps = 0;
  double duration = 0.0;
  double mean_velocity = 0.0;  // forward displacement / duration
  double mean_reward = 0.0;
  double mean_forward_term = 0.0;
  double mean_orientation_term = 0.0;
  double mean_power_term = 0.0;
  double total_return = 0.0;
};

RolloutSummary summarize(const RolloutRecord& record);

/// Snapshot of the environment after a step, for the record.
RolloutRow make_row(const Environment& env, const StepResult& step);

/// Column names of the rollout CSV, in file order.
const std::vector<std::string>& rollout_columns();

/// A parsed CSV: header plus numeric rows.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Index of `name`; throws ParseError naming the column when absent.
  std::size_t column(std::string_view name) const;
  std::vector<double> values(std::string_view name) const;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numbers are written in shortest round-trip form; output is byte-identical
/// for identical records.
void write_rollout_csv(std::ostream& out, const RolloutRecord& record);

/// Reads any CSV produced by this library (lines starting with '#' skipped).
CsvTable read_csv(std::istream& in);

/// Rebuilds the row data of a rollout CSV; metadata fields stay defaulted.
RolloutRecord rollout_from_table(const CsvTable& table);

/// JSON manifest: schema, robot, seed, phases, config and its hash, summary.
std::string rollout_manifest_json(const RolloutRecord& record,
                                  const EnvironmentConfig& config,
                                  const std::string& controller);

/// JSON document holding the manifest plus all rows (columns + data).
std::string rollout_json(const RolloutRecord& record, const EnvironmentConfig& config,
                         const std::string& controller);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view data);

/// Open-loop rhythm generator + pattern formation sample (no body).
struct TrajectorySample {
  double t = 0.0;
  std::array<double, kNumLegs> r{};
  std::array<double, kNumLegs> theta{};
  FeetPositions feet{};  // hip frame
};

/// Integrates the oscillators at cpg.dt_integration with a constant command
/// and records every `sample_dt`.
std::vector<TrajectorySample> generate_trajectory(
    const RobotDescriptor& robot, double mu, double omega_hz, double duration,
    std::span<const double, kNumLegs> initial_phases, const CpgConfig& cpg,
    double sample_dt = 0.01);

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples);
std::string trajectory_json(const std::string& robot,
                            const std::vector<TrajectorySample>& samples);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace quadcpg

#endif  // QUADCPG_ROLLOUT_IO_H_
