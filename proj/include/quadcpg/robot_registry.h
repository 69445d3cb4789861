#ifndef QUADCPG_ROBOT_REGISTRY_H_
#define QUADCPG_ROBOT_REGISTRY_H_

#include <array>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quadcpg/kinematics.h"
#include "quadcpg/pattern_formation.h"

namespace quadcpg {

// Numeric codes match the "DoF - Morphology" column of the robot table.
enum class Morphology {
  kElbowUpAll = 1,
  kElbowUpFrontDownHind = 2,
  kAnimalLike = 3,
};

std::string_view morphology_name(Morphology m);
int morphology_code(Morphology m);

/// One robot: table parameters (SI), leg geometry and PD gains.
struct RobotDescriptor {
  std::string name;
  double height_nominal = 0.0;  // m
  double mass = 0.0;            // kg
  int dof_total = 12;
  Morphology morphology = Morphology::kElbowUpAll;
  PfParams pf;
  std::array<LegGeometry, kNumLegs> legs{};
  double kp = 0.0;  // N m / rad
  double kd = 0.0;  // N m s / rad

  std::size_t dof_per_leg() const { return static_cast<std::size_t>(dof_total) / kNumLegs; }

  /// Throws RegistryError naming the robot and the offending field.
  void validate() const;
};

bool operator==(const RobotDescriptor& a, const RobotDescriptor& b);

/// PPO settings used to train the original policy. Stored for reference only;
/// nothing in this library trains a policy.
struct PpoHyperparameters {
  int batch_size = 98304;
  int minibatch_size = 24576;
  int epochs = 5;
  double clip_range = 0.2;
  double entropy_coefficient = 0.01;
  double discount_factor = 0.99;
  double gae_discount_factor = 0.95;
  double kl_target = 0.01;
  std::string learning_rate = "adaptive";
  std::vector<int> hidden_layers = {512, 256, 128};
  std::string activation = "elu";
  std::string framework = "Torch";

  bool operator==(const PpoHyperparameters&) const = default;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRobotError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Immutable after construction; safe to share across threads.
class RobotRegistry {
 public:
  RobotRegistry() = default;
  RobotRegistry(std::vector<RobotDescriptor> robots, PpoHyperparameters ppo);

  /// The sixteen compiled-in robots.
  static const RobotRegistry& builtin();

  /// Case-insensitive exact-name lookup. Throws UnknownRobotError listing
  /// the available names.
  const RobotDescriptor& get(std::string_view name) const;
  bool contains(std::string_view name) const;

  std::span<const RobotDescriptor> robots() const { return robots_; }
  std::size_t size() const { return robots_.size(); }
  const PpoHyperparameters& ppo() const { return ppo_; }

  /// Robots of `overlay` replace same-named robots here; new names are
  /// appended.
  RobotRegistry merged_with(const RobotRegistry& overlay) const;

 private:
  std::vector<RobotDescriptor> robots_;
  PpoHyperparameters ppo_;
};

/// Parses a registry document (JSON). `source` names the input in errors.
RobotRegistry parse_registry(std::string_view text, std::string_view source);

/// Writes a registry document in SI field names (`*_m`), which parse back to
/// field-identical descriptors.
std::string serialize_registry(const RobotRegistry& registry);

/// Built-in robots overlaid with the robots of the file at `path`.
RobotRegistry load_registry(const std::filesystem::path& path);

/// Convenience: the built-in registry, or built-ins overlaid with `path`
/// when it is non-empty.
RobotRegistry load_registry_or_builtin(const std::filesystem::path& path);

const RobotDescriptor& get_robot(const RobotRegistry& registry,
                                 std::string_view name);

/// Raw text of the compiled-in registry document (table units, cm).
std::string_view builtin_registry_text();

}  // namespace quadcpg

#endif  // QUADCPG_ROBOT_REGISTRY_H_
