#ifndef QUADCPG_COMMON_H_
#define QUADCPG_COMMON_H_

#include <array>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadcpg {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kGravity = 9.81;

inline constexpr std::size_t kNumLegs = 4;

// Leg order is fixed everywhere (actions, observations, CSV columns).
enum class Leg : std::size_t { kFR = 0, kFL = 1, kRR = 2, kRL = 3 };

inline constexpr std::array<Leg, kNumLegs> kAllLegs = {Leg::kFR, Leg::kFL,
                                                      Leg::kRR, Leg::kRL};
inline constexpr std::array<std::string_view, kNumLegs> kLegNames = {
    "FR", "FL", "RR", "RL"};

constexpr std::size_t index(Leg leg) { return static_cast<std::size_t>(leg); }
constexpr bool is_front(Leg leg) { return leg == Leg::kFR || leg == Leg::kFL; }
constexpr bool is_left(Leg leg) { return leg == Leg::kFL || leg == Leg::kRL; }

// FR/RL in phase, FL/RR offset by half a cycle.
inline constexpr std::array<double, kNumLegs> kTrotPhases = {0.0, kPi, kPi,
                                                            0.0};

/// Invalid numerical input (non-finite values, dimension mismatches, bad
/// configuration values).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Wraps an angle into [0, 2*pi).
double wrap_phase(double theta);

}  // namespace quadcpg

#endif  // QUADCPG_COMMON_H_
