#ifndef QUADCPG_RHYTHM_GENERATOR_H_
#define QUADCPG_RHYTHM_GENERATOR_H_

#include <array>
#include <span>

#include "quadcpg/common.h"

namespace quadcpg {

// Per-limb amplitude-controlled phase oscillator:
//   r'' = alpha * (alpha / 4 * (mu - r) - r')
//   theta' = 2 * pi * omega        (omega in Hz)
// No coupling terms between limbs; inter-limb coordination is left to the
// caller that chooses mu and omega.

struct OscillatorState {
  double r = 0.0;          // amplitude
  double r_dot = 0.0;      // 1/s
  double theta = 0.0;      // rad, [0, 2*pi)
  double theta_dot = 0.0;  // rad/s
};

using CpgState = std::array<OscillatorState, kNumLegs>;

inline constexpr double kMuMin = 0.5;
inline constexpr double kMuMax = 4.0;
inline constexpr double kOmegaMinHz = 0.0;
inline constexpr double kOmegaMaxHz = 5.0;
inline constexpr std::size_t kActionSize = 2 * kNumLegs;

/// The 8-dimensional action: per-limb intrinsic amplitude and frequency (Hz).
/// Flattened layout is [mu_FR, mu_FL, mu_RR, mu_RL, omega_FR, ..., omega_RL].
struct CpgCommand {
  std::array<double, kNumLegs> mu{};
  std::array<double, kNumLegs> omega{};

  std::array<double, kActionSize> flatten() const;
};

enum class OscillatorIntegrator {
  // Exact propagator of the linear amplitude ODE with mu held over the step.
  kZeroOrderHold,
  kForwardEuler,
};

struct CpgConfig {
  double alpha = 50.0;            // 1/s
  double dt_integration = 1e-3;   // s
  OscillatorIntegrator integrator = OscillatorIntegrator::kZeroOrderHold;

  void validate() const;
};

/// Advances one oscillator by config.dt_integration. Throws DomainError on
/// non-finite state or command.
OscillatorState step_oscillator(const OscillatorState& state, double mu,
                                double omega_hz, const CpgConfig& config);

/// Advances all four oscillators with their own commands.
CpgState step_cpg(const CpgState& states, const CpgCommand& command,
                  const CpgConfig& config);

/// Clips mu to [0.5, 4] and omega to [0, 5] Hz. Rejects non-finite entries
/// rather than clipping them. `raw` must hold exactly 8 values.
CpgCommand clamp_command(std::span<const double> raw);

/// Analytic amplitude of the critically damped system started at (r0, r0_dot)
/// under a constant mu. Used as a test oracle.
double closed_form_amplitude(double mu, double alpha, double r0, double r0_dot,
                             double t);

/// Each limb starts at rest with zero amplitude and its given phase (wrapped).
CpgState init_cpg(std::span<const double, kNumLegs> initial_phases,
                  const CpgConfig& config);

}  // namespace quadcpg

#endif  // QUADCPG_RHYTHM_GENERATOR_H_
