#include "quadcpg/rhythm_generator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace quadcpg {

double wrap_phase(double theta) {
  double wrapped = theta - kTwoPi * std::floor(theta / kTwoPi);
  // floor can leave exactly 2*pi for tiny negative inputs
  if (wrapped >= kTwoPi || wrapped < 0.0) wrapped = 0.0;
  return wrapped;
}

std::array<double, kActionSize> CpgCommand::flatten() const {
  std::array<double, kActionSize> out{};
  std::copy(mu.begin(), mu.end(), out.begin());
  std::copy(omega.begin(), omega.end(), out.begin() + kNumLegs);
  return out;
}

void CpgConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("CpgConfig: alpha must be finite and > 0, got " +
                      std::to_string(alpha));
  }
  if (!(dt_integration > 0.0) || !std::isfinite(dt_integration)) {
    throw DomainError("CpgConfig: dt_integration must be finite and > 0, got " +
                      std::to_string(dt_integration));
  }
}

namespace {

bool finite_state(const OscillatorState& s) {
  return std::isfinite(s.r) && std::isfinite(s.r_dot) &&
         std::isfinite(s.theta) && std::isfinite(s.theta_dot);
}

}  // namespace

OscillatorState step_oscillator(const OscillatorState& state, double mu,
                                double omega_hz, const CpgConfig& config) {
  if (!finite_state(state)) {
    throw DomainError("step_oscillator: non-finite oscillator state");
  }
  if (!std::isfinite(mu) || !std::isfinite(omega_hz)) {
    throw DomainError("step_oscillator: non-finite command");
  }
  if (!(config.alpha > 0.0) || !(config.dt_integration > 0.0)) config.validate();
  const double h = config.dt_integration;
  const double alpha = config.alpha;

  OscillatorState next;
  switch (config.integrator) {
    case OscillatorIntegrator::kZeroOrderHold: {
      // Double pole at -alpha/2: e = exp(-lambda h) and
      //   x1 = e * ((1 + lambda h) x0 + h v0)
      //   v1 = e * ((1 - lambda h) v0 - lambda^2 h x0),  x = r - mu.
      const double lambda = 0.5 * alpha;
      const double e = std::exp(-lambda * h);
      const double x0 = state.r - mu;
      const double v0 = state.r_dot;
      next.r = mu + e * ((1.0 + lambda * h) * x0 + h * v0);
      next.r_dot = e * ((1.0 - lambda * h) * v0 - lambda * lambda * h * x0);
      break;
    }
    case OscillatorIntegrator::kForwardEuler: {
      const double r_ddot = alpha * (0.25 * alpha * (mu - state.r) - state.r_dot);
      next.r = state.r + h * state.r_dot;
      next.r_dot = state.r_dot + h * r_ddot;
      break;
    }
  }
  next.theta_dot = kTwoPi * omega_hz;
  next.theta = wrap_phase(state.theta + h * next.theta_dot);
  return next;
}

CpgState step_cpg(const CpgState& states, const CpgCommand& command,
                  const CpgConfig& config) {
  CpgState next{};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    next[i] = step_oscillator(states[i], command.mu[i], command.omega[i], config);
  }
  return next;
}

CpgCommand clamp_command(std::span<const double> raw) {
  if (raw.size() != kActionSize) {
    throw DomainError("clamp_command: expected " + std::to_string(kActionSize) +
                      " values, got " + std::to_string(raw.size()));
  }
  CpgCommand cmd;
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    const double mu = raw[i];
    const double omega = raw[kNumLegs + i];
    if (!std::isfinite(mu) || !std::isfinite(omega)) {
      throw DomainError("clamp_command: non-finite action entry for leg " +
                        std::string(kLegNames[i]));
    }
    cmd.mu[i] = std::clamp(mu, kMuMin, kMuMax);
    cmd.omega[i] = std::clamp(omega, kOmegaMinHz, kOmegaMaxHz);
  }
  return cmd;
}

double closed_form_amplitude(double mu, double alpha, double r0, double r0_dot,
                             double t) {
  if (!(alpha > 0.0)) {
    throw DomainError("closed_form_amplitude: alpha must be > 0");
  }
  if (!(t >= 0.0)) {
    throw DomainError("closed_form_amplitude: t must be >= 0");
  }
  if (std::isinf(t)) return mu;
  const double a = r0 - mu;
  const double b = r0_dot + 0.5 * alpha * (r0 - mu);
  return mu + (a + b * t) * std::exp(-0.5 * alpha * t);
}

CpgState init_cpg(std::span<const double, kNumLegs> initial_phases,
                  const CpgConfig& config) {
  config.validate();
  CpgState states{};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    if (!std::isfinite(initial_phases[i])) {
      throw DomainError("init_cpg: non-finite initial phase for leg " +
                        std::string(kLegNames[i]));
    }
    states[i] = OscillatorState{0.0, 0.0, wrap_phase(initial_phases[i]), 0.0};
  }
  return states;
}

}  // namespace quadcpg
