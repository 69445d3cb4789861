#include "quadcpg/robot_registry.h"

namespace quadcpg {

// Trajectory parameters, masses and gains are the published table values
// (cm, kg). Leg geometry follows the vendors' public dimensions where known
// (A1, Go1, Mini-Cheetah, Aliengo, Laikago, B1, Spot, Solo, ANYmal); the rest
// are scaled so the links sum to roughly 1.25-1.3x the nominal height.
// A single hip offset triple is mirrored to all four legs.
namespace {

constexpr std::string_view kBuiltinRegistry = R"json({
  "schema": "quadcpg-registry/1",
  "ppo": {
    "batch_size": 98304, "minibatch_size": 24576, "epochs": 5,
    "clip_range": 0.2, "entropy_coefficient": 0.01, "discount_factor": 0.99,
    "gae_discount_factor": 0.95, "kl_target": 0.01, "learning_rate": "adaptive",
    "hidden_layers": [512, 256, 128], "activation": "elu", "framework": "Torch"
  },
  "robots": [
    {"name": "Little Dog", "height_cm": 19.0, "l_step_cm": 5.0, "l_clrnc_cm": 4.7,
     "l_pntr_cm": 0.5, "x_offset_cm": 1.1, "dof": 12, "morphology": 2,
     "mass_kg": 2.9, "kp": 20.0, "kd": 0.3,
     "geometry": {"hip_offsets_m": [0.10, 0.04, 0.0], "link_lengths_m": [0.12, 0.12],
                  "y_nominal_m": 0.03}},
    {"name": "Spot-Micro", "height_cm": 18.3, "l_step_cm": 5.0, "l_clrnc_cm": 3.7,
     "l_pntr_cm": 0.5, "x_offset_cm": 1.0, "dof": 12, "morphology": 1,
     "mass_kg": 4.8, "kp": 20.0, "kd": 0.3,
     "geometry": {"hip_offsets_m": [0.093, 0.039, 0.0], "link_lengths_m": [0.107, 0.13],
                  "y_nominal_m": 0.052}},
    {"name": "Solo", "height_cm": 25.0, "l_step_cm": 10.0, "l_clrnc_cm": 5.0,
     "l_pntr_cm": 0.5, "x_offset_cm": 3.7, "dof": 12, "morphology": 2,
     "mass_kg": 2.5, "kp": 20.0, "kd": 0.3,
     "geometry": {"hip_offsets_m": [0.1946, 0.0875, 0.0], "link_lengths_m": [0.16, 0.16],
                  "y_nominal_m": 0.014}},
    {"name": "Mini-Cheetah", "height_cm": 30.0, "l_step_cm": 13.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 8.4, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.19, 0.049, 0.0], "link_lengths_m": [0.209, 0.195],
                  "y_nominal_m": 0.062}},
    {"name": "A1", "height_cm": 30.0, "l_step_cm": 13.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 12.0, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.1805, 0.047, 0.0], "link_lengths_m": [0.2, 0.2],
                  "y_nominal_m": 0.0838}},
    {"name": "Go1", "height_cm": 30.0, "l_step_cm": 13.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 12.0, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.1881, 0.04675, 0.0], "link_lengths_m": [0.213, 0.213],
                  "y_nominal_m": 0.08}},
    {"name": "Aliengo", "height_cm": 42.0, "l_step_cm": 16.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 20.6, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.2399, 0.051, 0.0], "link_lengths_m": [0.25, 0.25],
                  "y_nominal_m": 0.083}},
    {"name": "Laikago", "height_cm": 40.0, "l_step_cm": 16.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 25.0, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.21935, 0.0875, 0.0], "link_lengths_m": [0.25, 0.25],
                  "y_nominal_m": 0.037}},
    {"name": "Anymal-B", "height_cm": 48.0, "l_step_cm": 17.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 0.0, "x_offset_cm": 10.0, "dof": 12, "morphology": 2,
     "mass_kg": 30.0, "kp": 430.0, "kd": 20.7,
     "geometry": {"hip_offsets_m": [0.277, 0.116, 0.0], "link_lengths_m": [0.25, 0.33],
                  "y_nominal_m": 0.0635}},
    {"name": "Anymal-C", "height_cm": 52.0, "l_step_cm": 18.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 12.0, "dof": 12, "morphology": 2,
     "mass_kg": 52.1, "kp": 430.0, "kd": 20.7,
     "geometry": {"hip_offsets_m": [0.2999, 0.104, 0.0], "link_lengths_m": [0.285, 0.35],
                  "y_nominal_m": 0.0975}},
    {"name": "Spot", "height_cm": 57.0, "l_step_cm": 20.0, "l_clrnc_cm": 9.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 30.0, "kp": 430.0, "kd": 20.7,
     "geometry": {"hip_offsets_m": [0.29785, 0.055, 0.0], "link_lengths_m": [0.3205, 0.37],
                  "y_nominal_m": 0.110945}},
    {"name": "B1", "height_cm": 57.0, "l_step_cm": 18.0, "l_clrnc_cm": 9.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 12, "morphology": 1,
     "mass_kg": 52.7, "kp": 430.0, "kd": 20.7,
     "geometry": {"hip_offsets_m": [0.3455, 0.072, 0.0], "link_lengths_m": [0.35, 0.35],
                  "y_nominal_m": 0.12675}},
    {"name": "HYQ", "height_cm": 63.0, "l_step_cm": 20.0, "l_clrnc_cm": 9.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 8.7, "dof": 12, "morphology": 2,
     "mass_kg": 86.7, "kp": 430.0, "kd": 20.7,
     "geometry": {"hip_offsets_m": [0.3735, 0.207, 0.0], "link_lengths_m": [0.37, 0.37],
                  "y_nominal_m": 0.08}},
    {"name": "Dog1", "height_cm": 30.0, "l_step_cm": 13.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 16, "morphology": 3,
     "mass_kg": 13.8, "kp": 100.0, "kd": 2.7,
     "geometry": {"hip_offsets_m": [0.18, 0.05, 0.0], "link_lengths_m": [0.16, 0.16, 0.10],
                  "y_nominal_m": 0.06, "foot_knee_ratio": -0.5}},
    {"name": "Dog2", "height_cm": 57.0, "l_step_cm": 18.0, "l_clrnc_cm": 7.0,
     "l_pntr_cm": 1.0, "x_offset_cm": 0.0, "dof": 16, "morphology": 3,
     "mass_kg": 56.0, "kp": 200.0, "kd": 10.7,
     "geometry": {"hip_offsets_m": [0.34, 0.07, 0.0], "link_lengths_m": [0.30, 0.30, 0.18],
                  "y_nominal_m": 0.10, "foot_knee_ratio": -0.5}},
    {"name": "Dog3", "height_cm": 100.0, "l_step_cm": 36.0, "l_clrnc_cm": 9.0,
     "l_pntr_cm": 2.0, "x_offset_cm": 0.0, "dof": 16, "morphology": 3,
     "mass_kg": 200.0, "kp": 1400.0, "kd": 140.7,
     "geometry": {"hip_offsets_m": [0.60, 0.12, 0.0], "link_lengths_m": [0.50, 0.50, 0.30],
                  "y_nominal_m": 0.15, "foot_knee_ratio": -0.5}}
  ]
})json";

}  // namespace

std::string_view builtin_registry_text() { return kBuiltinRegistry; }

}  // namespace quadcpg
