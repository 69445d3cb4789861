#ifndef QUADCPG_TESTS_TABLE_ONE_H_
#define QUADCPG_TESTS_TABLE_ONE_H_

#include <array>
#include <string_view>

// Reference robot table, transcribed by hand. Lengths in cm as published.
struct TableRow {
  std::string_view name;
  double height_cm;
  double step_cm;
  double clearance_cm;
  double penetration_cm;
  double x_offset_cm;
  int dof;
  int morphology;
  double mass_kg;
  double kp;
  double kd;
};

inline constexpr std::array<TableRow, 16> kTableOne = {{
    {"Little Dog", 19.0, 5.0, 4.7, 0.5, 1.1, 12, 2, 2.9, 20.0, 0.3},
    {"Spot-Micro", 18.3, 5.0, 3.7, 0.5, 1.0, 12, 1, 4.8, 20.0, 0.3},
    {"Solo", 25.0, 10.0, 5.0, 0.5, 3.7, 12, 2, 2.5, 20.0, 0.3},
    {"Mini-Cheetah", 30.0, 13.0, 7.0, 1.0, 0.0, 12, 1, 8.4, 100.0, 2.7},
    {"A1", 30.0, 13.0, 7.0, 1.0, 0.0, 12, 1, 12.0, 100.0, 2.7},
    {"Go1", 30.0, 13.0, 7.0, 1.0, 0.0, 12, 1, 12.0, 100.0, 2.7},
    {"Aliengo", 42.0, 16.0, 7.0, 1.0, 0.0, 12, 1, 20.6, 100.0, 2.7},
    {"Laikago", 40.0, 16.0, 7.0, 1.0, 0.0, 12, 1, 25.0, 100.0, 2.7},
    {"Anymal-B", 48.0, 17.0, 7.0, 0.0, 10.0, 12, 2, 30.0, 430.0, 20.7},
    {"Anymal-C", 52.0, 18.0, 7.0, 1.0, 12.0, 12, 2, 52.1, 430.0, 20.7},
    {"Spot", 57.0, 20.0, 9.0, 1.0, 0.0, 12, 1, 30.0, 430.0, 20.7},
    {"B1", 57.0, 18.0, 9.0, 1.0, 0.0, 12, 1, 52.7, 430.0, 20.7},
    {"HYQ", 63.0, 20.0, 9.0, 1.0, 8.7, 12, 2, 86.7, 430.0, 20.7},
    {"Dog1", 30.0, 13.0, 7.0, 1.0, 0.0, 16, 3, 13.8, 100.0, 2.7},
    {"Dog2", 57.0, 18.0, 7.0, 1.0, 0.0, 16, 3, 56.0, 200.0, 10.7},
    {"Dog3", 100.0, 36.0, 9.0, 2.0, 0.0, 16, 3, 200.0, 1400.0, 140.7},
}};

#endif  // QUADCPG_TESTS_TABLE_ONE_H_
