#include "quadcpg/rollout_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace quadcpg {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

const std::vector<std::string>& rollout_columns() {
  static const std::vector<std::string> columns = [] {
    std::vector<std::string> c = {"t",    "base_x", "base_y", "base_z", "roll",
                                  "pitch", "yaw",   "vx",     "vy",     "vz"};
    for (auto leg : kLegNames) {
      for (const char* f : {"r_", "theta_", "mu_", "omega_"}) {
        c.push_back(std::string(f) + std::string(leg));
      }
    }
    for (auto leg : kLegNames) {
      for (const char* f : {"foot_x_", "foot_y_", "foot_z_"}) {
        c.push_back(std::string(f) + std::string(leg));
      }
    }
    for (auto leg : kLegNames) c.push_back("contact_" + std::string(leg));
    for (const char* f : {"rew_forward", "rew_orientation", "rew_power", "rew_total"}) {
      c.push_back(f);
    }
    return c;
  }();
  return columns;
}

RolloutRow make_row(const Environment& env, const StepResult& step) {
  RolloutRow row;
  const BackendState& s = env.backend_state();
  row.t = static_cast<double>(env.control_steps()) * env.config().dt_control;
  row.base_position = s.base_position;
  row.base_rpy = s.base_rpy;
  row.base_lin_vel = s.base_lin_vel;
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    row.r[i] = env.cpg_state()[i].r;
    row.theta[i] = env.cpg_state()[i].theta;
    row.mu[i] = env.command().mu[i];
    row.omega[i] = env.command().omega[i];
  }
  row.foot_targets = env.foot_targets();
  row.contacts = s.contacts;
  row.reward = step.info.reward;
  return row;
}

RolloutSummary summarize(const RolloutRecord& record) {
  RolloutSummary s;
  s.steps = record.rows.size();
  if (record.rows.empty()) return s;
  s.duration = record.rows.back().t;
  for (const auto& row : record.rows) {
    s.total_return += row.reward.total;
    s.mean_forward_term += row.reward.forward_term;
    s.mean_orientation_term += row.reward.orientation_term;
    s.mean_power_term += row.reward.power_term;
  }
  const double n = static_cast<double>(s.steps);
  s.mean_reward = s.total_return / n;
  s.mean_forward_term /= n;
  s.mean_orientation_term /= n;
  s.mean_power_term /= n;
  if (s.duration > 0.0) s.mean_velocity = record.rows.back().base_position.x() / s.duration;
  return s;
}

namespace {

void write_row(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << format_double(values[i]);
  }
  out << '\n';
}

std::vector<double> row_values(const RolloutRow& row) {
  std::vector<double> v = {row.t,
                           row.base_position.x(), row.base_position.y(), row.base_position.z(),
                           row.base_rpy.x(), row.base_rpy.y(), row.base_rpy.z(),
                           row.base_lin_vel.x(), row.base_lin_vel.y(), row.base_lin_vel.z()};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    v.insert(v.end(), {row.r[i], row.theta[i], row.mu[i], row.omega[i]});
  }
  for (const auto& p : row.foot_targets) v.insert(v.end(), {p.x(), p.y(), p.z()});
  for (bool c : row.contacts) v.push_back(c ? 1.0 : 0.0);
  v.insert(v.end(), {row.reward.forward_term, row.reward.orientation_term,
                     row.reward.power_term, row.reward.total});
  return v;
}

void write_header(std::ostream& out, std::string_view schema,
                  const std::vector<std::string>& columns) {
  out << "# schema=" << schema << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

json config_json(const EnvironmentConfig& config) {
  return {{"alpha", config.cpg.alpha},
          {"dt_integration", config.cpg.dt_integration},
          {"integrator", config.cpg.integrator == OscillatorIntegrator::kZeroOrderHold
                             ? "zero_order_hold"
                             : "forward_euler"},
          {"dt_control", config.dt_control},
          {"v_cap", config.v_cap},
          {"d_max", config.d_max()},
          {"fall_angle", config.fall_angle},
          {"min_height_fraction", config.min_height_fraction},
          {"weights",
           {{"forward", config.weights.forward},
            {"orientation", config.weights.orientation},
            {"power", config.weights.power}}}};
}

json manifest(const RolloutRecord& record, const EnvironmentConfig& config,
              const std::string& controller) {
  json cfg = {{"robot", record.robot},
              {"seed", record.seed},
              {"initial_phases", record.initial_phases},
              {"controller", controller},
              {"environment", config_json(config)}};
  const RolloutSummary s = summarize(record);
  json summary = {{"steps", s.steps},
                  {"duration", s.duration},
                  {"mean_velocity", s.mean_velocity},
                  {"mean_reward", s.mean_reward},
                  {"mean_forward_term", s.mean_forward_term},
                  {"mean_orientation_term", s.mean_orientation_term},
                  {"mean_power_term", s.mean_power_term},
                  {"total_return", s.total_return},
                  {"termination", std::string(termination_name(record.termination))},
                  {"ik_fallback_steps", record.ik_fallback_steps}};
  if (record.termination_step) {
    summary["termination_step"] = *record.termination_step;
  } else {
    summary["termination_step"] = nullptr;
  }
  return {{"schema", std::string(kRolloutSchema)},
          {"robot", record.robot},
          {"seed", record.seed},
          {"config", cfg},
          {"config_hash", fnv1a_hex(cfg.dump())},
          {"columns", rollout_columns()},
          {"summary", summary}};
}

}  // namespace

void write_rollout_csv(std::ostream& out, const RolloutRecord& record) {
  write_header(out, kRolloutSchema, rollout_columns());
  for (const auto& row : record.rows) write_row(out, row_values(row));
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (!have_header) {
      table.columns = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.columns.size()) + " fields, got " +
                       std::to_string(cells.size()));
    }
    std::vector<double> values(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& c = cells[i];
      auto res = std::from_chars(c.data(), c.data() + c.size(), values[i]);
      if (res.ec != std::errc() || res.ptr != c.data() + c.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": column '" +
                         table.columns[i] + "': not a number: '" + c + "'");
      }
    }
    table.rows.push_back(std::move(values));
  }
  if (!have_header) throw ParseError("empty CSV: no header row");
  return table;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ParseError("missing column '" + std::string(name) + "'");
}

std::vector<double> CsvTable::values(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

RolloutRecord rollout_from_table(const CsvTable& table) {
  const auto& names = rollout_columns();
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(table.column(n));

  RolloutRecord record;
  for (const auto& values : table.rows) {
    std::size_t k = 0;
    auto next = [&] { return values[idx[k++]]; };
    RolloutRow row;
    row.t = next();
    for (int i = 0; i < 3; ++i) row.base_position[i] = next();
    for (int i = 0; i < 3; ++i) row.base_rpy[i] = next();
    for (int i = 0; i < 3; ++i) row.base_lin_vel[i] = next();
    for (std::size_t i = 0; i < kNumLegs; ++i) {
      row.r[i] = next();
      row.theta[i] = next();
      row.mu[i] = next();
      row.omega[i] = next();
    }
    for (auto& p : row.foot_targets) {
      for (int i = 0; i < 3; ++i) p[i] = next();
    }
    for (auto& c : row.contacts) c = next() != 0.0;
    row.reward.forward_term = next();
    row.reward.orientation_term = next();
    row.reward.power_term = next();
    row.reward.total = next();
    record.rows.push_back(row);
  }
  return record;
}

std::string rollout_manifest_json(const RolloutRecord& record,
                                  const EnvironmentConfig& config,
                                  const std::string& controller) {
  return manifest(record, config, controller).dump(2) + "\n";
}

std::string rollout_json(const RolloutRecord& record, const EnvironmentConfig& config,
                         const std::string& controller) {
  json doc = manifest(record, config, controller);
  json data = json::array();
  for (const auto& row : record.rows) data.push_back(row_values(row));
  doc["data"] = std::move(data);
  return doc.dump(2) + "\n";
}

std::vector<TrajectorySample> generate_trajectory(
    const RobotDescriptor& robot, double mu, double omega_hz, double duration,
    std::span<const double, kNumLegs> initial_phases, const CpgConfig& cpg,
    double sample_dt) {
  if (!(duration > 0.0)) throw DomainError("generate_trajectory: duration must be > 0");
  const double ratio = sample_dt / cpg.dt_integration;
  const auto per_sample = static_cast<std::size_t>(std::llround(ratio));
  if (per_sample < 1 || std::abs(ratio - static_cast<double>(per_sample)) > 1e-9) {
    throw DomainError("generate_trajectory: sample_dt must be a multiple of dt_integration");
  }
  if (!(mu >= kMuMin && mu <= kMuMax) || !(omega_hz >= kOmegaMinHz && omega_hz <= kOmegaMaxHz)) {
    throw DomainError("generate_trajectory: command (mu=" + format_double(mu) +
                      ", omega=" + format_double(omega_hz) +
                      ") outside mu in [0.5, 4], omega in [0, 5] Hz");
  }
  CpgCommand command;
  command.mu.fill(mu);
  command.omega.fill(omega_hz);
  std::array<PfParams, kNumLegs> pf{};
  for (Leg leg : kAllLegs) pf[index(leg)] = robot.pf.for_leg(leg);

  CpgState states = init_cpg(initial_phases, cpg);
  const auto n_samples = static_cast<std::size_t>(std::llround(duration / sample_dt));
  std::vector<TrajectorySample> out;
  out.reserve(n_samples);
  for (std::size_t s = 1; s <= n_samples; ++s) {
    for (std::size_t k = 0; k < per_sample; ++k) states = step_cpg(states, command, cpg);
    TrajectorySample sample;
    sample.t = static_cast<double>(s) * sample_dt;
    for (std::size_t i = 0; i < kNumLegs; ++i) {
      sample.r[i] = states[i].r;
      sample.theta[i] = states[i].theta;
      sample.feet[i] = foot_target(states[i], pf[i]);
    }
    out.push_back(sample);
  }
  return out;
}

namespace {

std::vector<std::string> trajectory_columns() {
  std::vector<std::string> c = {"t"};
  for (auto leg : kLegNames) {
    for (const char* f : {"r_", "theta_", "x_foot_", "y_foot_", "z_foot_"}) {
      c.push_back(std::string(f) + std::string(leg));
    }
  }
  return c;
}

std::vector<double> trajectory_values(const TrajectorySample& s) {
  std::vector<double> v = {s.t};
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    v.insert(v.end(), {s.r[i], s.theta[i], s.feet[i].x(), s.feet[i].y(), s.feet[i].z()});
  }
  return v;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectorySample>& samples) {
  write_header(out, kTrajectorySchema, trajectory_columns());
  for (const auto& s : samples) write_row(out, trajectory_values(s));
}

std::string trajectory_json(const std::string& robot,
                            const std::vector<TrajectorySample>& samples) {
  json data = json::array();
  for (const auto& s : samples) data.push_back(trajectory_values(s));
  json doc = {{"schema", std::string(kTrajectorySchema)},
              {"robot", robot},
              {"columns", trajectory_columns()},
              {"data", data}};
  return doc.dump(2) + "\n";
}

}  // namespace quadcpg
