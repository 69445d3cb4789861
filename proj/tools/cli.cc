#include "cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadcpg/controllers.h"
#include "quadcpg/environment.h"
#include "quadcpg/plot_svg.h"
#include "quadcpg/robot_registry.h"
#include "quadcpg/rollout_io.h"

namespace quadcpg::cli {

namespace {

// Configuration problems map to exit code 2, everything else to 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string registry;
  std::string robot = "A1";
  double mu = 1.0;
  double omega = 2.5;
  double duration = 10.0;
  std::uint64_t seed = 0;
  std::string out;
  std::string in;
  std::string format;
  std::string phases = "trot";
  std::size_t budget = 200;
  std::size_t horizon = 300;
  unsigned threads = 1;
};

RobotRegistry open_registry(const Options& opt) {
  std::string path = opt.registry;
  if (path.empty()) {
    if (const char* env = std::getenv(kRegistryEnvVar)) path = env;
  }
  return load_registry_or_builtin(path);
}

std::array<double, kNumLegs> parse_phases(const std::string& text) {
  if (text == "trot") return kTrotPhases;
  if (text == "pace") return {0.0, kPi, 0.0, kPi};
  if (text == "bound") return {0.0, 0.0, kPi, kPi};
  if (text == "pronk") return {0.0, 0.0, 0.0, 0.0};
  std::array<double, kNumLegs> out{};
  std::stringstream ss(text);
  std::string cell;
  std::size_t i = 0;
  while (std::getline(ss, cell, ',')) {
    if (i >= kNumLegs) break;
    try {
      std::size_t used = 0;
      out[i] = std::stod(cell, &used);
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ConfigError("--phases: '" + cell + "' is not a number");
    }
    ++i;
  }
  if (i != kNumLegs || std::getline(ss, cell, ',')) {
    throw ConfigError("--phases: expected trot|pace|bound|pronk or four comma-separated radians");
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_file(path, content);
  }
}

std::size_t steps_for(double duration, const EnvironmentConfig& config) {
  if (!(duration > 0.0)) throw ConfigError("--duration must be > 0");
  return static_cast<std::size_t>(std::llround(duration / config.dt_control));
}

int cmd_robots(const Options& opt, std::ostream& out) {
  const RobotRegistry registry = open_registry(opt);
  out << std::left << std::setw(14) << "robot" << std::right << std::setw(10) << "mass[kg]"
      << std::setw(11) << "height[m]" << std::setw(14) << "DoF-morph" << std::setw(9) << "Kp"
      << std::setw(8) << "Kd" << '\n';
  for (const auto& r : registry.robots()) {
    std::ostringstream dof;
    dof << r.dof_total << " - " << morphology_code(r.morphology);
    out << std::left << std::setw(14) << r.name << std::right << std::fixed
        << std::setprecision(1) << std::setw(10) << r.mass << std::setprecision(3)
        << std::setw(11) << r.height_nominal << std::setw(14) << dof.str()
        << std::setprecision(1) << std::setw(9) << r.kp << std::setw(8) << r.kd << '\n';
  }
  out.unsetf(std::ios::fixed);
  return kExitOk;
}

int cmd_traj(const Options& opt, std::ostream& out) {
  const RobotRegistry registry = open_registry(opt);
  const RobotDescriptor& robot = registry.get(opt.robot);
  if (!(opt.duration > 0.0)) throw ConfigError("--duration must be > 0");
  const auto phases = parse_phases(opt.phases);
  const auto samples = generate_trajectory(robot, opt.mu, opt.omega, opt.duration, phases,
                                           CpgConfig{});
  const std::string format = opt.format.empty() ? "csv" : opt.format;
  if (format == "csv") {
    std::ostringstream s;
    write_trajectory_csv(s, samples);
    emit(opt.out, s.str(), out);
  } else if (format == "json") {
    emit(opt.out, trajectory_json(robot.name, samples), out);
  } else {
    throw ConfigError("traj: --format must be csv or json");
  }
  return kExitOk;
}

int cmd_rollout(const Options& opt, std::ostream& out) {
  const RobotRegistry registry = open_registry(opt);
  const RobotDescriptor& robot = registry.get(opt.robot);
  EnvironmentConfig config;
  const std::size_t steps = steps_for(opt.duration, config);
  ConstantCommandPolicy policy(opt.mu, opt.omega, parse_phases(opt.phases));
  Environment env(robot, config);
  const RolloutRecord record = run_rollout(env, policy, steps, opt.seed);

  const std::string format = opt.format.empty() ? "csv" : opt.format;
  if (!opt.out.empty()) {
    if (format == "csv") {
      std::ostringstream csv;
      write_rollout_csv(csv, record);
      write_file(opt.out, csv.str());
      std::filesystem::path manifest(opt.out);
      manifest.replace_extension(".json");
      write_file(manifest.string(), rollout_manifest_json(record, config, policy.describe()));
    } else if (format == "json") {
      write_file(opt.out, rollout_json(record, config, policy.describe()));
    } else if (format == "svg") {
      std::ostringstream csv;
      write_rollout_csv(csv, record);
      std::istringstream in(csv.str());
      write_file(opt.out, render_rollout_svg(read_csv(in), robot.name));
    } else {
      throw ConfigError("rollout: --format must be csv, json or svg");
    }
  }

  const RolloutSummary s = summarize(record);
  out << "rollout robot=" << robot.name << " controller=" << policy.describe()
      << " steps=" << s.steps << " duration=" << format_double(s.duration) << "s"
      << std::setprecision(6) << " mean_velocity=" << s.mean_velocity << "m/s"
      << " mean_reward=" << s.mean_reward << " forward=" << s.mean_forward_term
      << " orientation=" << s.mean_orientation_term << " power=" << s.mean_power_term
      << " ik_fallback_steps=" << record.ik_fallback_steps;
  if (record.termination_step) {
    out << " terminated_early_at_step=" << *record.termination_step << " ("
        << termination_name(record.termination) << ")";
  } else {
    out << " terminated=no";
  }
  out << '\n';
  return kExitOk;
}

int cmd_search(const Options& opt, std::ostream& out) {
  const RobotRegistry registry = open_registry(opt);
  const RobotDescriptor& robot = registry.get(opt.robot);
  if (opt.budget < 1) throw ConfigError("--budget must be >= 1");
  SearchOptions so;
  so.budget = opt.budget;
  so.seed = opt.seed;
  so.horizon = opt.horizon;
  so.threads = opt.threads;
  const SearchResult result = search_constant_command(robot, so);
  const std::string format = opt.format.empty() ? "json" : opt.format;
  if (format == "json") {
    if (!opt.out.empty()) write_file(opt.out, search_result_json(robot.name, so, result));
  } else if (format == "csv") {
    std::ostringstream csv;
    csv << "index,mu,omega,return,best_so_far\n";
    for (std::size_t i = 0; i < result.samples.size(); ++i) {
      const auto& smp = result.samples[i];
      csv << i << ',' << format_double(smp.mu) << ',' << format_double(smp.omega) << ','
          << format_double(smp.episode_return) << ',' << format_double(result.best_so_far[i])
          << '\n';
    }
    if (!opt.out.empty()) write_file(opt.out, csv.str());
  } else {
    throw ConfigError("search: --format must be json or csv");
  }
  out << "search robot=" << robot.name << " budget=" << so.budget << " horizon=" << so.horizon
      << " best_mu=" << format_double(result.best_mu)
      << " best_omega=" << format_double(result.best_omega)
      << " best_return=" << format_double(result.best_return)
      << " best_index=" << result.best_index << '\n';
  return kExitOk;
}

int cmd_plot(const Options& opt, std::ostream& out) {
  std::ifstream in(opt.in);
  if (!in) throw IoError("cannot open record '" + opt.in + "'");
  const CsvTable table = read_csv(in);
  emit(opt.out, render_rollout_svg(table, std::filesystem::path(opt.in).filename().string()),
       out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"CPG gait generation, kinematics and rollouts for quadruped robots", "quadcpg"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--registry", opt.registry,
                 std::string("Registry file overlaid on the built-in robots (default: $") +
                     kRegistryEnvVar + ")");

  auto add_robot = [&](CLI::App* sub) {
    sub->add_option("--robot", opt.robot, "Robot name (case-insensitive)")
        ->capture_default_str();
  };
  auto add_command = [&](CLI::App* sub) {
    sub->add_option("--mu", opt.mu, "Intrinsic amplitude, shared by all limbs")
        ->capture_default_str();
    sub->add_option("--omega", opt.omega, "Intrinsic frequency [Hz]")->capture_default_str();
    sub->add_option("--duration", opt.duration, "Duration [s]")->capture_default_str();
    sub->add_option("--phases", opt.phases,
                    "Initial phases: trot|pace|bound|pronk or four radians (FR,FL,RR,RL)")
        ->capture_default_str();
  };

  CLI::App* robots = app.add_subcommand("robots", "List the registry robots");
  robots->add_option("--registry", opt.registry, "Registry overlay file");

  CLI::App* traj = app.add_subcommand("traj", "Open-loop CPG + foot trajectory (no body)");
  add_robot(traj);
  add_command(traj);
  traj->add_option("--out", opt.out, "Output file (default: stdout)");
  traj->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  traj->add_option("--registry", opt.registry, "Registry overlay file");

  CLI::App* rollout = app.add_subcommand("rollout", "Run a constant-command rollout");
  add_robot(rollout);
  add_command(rollout);
  rollout->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  rollout->add_option("--out", opt.out, "Record file (csv writes a .json manifest beside it)");
  rollout->add_option("--format", opt.format, "csv | json | svg")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  rollout->add_option("--registry", opt.registry, "Registry overlay file");

  CLI::App* search = app.add_subcommand("search", "Random search over shared (mu, omega)");
  add_robot(search);
  search->add_option("--budget", opt.budget, "Evaluations")->capture_default_str();
  search->add_option("--horizon", opt.horizon, "Control steps per evaluation")
      ->capture_default_str();
  search->add_option("--seed", opt.seed, "Seed")->capture_default_str();
  search->add_option("--threads", opt.threads, "Worker threads")->capture_default_str();
  search->add_option("--out", opt.out, "Result file");
  search->add_option("--format", opt.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--registry", opt.registry, "Registry overlay file");

  CLI::App* plot = app.add_subcommand("plot", "Render a rollout CSV as a three-panel SVG");
  plot->add_option("--in", opt.in, "Rollout CSV")->required();
  plot->add_option("--out", opt.out, "SVG file (default: stdout)");
  plot->add_option("--format", opt.format, "svg")->check(CLI::IsMember({"svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (robots->parsed()) return cmd_robots(opt, out);
    if (traj->parsed()) return cmd_traj(opt, out);
    if (rollout->parsed()) return cmd_rollout(opt, out);
    if (search->parsed()) return cmd_search(opt, out);
    if (plot->parsed()) return cmd_plot(opt, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const RegistryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnknownRobotError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}

}  // namespace quadcpg::cli
