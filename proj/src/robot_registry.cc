#include "quadcpg/robot_registry.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace quadcpg {

using nlohmann::json;

std::string_view morphology_name(Morphology m) {
  switch (m) {
    case Morphology::kElbowUpAll:
      return "elbow_up_all";
    case Morphology::kElbowUpFrontDownHind:
      return "elbow_up_front_down_hind";
    case Morphology::kAnimalLike:
      return "animal_like";
  }
  return "unknown";
}

int morphology_code(Morphology m) { return static_cast<int>(m); }

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

KneeConfig knee_for(Morphology m, Leg leg) {
  if (m == Morphology::kElbowUpAll || is_front(leg)) return KneeConfig::kElbowUp;
  return KneeConfig::kElbowDown;
}

bool same_leg(const LegGeometry& a, const LegGeometry& b) {
  return a.hip_offset == b.hip_offset && a.abd_offset == b.abd_offset &&
         a.link_lengths == b.link_lengths && a.dof == b.dof &&
         a.knee_config == b.knee_config && a.foot_knee_ratio == b.foot_knee_ratio;
}

bool same_pf(const PfParams& a, const PfParams& b) {
  return a.height == b.height && a.step_length == b.step_length &&
         a.clearance == b.clearance && a.penetration == b.penetration &&
         a.x_offset == b.x_offset && a.z_offset == b.z_offset &&
         a.y_nominal == b.y_nominal;
}

// Field-level error reporting for one robot entry.
class RobotReader {
 public:
  RobotReader(const json& entry, std::string source, std::size_t index)
      : entry_(entry), source_(std::move(source)) {
    if (!entry_.is_object()) fail("entry", "must be an object");
    if (entry_.contains("name") && entry_["name"].is_string()) {
      name_ = entry_["name"].get<std::string>();
    } else {
      name_ = "#" + std::to_string(index);
      fail("name", "missing or not a string");
    }
  }

  const std::string& name() const { return name_; }

  [[noreturn]] void fail(std::string_view field, std::string_view what) const {
    std::ostringstream msg;
    msg << source_ << ": robot '" << name_ << "': field '" << field << "' "
        << what;
    throw RegistryError(msg.str());
  }

  double number(const json& obj, const std::string& key) const {
    if (!obj.contains(key)) fail(key, "is missing");
    if (!obj[key].is_number()) fail(key, "must be a number");
    return obj[key].get<double>();
  }

  // Accepts `<base>_cm` or `<base>_m`; returns meters.
  std::optional<double> length(const std::string& base) const {
    const bool cm = entry_.contains(base + "_cm");
    const bool m = entry_.contains(base + "_m");
    if (cm && m) fail(base, "given both in cm and m");
    if (cm) return number(entry_, base + "_cm") / 100.0;
    if (m) return number(entry_, base + "_m");
    return std::nullopt;
  }

  double required_length(const std::string& base) const {
    auto v = length(base);
    if (!v) fail(base + "_cm", "is missing");
    return *v;
  }

  std::vector<double> number_list(const json& obj, const std::string& key) const {
    if (!obj.contains(key)) fail(key, "is missing");
    const json& arr = obj[key];
    if (!arr.is_array()) fail(key, "must be a list");
    std::vector<double> out;
    for (const auto& v : arr) {
      if (!v.is_number()) fail(key, "must contain only numbers");
      out.push_back(v.get<double>());
    }
    return out;
  }

  RobotDescriptor read() const {
    RobotDescriptor r;
    r.name = name_;
    r.pf.height = required_length("height");
    r.pf.step_length = required_length("l_step");
    r.pf.clearance = required_length("l_clrnc");
    r.pf.penetration = required_length("l_pntr");
    r.pf.x_offset = required_length("x_offset");
    r.pf.z_offset = length("z_offset").value_or(0.0);
    r.height_nominal = r.pf.height;
    r.mass = number(entry_, "mass_kg");
    r.kp = number(entry_, "kp");
    r.kd = number(entry_, "kd");

    const double dof = number(entry_, "dof");
    if (dof != 12.0 && dof != 16.0) fail("dof", "must be 12 or 16");
    r.dof_total = static_cast<int>(dof);
    r.morphology = read_morphology();

    if (!entry_.contains("geometry") || !entry_["geometry"].is_object()) {
      fail("geometry", "is missing or not an object");
    }
    const json& geo = entry_["geometry"];
    const double y_nominal = number(geo, "y_nominal_m");
    r.pf.y_nominal = y_nominal;
    const std::vector<double> links = number_list(geo, "link_lengths_m");
    const std::size_t leg_dof = r.dof_per_leg();
    if (links.size() != leg_dof - 1) {
      fail("geometry.link_lengths_m",
           "must have " + std::to_string(leg_dof - 1) + " entries for " +
               std::to_string(r.dof_total) + " DoF");
    }
    const auto hips = read_hip_offsets(geo);
    const double ratio =
        geo.contains("foot_knee_ratio") ? number(geo, "foot_knee_ratio") : -0.5;

    for (Leg leg : kAllLegs) {
      LegGeometry& g = r.legs[index(leg)];
      g.hip_offset = hips[index(leg)];
      g.abd_offset = is_left(leg) ? std::abs(y_nominal) : -std::abs(y_nominal);
      g.dof = leg_dof;
      std::copy(links.begin(), links.end(), g.link_lengths.begin());
      g.knee_config = knee_for(r.morphology, leg);
      g.foot_knee_ratio = leg_dof == 4 ? ratio : -0.5;
    }
    return r;
  }

 private:
  Morphology read_morphology() const {
    if (!entry_.contains("morphology")) fail("morphology", "is missing");
    const json& m = entry_["morphology"];
    if (m.is_number_integer()) {
      const int code = m.get<int>();
      if (code < 1 || code > 3) fail("morphology", "code must be 1, 2 or 3");
      return static_cast<Morphology>(code);
    }
    if (m.is_string()) {
      const auto s = m.get<std::string>();
      for (Morphology cand : {Morphology::kElbowUpAll,
                              Morphology::kElbowUpFrontDownHind,
                              Morphology::kAnimalLike}) {
        if (s == morphology_name(cand)) return cand;
      }
    }
    fail("morphology",
         "must be 1|2|3 or elbow_up_all|elbow_up_front_down_hind|animal_like");
  }

  std::array<Eigen::Vector3d, kNumLegs> read_hip_offsets(const json& geo) const {
    const std::string key = "hip_offsets_m";
    if (!geo.contains(key) || !geo[key].is_array()) {
      fail("geometry." + key, "is missing or not a list");
    }
    const json& arr = geo[key];
    std::array<Eigen::Vector3d, kNumLegs> out;
    auto triple = [&](const json& t) {
      if (!t.is_array() || t.size() != 3) {
        fail("geometry." + key, "entries must be [x, y, z] triples");
      }
      Eigen::Vector3d v;
      for (int i = 0; i < 3; ++i) {
        if (!t[i].is_number()) fail("geometry." + key, "must contain numbers");
        v[i] = t[i].get<double>();
      }
      return v;
    };
    if (arr.size() == 3 && arr[0].is_number()) {
      const Eigen::Vector3d base = triple(arr);
      for (Leg leg : kAllLegs) {
        const double sx = is_front(leg) ? 1.0 : -1.0;
        const double sy = is_left(leg) ? 1.0 : -1.0;
        out[index(leg)] = Eigen::Vector3d(sx * std::abs(base.x()),
                                          sy * std::abs(base.y()), base.z());
      }
    } else if (arr.size() == kNumLegs) {
      for (std::size_t i = 0; i < kNumLegs; ++i) out[i] = triple(arr[i]);
    } else {
      fail("geometry." + key, "must be one [x, y, z] triple or four (FR, FL, RR, RL)");
    }
    return out;
  }

  const json& entry_;
  std::string source_;
  std::string name_;
};

PpoHyperparameters read_ppo(const json& doc, std::string_view source) {
  PpoHyperparameters ppo;
  if (!doc.contains("ppo")) return ppo;
  try {
    const json& p = doc["ppo"];
    ppo.batch_size = p.value("batch_size", ppo.batch_size);
    ppo.minibatch_size = p.value("minibatch_size", ppo.minibatch_size);
    ppo.epochs = p.value("epochs", ppo.epochs);
    ppo.clip_range = p.value("clip_range", ppo.clip_range);
    ppo.entropy_coefficient = p.value("entropy_coefficient", ppo.entropy_coefficient);
    ppo.discount_factor = p.value("discount_factor", ppo.discount_factor);
    ppo.gae_discount_factor = p.value("gae_discount_factor", ppo.gae_discount_factor);
    ppo.kl_target = p.value("kl_target", ppo.kl_target);
    ppo.learning_rate = p.value("learning_rate", ppo.learning_rate);
    ppo.hidden_layers = p.value("hidden_layers", ppo.hidden_layers);
    ppo.activation = p.value("activation", ppo.activation);
    ppo.framework = p.value("framework", ppo.framework);
  } catch (const json::exception& e) {
    throw RegistryError(std::string(source) + ": field 'ppo': " + e.what());
  }
  return ppo;
}

}  // namespace

void RobotDescriptor::validate() const {
  auto fail = [this](std::string_view field, std::string_view what) {
    std::ostringstream msg;
    msg << "robot '" << name << "': field '" << field << "' " << what;
    throw RegistryError(msg.str());
  };
  auto positive = [&](double v, std::string_view field) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      fail(field, "must be > 0 (got " + std::to_string(v) + ")");
    }
  };
  auto non_negative = [&](double v, std::string_view field) {
    if (!std::isfinite(v) || !(v >= 0.0)) {
      fail(field, "must be >= 0 (got " + std::to_string(v) + ")");
    }
  };
  if (name.empty()) fail("name", "must not be empty");
  positive(mass, "mass_kg");
  positive(kp, "kp");
  non_negative(kd, "kd");
  positive(height_nominal, "height");
  positive(pf.height, "height");
  non_negative(pf.step_length, "l_step");
  non_negative(pf.clearance, "l_clrnc");
  non_negative(pf.penetration, "l_pntr");
  if (!std::isfinite(pf.x_offset)) fail("x_offset", "must be finite");
  if (!std::isfinite(pf.z_offset)) fail("z_offset", "must be finite");
  non_negative(pf.y_nominal, "geometry.y_nominal_m");
  if (dof_total != 12 && dof_total != 16) fail("dof", "must be 12 or 16");
  if ((dof_total == 16) != (morphology == Morphology::kAnimalLike)) {
    fail("morphology", "animal_like robots have 16 DoF and only they do");
  }
  for (Leg leg : kAllLegs) {
    const LegGeometry& g = legs[index(leg)];
    if (g.dof != dof_per_leg()) {
      fail("geometry", "leg dof does not match dof / 4");
    }
    if (g.knee_config != knee_for(morphology, leg)) {
      fail("geometry", "knee configuration inconsistent with morphology");
    }
    try {
      g.validate();
    } catch (const DomainError& e) {
      fail("geometry", e.what());
    }
  }
}

bool operator==(const RobotDescriptor& a, const RobotDescriptor& b) {
  if (!(a.name == b.name && a.height_nominal == b.height_nominal &&
        a.mass == b.mass && a.dof_total == b.dof_total &&
        a.morphology == b.morphology && same_pf(a.pf, b.pf) && a.kp == b.kp &&
        a.kd == b.kd)) {
    return false;
  }
  for (std::size_t i = 0; i < kNumLegs; ++i) {
    if (!same_leg(a.legs[i], b.legs[i])) return false;
  }
  return true;
}

RobotRegistry::RobotRegistry(std::vector<RobotDescriptor> robots,
                             PpoHyperparameters ppo)
    : robots_(std::move(robots)), ppo_(std::move(ppo)) {
  for (std::size_t i = 0; i < robots_.size(); ++i) {
    robots_[i].validate();
    for (std::size_t j = 0; j < i; ++j) {
      if (iequals(robots_[i].name, robots_[j].name)) {
        throw RegistryError("robot '" + robots_[i].name + "' defined twice");
      }
    }
  }
}

const RobotRegistry& RobotRegistry::builtin() {
  static const RobotRegistry registry =
      parse_registry(builtin_registry_text(), "<builtin>");
  return registry;
}

bool RobotRegistry::contains(std::string_view name) const {
  return std::any_of(robots_.begin(), robots_.end(),
                     [&](const RobotDescriptor& r) { return iequals(r.name, name); });
}

const RobotDescriptor& RobotRegistry::get(std::string_view name) const {
  for (const auto& r : robots_) {
    if (iequals(r.name, name)) return r;
  }
  std::ostringstream msg;
  msg << "unknown robot '" << name << "'; available:";
  for (const auto& r : robots_) msg << " '" << r.name << "'";
  throw UnknownRobotError(msg.str());
}

RobotRegistry RobotRegistry::merged_with(const RobotRegistry& overlay) const {
  std::vector<RobotDescriptor> robots = robots_;
  for (const auto& r : overlay.robots_) {
    auto it = std::find_if(robots.begin(), robots.end(), [&](const auto& x) {
      return iequals(x.name, r.name);
    });
    if (it != robots.end()) {
      *it = r;
    } else {
      robots.push_back(r);
    }
  }
  return RobotRegistry(std::move(robots), ppo_);
}

RobotRegistry parse_registry(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RegistryError(std::string(source) + ": parse error: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("robots") || !doc["robots"].is_array()) {
    throw RegistryError(std::string(source) +
                        ": document must be an object with a 'robots' list");
  }
  std::vector<RobotDescriptor> robots;
  std::size_t i = 0;
  for (const auto& entry : doc["robots"]) {
    RobotReader reader(entry, std::string(source), i++);
    RobotDescriptor r = reader.read();
    try {
      r.validate();
    } catch (const RegistryError& e) {
      throw RegistryError(std::string(source) + ": " + e.what());
    }
    robots.push_back(std::move(r));
  }
  return RobotRegistry(std::move(robots), read_ppo(doc, source));
}

std::string serialize_registry(const RobotRegistry& registry) {
  json doc;
  doc["schema"] = "quadcpg-registry/1";
  const auto& p = registry.ppo();
  doc["ppo"] = {{"batch_size", p.batch_size},
                {"minibatch_size", p.minibatch_size},
                {"epochs", p.epochs},
                {"clip_range", p.clip_range},
                {"entropy_coefficient", p.entropy_coefficient},
                {"discount_factor", p.discount_factor},
                {"gae_discount_factor", p.gae_discount_factor},
                {"kl_target", p.kl_target},
                {"learning_rate", p.learning_rate},
                {"hidden_layers", p.hidden_layers},
                {"activation", p.activation},
                {"framework", p.framework}};
  json robots = json::array();
  for (const auto& r : registry.robots()) {
    json hips = json::array();
    for (const auto& leg : r.legs) {
      hips.push_back({leg.hip_offset.x(), leg.hip_offset.y(), leg.hip_offset.z()});
    }
    json links = json::array();
    for (std::size_t i = 0; i < r.legs[0].num_links(); ++i) {
      links.push_back(r.legs[0].link_lengths[i]);
    }
    json geo = {{"hip_offsets_m", hips},
                {"link_lengths_m", links},
                {"y_nominal_m", r.pf.y_nominal}};
    if (r.dof_per_leg() == 4) geo["foot_knee_ratio"] = r.legs[0].foot_knee_ratio;
    robots.push_back({{"name", r.name},
                      {"height_m", r.pf.height},
                      {"l_step_m", r.pf.step_length},
                      {"l_clrnc_m", r.pf.clearance},
                      {"l_pntr_m", r.pf.penetration},
                      {"x_offset_m", r.pf.x_offset},
                      {"z_offset_m", r.pf.z_offset},
                      {"dof", r.dof_total},
                      {"morphology", std::string(morphology_name(r.morphology))},
                      {"mass_kg", r.mass},
                      {"kp", r.kp},
                      {"kd", r.kd},
                      {"geometry", geo}});
  }
  doc["robots"] = robots;
  return doc.dump(2);
}

RobotRegistry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw RegistryError("cannot open registry file '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return RobotRegistry::builtin().merged_with(
      parse_registry(buffer.str(), path.string()));
}

RobotRegistry load_registry_or_builtin(const std::filesystem::path& path) {
  if (path.empty()) return RobotRegistry::builtin();
  return load_registry(path);
}

const RobotDescriptor& get_robot(const RobotRegistry& registry,
                                 std::string_view name) {
  return registry.get(name);
}

}  // namespace quadcpg
