#include "mdisk/config.hpp"

#include <fstream>
#include <stdexcept>

namespace mdisk {

void RunConfig::validate() const {
  grid.validate();
  quad.validate();
  if (!helicoid) {
    if (points.empty()) throw std::invalid_argument("either points or helicoid mode is required");
    (void)construction();
    (void)build_domain(construction(), split);
  } else {
    (void)helicoid_domain();
  }
  for (size_t i = 1; i < a_list.size(); ++i) {
    if (!(a_list[i] < a_list[i - 1])) {
      throw std::invalid_argument("a-list must be strictly decreasing");
    }
  }
  for (double v : a_list) {
    if (!(v > 0.0 && v < 0.5)) throw std::invalid_argument("a-list values must lie in (0, 1/2)");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (n_max < 1) throw std::invalid_argument("n-max must be positive");
}

ConstructionParams RunConfig::construction() const { return {points, a}; }

DomainSpec RunConfig::helicoid_domain() const {
  return DomainSpec::rectangle(helicoid_rect[0], helicoid_rect[1], helicoid_rect[2]);
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["points"] = points;
  j["a"] = a;
  j["helicoid"] = helicoid;
  j["helicoid_rect"] = helicoid_rect;
  j["grid"] = {{"nx", grid.nx}, {"ny", grid.ny}};
  if (grid.clip) j["grid"]["clip"] = {grid.clip->x_lo, grid.clip->x_hi, grid.clip->y_max};
  j["tol"] = quad.abs_tol;
  j["max_depth"] = quad.max_depth;
  j["rule"] = quad.rule;
  j["a_list"] = a_list;
  j["delta"] = delta;
  j["clip"] = clip;
  j["split"] = split == SplitRule::kMidpoint ? "midpoint" : "literal";
  j["binary_ply"] = binary_ply;
  j["r0_vs_n"] = r0_vs_n;
  j["n_max"] = n_max;
  j["out"] = out;
  j["report"] = report;
  return j;
}

void RunConfig::merge_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (j.contains("points")) points = j.at("points").get<std::vector<double>>();
  if (j.contains("a")) a = j.at("a").get<double>();
  if (j.contains("helicoid")) helicoid = j.at("helicoid").get<bool>();
  if (j.contains("helicoid_rect")) helicoid_rect = j.at("helicoid_rect").get<std::array<double, 3>>();
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.contains("nx")) grid.nx = g.at("nx").get<int>();
    if (g.contains("ny")) grid.ny = g.at("ny").get<int>();
    if (g.contains("clip")) {
      const auto c = g.at("clip").get<std::array<double, 3>>();
      grid.clip = ClipBox{c[0], c[1], c[2]};
    }
  }
  if (j.contains("tol")) quad.abs_tol = j.at("tol").get<double>();
  if (j.contains("max_depth")) quad.max_depth = j.at("max_depth").get<int>();
  if (j.contains("rule")) quad.rule = j.at("rule").get<std::string>();
  if (j.contains("a_list")) a_list = j.at("a_list").get<std::vector<double>>();
  if (j.contains("delta")) delta = j.at("delta").get<double>();
  if (j.contains("clip")) clip = j.at("clip").get<bool>();
  if (j.contains("split")) {
    const auto s = j.at("split").get<std::string>();
    if (s == "midpoint") {
      split = SplitRule::kMidpoint;
    } else if (s == "literal") {
      split = SplitRule::kLiteral;
    } else {
      throw std::invalid_argument("unknown split rule: " + s);
    }
  }
  if (j.contains("binary_ply")) binary_ply = j.at("binary_ply").get<bool>();
  if (j.contains("r0_vs_n")) r0_vs_n = j.at("r0_vs_n").get<bool>();
  if (j.contains("n_max")) n_max = j.at("n_max").get<int>();
  if (j.contains("out")) out = j.at("out").get<std::string>();
  if (j.contains("report")) report = j.at("report").get<std::string>();
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config '" + path + "'");
  RunConfig cfg;
  try {
    cfg.merge_json(nlohmann::json::parse(is));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

}  // namespace mdisk
