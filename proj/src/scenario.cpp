#include "evtol/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "evtol/errors.hpp"

namespace evtol {

using nlohmann::json;

bool ScenarioConfig::is_vertistop(int i) const {
  return std::find(vertistop_ids.begin(), vertistop_ids.end(), i) != vertistop_ids.end();
}

bool ScenarioConfig::is_high_demand(int i) const {
  return std::find(high_demand_ids.begin(), high_demand_ids.end(), i) != high_demand_ids.end();
}

void ScenarioConfig::validate() const {
  if (num_vertiports < 2) throw std::invalid_argument("num_vertiports must be >= 2");
  if (num_aircraft < 1) throw std::invalid_argument("num_aircraft must be >= 1");
  if (static_cast<int>(vertiport_coords.size()) != num_vertiports)
    throw std::invalid_argument("vertiport_coords size must equal num_vertiports");
  for (const auto& c : vertiport_coords) {
    if (c[0] < 0.0 || c[0] > area_side_miles || c[1] < 0.0 || c[1] > area_side_miles)
      throw std::invalid_argument("vertiport coordinates must lie in [0, area_side_miles]^2");
  }
  for (int id : vertistop_ids)
    if (id < 0 || id >= num_vertiports)
      throw std::invalid_argument("vertistop_ids contains an unknown vertiport id");
  for (int id : high_demand_ids)
    if (id < 0 || id >= num_vertiports)
      throw std::invalid_argument("high_demand_ids contains an unknown vertiport id");
  if (std::set<int>(vertistop_ids.begin(), vertistop_ids.end()).size() != vertistop_ids.size())
    throw std::invalid_argument("vertistop_ids contains duplicates");

  if (seat_capacity < 1) throw std::invalid_argument("seat_capacity must be >= 1");
  if (battery_max <= 0.0) throw std::invalid_argument("battery_max must be > 0");
  if (park_capacity < 1) throw std::invalid_argument("park_capacity must be >= 1");
  if (charge_stations < 1) throw std::invalid_argument("charge_stations must be >= 1");
  if (cruise_speed <= 0.0) throw std::invalid_argument("cruise_speed must be > 0");
  if (max_range <= 0.0) throw std::invalid_argument("max_range must be > 0");
  if (charge_rate <= 0.0) throw std::invalid_argument("charge_rate must be > 0");
  if (energy_per_mile <= 0.0) throw std::invalid_argument("energy_per_mile must be > 0");
  if (idle_minutes <= 0.0) throw std::invalid_argument("idle_minutes must be > 0");
  if (corridor_headway < 0.0) throw std::invalid_argument("corridor_headway must be >= 0");
  if (battery_safety_margin_frac < 0.0 || battery_safety_margin_frac >= 1.0)
    throw std::invalid_argument("battery_safety_margin_frac must be in [0, 1)");

  if (episode_start < kOperatingStartHour * kSecondsPerHour ||
      episode_end > kOperatingEndHour * kSecondsPerHour || episode_start >= episode_end)
    throw std::invalid_argument("episode window must be a non-empty range within 6:00-18:00");

  if (p_closure.rows() != num_vertiports || p_closure.cols() != num_vertiports)
    throw std::invalid_argument("p_closure must be N x N");
  for (int i = 0; i < num_vertiports; ++i) {
    for (int j = 0; j < num_vertiports; ++j) {
      const double p = p_closure.at(i, j);
      if (p < 0.0 || p > 0.05)
        throw std::invalid_argument("p_closure entries must lie in [0, 0.05]");
      if (std::abs(p - p_closure.at(j, i)) > 1e-12)
        throw std::invalid_argument("p_closure must be symmetric");
    }
  }
  if (static_cast<int>(p_fail.size()) != num_aircraft)
    throw std::invalid_argument("p_fail must have one entry per aircraft");
  for (double p : p_fail)
    if (p < 0.0 || p > 0.005)
      throw std::invalid_argument("p_fail entries must lie in [0, 0.005]");

  if (!tod_mean.empty()) {
    if (static_cast<int>(tod_mean.size()) != num_vertiports)
      throw std::invalid_argument("tod_mean must be empty or have one entry per vertiport");
    for (double m : tod_mean)
      if (m < 0.0 || m >= 30.0)
        throw std::invalid_argument("tod_mean entries must lie in [0, 30)");
  }
  if (tod_std < 0.0) throw std::invalid_argument("tod_std must be >= 0");

  if (demand_base_rate < 0.0 || demand_vb_multiplier < 1.0 || demand_peak_multiplier < 1.0 ||
      demand_noise_sigma < 0.0)
    throw std::invalid_argument("demand generator parameters out of range");

  if (num_aircraft > num_vertiports * park_capacity)
    throw InfeasibleConfigError("fleet cannot be parked: num_aircraft > N * park_capacity");
}

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DataError("expected a matrix (array of arrays)");
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw DataError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = j[i][c].get<double>();
  }
  return m;
}

}  // namespace

std::string ScenarioConfig::to_json_string(int indent) const {
  json j;
  j["area_side_miles"] = area_side_miles;
  j["num_vertiports"] = num_vertiports;
  json coords = json::array();
  for (const auto& c : vertiport_coords) coords.push_back({c[0], c[1]});
  j["vertiport_coords"] = std::move(coords);
  j["vertistop_ids"] = vertistop_ids;
  j["high_demand_ids"] = high_demand_ids;
  j["num_aircraft"] = num_aircraft;
  j["seat_capacity"] = seat_capacity;
  j["battery_max"] = battery_max;
  j["park_capacity"] = park_capacity;
  j["charge_stations"] = charge_stations;
  j["cruise_speed"] = cruise_speed;
  j["max_range"] = max_range;
  j["op_cost_per_mile"] = op_cost_per_mile;
  j["charge_rate"] = charge_rate;
  j["elec_price"] = elec_price;
  j["base_fare"] = base_fare;
  j["idle_minutes"] = idle_minutes;
  j["corridor_headway"] = corridor_headway;
  j["energy_per_mile"] = energy_per_mile;
  j["episode_start"] = episode_start;
  j["episode_end"] = episode_end;
  j["p_closure"] = matrix_to_json(p_closure);
  j["p_fail"] = p_fail;
  j["tod_mean"] = tod_mean;
  j["tod_std"] = tod_std;
  j["seed"] = seed;
  j["battery_safety_margin_frac"] = battery_safety_margin_frac;
  j["demand_base_rate"] = demand_base_rate;
  j["demand_vb_multiplier"] = demand_vb_multiplier;
  j["demand_peak_multiplier"] = demand_peak_multiplier;
  j["demand_noise_sigma"] = demand_noise_sigma;
  j["q_factor_log10"] = q_factor_log10;
  j["revenue_includes_base_fare"] = revenue_includes_base_fare;
  j["demand_sampling"] = demand_sampling == DemandSampling::poisson ? "poisson" : "expected";
  return j.dump(indent);
}

ScenarioConfig ScenarioConfig::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("scenario JSON parse error: ") + e.what());
  }
  ScenarioConfig c;
  try {
    c.area_side_miles = j.at("area_side_miles").get<double>();
    c.num_vertiports = j.at("num_vertiports").get<int>();
    c.vertiport_coords.clear();
    for (const auto& p : j.at("vertiport_coords"))
      c.vertiport_coords.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    c.vertistop_ids = j.at("vertistop_ids").get<std::vector<int>>();
    c.high_demand_ids = j.at("high_demand_ids").get<std::vector<int>>();
    c.num_aircraft = j.at("num_aircraft").get<int>();
    c.seat_capacity = j.at("seat_capacity").get<int>();
    c.battery_max = j.at("battery_max").get<double>();
    c.park_capacity = j.at("park_capacity").get<int>();
    c.charge_stations = j.at("charge_stations").get<int>();
    c.cruise_speed = j.at("cruise_speed").get<double>();
    c.max_range = j.at("max_range").get<double>();
    c.op_cost_per_mile = j.at("op_cost_per_mile").get<double>();
    c.charge_rate = j.at("charge_rate").get<double>();
    c.elec_price = j.at("elec_price").get<double>();
    c.base_fare = j.at("base_fare").get<double>();
    c.idle_minutes = j.at("idle_minutes").get<double>();
    c.corridor_headway = j.at("corridor_headway").get<double>();
    c.energy_per_mile = j.at("energy_per_mile").get<double>();
    c.episode_start = j.at("episode_start").get<SimTime>();
    c.episode_end = j.at("episode_end").get<SimTime>();
    c.p_closure = matrix_from_json(j.at("p_closure"));
    c.p_fail = j.at("p_fail").get<std::vector<double>>();
    c.tod_mean = j.at("tod_mean").get<std::vector<double>>();
    c.tod_std = j.at("tod_std").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.battery_safety_margin_frac = j.at("battery_safety_margin_frac").get<double>();
    c.demand_base_rate = j.at("demand_base_rate").get<double>();
    c.demand_vb_multiplier = j.at("demand_vb_multiplier").get<double>();
    c.demand_peak_multiplier = j.at("demand_peak_multiplier").get<double>();
    c.demand_noise_sigma = j.at("demand_noise_sigma").get<double>();
    c.q_factor_log10 = j.at("q_factor_log10").get<bool>();
    c.revenue_includes_base_fare = j.at("revenue_includes_base_fare").get<bool>();
    const auto mode = j.at("demand_sampling").get<std::string>();
    if (mode == "poisson") {
      c.demand_sampling = DemandSampling::poisson;
    } else if (mode == "expected") {
      c.demand_sampling = DemandSampling::expected;
    } else {
      throw DataError("demand_sampling must be \"poisson\" or \"expected\"");
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("scenario JSON field error: ") + e.what());
  }
  return c;
}

ScenarioConfig ScenarioConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open scenario file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_string(ss.str());
}

void ScenarioConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write scenario file: " + path);
  out << to_json_string() << "\n";
}

ScenarioConfig ScenarioConfig::preset(std::string_view name) {
  ScenarioConfig c;
  if (name == "paper8x40") {
    // Eight vertiports in a 50 x 50 mile area, loosely a ring around the
    // center so that every pair stays inside the 50-mile range.
    c.vertiport_coords = {{26.0, 46.5}, {40.5, 41.0}, {47.0, 24.0}, {39.5, 8.5},
                          {24.0, 3.5},  {9.0, 10.0},  {3.5, 26.5},  {10.5, 40.0}};
    c.p_closure = Matrix(8, 8, 0.05);
    for (int i = 0; i < 8; ++i) c.p_closure.at(i, i) = 0.0;
    c.p_fail.assign(40, 0.005);
    c.tod_mean.clear();  // drawn per episode, uniform in [0, 30) minutes
  } else if (name == "toy3x4") {
    c.num_vertiports = 3;
    c.num_aircraft = 4;
    c.area_side_miles = 25.0;
    c.vertiport_coords = {{4.0, 4.0}, {20.0, 5.0}, {11.0, 19.0}};
    c.vertistop_ids = {};
    c.high_demand_ids = {0};
    c.episode_start = 7 * kSecondsPerHour;  // covers the 8-9 am peak
    c.episode_end = 9 * kSecondsPerHour;
    c.p_closure = Matrix(3, 3, 0.0);
    c.p_fail.assign(4, 0.0);
    c.tod_mean = {2.0, 2.0, 2.0};
    c.tod_std = 1.0;
    c.demand_base_rate = 3.0;
  } else if (name == "tiny2x1") {
    c.num_vertiports = 2;
    c.num_aircraft = 1;
    c.area_side_miles = 30.0;
    c.vertiport_coords = {{0.0, 0.0}, {24.0, 18.0}};  // 30-mile leg
    c.vertistop_ids = {};
    c.high_demand_ids = {};
    c.episode_start = 6 * kSecondsPerHour;
    c.episode_end = 8 * kSecondsPerHour;
    c.p_closure = Matrix(2, 2, 0.0);
    c.p_fail.assign(1, 0.0);
    c.tod_mean = {0.0, 0.0};
    c.tod_std = 0.0;
    c.demand_base_rate = 8.0;
    c.demand_noise_sigma = 0.0;
    c.demand_sampling = DemandSampling::expected;
  } else {
    throw std::invalid_argument("unknown preset: " + std::string(name));
  }
  c.validate();
  return c;
}

}  // namespace evtol
