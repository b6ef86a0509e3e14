#include "evtol/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "evtol/errors.hpp"

namespace evtol {

namespace {

void check_id(int i, const ScenarioConfig& cfg) {
  if (i < 0 || i >= cfg.num_vertiports)
    throw std::invalid_argument("unknown vertiport id " + std::to_string(i));
}

}  // namespace

double distance(int i, int j, const ScenarioConfig& cfg) {
  check_id(i, cfg);
  check_id(j, cfg);
  if (i == j) throw std::invalid_argument("distance requires two distinct vertiports");
  const auto& a = cfg.vertiport_coords[i];
  const auto& b = cfg.vertiport_coords[j];
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

double flight_time_minutes(int i, int j, const ScenarioConfig& cfg) {
  const double d = distance(i, j, cfg);
  if (d > cfg.max_range)
    throw RangeExceededError("leg " + std::to_string(i) + "->" + std::to_string(j) +
                             " of " + std::to_string(d) + " mi exceeds max range");
  return 60.0 * d / cfg.cruise_speed;
}

double energy_required_kwh(int i, int j, const ScenarioConfig& cfg) {
  return cfg.energy_per_mile * distance(i, j, cfg);
}

double battery_after_leg_kwh(double battery_kwh, int i, int j, const ScenarioConfig& cfg) {
  const double need = energy_required_kwh(i, j, cfg);
  if (battery_kwh < need)
    throw ConstraintViolationError("battery " + std::to_string(battery_kwh) +
                                   " kWh below the " + std::to_string(need) +
                                   " kWh required for leg " + std::to_string(i) + "->" +
                                   std::to_string(j));
  return battery_kwh - need;
}

double charging_duration_minutes(double deficit_kwh, const ScenarioConfig& cfg) {
  if (deficit_kwh < 0.0) throw std::invalid_argument("charge deficit must be >= 0");
  return 60.0 * deficit_kwh / cfg.charge_rate;
}

Matrix weighted_adjacency(const Matrix& open_flags, const Matrix& closure_prob) {
  if (!open_flags.same_shape(closure_prob) || open_flags.rows() != open_flags.cols())
    throw std::invalid_argument("weighted_adjacency shape mismatch: " +
                                open_flags.shape_string() + " vs " +
                                closure_prob.shape_string());
  Matrix out(open_flags.rows(), open_flags.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j)
      out.at(i, j) = (1.0 - closure_prob.at(i, j)) * open_flags.at(i, j);
  return out;
}

}  // namespace evtol
