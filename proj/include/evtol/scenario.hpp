#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "evtol/matrix.hpp"

namespace evtol {

// Simulation clock: integer seconds since midnight. Minute-valued quantities
// are converted exactly; sub-second leg durations are rounded to the nearest
// second when events are scheduled.
using SimTime = std::int64_t;

constexpr SimTime kSecondsPerHour = 3600;
constexpr int kOperatingStartHour = 6;   // 6:00 am
constexpr int kOperatingEndHour = 18;    // 6:00 pm
constexpr int kOperatingHours = kOperatingEndHour - kOperatingStartHour;

inline int hour_of(SimTime t) { return static_cast<int>(t / kSecondsPerHour); }

inline SimTime minutes_to_seconds(double minutes) {
  return static_cast<SimTime>(std::llround(minutes * 60.0));
}

// How realized per-hour demand is drawn from the expected profile.
enum class DemandSampling { poisson, expected };

// Full description of a network instance: geometry, fleet, pricing,
// uncertainty levels, and the generator knobs for the synthetic demand model.
// Serializes to/from JSON with snake_case field names.
struct ScenarioConfig {
  double area_side_miles = 50.0;
  int num_vertiports = 8;
  std::vector<std::array<double, 2>> vertiport_coords;
  std::vector<int> vertistop_ids = {1, 6};
  std::vector<int> high_demand_ids = {0, 4, 6, 7};
  int num_aircraft = 40;
  int seat_capacity = 4;
  double battery_max = 110.0;        // kWh
  int park_capacity = 10;            // per vertiport
  int charge_stations = 6;           // per vertiport (0 at vertistops)
  double cruise_speed = 74.5;        // mph
  double max_range = 50.0;           // miles
  double op_cost_per_mile = 0.64;    // USD per passenger-mile
  double charge_rate = 150.0;        // kW
  double elec_price = 0.20;          // USD/kWh
  double base_fare = 5.0;            // USD
  double idle_minutes = 15.0;
  double corridor_headway = 90.0;    // seconds between same-corridor entries
  double energy_per_mile = 2.2;      // kWh/mile; default exhausts battery_max at max_range
  SimTime episode_start = 6 * kSecondsPerHour;
  SimTime episode_end = 18 * kSecondsPerHour;
  Matrix p_closure;                  // N x N, symmetric, entries in [0, 0.05]
  std::vector<double> p_fail;        // N_K entries in [0, 0.005]
  std::vector<double> tod_mean;      // minutes; empty -> drawn per episode in [0, 30)
  double tod_std = 6.0;              // minutes
  std::uint64_t seed = 0;

  // Artifact knobs (see README for the underlying modeling choices).
  double battery_safety_margin_frac = 0.05;  // of battery_max, added to the c2 check
  double demand_base_rate = 4.0;             // expected passengers/hour per OD pair
  double demand_vb_multiplier = 3.0;         // high-demand <-> high-demand pairs
  double demand_peak_multiplier = 2.5;       // directional peak-hour boost
  double demand_noise_sigma = 0.2;           // log-normal per-entry episode noise
  bool q_factor_log10 = false;               // false: natural log in the fare surge factor
  bool revenue_includes_base_fare = true;
  DemandSampling demand_sampling = DemandSampling::poisson;

  SimTime episode_duration() const { return episode_end - episode_start; }

  bool is_vertistop(int i) const;
  bool is_high_demand(int i) const;

  // Throws std::invalid_argument / InfeasibleConfigError on violated bounds.
  void validate() const;

  std::string to_json_string(int indent = 2) const;
  static ScenarioConfig from_json_string(const std::string& text);

  static ScenarioConfig load(const std::string& path);
  void save(const std::string& path) const;

  // Built-in instances: "paper8x40" (8 vertiports / 40 aircraft evaluation
  // network), "toy3x4" (3 vertiports / 4 aircraft, 2-hour episodes, suited to
  // desk-scale training) and "tiny2x1" (2 vertiports / 1 aircraft, fully
  // deterministic; used by the enumeration tests).
  static ScenarioConfig preset(std::string_view name);
};

}  // namespace evtol
