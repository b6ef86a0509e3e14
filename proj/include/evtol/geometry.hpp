#pragma once

#include "evtol/matrix.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

// Pure geometry/energy computations over the vertiport network. Routes are
// straight lines flown at constant cruise speed.

// Euclidean distance in miles between two distinct vertiports.
// Throws std::invalid_argument on unknown ids or i == j.
double distance(int i, int j, const ScenarioConfig& cfg);

// Leg duration in minutes at cruise speed. Throws RangeExceededError when the
// leg exceeds cfg.max_range.
double flight_time_minutes(int i, int j, const ScenarioConfig& cfg);

// Charge drawn by the leg, in kWh.
double energy_required_kwh(int i, int j, const ScenarioConfig& cfg);

// Remaining charge after flying the leg. Throws ConstraintViolationError when
// battery_kwh cannot cover the leg; unreachable under the feasibility mask.
double battery_after_leg_kwh(double battery_kwh, int i, int j, const ScenarioConfig& cfg);

// Minutes to restore `deficit_kwh` at the vertiport charging rate.
double charging_duration_minutes(double deficit_kwh, const ScenarioConfig& cfg);

// Elementwise (1 - closure_prob) * open_flag. Both inputs must be square and
// of equal shape; output is symmetric whenever the inputs are.
Matrix weighted_adjacency(const Matrix& open_flags, const Matrix& closure_prob);

}  // namespace evtol
