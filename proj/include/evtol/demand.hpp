#pragma once

#include <cstdint>
#include <string>

#include "evtol/matrix.hpp"
#include "evtol/rng.hpp"
#include "evtol/scenario.hpp"

namespace evtol {

// Expected hourly passenger demand over the operating day (hours 6..17).
// Entries are non-negative reals; the diagonal is zero.
class DemandProfile {
 public:
  DemandProfile() = default;
  DemandProfile(int num_vertiports)
      : n_(num_vertiports), q_(num_vertiports, num_vertiports, kOperatingHours) {}

  int num_vertiports() const { return n_; }

  // Expected demand for origin i, destination j, at hour-of-day `hour`.
  // Hours outside the operating day have zero demand.
  double at(int i, int j, int hour) const {
    if (hour < kOperatingStartHour || hour >= kOperatingEndHour) return 0.0;
    return q_.at(i, j, hour - kOperatingStartHour);
  }
  double& slot(int i, int j, int hour) {
    return q_.at(i, j, hour - kOperatingStartHour);
  }

  const Grid3& grid() const { return q_; }

  std::string to_json_string() const;

 private:
  int n_ = 0;
  Grid3 q_;
};

// Synthetic generator: base rate per OD pair, boosted for pairs between
// high-demand vertiports, directional morning/evening peaks per the commuter
// pattern, and multiplicative log-normal per-entry noise. Deterministic for a
// fixed seed.
DemandProfile build_demand_profile(const ScenarioConfig& cfg, std::uint64_t seed);

// Realized demand for one (i, j, hour) cell. Poisson with mean Q under
// DemandSampling::poisson; llround(Q) under DemandSampling::expected.
std::int64_t sample_actual_demand(const DemandProfile& q, int i, int j, int hour,
                                  DemandSampling mode, Rng& rng);

}  // namespace evtol
