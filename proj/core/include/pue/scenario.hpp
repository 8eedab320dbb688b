#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pue/bpnn.hpp"
#include "pue/propagation.hpp"

namespace pue {

enum class PropagationKind { kLogShadow, kFreeSpace };

struct BpnnSettings {
  std::size_t train_trials = 2000;
  std::size_t epochs = 30;
  double learning_rate = 0.1;
  bpnn::Loss loss = bpnn::Loss::kMeanSquared;

  friend bool operator==(const BpnnSettings&, const BpnnSettings&) = default;
};

/// Complete description of a Monte Carlo campaign. `seed` determines every
/// random draw.
struct Scenario {
  std::string id = "custom";

  std::size_t n_crs = 6;
  double r_crn = 500.0;
  double field_side = 3000.0;
  double r_neighbor = 100.0;
  double pu_mobility = 100.0;  // max PU displacement per trial, meters

  TransmitterProfile transmitter{80.0, 50.0};
  LogShadowModel true_model{111.76, 31.8, 8.0};
  ErrorSigmas error_sigmas{};

  std::size_t n_trials = 10000;
  std::uint64_t seed = 1;
  double attacker_fraction = 0.5;
  double eps_prime = 0.0;

  PropagationKind propagation = PropagationKind::kLogShadow;
  double wavelength_m = 0.5081;  // free-space runs only
  double antenna_product = 1.0;
  std::vector<std::size_t> n_sweep;  // CR counts for the naive sweep

  /// Spread thresholds in meters. Empty selects default_thresholds().
  std::vector<double> thresholds;

  BpnnSettings bpnn;

  /// Throws ConfigError describing the first invalid field.
  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// 0 followed by `count` log-spaced values from 1 m to 1e9 m.
std::vector<double> default_thresholds(std::size_t count = 400);

/// Score thresholds for the BPNN statistic, evenly spaced on [-1, 1].
std::vector<double> default_score_thresholds(std::size_t count = 201);

const std::vector<std::string>& preset_names();

/// "table3-baseline", "fig4-naive" or "usrp-emulation"; ConfigError otherwise.
Scenario preset_scenario(std::string_view name);

/// Copy of `base` with the attacker power lowered so that F = f_db.
Scenario with_power_gap(Scenario base, double f_db);

Scenario scenario_from_json(std::string_view text);
std::string scenario_to_json(const Scenario& scenario);
Scenario load_scenario_file(const std::string& path);

}  // namespace pue
