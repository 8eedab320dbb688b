#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pue/bpnn.hpp"
#include "pue/detect.hpp"
#include "pue/roc.hpp"
#include "pue/scenario.hpp"

namespace pue {

// ---------------------------------------------------------------------------
// Naive (free-space) Monte Carlo

struct NaiveCampaign {
  std::size_t n_crs = 4;
  double r_crn = 500.0;
  double ratio_r = 1e6;
  std::size_t n_trials = 100000;
  std::uint64_t seed = 1;
  Hypothesis truth = Hypothesis::kAttacker;
  double field_side = 3000.0;  // where the PU and FC live for PU-truth runs
  double wavelength_m = 0.5081;
  double antenna_product = 1.0;
  double rel_tolerance = 1e-9;
};

struct NaiveResult {
  std::size_t n_trials = 0;
  std::size_t flagged = 0;  // trials where the test returned H1
  /// Detection rate for attacker truth, false-positive rate for PU truth.
  double rate() const noexcept;
  double standard_error() const noexcept;
  /// Largest d_i,fc + d_j,fc seen in any trial.
  double max_dfc_sum = 0.0;
};

NaiveResult run_naive_monte_carlo(const NaiveCampaign& campaign, std::size_t workers = 1);

/// Detection accuracy of the naive test against an attacker with P_pu / R.
double run_naive_monte_carlo(std::size_t n_crs, double r_crn, double ratio_r,
                             std::size_t n_trials, std::uint64_t seed);

struct NaiveSweepRow {
  std::size_t n_crs = 0;
  NaiveResult result;
};

/// One naive campaign per entry of scenario.n_sweep, R taken from the
/// scenario's transmitter profile. Each N reuses the same trial seeds.
std::vector<NaiveSweepRow> run_naive_sweep(const Scenario& scenario, std::size_t workers = 1);

// ---------------------------------------------------------------------------
// RSS detector trials

struct TrialWorld {
  Topology topology;
  Hypothesis truth = Hypothesis::kPu;
  ModelErrors errors;
  LogShadowModel model_est;
  std::vector<double> rss_dbm;
};

struct TrialOutcome {
  Hypothesis truth = Hypothesis::kPu;
  Hypothesis decision = Hypothesis::kPu;
  double statistic = 0.0;
};

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t index) noexcept;

/// Truth of the trial seeded with `seed`: attacker with probability attacker_fraction.
Hypothesis draw_truth(const Scenario& scenario, std::uint64_t seed);

/// Topology (with one PU move), per-trial model errors and the RSS seen by
/// every CR when the transmitter for `truth` is on the air. Topology,
/// shadowing and model errors come from separate child streams of
/// `seed`, so changing the error sigmas leaves every other draw intact.
TrialWorld simulate_world(const Scenario& scenario, Hypothesis truth, std::uint64_t seed);

/// FC side of the RSS detector on a simulated world: grouping, distance
/// inversion with the estimated model, spread of the estimates.
std::vector<GroupEstimate> rss_estimates(const Scenario& scenario, const TrialWorld& world);
double rss_statistic(const Scenario& scenario, const TrialWorld& world);

TrialOutcome run_trial(const Scenario& scenario, Hypothesis truth, double threshold_t,
                       std::uint64_t seed);

/// Spread statistic and truth for each of scenario.n_trials trials.
struct CampaignStatistics {
  std::vector<Hypothesis> truth;
  std::vector<double> statistic;
};

CampaignStatistics run_rss_campaign(const Scenario& scenario, std::size_t workers = 1);

/// Threshold sweep with common random numbers: every threshold sees the same
/// trials. Throws ValidityError for fewer than two thresholds or a scenario
/// without both classes.
RocSweep sweep_roc(const Scenario& scenario, const std::vector<double>& thresholds,
                   std::size_t workers = 1);

// ---------------------------------------------------------------------------
// BPNN baseline

enum class Aggregation { kMeanScore, kMajorityVote };

struct BpnnDetector {
  bpnn::Model model;
  bpnn::FeatureScaler scaler;
};

/// Raw per-CR features: position relative to the FC and RSS in dBm.
std::vector<bpnn::Features> raw_features(const TrialWorld& world);

/// Network-level statistic: mean per-CR score, or the fraction of CRs voting
/// "attacker" minus one half.
double bpnn_statistic(const BpnnDetector& detector, const TrialWorld& world,
                      Aggregation aggregation = Aggregation::kMeanScore);

/// Labeled per-CR samples from `train_trials` worlds of the scenario's true
/// propagation, scaled by a scaler fitted on them, and the trained network.
BpnnDetector train_bpnn_detector(const Scenario& scenario, std::size_t train_trials,
                                 std::uint64_t seed);

struct Comparison {
  RocSweep proposed;
  RocSweep bpnn;
};

/// Trains the baseline, then scores both detectors on the same test worlds.
/// Test trial i uses trial_seed(seed, i), so `proposed` matches sweep_roc
/// for a scenario seeded with `seed`.
Comparison run_bpnn_comparison(const Scenario& scenario, std::size_t train_trials,
                               std::size_t test_trials, std::uint64_t seed,
                               std::size_t workers = 1);

}  // namespace pue
