#include "pue/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "pue/error.hpp"
#include "pue/propagation.hpp"
#include "pue/sensing.hpp"

namespace pue {

namespace {

// Child stream tags inside one trial seed.
constexpr std::uint64_t kTruthStream = 0;
constexpr std::uint64_t kTopologyStream = 1;
constexpr std::uint64_t kMobilityStream = 2;
constexpr std::uint64_t kErrorStream = 3;
constexpr std::uint64_t kShadowStream = 4;

// Campaign-level salts for the BPNN training data and optimizer.
constexpr std::uint64_t kTrainWorldSalt = 0x5452'4149'4e57'4f52ULL;
constexpr std::uint64_t kTrainSgdSalt = 0x5452'4149'4e53'4744ULL;

constexpr double kNominalPuWatts = 100.0;

// Runs body(i) for i in [0, n). Work is strided across threads; results must
// be written to slot i so the outcome does not depend on `workers`.
template <typename Body>
void parallel_for(std::size_t n, std::size_t workers, Body&& body) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

Rng child_rng(std::uint64_t seed, std::uint64_t stream) { return make_rng(derive_seed(seed, stream)); }

}  // namespace

// ---------------------------------------------------------------------------

double NaiveResult::rate() const noexcept {
  return n_trials == 0 ? 0.0 : static_cast<double>(flagged) / static_cast<double>(n_trials);
}

double NaiveResult::standard_error() const noexcept {
  if (n_trials == 0) return 0.0;
  const double p = rate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n_trials));
}

NaiveResult run_naive_monte_carlo(const NaiveCampaign& campaign, std::size_t workers) {
  if (campaign.n_trials < 1) throw DimensionError("naive Monte Carlo needs at least one trial");
  if (!(campaign.ratio_r >= 1.0)) throw ValidityError("naive Monte Carlo: R must be >= 1");
  const FsplModel fspl(campaign.wavelength_m, campaign.antenna_product);
  const double field = std::max(campaign.field_side, 2.0 * campaign.r_crn);
  const bool attacker = campaign.truth == Hypothesis::kAttacker;
  const double p_tx = attacker ? kNominalPuWatts / campaign.ratio_r : kNominalPuWatts;

  std::vector<std::uint8_t> flagged(campaign.n_trials, 0);
  std::vector<double> max_fc(campaign.n_trials, 0.0);
  parallel_for(campaign.n_trials, workers, [&](std::size_t i) {
    Rng rng = child_rng(trial_seed(campaign.seed, i), kTopologyStream);
    const Topology topo = sample_topology(campaign.n_crs, campaign.r_crn, field, rng);
    const Point2D tx = attacker ? topo.attacker : topo.pu;
    std::vector<double> d_est(topo.n_crs());
    std::vector<double> d_fc(topo.n_crs());
    for (std::size_t k = 0; k < topo.n_crs(); ++k) {
      const double p_r = fspl_received_power(p_tx, distance(topo.crs[k], tx), fspl);
      d_est[k] = ideal_distance_estimate(kNominalPuWatts, p_r, fspl);
      d_fc[k] = distance(topo.crs[k], topo.fc);
      max_fc[i] = std::max(max_fc[i], d_fc[k]);
    }
    flagged[i] = naive_interval_test(d_est, d_fc, campaign.rel_tolerance) == Hypothesis::kAttacker;
  });

  NaiveResult result;
  result.n_trials = campaign.n_trials;
  result.flagged = static_cast<std::size_t>(std::count(flagged.begin(), flagged.end(), 1));
  result.max_dfc_sum = 2.0 * *std::max_element(max_fc.begin(), max_fc.end());
  return result;
}

double run_naive_monte_carlo(std::size_t n_crs, double r_crn, double ratio_r,
                             std::size_t n_trials, std::uint64_t seed) {
  NaiveCampaign c;
  c.n_crs = n_crs;
  c.r_crn = r_crn;
  c.ratio_r = ratio_r;
  c.n_trials = n_trials;
  c.seed = seed;
  return run_naive_monte_carlo(c).rate();
}

std::vector<NaiveSweepRow> run_naive_sweep(const Scenario& scenario, std::size_t workers) {
  scenario.validate();
  const std::vector<std::size_t> counts =
      scenario.n_sweep.empty() ? std::vector<std::size_t>{scenario.n_crs} : scenario.n_sweep;
  std::vector<NaiveSweepRow> rows;
  for (std::size_t n : counts) {
    NaiveCampaign c;
    c.n_crs = n;
    c.r_crn = scenario.r_crn;
    c.ratio_r = scenario.transmitter.power_ratio();
    c.n_trials = scenario.n_trials;
    c.seed = scenario.seed;
    c.field_side = scenario.field_side;
    c.wavelength_m = scenario.wavelength_m;
    c.antenna_product = scenario.antenna_product;
    rows.push_back({n, run_naive_monte_carlo(c, workers)});
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t campaign_seed, std::size_t index) noexcept {
  return derive_seed(campaign_seed, index);
}

Hypothesis draw_truth(const Scenario& scenario, std::uint64_t seed) {
  Rng rng = child_rng(seed, kTruthStream);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return unit(rng) < scenario.attacker_fraction ? Hypothesis::kAttacker : Hypothesis::kPu;
}

TrialWorld simulate_world(const Scenario& scenario, Hypothesis truth, std::uint64_t seed) {
  TrialWorld w;
  w.truth = truth;

  Rng topo_rng = child_rng(seed, kTopologyStream);
  w.topology = sample_topology(scenario.n_crs, scenario.r_crn, scenario.field_side, topo_rng);
  Rng mobility_rng = child_rng(seed, kMobilityStream);
  w.topology = move_pu(w.topology, scenario.pu_mobility, mobility_rng);

  Rng error_rng = child_rng(seed, kErrorStream);
  std::normal_distribution<double> unit_normal(0.0, 1.0);
  const double z_c = unit_normal(error_rng);
  const double z_gamma = unit_normal(error_rng);
  w.errors = {scenario.error_sigmas.sigma_eps_c * z_c,
              scenario.error_sigmas.sigma_eps_gamma * z_gamma};
  w.model_est = apply_errors(scenario.true_model, w.errors);
  if (!(w.model_est.gamma_coeff > 0.0))
    throw DomainError("drawn Gamma error makes the estimated path-loss slope non-positive");

  const bool attack = truth == Hypothesis::kAttacker;
  const Point2D tx = attack ? w.topology.attacker : w.topology.pu;
  const double p_t = attack ? scenario.transmitter.p_attacker_dbm : scenario.transmitter.p_pu_dbm;
  Rng shadow_rng = child_rng(seed, kShadowStream);
  w.rss_dbm = measure_all(w.topology, tx, p_t, scenario.true_model, shadow_rng);
  return w;
}

std::vector<GroupEstimate> rss_estimates(const Scenario& scenario, const TrialWorld& world) {
  const NeighborMatrix matrix = build_neighbor_matrix(world.topology, scenario.r_neighbor);
  const auto losses = group_average_loss(matrix, world.rss_dbm, scenario.transmitter.p_pu_dbm);
  return estimate_group_distances(losses, world.model_est, matrix);
}

double rss_statistic(const Scenario& scenario, const TrialWorld& world) {
  return estimate_spread(rss_estimates(scenario, world));
}

TrialOutcome run_trial(const Scenario& scenario, Hypothesis truth, double threshold_t,
                       std::uint64_t seed) {
  const TrialWorld world = simulate_world(scenario, truth, seed);
  const auto estimates = rss_estimates(scenario, world);
  return {truth, rss_threshold_test(estimates, threshold_t), estimate_spread(estimates)};
}

CampaignStatistics run_rss_campaign(const Scenario& scenario, std::size_t workers) {
  scenario.validate();
  CampaignStatistics out;
  out.truth.resize(scenario.n_trials);
  out.statistic.resize(scenario.n_trials);
  parallel_for(scenario.n_trials, workers, [&](std::size_t i) {
    const std::uint64_t seed = trial_seed(scenario.seed, i);
    out.truth[i] = draw_truth(scenario, seed);
    out.statistic[i] = rss_statistic(scenario, simulate_world(scenario, out.truth[i], seed));
  });
  return out;
}

RocSweep sweep_roc(const Scenario& scenario, const std::vector<double>& thresholds,
                   std::size_t workers) {
  if (thresholds.size() < 2) throw ValidityError("sweep_roc needs at least two thresholds");
  if (!(scenario.attacker_fraction > 0.0 && scenario.attacker_fraction < 1.0))
    throw ValidityError("sweep_roc needs attacker_fraction strictly between 0 and 1");
  const auto stats = run_rss_campaign(scenario, workers);
  return make_sweep("rss", stats.statistic, stats.truth, thresholds);
}

// ---------------------------------------------------------------------------

std::vector<bpnn::Features> raw_features(const TrialWorld& world) {
  std::vector<bpnn::Features> out;
  out.reserve(world.topology.n_crs());
  for (std::size_t k = 0; k < world.topology.n_crs(); ++k) {
    const Point2D& cr = world.topology.crs[k];
    out.push_back({cr.x - world.topology.fc.x, cr.y - world.topology.fc.y, world.rss_dbm[k]});
  }
  return out;
}

double bpnn_statistic(const BpnnDetector& detector, const TrialWorld& world,
                      Aggregation aggregation) {
  const auto features = raw_features(world);
  if (features.empty()) throw ValidityError("bpnn_statistic: no CRs");
  double acc = 0.0;
  for (const auto& f : features) {
    const double s = bpnn::score(detector.model, detector.scaler.apply(f));
    acc += aggregation == Aggregation::kMeanScore ? s : (s > 0.0 ? 1.0 : 0.0);
  }
  const double mean = acc / static_cast<double>(features.size());
  return aggregation == Aggregation::kMeanScore ? mean : mean - 0.5;
}

BpnnDetector train_bpnn_detector(const Scenario& scenario, std::size_t train_trials,
                                 std::uint64_t seed) {
  scenario.validate();
  if (train_trials < 1) throw ValidityError("BPNN needs at least one training trial");
  const std::uint64_t world_seed = mix_seed(seed ^ kTrainWorldSalt);

  std::vector<bpnn::Features> raw;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < train_trials; ++i) {
    const std::uint64_t ts = trial_seed(world_seed, i);
    const Hypothesis truth = draw_truth(scenario, ts);
    const TrialWorld world = simulate_world(scenario, truth, ts);
    for (const auto& f : raw_features(world)) {
      raw.push_back(f);
      labels.push_back(truth == Hypothesis::kAttacker ? bpnn::kAttackerClass : bpnn::kPuClass);
    }
  }

  BpnnDetector detector;
  detector.scaler = bpnn::FeatureScaler::fit(raw);
  std::vector<bpnn::Sample> samples(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k)
    samples[k] = {detector.scaler.apply(raw[k]), labels[k]};

  bpnn::TrainOptions options;
  options.epochs = scenario.bpnn.epochs;
  options.learning_rate = scenario.bpnn.learning_rate;
  options.loss = scenario.bpnn.loss;
  Rng sgd_rng = make_rng(mix_seed(seed ^ kTrainSgdSalt));
  detector.model = bpnn::train(samples, options, sgd_rng);
  return detector;
}

Comparison run_bpnn_comparison(const Scenario& scenario, std::size_t train_trials,
                               std::size_t test_trials, std::uint64_t seed,
                               std::size_t workers) {
  if (test_trials < 1) throw ValidityError("comparison needs at least one test trial");
  const BpnnDetector detector = train_bpnn_detector(scenario, train_trials, seed);

  std::vector<Hypothesis> truth(test_trials);
  std::vector<double> rss_stat(test_trials);
  std::vector<double> bpnn_stat(test_trials);
  parallel_for(test_trials, workers, [&](std::size_t i) {
    const std::uint64_t ts = trial_seed(seed, i);
    truth[i] = draw_truth(scenario, ts);
    const TrialWorld world = simulate_world(scenario, truth[i], ts);
    rss_stat[i] = rss_statistic(scenario, world);
    bpnn_stat[i] = bpnn_statistic(detector, world);
  });

  auto thresholds = scenario.thresholds.empty() ? default_thresholds() : scenario.thresholds;
  return {make_sweep("rss", rss_stat, truth, std::move(thresholds)),
          make_sweep("bpnn", bpnn_stat, truth, default_score_thresholds())};
}

}  // namespace pue
