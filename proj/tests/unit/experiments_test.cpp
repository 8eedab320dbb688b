#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pue/error.hpp"
#include "pue/experiments.hpp"
#include "pue/report.hpp"

namespace pue {
namespace {

Scenario small_baseline(std::size_t trials = 2000) {
  Scenario s = preset_scenario("table3-baseline");
  s.n_trials = trials;
  return s;
}

TEST(Naive, EqualPowerIsNeverDetected) {
  EXPECT_EQ(run_naive_monte_carlo(5, 500.0, 1.0, 2000, 3), 0.0);
}

TEST(Naive, SingleCrCannotDetect) {
  EXPECT_EQ(run_naive_monte_carlo(1, 500.0, 1e6, 2000, 3), 0.0);
}

TEST(Naive, PuTruthHasNoFalsePositives) {
  NaiveCampaign c;
  c.n_crs = 6;
  c.n_trials = 5000;
  c.truth = Hypothesis::kPu;
  EXPECT_EQ(run_naive_monte_carlo(c).flagged, 0u);
}

TEST(Naive, LargeRatioManyCrsDetects) {
  EXPECT_GT(run_naive_monte_carlo(6, 500.0, 1e6, 5000, 3), 0.99);
}

TEST(Naive, WorkerCountDoesNotMatter) {
  NaiveCampaign c;
  c.n_crs = 2;
  c.ratio_r = 100.0;
  c.n_trials = 4000;
  const NaiveResult a = run_naive_monte_carlo(c, 1);
  const NaiveResult b = run_naive_monte_carlo(c, 3);
  EXPECT_EQ(a.flagged, b.flagged);
  EXPECT_EQ(a.max_dfc_sum, b.max_dfc_sum);
  EXPECT_LE(a.max_dfc_sum, 2.0 * c.r_crn);
}

TEST(Naive, SweepUsesScenarioRatio) {
  Scenario s = preset_scenario("fig4-naive");
  s.n_trials = 3000;
  s.n_sweep = {1, 4};
  const auto rows = run_naive_sweep(s);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].result.rate(), 0.0);
  EXPECT_GT(rows[1].result.rate(), 0.99);
  const std::string csv = naive_sweep_csv(rows, s.id);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n_crs,accuracy,std_error,n_trials,scenario_id,detector");
}

TEST(Trial, LargePowerGapIsFlagged) {
  Scenario s = with_power_gap(small_baseline(), 60.0);
  s.true_model.shadow_sigma = 0.0;
  s.r_neighbor = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const TrialOutcome o = run_trial(s, Hypothesis::kAttacker, 1000.0, seed);
    EXPECT_EQ(o.decision, Hypothesis::kAttacker) << "seed " << seed;
  }
}

TEST(Trial, NoiselessPuEstimatesAreExact) {
  Scenario s = small_baseline();
  s.true_model.shadow_sigma = 0.0;
  s.r_neighbor = 0.0;
  const TrialWorld w = simulate_world(s, Hypothesis::kPu, 42);
  const auto e = rss_estimates(s, w);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const double d = distance(w.topology.crs[k], w.topology.pu);
    EXPECT_NEAR(e[k].est_distance_m, d, 1e-9 * d);
  }
}

TEST(Trial, Deterministic) {
  const Scenario s = small_baseline();
  const TrialOutcome a = run_trial(s, Hypothesis::kAttacker, 500.0, 77);
  const TrialOutcome b = run_trial(s, Hypothesis::kAttacker, 500.0, 77);
  EXPECT_EQ(a.statistic, b.statistic);
  EXPECT_EQ(a.decision, b.decision);
}

TEST(Trial, ErrorSigmasLeaveOtherDrawsAlone) {
  Scenario a = small_baseline();
  Scenario b = a;
  b.error_sigmas = {4.0, 1.0};
  const TrialWorld wa = simulate_world(a, Hypothesis::kPu, 5);
  const TrialWorld wb = simulate_world(b, Hypothesis::kPu, 5);
  EXPECT_EQ(wa.rss_dbm, wb.rss_dbm);
  EXPECT_EQ(wa.topology.pu, wb.topology.pu);
  EXPECT_NE(wa.model_est, wb.model_est);
}

// Empirical P_fn with noiseless propagation stays under the analytic bound.
TEST(Trial, MissRateUnderAnalyticBound) {
  for (std::size_t n : {4u, 8u}) {
    for (double f : {30.0, 50.0}) {
      for (double t : {500.0, 1500.0}) {
        Scenario s = with_power_gap(small_baseline(), f);
        s.n_crs = n;
        s.true_model.shadow_sigma = 0.0;
        s.r_neighbor = 0.0;
        s.attacker_fraction = 1.0;
        s.n_trials = 3000;
        const auto stats = run_rss_campaign(s);
        std::size_t missed = 0;
        for (double v : stats.statistic) missed += v <= t;
        const double p = static_cast<double>(missed) / s.n_trials;
        const double se = std::sqrt(std::max(p * (1.0 - p), 1e-12) / s.n_trials);
        BoundParams bp{n, s.r_crn, 1.0, f, s.true_model.gamma_coeff, t, 0.0};
        EXPECT_LE(p, fn_probability_bound(bp) + 3.0 * se) << n << " " << f << " " << t;
      }
    }
  }
}

TEST(Sweep, EndpointsAndWorkers) {
  const Scenario s = small_baseline(1500);
  const auto thr = default_thresholds(100);
  const RocSweep a = sweep_roc(s, thr, 1);
  const RocSweep b = sweep_roc(s, thr, 4);
  EXPECT_EQ(a.rates, b.rates);
  EXPECT_EQ(a.rates.front(), (RocPoint{1.0, 1.0}));
  EXPECT_EQ(a.rates.back(), (RocPoint{0.0, 0.0}));
  EXPECT_EQ(roc_csv(std::vector<RocSweep>{a}, s.id), roc_csv(std::vector<RocSweep>{b}, s.id));
  EXPECT_GT(a.curve.auc, 0.5);
}

TEST(Sweep, Preconditions) {
  Scenario s = small_baseline(50);
  EXPECT_THROW(sweep_roc(s, {1.0}), ValidityError);
  s.attacker_fraction = 1.0;
  EXPECT_THROW(sweep_roc(s, {0.0, 1.0}), ValidityError);
}

TEST(Sweep, AucMatchesRankStatistic) {
  const Scenario s = small_baseline(1500);
  const auto stats = run_rss_campaign(s);
  std::vector<double> thr = stats.statistic;
  thr.push_back(-1.0);
  std::sort(thr.begin(), thr.end());
  const RocSweep sw = make_sweep("rss", stats.statistic, stats.truth, thr);
  EXPECT_NEAR(sw.curve.auc, rank_auc(stats.statistic, stats.truth), 1e-12);
}

TEST(Sweep, AucFallsWithModelError) {
  Scenario s = with_power_gap(small_baseline(4000), 30.0);
  s.n_crs = 4;
  const auto thr = default_thresholds();
  const double clean = sweep_roc(s, thr).curve.auc;
  s.error_sigmas = {6.0, 1.5};
  const double noisy = sweep_roc(s, thr).curve.auc;
  EXPECT_GT(clean, noisy);
}

TEST(Sweep, AucRisesWithPowerGap) {
  Scenario s = small_baseline(3000);
  const auto thr = default_thresholds();
  const double low = sweep_roc(with_power_gap(s, 20.0), thr).curve.auc;
  const double high = sweep_roc(with_power_gap(s, 60.0), thr).curve.auc;
  EXPECT_GT(high, low);
  EXPECT_GT(high, 0.95);
}

TEST(Bpnn, FeaturesRelativeToFc) {
  const TrialWorld w = simulate_world(small_baseline(), Hypothesis::kPu, 9);
  const auto f = raw_features(w);
  ASSERT_EQ(f.size(), w.topology.n_crs());
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_DOUBLE_EQ(f[k][0], w.topology.crs[k].x - w.topology.fc.x);
    EXPECT_DOUBLE_EQ(f[k][2], w.rss_dbm[k]);
  }
}

TEST(Bpnn, ComparisonIsDeterministicAndAlignsWithSweep) {
  Scenario s = small_baseline(600);
  s.bpnn.epochs = 5;
  const Comparison a = run_bpnn_comparison(s, 200, 600, s.seed, 1);
  const Comparison b = run_bpnn_comparison(s, 200, 600, s.seed, 3);
  EXPECT_EQ(a.bpnn.rates, b.bpnn.rates);
  EXPECT_EQ(a.proposed.rates, b.proposed.rates);
  const RocSweep direct = sweep_roc(s, default_thresholds());
  EXPECT_EQ(a.proposed.rates, direct.rates);
  EXPECT_GE(a.bpnn.curve.auc, 0.0);
  EXPECT_LE(a.bpnn.curve.auc, 1.0);
}

TEST(Bpnn, MajorityVoteInRange) {
  Scenario s = small_baseline();
  s.bpnn.epochs = 3;
  const BpnnDetector det = train_bpnn_detector(s, 100, 4);
  const TrialWorld w = simulate_world(s, Hypothesis::kAttacker, 3);
  const double v = bpnn_statistic(det, w, Aggregation::kMajorityVote);
  EXPECT_GE(v, -0.5);
  EXPECT_LE(v, 0.5);
  const double m = bpnn_statistic(det, w);
  EXPECT_GE(m, -1.0);
  EXPECT_LE(m, 1.0);
}

}  // namespace
}  // namespace pue
