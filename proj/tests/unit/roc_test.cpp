#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pue/error.hpp"
#include "pue/report.hpp"
#include "pue/roc.hpp"

namespace pue {
namespace {

constexpr Hypothesis H0 = Hypothesis::kPu;
constexpr Hypothesis H1 = Hypothesis::kAttacker;

TEST(ThresholdRates, CountsStrictlyAbove) {
  const std::vector<double> stat{1.0, 2.0, 3.0, 4.0};
  const std::vector<Hypothesis> truth{H0, H0, H1, H1};
  const std::vector<double> thr{0.0, 2.0, 3.0, 10.0};
  const auto r = threshold_rates(stat, truth, thr);
  EXPECT_EQ(r[0], (RocPoint{1.0, 1.0}));
  EXPECT_EQ(r[1], (RocPoint{0.0, 1.0}));
  EXPECT_EQ(r[2], (RocPoint{0.0, 0.5}));
  EXPECT_EQ(r[3], (RocPoint{0.0, 0.0}));
}

TEST(ThresholdRates, LengthMismatch) {
  const std::vector<double> stat{1.0};
  const std::vector<Hypothesis> truth{H0, H1};
  const std::vector<double> thr{0.0};
  EXPECT_THROW(threshold_rates(stat, truth, thr), ValidityError);
}

TEST(Curve, PerfectSeparation) {
  const auto c = make_curve({{0.0, 1.0}});
  EXPECT_DOUBLE_EQ(c.auc, 1.0);
  EXPECT_EQ(c.points.front(), (RocPoint{0.0, 0.0}));
  EXPECT_EQ(c.points.back(), (RocPoint{1.0, 1.0}));
}

TEST(Curve, ChanceDiagonal) {
  EXPECT_DOUBLE_EQ(make_curve({{0.25, 0.25}, {0.5, 0.5}}).auc, 0.5);
  EXPECT_DOUBLE_EQ(make_curve({}).auc, 0.5);
}

TEST(Auc, TrapezoidMatchesRankStatistic) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    std::bernoulli_distribution coin(0.4);
    std::vector<double> stat;
    std::vector<Hypothesis> truth;
    for (int k = 0; k < 300; ++k) {
      const bool att = coin(rng);
      truth.push_back(att ? H1 : H0);
      // Rounded so ties occur.
      stat.push_back(std::round(4.0 * (noise(rng) + (att ? 0.8 : 0.0))) / 4.0);
    }
    if (std::count(truth.begin(), truth.end(), H1) == 0) continue;
    std::vector<double> thr = stat;
    thr.push_back(-std::numeric_limits<double>::infinity());
    std::sort(thr.begin(), thr.end());
    thr.erase(std::unique(thr.begin(), thr.end()), thr.end());
    const auto sweep = make_sweep("x", stat, truth, thr);
    EXPECT_NEAR(sweep.curve.auc, rank_auc(stat, truth), 1e-12);
  }
}

TEST(Auc, StaircaseIsMonotone) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> stat;
  std::vector<Hypothesis> truth;
  for (int k = 0; k < 500; ++k) {
    const bool att = k % 3 == 0;
    truth.push_back(att ? H1 : H0);
    stat.push_back(u(rng) + (att ? 0.3 : 0.0));
  }
  std::vector<double> thr;
  for (int k = 0; k <= 100; ++k) thr.push_back(-0.1 + 0.015 * k);
  const auto sweep = make_sweep("x", stat, truth, thr);
  for (std::size_t k = 1; k < sweep.rates.size(); ++k) {
    EXPECT_LE(sweep.rates[k].fpr, sweep.rates[k - 1].fpr);
    EXPECT_LE(sweep.rates[k].tpr, sweep.rates[k - 1].tpr);
  }
  for (std::size_t k = 1; k < sweep.curve.points.size(); ++k) {
    EXPECT_GE(sweep.curve.points[k].fpr, sweep.curve.points[k - 1].fpr);
    EXPECT_GE(sweep.curve.points[k].tpr, sweep.curve.points[k - 1].tpr);
  }
  EXPECT_EQ(sweep.n_positive + sweep.n_negative, 500u);
  EXPECT_EQ(sweep.n_positive, 167u);
}

TEST(Auc, RankNeedsBothClasses) {
  const std::vector<double> stat{1.0, 2.0};
  const std::vector<Hypothesis> truth{H0, H0};
  EXPECT_THROW(rank_auc(stat, truth), ValidityError);
}

TEST(Auc, HanleyMcNeil) {
  // A = 0.5, 50/50: Q1 = 1/3, Q2 = 1/3, var = (0.25 + 2 * 49 * (1/3 - 1/4)) / 2500.
  const double expected = std::sqrt((0.25 + 98.0 * (1.0 / 3.0 - 0.25)) / 2500.0);
  EXPECT_NEAR(auc_standard_error(0.5, 50, 50), expected, 1e-15);
  EXPECT_DOUBLE_EQ(auc_standard_error(1.0, 10, 10), 0.0);
  EXPECT_THROW(auc_standard_error(0.5, 0, 10), ValidityError);
}

TEST(Report, RocCsvLayout) {
  const std::vector<double> stat{1.0, 5.0};
  const std::vector<Hypothesis> truth{H0, H1};
  std::vector<RocSweep> sweeps{make_sweep("rss", stat, truth, {0.0, 2.5})};
  const std::string csv = roc_csv(sweeps, "demo");
  EXPECT_EQ(csv,
            "threshold,fpr,tpr,n_trials,scenario_id,detector\n"
            "0,1,1,2,demo,rss\n"
            "2.5,0,1,2,demo,rss\n");
  EXPECT_EQ(auc_summary(sweeps), "auc,rss,1\n");
}

TEST(Report, SixSignificantDigits) {
  EXPECT_EQ(format_sig6(0.123456789), "0.123457");
  EXPECT_EQ(format_sig6(1234567.0), "1.23457e+06");
  EXPECT_EQ(format_sig6(0.0), "0");
}

}  // namespace
}  // namespace pue
