#include "pue/roc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pue/error.hpp"

namespace pue {

namespace {

void check_lengths(std::span<const double> statistics, std::span<const Hypothesis> truth) {
  if (statistics.size() != truth.size())
    throw ValidityError("ROC: statistics and truth differ in length");
}

}  // namespace

std::vector<RocPoint> threshold_rates(std::span<const double> statistics,
                                      std::span<const Hypothesis> truth,
                                      std::span<const double> thresholds) {
  check_lengths(statistics, truth);
  std::vector<double> pos;
  std::vector<double> neg;
  for (std::size_t i = 0; i < statistics.size(); ++i)
    (truth[i] == Hypothesis::kAttacker ? pos : neg).push_back(statistics[i]);
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());

  // Fraction of a sorted sample strictly above t.
  auto above = [](const std::vector<double>& v, double t) {
    if (v.empty()) return 0.0;
    const auto it = std::upper_bound(v.begin(), v.end(), t);
    return static_cast<double>(v.end() - it) / static_cast<double>(v.size());
  };

  std::vector<RocPoint> out;
  out.reserve(thresholds.size());
  for (double t : thresholds) out.push_back({above(neg, t), above(pos, t)});
  return out;
}

double trapezoid_auc(std::span<const RocPoint> sorted_points) {
  double area = 0.0;
  for (std::size_t i = 1; i < sorted_points.size(); ++i) {
    const auto& a = sorted_points[i - 1];
    const auto& b = sorted_points[i];
    area += (b.fpr - a.fpr) * 0.5 * (a.tpr + b.tpr);
  }
  return area;
}

RocCurve make_curve(std::vector<RocPoint> points) {
  points.push_back({0.0, 0.0});
  points.push_back({1.0, 1.0});
  std::sort(points.begin(), points.end(), [](const RocPoint& a, const RocPoint& b) {
    return a.fpr != b.fpr ? a.fpr < b.fpr : a.tpr < b.tpr;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  RocCurve curve;
  curve.auc = trapezoid_auc(points);
  curve.points = std::move(points);
  return curve;
}

double rank_auc(std::span<const double> statistics, std::span<const Hypothesis> truth) {
  check_lengths(statistics, truth);
  std::vector<std::size_t> order(statistics.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return statistics[a] < statistics[b]; });

  // Mid-ranks over tie blocks.
  double rank_sum_pos = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    while (hi < order.size() && statistics[order[hi]] == statistics[order[lo]]) ++hi;
    const double mid_rank = 0.5 * static_cast<double>(lo + 1 + hi);
    for (std::size_t k = lo; k < hi; ++k)
      if (truth[order[k]] == Hypothesis::kAttacker) {
        rank_sum_pos += mid_rank;
        ++n_pos;
      }
    lo = hi;
  }
  const std::size_t n_neg = statistics.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw ValidityError("rank_auc needs both classes");
  const double np = static_cast<double>(n_pos);
  return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

double auc_standard_error(double auc, std::size_t n_positive, std::size_t n_negative) {
  if (n_positive == 0 || n_negative == 0) throw ValidityError("AUC error needs both classes");
  const double np = static_cast<double>(n_positive);
  const double nn = static_cast<double>(n_negative);
  const double q1 = auc / (2.0 - auc);
  const double q2 = 2.0 * auc * auc / (1.0 + auc);
  const double var =
      (auc * (1.0 - auc) + (np - 1.0) * (q1 - auc * auc) + (nn - 1.0) * (q2 - auc * auc)) /
      (np * nn);
  return std::sqrt(std::max(var, 0.0));
}

RocSweep make_sweep(std::string detector, std::span<const double> statistics,
                    std::span<const Hypothesis> truth, std::vector<double> thresholds) {
  RocSweep sweep;
  sweep.detector = std::move(detector);
  sweep.rates = threshold_rates(statistics, truth, thresholds);
  sweep.thresholds = std::move(thresholds);
  sweep.n_trials = statistics.size();
  sweep.n_positive = static_cast<std::size_t>(
      std::count(truth.begin(), truth.end(), Hypothesis::kAttacker));
  sweep.n_negative = sweep.n_trials - sweep.n_positive;
  sweep.curve = make_curve(sweep.rates);
  return sweep;
}

}  // namespace pue
