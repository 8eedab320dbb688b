#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pue/detect.hpp"

namespace pue {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;

  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

/// Points sorted by (fpr, tpr), starting at (0,0) and ending at (1,1).
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

/// One detector's threshold sweep: the raw per-threshold rates plus the
/// augmented curve they produce.
struct RocSweep {
  std::string detector;
  std::vector<double> thresholds;
  std::vector<RocPoint> rates;  // rates[k] belongs to thresholds[k]
  std::size_t n_trials = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  RocCurve curve;
};

/// Rates obtained by calling "attacker" whenever statistic > threshold.
/// A class with no trials contributes a rate of 0.
std::vector<RocPoint> threshold_rates(std::span<const double> statistics,
                                      std::span<const Hypothesis> truth,
                                      std::span<const double> thresholds);

/// Sorts, adds the (0,0) and (1,1) corners and integrates with the trapezoid rule.
RocCurve make_curve(std::vector<RocPoint> points);

double trapezoid_auc(std::span<const RocPoint> sorted_points);

/// Mann-Whitney estimate of Pr(stat | H1 > stat | H0), ties counted half.
double rank_auc(std::span<const double> statistics, std::span<const Hypothesis> truth);

/// Hanley-McNeil standard error of an AUC estimate.
double auc_standard_error(double auc, std::size_t n_positive, std::size_t n_negative);

RocSweep make_sweep(std::string detector, std::span<const double> statistics,
                    std::span<const Hypothesis> truth, std::vector<double> thresholds);

}  // namespace pue
