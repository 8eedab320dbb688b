#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "pue/sensing.hpp"

namespace pue {

enum class Hypothesis { kPu, kAttacker };

std::string_view to_string(Hypothesis h) noexcept;

/// Interval-intersection test under exact free-space propagation.
///
/// Each CR i brackets the transmitter-to-FC distance in
/// [|d_i - d_i,fc|, d_i + d_i,fc]. The transmitter is taken to be the PU
/// iff all brackets intersect, i.e. min(d_i + d_i,fc) >= max|d_j - d_j,fc|.
/// `rel_tolerance` absorbs rounding for geometrically tight (collinear)
/// configurations.
///
/// A single CR always yields a non-empty bracket, so N = 1 never flags.
/// Throws ValidityError for mismatched or empty inputs and for non-positive
/// distances.
Hypothesis naive_interval_test(std::span<const double> d_est, std::span<const double> d_fc,
                               double rel_tolerance = 1e-9);

/// Spread statistic max(d_hat) - min(d_hat). Throws ValidityError for fewer
/// than two estimates.
double estimate_spread(std::span<const GroupEstimate> estimates);

/// PU iff the spread of estimated distances is at most `threshold_t`.
Hypothesis rss_threshold_test(std::span<const GroupEstimate> estimates, double threshold_t);

struct BoundParams {
  std::size_t n = 1;
  double r_crn = 1.0;
  double ratio_r = 1.0;
  double f_db = 0.0;
  double gamma_coeff = 1.0;
  double threshold_t = 0.0;
  double eps_prime = 0.0;

  /// Throws ValidityError when a field is outside its range.
  void validate() const;
};

/// Lower bound on the naive test's detection rate,
///   1 - (1 - ((r - s) / r)^2)^N,   s = max_dfc_sum / sqrt(R).
/// Throws ValidityError when s > r_crn.
double naive_detection_rate_bound(const BoundParams& params, double max_dfc_sum);

/// Upper bound on Pr(H0 | H1) for the RSS test. With s = T / 10^((F + eps') / Gamma):
/// 1 when s > r_crn, otherwise (1 - ((r - s) / r)^2)^N.
double fn_probability_bound(const BoundParams& params);

/// Advisory upper bound on Pr(H1 | H0) for the RSS test.
///
/// With u = T / 10^(eps' / Gamma) / r_crn (the ring width in units of
/// r_crn) this is 0 when u >= 2, otherwise 1 - ((alpha - u) / pi)^N where
/// cos(alpha) = 1 - u. The printed form subtracts a length from an angle;
/// expressing the width in units of r_crn is what makes it a number. The
/// base is clamped at zero.
double fp_probability_bound(const BoundParams& params);

}  // namespace pue
