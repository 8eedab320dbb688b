#include "pue/detect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pue/error.hpp"

namespace pue {

std::string_view to_string(Hypothesis h) noexcept {
  return h == Hypothesis::kPu ? "H0_pu" : "H1_attacker";
}

Hypothesis naive_interval_test(std::span<const double> d_est, std::span<const double> d_fc,
                               double rel_tolerance) {
  if (d_est.size() != d_fc.size())
    throw ValidityError("naive_interval_test: distance lists differ in length");
  if (d_est.empty()) throw ValidityError("naive_interval_test: no CRs");

  double min_upper = std::numeric_limits<double>::infinity();
  double max_lower = 0.0;
  for (std::size_t i = 0; i < d_est.size(); ++i) {
    if (!(d_est[i] > 0.0) || !(d_fc[i] > 0.0))
      throw ValidityError("naive_interval_test: distances must be positive");
    min_upper = std::min(min_upper, d_est[i] + d_fc[i]);
    max_lower = std::max(max_lower, std::abs(d_est[i] - d_fc[i]));
  }
  return min_upper >= max_lower * (1.0 - rel_tolerance) ? Hypothesis::kPu : Hypothesis::kAttacker;
}

double estimate_spread(std::span<const GroupEstimate> estimates) {
  if (estimates.size() < 2) throw ValidityError("spread needs at least two estimates");
  const auto [lo, hi] = std::minmax_element(
      estimates.begin(), estimates.end(),
      [](const GroupEstimate& a, const GroupEstimate& b) { return a.est_distance_m < b.est_distance_m; });
  return hi->est_distance_m - lo->est_distance_m;
}

Hypothesis rss_threshold_test(std::span<const GroupEstimate> estimates, double threshold_t) {
  if (!(threshold_t >= 0.0)) throw ValidityError("rss_threshold_test: threshold must be >= 0");
  return estimate_spread(estimates) <= threshold_t ? Hypothesis::kPu : Hypothesis::kAttacker;
}

void BoundParams::validate() const {
  if (n < 1) throw ValidityError("bound: N must be at least 1");
  if (!(r_crn > 0.0)) throw ValidityError("bound: r_crn must be positive");
  if (!(ratio_r >= 1.0)) throw ValidityError("bound: R must be at least 1");
  if (!(threshold_t >= 0.0)) throw ValidityError("bound: T must be non-negative");
  if (!(gamma_coeff > 0.0)) throw ValidityError("bound: Gamma must be positive");
  if (!std::isfinite(f_db) || !std::isfinite(eps_prime))
    throw ValidityError("bound: F and eps' must be finite");
}

namespace {

// Probability that N uniform disc points all land in the outer ring of width s.
double outer_ring_probability(double r, double s, std::size_t n) {
  const double inner = (r - s) / r;
  return std::pow(1.0 - inner * inner, static_cast<double>(n));
}

}  // namespace

double naive_detection_rate_bound(const BoundParams& params, double max_dfc_sum) {
  params.validate();
  if (!(max_dfc_sum >= 0.0)) throw ValidityError("bound: max_dfc_sum must be non-negative");
  const double s = max_dfc_sum / std::sqrt(params.ratio_r);
  if (s > params.r_crn)
    throw ValidityError("naive bound undefined: max(d_i,fc + d_j,fc) / sqrt(R) exceeds r_crn");
  return std::clamp(1.0 - outer_ring_probability(params.r_crn, s, params.n), 0.0, 1.0);
}

double fn_probability_bound(const BoundParams& params) {
  params.validate();
  const double s =
      params.threshold_t / std::pow(10.0, (params.f_db + params.eps_prime) / params.gamma_coeff);
  if (s > params.r_crn) return 1.0;
  return std::clamp(outer_ring_probability(params.r_crn, s, params.n), 0.0, 1.0);
}

double fp_probability_bound(const BoundParams& params) {
  params.validate();
  const double width = params.threshold_t / std::pow(10.0, params.eps_prime / params.gamma_coeff);
  const double u = width / params.r_crn;
  if (u >= 2.0) return 0.0;
  const double alpha = std::acos(std::clamp(1.0 - u, -1.0, 1.0));
  const double base = std::max(0.0, (alpha - u) / std::numbers::pi);
  return std::clamp(1.0 - std::pow(base, static_cast<double>(params.n)), 0.0, 1.0);
}

}  // namespace pue
