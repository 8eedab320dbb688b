#include "pue/propagation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pue/error.hpp"

namespace pue {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) throw DomainError("watts_to_dbm: power must be positive");
  return 10.0 * std::log10(watts) + 30.0;
}

double dbw_to_dbm(double dbw) noexcept { return dbw + 30.0; }

FsplModel::FsplModel(double wavelength_m, double antenna_product)
    : wavelength_(wavelength_m), antenna_product_(antenna_product) {
  if (!(wavelength_m > 0.0) || !std::isfinite(wavelength_m))
    throw DomainError("FsplModel: wavelength must be positive");
  if (!(antenna_product > 0.0) || !std::isfinite(antenna_product))
    throw DomainError("FsplModel: antenna product must be positive");
  m_ = std::sqrt(antenna_product_) * wavelength_ / (4.0 * std::numbers::pi);
}

FsplModel FsplModel::from_frequency(double freq_hz, double antenna_product) {
  if (!(freq_hz > 0.0)) throw DomainError("FsplModel: frequency must be positive");
  return FsplModel(kSpeedOfLight / freq_hz, antenna_product);
}

double fspl_received_power(double p_t_watts, double d_m, const FsplModel& model) {
  if (!(p_t_watts > 0.0)) throw DomainError("fspl_received_power: p_t must be positive");
  if (!(d_m > 0.0)) throw DomainError("fspl_received_power: distance must be positive");
  const double ratio = model.distance_constant() / d_m;
  return p_t_watts * ratio * ratio;
}

double ideal_distance_estimate(double p_assumed_watts, double p_r_watts, const FsplModel& model) {
  if (!(p_assumed_watts > 0.0))
    throw DomainError("ideal_distance_estimate: assumed power must be positive");
  if (!(p_r_watts > 0.0))
    throw DomainError("ideal_distance_estimate: received power must be positive");
  return model.distance_constant() * std::sqrt(p_assumed_watts / p_r_watts);
}

void LogShadowModel::validate() const {
  require_finite(c, "LogShadowModel.c");
  require_finite(gamma_coeff, "LogShadowModel.gamma_coeff");
  require_finite(shadow_sigma, "LogShadowModel.shadow_sigma");
  if (!(gamma_coeff > 0.0)) throw DomainError("LogShadowModel: gamma_coeff must be positive");
  if (shadow_sigma < 0.0) throw DomainError("LogShadowModel: shadow_sigma must be non-negative");
}

double LogShadowModel::mean_loss(double d_m) const {
  if (!(d_m > 0.0)) throw DomainError("path loss: distance must be positive");
  return c + gamma_coeff * std::log10(d_m);
}

LogShadowModel apply_errors(const LogShadowModel& best, const ModelErrors& errors) {
  LogShadowModel est = best;
  est.c += errors.eps_c;
  est.gamma_coeff += errors.eps_gamma;
  return est;
}

void TransmitterProfile::validate() const {
  require_finite(p_pu_dbm, "p_pu");
  require_finite(p_attacker_dbm, "p_attacker");
  if (!(p_pu_dbm > p_attacker_dbm))
    throw DomainError("TransmitterProfile: PU power must exceed attacker power");
}

double TransmitterProfile::power_ratio() const noexcept {
  return std::pow(10.0, power_gap_db() / 10.0);
}

double lognormal_path_loss(double d_m, const LogShadowModel& model, Rng& rng) {
  const double mean = model.mean_loss(d_m);
  if (model.shadow_sigma == 0.0) return mean;
  std::normal_distribution<double> shadow(0.0, model.shadow_sigma);
  return mean + shadow(rng);
}

double estimated_distance_under_error(double avg_loss_db, const LogShadowModel& model_est) {
  if (!(model_est.gamma_coeff > 0.0))
    throw DomainError("estimated_distance_under_error: gamma_coeff must be positive");
  return std::pow(10.0, (avg_loss_db - model_est.c) / model_est.gamma_coeff);
}

double predicted_distance_estimate(double d_true_m, const ModelErrors& errors, double gamma_est,
                                   double power_gap_db) {
  if (!(d_true_m > 0.0)) throw DomainError("predicted_distance_estimate: distance must be positive");
  if (!(gamma_est > 0.0)) throw DomainError("predicted_distance_estimate: gamma must be positive");
  return std::pow(d_true_m, 1.0 - errors.eps_gamma / gamma_est) *
         std::pow(10.0, (power_gap_db - errors.eps_c) / gamma_est);
}

LogShadowModel make_hata_urban_model(double freq_mhz, double h_t_m, double h_r_m,
                                     double shadow_sigma) {
  if (!(freq_mhz >= 150.0 && freq_mhz <= 1500.0))
    throw RangeError("Hata: frequency must be in [150, 1500] MHz");
  if (!(h_t_m >= 30.0 && h_t_m <= 300.0))
    throw RangeError("Hata: transmitter height must be in [30, 300] m");
  if (!(h_r_m >= 1.0 && h_r_m <= 10.0))
    throw RangeError("Hata: receiver height must be in [1, 10] m");

  const double log_f = std::log10(freq_mhz);
  const double log_ht = std::log10(h_t_m);
  // Large-city mobile antenna correction.
  double a_hr = 0.0;
  if (freq_mhz >= 300.0) {
    const double t = std::log10(11.75 * h_r_m);
    a_hr = 3.2 * t * t - 4.97;
  } else {
    const double t = std::log10(1.54 * h_r_m);
    a_hr = 8.29 * t * t - 1.1;
  }
  const double intercept_km = 69.55 + 26.16 * log_f - 13.82 * log_ht - a_hr;
  const double slope = 44.9 - 6.55 * log_ht;

  LogShadowModel model;
  model.gamma_coeff = slope;
  model.c = intercept_km - 3.0 * slope;  // log10(d_km) = log10(d_m) - 3
  model.shadow_sigma = shadow_sigma;
  model.validate();
  return model;
}

}  // namespace pue
