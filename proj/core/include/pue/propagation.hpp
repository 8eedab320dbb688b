#pragma once

#include "pue/random.hpp"

namespace pue {

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts);
double dbw_to_dbm(double dbw) noexcept;

/// Free-space (Friis) propagation: Pr / Pt = G_l * lambda^2 / (4 pi d)^2.
class FsplModel {
 public:
  /// Throws DomainError unless wavelength > 0 and antenna_product > 0.
  FsplModel(double wavelength_m, double antenna_product);

  static FsplModel from_frequency(double freq_hz, double antenna_product = 1.0);

  double wavelength() const noexcept { return wavelength_; }
  double antenna_product() const noexcept { return antenna_product_; }

  /// sqrt(G_l * lambda^2 / (4 pi)^2), so that d = M * sqrt(Pt / Pr).
  double distance_constant() const noexcept { return m_; }

 private:
  double wavelength_;
  double antenna_product_;
  double m_;
};

/// Received power in watts. Throws DomainError for p_t <= 0 or d <= 0.
double fspl_received_power(double p_t_watts, double d_m, const FsplModel& model);

/// Distance that explains `p_r` if the transmitter radiated `p_assumed`.
/// Throws DomainError for non-positive powers.
double ideal_distance_estimate(double p_assumed_watts, double p_r_watts, const FsplModel& model);

/// Log-distance path loss with log-normal shadowing, distances in meters:
///   L(d) = c + gamma_coeff * log10(d) + g,   g ~ N(0, shadow_sigma^2).
/// `c` is the loss at 1 m and `gamma_coeff` is dB per decade (10x the path
/// loss exponent).
struct LogShadowModel {
  double c = 0.0;
  double gamma_coeff = 1.0;
  double shadow_sigma = 0.0;

  /// Throws DomainError if gamma_coeff <= 0, shadow_sigma < 0 or a value is not finite.
  void validate() const;

  /// Deterministic part of the loss. Throws DomainError for d <= 0.
  double mean_loss(double d_m) const;

  friend bool operator==(const LogShadowModel&, const LogShadowModel&) = default;
};

/// Table of fitted-model errors: eps_c = C_est - C_best, eps_gamma = Gamma_est - Gamma_best.
struct ModelErrors {
  double eps_c = 0.0;
  double eps_gamma = 0.0;
};

/// Spread of the fitted-model errors drawn per trial.
struct ErrorSigmas {
  double sigma_eps_c = 0.0;
  double sigma_eps_gamma = 0.0;

  friend bool operator==(const ErrorSigmas&, const ErrorSigmas&) = default;
};

/// The model the FC believes in, given the true one and its errors.
LogShadowModel apply_errors(const LogShadowModel& best, const ModelErrors& errors);

/// Transmit powers of the PU and the emulating attacker, in dBm.
struct TransmitterProfile {
  double p_pu_dbm = 0.0;
  double p_attacker_dbm = 0.0;

  /// Throws DomainError unless p_pu > p_attacker.
  void validate() const;

  /// F = p_pu - p_attacker, in dB.
  double power_gap_db() const noexcept { return p_pu_dbm - p_attacker_dbm; }
  /// R = 10^(F / 10).
  double power_ratio() const noexcept;

  friend bool operator==(const TransmitterProfile&, const TransmitterProfile&) = default;
};

/// One realization of the path loss at distance d. With shadow_sigma == 0
/// the rng is not consumed.
double lognormal_path_loss(double d_m, const LogShadowModel& model, Rng& rng);

/// Inverts the (estimated) log-distance model: 10^((avg_loss - c) / gamma).
double estimated_distance_under_error(double avg_loss_db, const LogShadowModel& model_est);

/// Closed form of the estimate produced by a mis-fitted model with shadowing
/// disabled: d^(1 - eps_gamma/gamma_est) * 10^((F - eps_c) / gamma_est).
/// Pass power_gap_db = 0 for PU transmissions.
double predicted_distance_estimate(double d_true_m, const ModelErrors& errors,
                                   double gamma_est, double power_gap_db = 0.0);

/// Okumura-Hata urban loss rewritten as a LogShadowModel with d in meters.
/// Valid for 150-1500 MHz, base height 30-300 m and mobile height 1-10 m;
/// outside that window throws RangeError.
LogShadowModel make_hata_urban_model(double freq_mhz, double h_t_m, double h_r_m,
                                     double shadow_sigma = 0.0);

}  // namespace pue
