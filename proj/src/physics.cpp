#include "flucspec/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace flucspec {

namespace {
constexpr double k16pi2 = 16.0 * kPi * kPi;
constexpr double k32pi2 = 32.0 * kPi * kPi;
}  // namespace

double photon_flux(double power_w, double f_p_hz) {
  if (!(f_p_hz > 0)) throw std::invalid_argument("photon_flux: frequency must be > 0");
  if (power_w < 0) throw std::invalid_argument("photon_flux: power must be >= 0");
  return power_w / (kPlanck * f_p_hz);
}

double mean_photon_number(double flux, double gamma_ext, double gamma_tot,
                          double detuning_hz) {
  if (!(gamma_tot > 0)) throw std::invalid_argument("mean_photon_number: gamma_tot must be > 0");
  if (flux < 0) throw std::invalid_argument("mean_photon_number: flux must be >= 0");
  if (gamma_ext < 0) throw std::invalid_argument("mean_photon_number: gamma_ext must be >= 0");
  return 2.0 * flux * gamma_ext / (k16pi2 * detuning_hz * detuning_hz + gamma_tot * gamma_tot);
}

double thermal_weight(double f_hz, double temperature_k) {
  if (temperature_k <= 0) return 1.0;
  return std::tanh(kPlanck * f_hz / (2.0 * kBoltzmann * temperature_k));
}

double sigma_z0_at(double g, double gamma1, double f_k, const DriveContext& drive,
                   double temperature_k) {
  if (!(gamma1 > 0)) throw std::invalid_argument("sigma_z0: gamma1 must be > 0");
  if (drive.mean_n < 0) throw std::invalid_argument("sigma_z0: mean_n must be >= 0");
  const double delta_kp = f_k - drive.f_p;
  // gamma1^2 * (n/n_s) = 32 pi^2 g^2 n, so n_s never needs to be formed.
  const double a = k32pi2 * g * g * drive.mean_n;
  const double sigma =
      a / (k16pi2 * delta_kp * delta_kp + gamma1 * gamma1 + a) - 1.0;
  return sigma * thermal_weight(f_k, temperature_k);
}

double sigma_z0(const QTls& q, const DriveContext& drive, double temperature_k) {
  return sigma_z0_at(q.g, q.gamma1, q.f_tilde, drive, temperature_k);
}

double kappa_partial_at(double g, double gamma1, double f_k, double sigma,
                        double f_r_tilde) {
  if (sigma < -1.0 || sigma > 0.0)
    throw std::invalid_argument("kappa_partial: sigma must be in [-1, 0]");
  const double d = f_r_tilde - f_k;
  return -sigma * k16pi2 * g * g * gamma1 / (k16pi2 * d * d + gamma1 * gamma1);
}

double kappa_partial(const QTls& q, double sigma, double f_r_tilde) {
  return kappa_partial_at(q.g, q.gamma1, q.f_tilde, sigma, f_r_tilde);
}

double freq_shift_partial_at(double g, double gamma1, double f_k, double sigma,
                             double f_r_tilde) {
  if (sigma < -1.0 || sigma > 0.0)
    throw std::invalid_argument("freq_shift_partial: sigma must be in [-1, 0]");
  const double d = f_r_tilde - f_k;
  return -sigma * 8.0 * kPi * g * g * d / (k16pi2 * d * d + gamma1 * gamma1);
}

double freq_shift_partial(const QTls& q, double sigma, double f_r_tilde) {
  return freq_shift_partial_at(q.g, q.gamma1, q.f_tilde, sigma, f_r_tilde);
}

AggregateResult aggregate(const ResonatorModel& resonator,
                          std::span<const PartialContribution> partials) {
  double kappa_sum = 0.0;
  double shift_sum = 0.0;
  for (const auto& p : partials) {
    if (p.kappa < 0) throw std::invalid_argument("aggregate: kappa must be >= 0");
    kappa_sum += p.kappa;
    shift_sum += p.freq_shift;
  }
  return AggregateResult{resonator.gamma_int_bg + kappa_sum,
                         resonator.f_r_tilde + shift_sum};
}

}  // namespace flucspec
