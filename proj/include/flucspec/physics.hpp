#ifndef FLUCSPEC_PHYSICS_HPP
#define FLUCSPEC_PHYSICS_HPP

#include <span>
#include <utility>
#include <vector>

#include "flucspec/types.hpp"

namespace flucspec {

// Closed-form driven-dissipative quantities for one resonator mode coupled to
// independent two-level defects, evaluated in the stationary regime.

// Photon flux in the feed line, Phi = P / (h f).
double photon_flux(double power_w, double f_p_hz);

// Intraresonator mean photon number,
//   <n> = 2 Phi gamma_ext / (16 pi^2 detuning^2 + gamma_tot^2).
// Reproducing the measured photon-number table from the measured rate tables
// pins the rate convention used across the library.
double mean_photon_number(double flux, double gamma_ext, double gamma_tot,
                          double detuning_hz);

// Thermal de-weighting of the ground-state population magnitude,
// tanh(h f / 2 kB T); returns 1 for T <= 0.
double thermal_weight(double f_hz, double temperature_k);

// Stationary population <sigma_z> of one driven defect. Strictly in [-1, 0]:
// -1 undriven, -> 0 at full saturation, exactly -1/2 on resonance at the
// saturation photon number. `f_k` is the instantaneous defect frequency.
double sigma_z0_at(double g, double gamma1, double f_k, const DriveContext& drive,
                   double temperature_k);
double sigma_z0(const QTls& q, const DriveContext& drive, double temperature_k);

// Partial internal-loss contribution of one defect (always >= 0):
//   kappa = -sigma * 16 pi^2 g^2 gamma1 / (16 pi^2 d^2 + gamma1^2),
// with d = f_r_tilde - f_k.
double kappa_partial_at(double g, double gamma1, double f_k, double sigma,
                        double f_r_tilde);
double kappa_partial(const QTls& q, double sigma, double f_r_tilde);

// Partial resonance pull of one defect:
//   df = -sigma * 8 pi g^2 d / (16 pi^2 d^2 + gamma1^2),  d = f_r_tilde - f_k.
// A ground-state defect (sigma < 0) repels the resonance: the shift carries
// the sign of d, so saturating defects on one side pulls the resonance toward
// that side. This is the dispersive counterpart consistent with the kappa
// Lorentzian above (single complex susceptibility).
double freq_shift_partial_at(double g, double gamma1, double f_k, double sigma,
                             double f_r_tilde);
double freq_shift_partial(const QTls& q, double sigma, double f_r_tilde);

struct PartialContribution {
  double kappa = 0.0;
  double freq_shift = 0.0;
};

struct AggregateResult {
  double gamma_int = 0.0;  // background + sum of kappas
  double f_r = 0.0;        // unperturbed + sum of shifts
};

// Index-ordered summation; bit-reproducible for a fixed partial order.
AggregateResult aggregate(const ResonatorModel& resonator,
                          std::span<const PartialContribution> partials);

}  // namespace flucspec

#endif
