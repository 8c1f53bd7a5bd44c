#ifndef FLUCSPEC_TYPES_HPP
#define FLUCSPEC_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "flucspec/constants.hpp"

namespace flucspec {

// Rate convention used throughout: all loss rates (gamma_ext, gamma_int,
// gamma1, kappa) carry the numeric scale of 2*pi*f/Q, i.e. the scale of the
// measured rate tables, and are plugged into the drive/saturation formulas
// unscaled. See mean_photon_number for the consistency check that fixes this
// convention.

struct ResonatorModel {
  double f_r_tilde = 0.0;      // unperturbed resonance frequency, Hz
  double gamma_ext = 0.0;      // external (engineered) relaxation rate
  double gamma_int_bg = 0.0;   // background internal rate, excludes TLS losses
  double temperature = 0.0;    // K

  void validate() const {
    if (!(f_r_tilde > 0)) throw std::invalid_argument("resonator: f_r_tilde must be > 0");
    if (!(gamma_ext > 0)) throw std::invalid_argument("resonator: gamma_ext must be > 0");
    if (gamma_int_bg < 0) throw std::invalid_argument("resonator: gamma_int_bg must be >= 0");
    if (temperature < 0) throw std::invalid_argument("resonator: temperature must be >= 0");
  }
};

// Thermally switching TLS attached to a quantum TLS. Its state flips the
// host frequency by +/- delta_f_shift as a random telegraph signal.
struct TTls {
  double delta_f_shift = 0.0;  // |shift| in Hz; sign follows the RTS state
  double gamma_switch = 0.0;   // switching rate, 1/s
  double occupancy_bias = 0.5; // stationary probability of the minus state

  void validate() const {
    if (!(gamma_switch > 0)) throw std::invalid_argument("ttls: gamma_switch must be > 0");
    if (occupancy_bias < 0 || occupancy_bias > 1)
      throw std::invalid_argument("ttls: occupancy_bias must be in [0, 1]");
  }
};

// Quantum TLS coupled to the resonator mode.
struct QTls {
  double f_tilde = 0.0;  // unperturbed transition frequency, Hz
  double g = 0.0;        // coupling strength, Hz
  double gamma1 = 0.0;   // energy relaxation rate (table scale)
  std::vector<TTls> ttls;

  // Drive level at which the on-resonance population magnitude halves.
  double saturation_photons() const {
    return gamma1 * gamma1 / (32.0 * kPi * kPi * g * g);
  }

  void validate() const {
    if (!(f_tilde > 0)) throw std::invalid_argument("qtls: f_tilde must be > 0");
    if (g < 0) throw std::invalid_argument("qtls: g must be >= 0");
    if (!(gamma1 > 0)) throw std::invalid_argument("qtls: gamma1 must be > 0");
    for (const auto& t : ttls) t.validate();
  }
};

// One pump-field configuration. When the pump is off the resonator is still
// populated by the probe, modeled as a resonant drive at probe power.
struct PumpSetting {
  bool on = false;
  double power_at_sample = 0.0;  // W, already includes line attenuation
  double f_p = 0.0;              // drive frequency, Hz
  double detuning = 0.0;         // f_r_tilde - f_p, Hz

  static PumpSetting pump_off(double probe_power_w, double f_r_tilde) {
    return PumpSetting{false, probe_power_w, f_r_tilde, 0.0};
  }

  // Source power minus total line attenuation; detuning_hz = f_r_tilde - f_p.
  static PumpSetting from_source(double source_dbm, double attenuation_db,
                                 double detuning_hz, double f_r_tilde) {
    PumpSetting s;
    s.on = true;
    s.power_at_sample = dbm_to_watts(source_dbm - attenuation_db);
    s.detuning = detuning_hz;
    s.f_p = f_r_tilde - detuning_hz;
    return s;
  }

  void validate() const {
    if (power_at_sample < 0) throw std::invalid_argument("pump: power must be >= 0");
    if (!(f_p > 0)) throw std::invalid_argument("pump: f_p must be > 0");
    if (on && std::abs(detuning) < 1e6)
      throw std::invalid_argument("pump: |detuning| must be >= 1 MHz when on");
  }
};

struct PumpSchedule {
  std::vector<PumpSetting> settings;

  void validate() const {
    if (settings.empty()) throw std::invalid_argument("schedule: needs at least one setting");
    for (const auto& s : settings) s.validate();
  }
};

// Intraresonator drive as seen by the TLS bath.
struct DriveContext {
  double mean_n = 0.0;  // intraresonator mean photon number
  double f_p = 0.0;     // drive frequency, Hz

  void validate() const {
    if (mean_n < 0) throw std::invalid_argument("drive: mean_n must be >= 0");
  }
};

// Sampling grid: contiguous periods of uniformly spaced samples. Periods are
// tagged so spectral segmentation never crosses a period boundary.
struct TimeGrid {
  double dt = 520.0;                // s, the pump-cycle period
  std::int64_t samples_per_period = 830;
  std::int64_t n_periods = 4;

  std::int64_t total_samples() const { return samples_per_period * n_periods; }
  std::int64_t period_of(std::int64_t i) const { return i / samples_per_period; }
  double duration() const { return static_cast<double>(total_samples()) * dt; }

  static TimeGrid from_hours(double hours_per_period, std::int64_t n_periods,
                             double dt = 520.0) {
    TimeGrid g;
    g.dt = dt;
    g.samples_per_period = static_cast<std::int64_t>(hours_per_period * 3600.0 / dt);
    g.n_periods = n_periods;
    return g;
  }

  void validate() const {
    if (!(dt > 0)) throw std::invalid_argument("grid: dt must be > 0");
    if (samples_per_period < 2) throw std::invalid_argument("grid: need >= 2 samples per period");
    if (n_periods < 1) throw std::invalid_argument("grid: need >= 1 period");
  }
};

}  // namespace flucspec

#endif
