#ifndef FLUCSPEC_ENSEMBLE_HPP
#define FLUCSPEC_ENSEMBLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flucspec/field_map.hpp"
#include "flucspec/rng.hpp"
#include "flucspec/types.hpp"

namespace flucspec {

// A one-parameter family of scalar distributions, configurable from JSON.
struct DistSpec {
  enum class Kind { kFixed, kUniform, kLogUniform, kPoisson };
  Kind kind = Kind::kFixed;
  double a = 0.0;  // fixed value / lower bound / mean (poisson)
  double b = 0.0;  // upper bound

  double sample(Rng& rng) const;
  static DistSpec fixed(double v) { return {Kind::kFixed, v, v}; }
  static DistSpec uniform(double lo, double hi) { return {Kind::kUniform, lo, hi}; }
  static DistSpec log_uniform(double lo, double hi) { return {Kind::kLogUniform, lo, hi}; }
  static DistSpec poisson(double mean) { return {Kind::kPoisson, mean, mean}; }
  void validate(const std::string& name) const;
};

struct EnsembleConfig {
  double bandwidth_qtls = 300e6;   // Hz, band sampled around f_r_tilde
  double density = 400.0;          // 1 / (GHz um^3)
  double volume_int = 157.0;       // um^3
  double g_min = 2e3;              // Hz, coupling cutoff
  std::uint64_t seed = 1;

  DistSpec dipole_magnitude_dist = DistSpec::fixed(kDipoleEAngstrom);  // C m
  DistSpec ttls_per_qtls_dist = DistSpec::poisson(4.0);
  DistSpec delta_f_dist = DistSpec::log_uniform(0.1e3, 100e3);         // Hz
  DistSpec gamma_switch_dist = DistSpec::log_uniform(1e-6, 1e-2);      // 1/s
  DistSpec gamma1_dist = DistSpec::log_uniform(1.5e7, 3.0e7);          // rate
  double occupancy_bias = 0.5;

  // Candidate count before the coupling cutoff: round(D * B * V).
  std::int64_t candidate_count() const;
  void validate() const;
};

struct EnsembleSample {
  std::vector<QTls> qtls;
  std::int64_t n_candidates = 0;
  std::int64_t n_retained() const { return static_cast<std::int64_t>(qtls.size()); }
};

// Step I: place candidates uniformly over the field map cross-section and the
// frequency band, draw isotropic dipoles, keep those with g >= g_min.
// Deterministic in (cfg, cfg.seed); per-candidate seed streams.
EnsembleSample sample_qtls_ensemble(const EnsembleConfig& cfg,
                                    const ResonatorModel& resonator,
                                    const FieldMap& field);

// Step II: draw the thermally switching defects attached to one host.
// `qtls_index` selects the per-entity stream.
std::vector<TTls> sample_ttls_for(const EnsembleConfig& cfg, std::uint64_t qtls_index);

// Attaches T-TLS sets to every member of the ensemble (in index order).
void attach_ttls(EnsembleSample& ensemble, const EnsembleConfig& cfg);

// JSON serialization with explicit units in key names.
std::string ensemble_to_json(const EnsembleSample& ensemble);
EnsembleSample ensemble_from_json(const std::string& text);
void write_ensemble_json(const EnsembleSample& ensemble, const std::string& path);
EnsembleSample read_ensemble_json(const std::string& path);

}  // namespace flucspec

#endif
