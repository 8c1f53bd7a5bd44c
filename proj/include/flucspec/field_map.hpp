#ifndef FLUCSPEC_FIELD_MAP_HPP
#define FLUCSPEC_FIELD_MAP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace flucspec {

enum class FieldRegion : std::uint8_t { kVacuum = 0, kSubstrate = 1 };

// Electric-field magnitude on a rectangular (x, z) cross-section grid.
// The field is assumed uniform along y over `y_depth`; `periodic_x` marks a
// map that tiles in x (one capacitor period).
struct FieldMap {
  std::vector<double> xs;      // m, ascending
  std::vector<double> zs;      // m, ascending
  std::vector<double> e_mag;   // V/m, row-major [ix * zs.size() + iz]
  std::vector<FieldRegion> region;  // same shape as e_mag
  double y_depth = 1.0;        // m, extent represented by each cell
  bool periodic_x = false;

  std::size_t nx() const { return xs.size(); }
  std::size_t nz() const { return zs.size(); }
  double at(std::size_t ix, std::size_t iz) const { return e_mag[ix * nz() + iz]; }

  // Bilinear interpolation; clamps at grid edges (wraps in x when periodic).
  double sample(double x, double z) const;

  void validate() const;
};

// Relative effective permittivity of a two-region cross-section,
// eps_eff/eps0 = ratio * q + (1 - q), with filling factor q in [0, 1].
double effective_permittivity(double q_fill, double eps_ratio_substrate);

// Discretized electric mode volume: permittivity-weighted field energy over
// both regions divided by the maximum permittivity-weighted energy density.
// eps_* are absolute permittivities (F/m).
double mode_volume(const FieldMap& field, double eps_substrate, double eps_vacuum);

// Zero-point field scale sqrt(h f / (2 eps_eff V_m)); eps_eff absolute (F/m).
double zero_point_scale(double f_r_tilde, double eps_eff, double v_m);

// |p . E| / h in Hz.
double coupling_from_dipole(const std::array<double, 3>& p_dipole,
                            const std::array<double, 3>& field_v_per_m);

// Analytic stand-in for an interdigital-capacitor surface field: one period
// of alternating electrode and gap, field peaking at the electrode edges
// (capped at edge_peak out to cap_width, then exponential decay with
// edge_decay) on top of slowly decaying gap/electrode backgrounds. Magnitudes
// are fractions of `e_scale` (normally the zero-point scale).
struct IdcFieldParams {
  double period = 10e-6;        // electrode pitch, m
  double metal_width = 5e-6;    // electrode width, m (gap = period - metal)
  double edge_peak = 0.16;      // peak field fraction at electrode edges
  double cap_width = 60e-9;     // m, flat top around each edge
  double edge_decay = 15e-9;    // m, exponential decay length off the cap
  double gap_level = 0.013;     // field fraction extrapolated at a gap edge
  double metal_level = 0.010;   // same, above the electrode
  double background_decay = 9e-6;  // m, slow decay of the background terms
  double z_min = 0.5e-9;        // m, sampled heights above the surface
  double z_max = 3.0e-9;
  int nx = 4096;
  int nz = 6;
};

FieldMap analytic_idc_field(const IdcFieldParams& params, double e_scale);

// CSV round trip, schema: x_m,z_m,e_mag_v_per_m with a header row. Rows must
// form a complete rectangular grid.
FieldMap read_field_csv(const std::string& path);
void write_field_csv(const FieldMap& field, const std::string& path);

}  // namespace flucspec

#endif
