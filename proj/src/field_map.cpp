#include "flucspec/field_map.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "flucspec/constants.hpp"
#include "flucspec/errors.hpp"

namespace flucspec {

void FieldMap::validate() const {
  if (xs.empty() || zs.empty()) throw std::invalid_argument("field map: empty grid");
  if (e_mag.size() != xs.size() * zs.size())
    throw std::invalid_argument("field map: grid size mismatch");
  if (!region.empty() && region.size() != e_mag.size())
    throw std::invalid_argument("field map: region size mismatch");
  if (!std::is_sorted(xs.begin(), xs.end()) || !std::is_sorted(zs.begin(), zs.end()))
    throw std::invalid_argument("field map: grid axes must be ascending");
  for (double v : e_mag)
    if (!(v >= 0)) throw std::invalid_argument("field map: field magnitude must be >= 0");
}

double FieldMap::sample(double x, double z) const {
  const std::size_t n_x = nx(), n_z = nz();
  if (periodic_x && n_x > 1) {
    // Cell-centered grid over one period; wrap x, then clamp-interpolate.
    const double w = (xs.back() - xs.front()) * n_x / (n_x - 1.0);
    x = xs.front() + std::fmod(std::fmod(x - xs.front(), w) + w, w);
  }
  auto locate = [](const std::vector<double>& ax, double v, double& frac) {
    if (v <= ax.front()) { frac = 0.0; return std::size_t{0}; }
    if (v >= ax.back()) { frac = 0.0; return ax.size() - 1; }
    auto it = std::upper_bound(ax.begin(), ax.end(), v);
    std::size_t hi = static_cast<std::size_t>(it - ax.begin());
    std::size_t lo = hi - 1;
    frac = (v - ax[lo]) / (ax[hi] - ax[lo]);
    return lo;
  };
  double fx = 0.0, fz = 0.0;
  std::size_t ix = locate(xs, x, fx);
  std::size_t iz = locate(zs, z, fz);
  std::size_t ix1 = std::min(ix + 1, n_x - 1);
  std::size_t iz1 = std::min(iz + 1, n_z - 1);
  const double v00 = at(ix, iz), v10 = at(ix1, iz), v01 = at(ix, iz1), v11 = at(ix1, iz1);
  return (1 - fx) * ((1 - fz) * v00 + fz * v01) + fx * ((1 - fz) * v10 + fz * v11);
}

double effective_permittivity(double q_fill, double eps_ratio_substrate) {
  if (q_fill < 0.0 || q_fill > 1.0)
    throw std::invalid_argument("effective_permittivity: filling factor must be in [0, 1]");
  return eps_ratio_substrate * q_fill + (1.0 - q_fill);
}

double mode_volume(const FieldMap& field, double eps_substrate, double eps_vacuum) {
  field.validate();
  const std::size_t n_x = field.nx(), n_z = field.nz();
  auto step = [](const std::vector<double>& ax, std::size_t i) {
    if (ax.size() == 1) return 1.0;
    if (i == 0) return ax[1] - ax[0];
    if (i + 1 == ax.size()) return ax[i] - ax[i - 1];
    return 0.5 * (ax[i + 1] - ax[i - 1]);
  };
  double energy = 0.0;
  double max_density = 0.0;
  for (std::size_t ix = 0; ix < n_x; ++ix) {
    for (std::size_t iz = 0; iz < n_z; ++iz) {
      const std::size_t k = ix * n_z + iz;
      const double eps = (!field.region.empty() &&
                          field.region[k] == FieldRegion::kSubstrate)
                             ? eps_substrate
                             : eps_vacuum;
      const double e2 = field.e_mag[k] * field.e_mag[k];
      const double dv = step(field.xs, ix) * step(field.zs, iz) * field.y_depth;
      energy += eps * e2 * dv;
      max_density = std::max(max_density, eps * e2);
    }
  }
  if (max_density <= 0.0)
    throw std::invalid_argument("mode_volume: field is zero everywhere");
  return energy / max_density;
}

double zero_point_scale(double f_r_tilde, double eps_eff, double v_m) {
  if (!(f_r_tilde > 0) || !(eps_eff > 0) || !(v_m > 0))
    throw std::invalid_argument("zero_point_scale: inputs must be > 0");
  return std::sqrt(kPlanck * f_r_tilde / (2.0 * eps_eff * v_m));
}

double coupling_from_dipole(const std::array<double, 3>& p_dipole,
                            const std::array<double, 3>& field_v_per_m) {
  double dot = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(p_dipole[i]) || !std::isfinite(field_v_per_m[i]))
      throw std::invalid_argument("coupling_from_dipole: inputs must be finite");
    dot += p_dipole[i] * field_v_per_m[i];
  }
  return std::fabs(dot) / kPlanck;
}

FieldMap analytic_idc_field(const IdcFieldParams& p, double e_scale) {
  if (!(p.period > 0) || !(p.metal_width > 0) || p.metal_width >= p.period)
    throw std::invalid_argument("idc field: need 0 < metal_width < period");
  if (p.nx < 2 || p.nz < 1) throw std::invalid_argument("idc field: grid too small");
  FieldMap f;
  f.periodic_x = true;
  f.y_depth = 1.0;
  f.xs.resize(p.nx);
  f.zs.resize(p.nz);
  for (int i = 0; i < p.nx; ++i)
    f.xs[i] = p.period * (static_cast<double>(i) + 0.5) / p.nx;
  for (int j = 0; j < p.nz; ++j)
    f.zs[j] = p.nz == 1 ? p.z_min
                        : p.z_min + (p.z_max - p.z_min) * j / (p.nz - 1.0);
  f.e_mag.resize(static_cast<std::size_t>(p.nx) * p.nz);
  f.region.assign(f.e_mag.size(), FieldRegion::kVacuum);
  for (int i = 0; i < p.nx; ++i) {
    const double x = f.xs[i];
    // electrode occupies [0, metal_width); edges at 0, metal_width, period
    const double d = std::min({std::fabs(x), std::fabs(x - p.metal_width),
                               std::fabs(x - p.period)});
    const bool over_gap = x >= p.metal_width;
    const double edge =
        p.edge_peak * std::min(1.0, std::exp(-(d - p.cap_width) / p.edge_decay));
    const double base = (over_gap ? p.gap_level : p.metal_level) *
                        std::exp(-d / p.background_decay);
    const double mag = e_scale * std::max(edge, base);
    for (int j = 0; j < p.nz; ++j)
      f.e_mag[static_cast<std::size_t>(i) * p.nz + j] = mag;  // z-uniform at nm heights
  }
  return f;
}

FieldMap read_field_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open field map: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("field map csv is empty: " + path);
  auto strip = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  {
    std::stringstream hs(line);
    std::string col;
    const char* expect[] = {"x_m", "z_m", "e_mag_v_per_m"};
    for (const char* e : expect) {
      if (!std::getline(hs, col, ','))
        throw ConfigError("field map csv: missing header column '" + std::string(e) + "'");
      if (strip(col) != e)
        throw ConfigError("field map csv: expected column '" + std::string(e) +
                          "', got '" + strip(col) + "'");
    }
  }
  std::map<double, std::map<double, double>> grid;
  std::set<double> zset;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    std::stringstream ls(line);
    std::string sx, sz, se;
    if (!std::getline(ls, sx, ',') || !std::getline(ls, sz, ',') || !std::getline(ls, se, ','))
      throw ConfigError("field map csv: malformed row at line " + std::to_string(lineno));
    try {
      double x = std::stod(sx), z = std::stod(sz), e = std::stod(se);
      grid[x][z] = e;
      zset.insert(z);
    } catch (const std::exception&) {
      throw ConfigError("field map csv: bad number at line " + std::to_string(lineno));
    }
  }
  if (grid.empty()) throw ConfigError("field map csv has no data rows: " + path);
  FieldMap f;
  for (const auto& [x, _] : grid) f.xs.push_back(x);
  for (double z : zset) f.zs.push_back(z);
  f.e_mag.resize(f.xs.size() * f.zs.size());
  std::size_t ix = 0;
  for (const auto& [x, col] : grid) {
    if (col.size() != f.zs.size())
      throw ConfigError("field map csv: incomplete grid at x = " + std::to_string(x));
    std::size_t iz = 0;
    for (double z : f.zs) {
      auto it = col.find(z);
      if (it == col.end())
        throw ConfigError("field map csv: incomplete grid at x = " + std::to_string(x));
      f.e_mag[ix * f.zs.size() + iz] = it->second;
      ++iz;
    }
    ++ix;
  }
  f.region.assign(f.e_mag.size(), FieldRegion::kVacuum);
  f.validate();
  return f;
}

void write_field_csv(const FieldMap& field, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write field map: " + path);
  out << "x_m,z_m,e_mag_v_per_m\n";
  char buf[128];
  for (std::size_t ix = 0; ix < field.nx(); ++ix)
    for (std::size_t iz = 0; iz < field.nz(); ++iz) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", field.xs[ix],
                    field.zs[iz], field.at(ix, iz));
      out << buf;
    }
}

}  // namespace flucspec
