#ifndef FLUCSPEC_CONSTANTS_HPP
#define FLUCSPEC_CONSTANTS_HPP

#include <cmath>

namespace flucspec {

// CODATA 2018 exact values.
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kEps0 = 8.8541878128e-12;     // F/m
inline constexpr double kPi = 3.14159265358979323846;

// 1 elementary charge times 1 angstrom, the default dipole scale.
inline constexpr double kDipoleEAngstrom = 1.602176634e-29;  // C m

inline double dbm_to_watts(double p_dbm) { return 1e-3 * std::pow(10.0, p_dbm / 10.0); }
inline double watts_to_dbm(double p_w) { return 10.0 * std::log10(p_w / 1e-3); }

}  // namespace flucspec

#endif
