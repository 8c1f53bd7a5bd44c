#ifndef FLUCSPEC_RTS_HPP
#define FLUCSPEC_RTS_HPP

#include <cstdint>
#include <vector>

#include "flucspec/rng.hpp"
#include "flucspec/types.hpp"

namespace flucspec {

// Two-state telegraph trajectory sampled on a uniform grid. `states` holds
// -1 / +1; `n_switches` counts the actual transitions of the underlying
// continuous-time path over the grid span (not just observed sign changes),
// so fast switchers are still correctly decimated.
struct RtsTrace {
  std::vector<std::int8_t> states;
  std::int64_t n_switches = 0;
};

// Exact dwell-time synthesis of the two-state Markov chain. Exit rates are
// 2*gamma*(1-bias) out of the minus state and 2*gamma*bias out of the plus
// state, so the stationary minus-state occupancy equals `occupancy_bias` and
// the mean switching rate at symmetric bias equals gamma.
RtsTrace simulate_rts(const TTls& ttls, std::int64_t n_samples, double dt, Rng& rng);

// f_k(t) = f_tilde + sum over attached switchers of +/- delta_f_shift.
// `n_samples` sets the length when no switchers are attached; otherwise it
// must match the traces (checked).
std::vector<double> qtls_frequency_series(const QTls& q,
                                          const std::vector<RtsTrace>& traces,
                                          std::int64_t n_samples);

}  // namespace flucspec

#endif
