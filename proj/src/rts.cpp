#include "flucspec/rts.hpp"

#include <stdexcept>

namespace flucspec {

RtsTrace simulate_rts(const TTls& ttls, std::int64_t n_samples, double dt, Rng& rng) {
  ttls.validate();
  if (n_samples < 1) throw std::invalid_argument("simulate_rts: need >= 1 sample");
  const double bias = ttls.occupancy_bias;
  const double rate_out_minus = 2.0 * ttls.gamma_switch * (1.0 - bias);
  const double rate_out_plus = 2.0 * ttls.gamma_switch * bias;

  RtsTrace trace;
  trace.states.resize(static_cast<std::size_t>(n_samples));

  std::int8_t state = rng.bernoulli(bias) ? -1 : +1;
  const double t_end = static_cast<double>(n_samples) * dt;
  double t_next;  // time of the next switch
  {
    const double rate = state < 0 ? rate_out_minus : rate_out_plus;
    t_next = rate > 0 ? rng.exponential(rate) : t_end;
  }
  std::int64_t i = 0;
  double t_sample = 0.0;
  while (i < n_samples) {
    if (t_sample < t_next) {
      trace.states[static_cast<std::size_t>(i)] = state;
      ++i;
      t_sample = static_cast<double>(i) * dt;
    } else {
      state = -state;
      ++trace.n_switches;
      const double rate = state < 0 ? rate_out_minus : rate_out_plus;
      t_next += rate > 0 ? rng.exponential(rate) : t_end;
    }
  }
  return trace;
}

std::vector<double> qtls_frequency_series(const QTls& q,
                                          const std::vector<RtsTrace>& traces) {
  if (traces.size() != q.ttls.size())
    throw std::invalid_argument("qtls_frequency_series: one trace per attached T-TLS required");
  std::size_t n = traces.empty() ? 0 : traces.front().states.size();
  for (const auto& t : traces)
    if (t.states.size() != n)
      throw std::invalid_argument("qtls_frequency_series: trace length mismatch");
  if (traces.empty()) n = 1;
  std::vector<double> f(n, q.f_tilde);
  for (std::size_t l = 0; l < traces.size(); ++l) {
    const double shift = q.ttls[l].delta_f_shift;
    const auto& st = traces[l].states;
    for (std::size_t i = 0; i < st.size(); ++i) f[i] += shift * st[i];
  }
  return f;
}

}  // namespace flucspec
