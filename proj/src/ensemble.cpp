#include "flucspec/ensemble.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "flucspec/errors.hpp"

namespace flucspec {

using nlohmann::json;

double DistSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::kFixed: return a;
    case Kind::kUniform: return rng.uniform(a, b);
    case Kind::kLogUniform: return rng.log_uniform(a, b);
    case Kind::kPoisson: return static_cast<double>(rng.poisson(a));
  }
  return a;
}

void DistSpec::validate(const std::string& name) const {
  switch (kind) {
    case Kind::kFixed:
      break;
    case Kind::kUniform:
      if (!(a <= b)) throw std::invalid_argument(name + ": bounds out of order");
      break;
    case Kind::kLogUniform:
      if (!(a > 0) || !(a <= b))
        throw std::invalid_argument(name + ": log-uniform needs 0 < min <= max");
      break;
    case Kind::kPoisson:
      if (!(a >= 0)) throw std::invalid_argument(name + ": poisson mean must be >= 0");
      break;
  }
}

std::int64_t EnsembleConfig::candidate_count() const {
  // density [1/(GHz um^3)] * bandwidth [Hz] * volume [um^3]
  return static_cast<std::int64_t>(std::llround(density * (bandwidth_qtls / 1e9) * volume_int));
}

void EnsembleConfig::validate() const {
  if (!(bandwidth_qtls > 0)) throw std::invalid_argument("ensemble: bandwidth must be > 0");
  if (!(density > 0)) throw std::invalid_argument("ensemble: density must be > 0");
  if (!(volume_int > 0)) throw std::invalid_argument("ensemble: volume must be > 0");
  if (g_min < 0) throw std::invalid_argument("ensemble: g_min must be >= 0");
  if (occupancy_bias < 0 || occupancy_bias > 1)
    throw std::invalid_argument("ensemble: occupancy_bias must be in [0, 1]");
  dipole_magnitude_dist.validate("dipole_magnitude_dist");
  ttls_per_qtls_dist.validate("ttls_per_qtls_dist");
  delta_f_dist.validate("delta_f_dist");
  gamma_switch_dist.validate("gamma_switch_dist");
  gamma1_dist.validate("gamma1_dist");
}

EnsembleSample sample_qtls_ensemble(const EnsembleConfig& cfg,
                                    const ResonatorModel& resonator,
                                    const FieldMap& field) {
  cfg.validate();
  resonator.validate();
  field.validate();
  const std::int64_t n_cand = cfg.candidate_count();
  const double x_lo = field.xs.front(), x_hi = field.xs.back();
  const double z_lo = field.zs.front(), z_hi = field.zs.back();

  EnsembleSample out;
  out.n_candidates = n_cand;
  out.qtls.reserve(static_cast<std::size_t>(n_cand / 2));
  for (std::int64_t i = 0; i < n_cand; ++i) {
    Rng rng(derive_seed(cfg.seed, stream::kQtlsPlacement, static_cast<std::uint64_t>(i)));
    const double f = rng.uniform(resonator.f_r_tilde - cfg.bandwidth_qtls / 2,
                                 resonator.f_r_tilde + cfg.bandwidth_qtls / 2);
    const double x = rng.uniform(x_lo, x_hi);
    const double z = rng.uniform(z_lo, z_hi);
    const double p = cfg.dipole_magnitude_dist.sample(rng);
    const double cos_align = rng.abs_cos_isotropic();
    const double e_mag = field.sample(x, z);
    const double g = coupling_from_dipole({p * cos_align, 0.0, 0.0}, {e_mag, 0.0, 0.0});
    const double gamma1 = cfg.gamma1_dist.sample(rng);
    if (g < cfg.g_min) continue;
    QTls q;
    q.f_tilde = f;
    q.g = g;
    q.gamma1 = gamma1;
    out.qtls.push_back(std::move(q));
  }
  return out;
}

std::vector<TTls> sample_ttls_for(const EnsembleConfig& cfg, std::uint64_t qtls_index) {
  Rng rng(derive_seed(cfg.seed, stream::kTtlsParams, qtls_index));
  const int count = static_cast<int>(cfg.ttls_per_qtls_dist.sample(rng));
  std::vector<TTls> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int l = 0; l < count; ++l) {
    TTls t;
    t.delta_f_shift = cfg.delta_f_dist.sample(rng);
    t.gamma_switch = cfg.gamma_switch_dist.sample(rng);
    t.occupancy_bias = cfg.occupancy_bias;
    out.push_back(t);
  }
  return out;
}

void attach_ttls(EnsembleSample& ensemble, const EnsembleConfig& cfg) {
  for (std::size_t k = 0; k < ensemble.qtls.size(); ++k)
    ensemble.qtls[k].ttls = sample_ttls_for(cfg, static_cast<std::uint64_t>(k));
}

std::string ensemble_to_json(const EnsembleSample& ensemble) {
  json root;
  root["n_candidates"] = ensemble.n_candidates;
  json arr = json::array();
  for (const auto& q : ensemble.qtls) {
    json jq;
    jq["f_tilde_hz"] = q.f_tilde;
    jq["g_hz"] = q.g;
    jq["gamma1_hz"] = q.gamma1;
    json jt = json::array();
    for (const auto& t : q.ttls) {
      jt.push_back({{"delta_f_shift_hz", t.delta_f_shift},
                    {"gamma_switch_per_s", t.gamma_switch},
                    {"occupancy_bias", t.occupancy_bias}});
    }
    jq["ttls"] = std::move(jt);
    arr.push_back(std::move(jq));
  }
  root["qtls"] = std::move(arr);
  return root.dump(1);
}

EnsembleSample ensemble_from_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("ensemble json: ") + e.what());
  }
  EnsembleSample out;
  try {
    out.n_candidates = root.at("n_candidates").get<std::int64_t>();
    for (const auto& jq : root.at("qtls")) {
      QTls q;
      q.f_tilde = jq.at("f_tilde_hz").get<double>();
      q.g = jq.at("g_hz").get<double>();
      q.gamma1 = jq.at("gamma1_hz").get<double>();
      for (const auto& jt : jq.at("ttls")) {
        TTls t;
        t.delta_f_shift = jt.at("delta_f_shift_hz").get<double>();
        t.gamma_switch = jt.at("gamma_switch_per_s").get<double>();
        t.occupancy_bias = jt.at("occupancy_bias").get<double>();
        q.ttls.push_back(t);
      }
      q.validate();
      out.qtls.push_back(std::move(q));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("ensemble json: ") + e.what());
  }
  return out;
}

void write_ensemble_json(const EnsembleSample& ensemble, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write ensemble: " + path);
  out << ensemble_to_json(ensemble);
}

EnsembleSample read_ensemble_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ensemble: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ensemble_from_json(ss.str());
}

}  // namespace flucspec
