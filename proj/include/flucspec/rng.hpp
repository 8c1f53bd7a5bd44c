#ifndef FLUCSPEC_RNG_HPP
#define FLUCSPEC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace flucspec {

// Distributions are hand-rolled on top of mt19937_64 so that streams are
// reproducible across standard library implementations (std::*_distribution
// is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  double exponential(double rate) {
    // Inverse CDF; 1 - u in (0, 1] avoids log(0).
    return -std::log1p(-uniform01()) / rate;
  }

  double normal() {
    // Box-Muller, one value per call (no cached spare, keeps streams simple).
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Knuth multiplication method; fine for the small means used here.
  int poisson(double mean) {
    double limit = std::exp(-mean);
    double prod = uniform01();
    int n = 0;
    while (prod > limit) {
      prod *= uniform01();
      ++n;
    }
    return n;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Isotropic direction; returns |cos theta| against a fixed axis.
  double abs_cos_isotropic() { return std::fabs(uniform(-1.0, 1.0)); }

 private:
  std::mt19937_64 engine_;
};

// splitmix64, used to derive independent per-entity seed streams from a root
// seed plus entity indices. Streams are counter-based: the same (seed, tags)
// always map to the same stream regardless of evaluation order or threading.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag,
                                 std::uint64_t i = 0, std::uint64_t j = 0) {
  std::uint64_t s = mix_seed(root ^ 0x5851f42d4c957f2dULL);
  s = mix_seed(s ^ tag);
  s = mix_seed(s ^ (i + 0x100000001ULL));
  s = mix_seed(s ^ (j + 0x200000002ULL));
  return s;
}

// Stream tags, one per kind of random draw.
namespace stream {
inline constexpr std::uint64_t kQtlsPlacement = 1;
inline constexpr std::uint64_t kTtlsParams = 2;
inline constexpr std::uint64_t kRtsPath = 3;
inline constexpr std::uint64_t kTraceNoise = 4;
}  // namespace stream

}  // namespace flucspec

#endif
