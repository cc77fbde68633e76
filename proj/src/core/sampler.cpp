#include "qlimit/sampler.hpp"

#include <random>

#include "qlimit/error.hpp"
#include "qlimit/uncertainty.hpp"

namespace qlimit {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

DetectorNoiseModel sample_physical_noise(std::uint64_t seed, const SamplerConfig& config) {
  if (!(config.scale > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sampler scale must be positive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> cross(0.0, 0.5);
  std::normal_distribution<double> backaction(0.0, 0.5 / config.scale);

  for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
    DetectorNoiseModel m;
    // 1 - U[0,1) lies in (0, 1]
    m.s_yy = config.scale * (1.0 - unit(rng));
    m.s_zz = config.scale * (1.0 - unit(rng));
    m.s_yf = {cross(rng), cross(rng)};
    m.s_zf = {cross(rng), cross(rng)};
    m.chi_ff = {backaction(rng), backaction(rng)};
    const double floor = minimal_s_ff(m);
    m.s_ff = floor + unit(rng) * floor;
    if (is_physical(m)) {
      return m;
    }
  }
  throw Error(ErrorKind::SamplerExhausted, "no physical model after max_attempts draws");
}

}  // namespace qlimit
