#pragma once

#include <cstdint>

#include "qlimit/noise_model.hpp"

namespace qlimit {

/// splitmix64 of (base, index); used to hand independent streams to
/// parallel workers without depending on scheduling order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept;

struct SamplerConfig {
  double scale = 1.0;       // S_YY, S_ZZ ~ U(0, scale]
  int max_attempts = 64;
};

/// Random detector noise model with is_physical() == true.
///
/// S_YY and S_ZZ are uniform on (0, scale]; S_YF and S_ZF are complex
/// normal with component sigma 1/2; chi_FF is complex normal with sigma
/// 1/(2 scale). S_FF is set to the smallest value that keeps the
/// uncertainty matrix PSD for both signs, plus a slack uniform in
/// [0, that value). Throws Error{SamplerExhausted} after max_attempts
/// rejections.
DetectorNoiseModel sample_physical_noise(std::uint64_t seed, const SamplerConfig& config = {});

inline DetectorNoiseModel sample_physical_noise(std::uint64_t seed, double scale) {
  return sample_physical_noise(seed, SamplerConfig{scale});
}

}  // namespace qlimit
