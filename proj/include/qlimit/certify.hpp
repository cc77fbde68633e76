#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlimit/noise_model.hpp"

namespace qlimit {

struct CertifyConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  int probes_per_sample = 10;
  double chain_rel_tolerance = 1e-10;
  double bound_abs_tolerance = 1e-9;
  double scale = 1.0;
};

enum class BoundCheck {
  InequalityChain,  // C >= A^2 + (|B| + (S_YY+S_ZZ)/2)^2
  AddedAboveBound,  // added_noise_spectrum >= analytic bound
  BoundAboveUql,    // analytic bound >= |Im chi_qq|
};

const char* to_string(BoundCheck check) noexcept;

struct BoundViolation {
  std::size_t sample = 0;
  BoundCheck check = BoundCheck::InequalityChain;
  DetectorNoiseModel model;
  Complex chi_qq{};
  LoopGains gains;  // meaningful for AddedAboveBound only
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CertifyReport {
  std::size_t samples = 0;
  std::size_t probes = 0;
  std::size_t chain_violations = 0;
  std::size_t added_violations = 0;
  std::size_t uql_violations = 0;
  std::vector<BoundViolation> violations;  // ordered by sample index

  bool clean() const noexcept {
    return chain_violations == 0 && added_violations == 0 && uql_violations == 0;
  }
};

/// Samples physical noise models, random chi_qq and random (g, lambda)
/// probes, and counts violations of the bound chain. Sample i draws from
/// streams derived from (seed, i) only, so the two kernels agree exactly.
CertifyReport certify_bounds_serial(const CertifyConfig& config);
CertifyReport certify_bounds_parallel(const CertifyConfig& config);

/// The same checks on one given model, with config.samples random chi_qq
/// draws. Throws Error{InvalidArgument} if the model is not physical.
CertifyReport certify_model(const DetectorNoiseModel& model, const CertifyConfig& config);

}  // namespace qlimit
