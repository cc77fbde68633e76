#include "qlimit/certify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#include <omp.h>

#include "qlimit/added_noise.hpp"
#include "qlimit/error.hpp"
#include "qlimit/sampler.hpp"
#include "qlimit/uncertainty.hpp"

namespace qlimit {
namespace {

struct SampleOutcome {
  std::size_t chain = 0;
  std::size_t added = 0;
  std::size_t uql = 0;
  std::vector<BoundViolation> violations;
};

// Everything sample i needs comes from streams keyed on (seed, i).
SampleOutcome check_model(const CertifyConfig& config, std::size_t i,
                          const DetectorNoiseModel& model) {
  SampleOutcome out;

  std::mt19937_64 rng(derive_seed(config.seed, 2 * i + 1));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> log_g(std::log(0.1), std::log(10.0));
  const Complex chi{normal(rng), normal(rng)};

  auto record = [&](BoundCheck check, LoopGains gains, double lhs, double rhs) {
    out.violations.push_back({i, check, model, chi, gains, lhs, rhs});
  };

  const BoundCoefficients k = bound_coefficients(model);
  const double margin = inequality_chain_margin(model);
  if (margin < -config.chain_rel_tolerance * std::max(1.0, std::abs(k.c))) {
    ++out.chain;
    record(BoundCheck::InequalityChain, {}, k.c, k.c - margin);
  }

  const double bound = analytic_optimum_bound(model, chi);
  const double uql = std::abs(chi.imag());
  if (bound < uql - config.bound_abs_tolerance) {
    ++out.uql;
    record(BoundCheck::BoundAboveUql, {}, bound, uql);
  }

  for (int p = 0; p < config.probes_per_sample; ++p) {
    LoopGains gains;
    gains.g = std::exp(log_g(rng));
    gains.lambda = {normal(rng), normal(rng)};
    const double added = added_noise_spectrum(gains, model, chi);
    if (added < bound - config.bound_abs_tolerance) {
      ++out.added;
      record(BoundCheck::AddedAboveBound, gains, added, bound);
    }
  }
  return out;
}

SampleOutcome certify_sample(const CertifyConfig& config, std::size_t i) {
  return check_model(config, i,
                     sample_physical_noise(derive_seed(config.seed, 2 * i),
                                           SamplerConfig{config.scale}));
}

void check_config(const CertifyConfig& config) {
  if (config.samples == 0) {
    throw Error(ErrorKind::InvalidArgument, "sample count must be at least 1");
  }
  if (config.probes_per_sample < 0) {
    throw Error(ErrorKind::InvalidArgument, "probe count must be non-negative");
  }
}

CertifyReport merge(const CertifyConfig& config, std::vector<SampleOutcome>& outcomes) {
  CertifyReport report;
  report.samples = config.samples;
  report.probes = config.samples * static_cast<std::size_t>(config.probes_per_sample);
  for (auto& o : outcomes) {
    report.chain_violations += o.chain;
    report.added_violations += o.added;
    report.uql_violations += o.uql;
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(report.violations));
  }
  return report;
}

}  // namespace

const char* to_string(BoundCheck check) noexcept {
  switch (check) {
    case BoundCheck::InequalityChain: return "inequality-chain";
    case BoundCheck::AddedAboveBound: return "added-above-bound";
    case BoundCheck::BoundAboveUql: return "bound-above-uql";
  }
  return "unknown";
}

CertifyReport certify_bounds_serial(const CertifyConfig& config) {
  check_config(config);
  std::vector<SampleOutcome> outcomes(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    outcomes[i] = certify_sample(config, i);
  }
  return merge(config, outcomes);
}

CertifyReport certify_bounds_parallel(const CertifyConfig& config) {
  check_config(config);
  std::vector<SampleOutcome> outcomes(config.samples);
  const auto n = static_cast<std::ptrdiff_t>(config.samples);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = certify_sample(config, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qlimit_certify_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return merge(config, outcomes);
}

CertifyReport certify_model(const DetectorNoiseModel& model, const CertifyConfig& config) {
  check_config(config);
  model.validate();
  if (!is_physical(model)) {
    throw Error(ErrorKind::InvalidArgument, "model violates the uncertainty relation");
  }
  std::vector<SampleOutcome> outcomes(config.samples);
  for (std::size_t i = 0; i < config.samples; ++i) {
    outcomes[i] = check_model(config, i, model);
  }
  return merge(config, outcomes);
}

}  // namespace qlimit
