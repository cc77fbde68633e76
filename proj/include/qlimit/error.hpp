#pragma once

#include <stdexcept>
#include <string>

namespace qlimit {

/// Distinguished failure modes. Degenerate physics (poles, loop
/// singularities, missing signal paths) is reported through these instead
/// of letting NaN or inf leak into spectra.
enum class ErrorKind {
  InvalidArgument,
  Pole,                   // undamped resonance, denominator exactly zero
  ClosedLoopSingularity,  // loop factor kappa == 0
  NegativeDiscriminant,   // C < 0 in the analytic optimum
  ZeroDenominator,        // S_YY + S_ZZ == 0, or chi_qq == 0
  SamplerExhausted,
  SingularResolvent,
  ZeroSignalTransfer,
  NotTimeInvariant,       // complex drift matrix handed to the eigen check
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qlimit
