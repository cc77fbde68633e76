#include "qlimit/error.hpp"

namespace qlimit {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::ClosedLoopSingularity: return "closed-loop-singularity";
    case ErrorKind::NegativeDiscriminant: return "negative-discriminant";
    case ErrorKind::ZeroDenominator: return "zero-denominator";
    case ErrorKind::SamplerExhausted: return "sampler-exhausted";
    case ErrorKind::SingularResolvent: return "singular-resolvent";
    case ErrorKind::ZeroSignalTransfer: return "zero-signal-transfer";
    case ErrorKind::NotTimeInvariant: return "not-time-invariant";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace qlimit
