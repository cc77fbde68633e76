#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qlimit/optomech/params.hpp"
#include "qlimit/types.hpp"

namespace qlimit::optomech {

enum class ModelKind { Detuned, Locking };

const char* to_string(ModelKind kind) noexcept;

/// State ordering shared by both models; the locking model appends c1, c2.
namespace idx {
inline constexpr Eigen::Index q = 0;
inline constexpr Eigen::Index p = 1;
inline constexpr Eigen::Index b1 = 2;
inline constexpr Eigen::Index b2 = 3;
inline constexpr Eigen::Index c1 = 4;
inline constexpr Eigen::Index c2 = 5;
}  // namespace idx

struct NoiseChannel {
  std::string name;
  double psd = 0.5;  // symmetrized spectrum of the unit-normalized input
};

/// x' = A x + B n + e_p f,  Z = C x + D n.
///
/// Columns of B are independent input quadratures; a source reaching the
/// state through several paths (the control-cavity input both drives the
/// c-cavity and enters the force through the feedback) carries all of them
/// in its single column.
struct StateSpaceModel {
  ModelKind kind = ModelKind::Detuned;
  OptomechParams params;
  Complex lambda{};  // feedback value folded into A and B (locking only)

  CMatrix drift;          // A, n x n
  CMatrix noise_input;    // B, n x channels
  CVector signal_input;   // force column
  CRowVector output;      // C for Z
  CRowVector feedthrough; // D for Z
  std::vector<NoiseChannel> channels;

  // Y port (locking only). Read-only diagnostic; not used by the sensitivities.
  CRowVector feedback_output;
  CRowVector feedback_feedthrough;

  Eigen::Index dimension() const noexcept { return drift.rows(); }
};

/// Effective control couplings g~1 = g~ - lambda sqrt(gamma) sin theta and
/// g~2 = lambda sqrt(gamma) cos theta.
struct ControlCouplings {
  Complex g1;
  Complex g2;
};

ControlCouplings control_couplings(const OptomechParams& params, Complex lambda);

/// 4x4 detuned-cavity model over (q, p, b1, b2):
///
///   [ -Gamma/2   Omega     0          0        ]
///   [ -Omega    -Gamma/2   g          0        ]
///   [  0          0       -gamma/2    Delta    ]
///   [  g          0       -Delta     -gamma/2  ]
StateSpaceModel build_detuned_model(const OptomechParams& params);

/// 6x6 resonant cavity with quantum locking over (q, p, b1, b2, c1, c2).
/// The p row carries (g, -g~1, g~2) on (b1, c1, c2), b2 is driven by g q and
/// c2 by -g~ q. The feedback re-injects the control input noise into p with
/// weights -lambda (sin theta, cos theta).
StateSpaceModel build_locking_model(const OptomechParams& params, Complex lambda);

/// Eigenvalues of a real drift matrix.
CVector drift_eigenvalues(const RMatrix& drift);

/// True iff every eigenvalue has real part <= 1e-12 * ||A||.
bool stability(const RMatrix& drift);

/// As above, for a complex-typed matrix that must in fact be real. Throws
/// Error{NotTimeInvariant} if any entry has a non-zero imaginary part, as
/// happens for a frequency-dependent feedback value.
bool stability(const CMatrix& drift);

/// (-i w I - A)^-1, with the Fourier convention d/dt -> -i w.
/// Throws Error{SingularResolvent} at an undamped pole.
CMatrix transfer_at(const CMatrix& drift, double omega);
CMatrix transfer_at(const StateSpaceModel& model, double omega);

struct OutputTransfers {
  Complex signal;          // Z per unit force
  CVector noise;           // Z per unit of each input channel
  Complex force_to_q;      // closed-loop force -> displacement
  double signal_scale = 0; // ||C|| ||R e_p||, the largest |signal| could be
};

/// Z(w) = T_f f + sum_k T_k n_k, through-cavity path plus direct
/// feedthrough.
OutputTransfers output_transfers(const StateSpaceModel& model, double omega);

/// Same decomposition for the Y port. Locking model only.
OutputTransfers feedback_transfers(const StateSpaceModel& model, double omega);

}  // namespace qlimit::optomech
