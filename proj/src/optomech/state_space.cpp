#include "qlimit/optomech/state_space.hpp"

#include <cmath>

#include "qlimit/error.hpp"

namespace qlimit::optomech {
namespace {

// Appends the optional mechanical channels; returns the column of b1_in.
Eigen::Index add_mechanical_channels(const OptomechParams& p, std::vector<NoiseChannel>& ch) {
  if (p.include_mech_noise) {
    ch.push_back({"q_in", p.n_thermal + 0.5});
    ch.push_back({"p_in", p.n_thermal + 0.5});
  }
  return static_cast<Eigen::Index>(ch.size());
}

void fill_common(const OptomechParams& p, StateSpaceModel& m, Eigen::Index b1_in) {
  const double sg = std::sqrt(p.cavity_decay);
  const double sG = std::sqrt(p.mech_damping);
  const Eigen::Index n = m.dimension();
  const auto channels = static_cast<Eigen::Index>(m.channels.size());

  m.noise_input = CMatrix::Zero(n, channels);
  if (p.include_mech_noise) {
    m.noise_input(idx::q, 0) = sG;
    m.noise_input(idx::p, 1) = sG;
  }
  m.noise_input(idx::b1, b1_in) = sg;
  m.noise_input(idx::b2, b1_in + 1) = sg;

  m.signal_input = CVector::Zero(n);
  m.signal_input(idx::p) = 1.0;

  // Z = b1_out sin phi + b2_out cos phi, b_out = sqrt(gamma) b - b_in
  const double s = std::sin(p.readout_phase);
  const double c = std::cos(p.readout_phase);
  m.output = CRowVector::Zero(n);
  m.output(idx::b1) = sg * s;
  m.output(idx::b2) = sg * c;
  m.feedthrough = CRowVector::Zero(channels);
  m.feedthrough(b1_in) = -s;
  m.feedthrough(b1_in + 1) = -c;
}

void fill_mechanics(const OptomechParams& p, CMatrix& a) {
  a(idx::q, idx::q) = -p.mech_damping / 2.0;
  a(idx::q, idx::p) = p.mech_frequency;
  a(idx::p, idx::q) = -p.mech_frequency;
  a(idx::p, idx::p) = -p.mech_damping / 2.0;
}

}  // namespace

const char* to_string(ModelKind kind) noexcept {
  return kind == ModelKind::Detuned ? "detuned" : "locking";
}

ControlCouplings control_couplings(const OptomechParams& p, Complex lambda) {
  const double sg = std::sqrt(p.cavity_decay);
  return {p.control_coupling - lambda * sg * std::sin(p.feedback_phase),
          lambda * sg * std::cos(p.feedback_phase)};
}

StateSpaceModel build_detuned_model(const OptomechParams& p) {
  p.validate();
  StateSpaceModel m;
  m.kind = ModelKind::Detuned;
  m.params = p;

  m.drift = CMatrix::Zero(4, 4);
  fill_mechanics(p, m.drift);
  m.drift(idx::p, idx::b1) = p.coupling;
  m.drift(idx::b1, idx::b1) = -p.cavity_decay / 2.0;
  m.drift(idx::b1, idx::b2) = p.detuning;
  m.drift(idx::b2, idx::q) = p.coupling;
  m.drift(idx::b2, idx::b1) = -p.detuning;
  m.drift(idx::b2, idx::b2) = -p.cavity_decay / 2.0;

  const Eigen::Index b1_in = add_mechanical_channels(p, m.channels);
  m.channels.push_back({"b1_in", 0.5});
  m.channels.push_back({"b2_in", 0.5});
  fill_common(p, m, b1_in);
  return m;
}

StateSpaceModel build_locking_model(const OptomechParams& p, Complex lambda) {
  p.validate();
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw Error(ErrorKind::InvalidArgument, "feedback lambda must be finite");
  }
  StateSpaceModel m;
  m.kind = ModelKind::Locking;
  m.params = p;
  m.lambda = lambda;

  const double half = -p.cavity_decay / 2.0;
  const ControlCouplings gc = control_couplings(p, lambda);
  m.drift = CMatrix::Zero(6, 6);
  fill_mechanics(p, m.drift);
  m.drift(idx::p, idx::b1) = p.coupling;
  m.drift(idx::p, idx::c1) = -gc.g1;
  m.drift(idx::p, idx::c2) = gc.g2;
  m.drift(idx::b1, idx::b1) = half;
  m.drift(idx::b2, idx::q) = p.coupling;
  m.drift(idx::b2, idx::b2) = half;
  m.drift(idx::c1, idx::c1) = half;
  m.drift(idx::c2, idx::q) = -p.control_coupling;
  m.drift(idx::c2, idx::c2) = half;

  const Eigen::Index b1_in = add_mechanical_channels(p, m.channels);
  m.channels.push_back({"b1_in", 0.5});
  m.channels.push_back({"b2_in", 0.5});
  m.channels.push_back({"c1_in", 0.5});
  m.channels.push_back({"c2_in", 0.5});
  fill_common(p, m, b1_in);

  const Eigen::Index c1_in = b1_in + 2;
  const double sg = std::sqrt(p.cavity_decay);
  const double st = std::sin(p.feedback_phase);
  const double ct = std::cos(p.feedback_phase);
  m.noise_input(idx::c1, c1_in) = sg;
  m.noise_input(idx::c2, c1_in + 1) = sg;
  // the -lambda (c1_in sin theta + c2_in cos theta) part of the effective force
  m.noise_input(idx::p, c1_in) = -lambda * st;
  m.noise_input(idx::p, c1_in + 1) = -lambda * ct;

  m.feedback_output = CRowVector::Zero(6);
  m.feedback_output(idx::c1) = sg * st;
  m.feedback_output(idx::c2) = sg * ct;
  m.feedback_feedthrough = CRowVector::Zero(static_cast<Eigen::Index>(m.channels.size()));
  m.feedback_feedthrough(c1_in) = -st;
  m.feedback_feedthrough(c1_in + 1) = -ct;
  return m;
}

CVector drift_eigenvalues(const RMatrix& drift) {
  Eigen::EigenSolver<RMatrix> solver(drift, false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigenvalue iteration did not converge");
  }
  return solver.eigenvalues();
}

bool stability(const RMatrix& drift) {
  const CVector ev = drift_eigenvalues(drift);
  return ev.real().maxCoeff() <= 1e-12 * drift.norm();
}

bool stability(const CMatrix& drift) {
  if (drift.imag().cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorKind::NotTimeInvariant,
                "complex drift matrix (frequency-dependent feedback); eigen check does not apply");
  }
  return stability(RMatrix(drift.real()));
}

CMatrix transfer_at(const CMatrix& drift, double omega) {
  const Eigen::Index n = drift.rows();
  const CMatrix m = Complex{0.0, -omega} * CMatrix::Identity(n, n) - drift;
  Eigen::PartialPivLU<CMatrix> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    throw Error(ErrorKind::SingularResolvent, "(-i w I - A) is singular at w = " +
                                                  std::to_string(omega));
  }
  return lu.inverse();
}

CMatrix transfer_at(const StateSpaceModel& model, double omega) {
  return transfer_at(model.drift, omega);
}

namespace {

OutputTransfers port_transfers(const StateSpaceModel& model, double omega, const CRowVector& c,
                               const CRowVector& d) {
  const CMatrix r = transfer_at(model, omega);
  const CVector force_response = r * model.signal_input;
  OutputTransfers t;
  t.signal = c * force_response;
  t.noise = (c * r * model.noise_input + d).transpose();
  t.force_to_q = force_response(idx::q);
  t.signal_scale = c.norm() * force_response.norm();
  return t;
}

}  // namespace

OutputTransfers output_transfers(const StateSpaceModel& model, double omega) {
  return port_transfers(model, omega, model.output, model.feedthrough);
}

OutputTransfers feedback_transfers(const StateSpaceModel& model, double omega) {
  if (model.kind != ModelKind::Locking) {
    throw Error(ErrorKind::InvalidArgument, "only the locking model has a feedback port");
  }
  return port_transfers(model, omega, model.feedback_output, model.feedback_feedthrough);
}

}  // namespace qlimit::optomech
