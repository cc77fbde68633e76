#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qlimit/error.hpp"
#include "qlimit/optomech/state_space.hpp"
#include "qlimit/susceptibility.hpp"

using namespace qlimit;
using namespace qlimit::optomech;

namespace {

std::vector<Complex> sorted(const CVector& v) {
  std::vector<Complex> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace

TEST_CASE("detuned drift matrix entries") {
  const StateSpaceModel m = build_detuned_model(fig2_detuned());
  REQUIRE(m.dimension() == 4);
  const double G = 0.1, W = 0.1, g = 5.0, k = 2.0, D = -5.0;
  const double expected[4][4] = {{-G / 2, W, 0, 0},
                                 {-W, -G / 2, g, 0},
                                 {0, 0, -k / 2, D},
                                 {g, 0, -D, -k / 2}};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(m.drift(r, c) == Complex{expected[r][c], 0.0});
    }
  }
  CHECK(m.drift(idx::p, idx::b1).real() == 5.0);
  CHECK(m.signal_input(idx::p) == Complex{1.0, 0.0});
  CHECK(m.channels.size() == 2);
  CHECK(m.noise_input(idx::b1, 0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.noise_input(idx::b2, 1).real() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("uncoupled detuned model splits into oscillator and cavity") {
  OptomechParams p = fig2_detuned();
  p.coupling = 0.0;
  const StateSpaceModel m = build_detuned_model(p);
  const auto ev = sorted(drift_eigenvalues(m.drift.real()));
  const std::vector<Complex> expect = sorted((CVector(4) << Complex{-1.0, -5.0}, Complex{-1.0, 5.0},
                                              Complex{-0.05, -0.1}, Complex{-0.05, 0.1})
                                                 .finished());
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(ev[i] - expect[i]) < 1e-12);
  }
  CHECK(stability(m.drift));
}

TEST_CASE("stability verdicts") {
  RMatrix a = RMatrix::Zero(2, 2);
  a(0, 0) = -1.0;
  a(1, 1) = -2.0;
  CHECK(stability(a));
  a(0, 0) = 0.1;
  CHECK_FALSE(stability(a));
  CHECK(stability(build_detuned_model(fig2_detuned()).drift));

  OptomechParams blue = fig2_detuned();
  blue.detuning = 5.0;
  CHECK_FALSE(stability(build_detuned_model(blue).drift));

  const StateSpaceModel lock = build_locking_model(fig2_locking_force(), Complex{0.3, 0.2});
  try {
    stability(lock.drift);
    FAIL("complex drift must be rejected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTimeInvariant);
  }
}

TEST_CASE("locking model structure") {
  OptomechParams p = fig2_locking_force();

  SUBCASE("feedback off") {
    const ControlCouplings c = control_couplings(p, Complex{});
    CHECK(c.g1 == Complex{p.control_coupling, 0.0});
    CHECK(c.g2 == Complex{});
    const StateSpaceModel m = build_locking_model(p, Complex{});
    REQUIRE(m.dimension() == 6);
    // effective force is f + sqrt(Gamma) p_in: no control noise on the p row
    for (Eigen::Index k = 0; k < m.noise_input.cols(); ++k) {
      CHECK(m.noise_input(idx::p, k) == Complex{});
    }
    CHECK(m.drift(idx::p, idx::c1) == Complex{-2.0, 0.0});
    CHECK(m.drift(idx::p, idx::c2) == Complex{});
  }
  SUBCASE("g~2 = lambda sqrt(gamma) cos theta") {
    p.cavity_decay = 4.0;
    p.feedback_phase = 0.0;
    const ControlCouplings c = control_couplings(p, Complex{1.0, 0.0});
    CHECK(c.g1 == Complex{p.control_coupling, 0.0});
    CHECK(c.g2 == Complex{2.0, 0.0});
  }
  SUBCASE("drift entries") {
    const Complex lambda{0.7, -0.4};
    const StateSpaceModel m = build_locking_model(p, lambda);
    const double sg = std::sqrt(p.cavity_decay);
    const double st = std::sin(p.feedback_phase), ct = std::cos(p.feedback_phase);
    CHECK(m.drift(idx::c2, idx::q) == Complex{-p.control_coupling, 0.0});
    CHECK(m.drift(idx::b2, idx::q) == Complex{p.coupling, 0.0});
    CHECK(m.drift(idx::p, idx::b1) == Complex{p.coupling, 0.0});
    CHECK(std::abs(m.drift(idx::p, idx::c1) - (-p.control_coupling + lambda * sg * st)) < 1e-15);
    CHECK(std::abs(m.drift(idx::p, idx::c2) - lambda * sg * ct) < 1e-15);
    for (Eigen::Index i = idx::b1; i <= idx::c2; ++i) {
      CHECK(m.drift(i, i) == Complex{-p.cavity_decay / 2.0, 0.0});
    }
    // resonant cavities: no b1 <-> b2 or c1 <-> c2 rotation
    CHECK(m.drift(idx::b1, idx::b2) == Complex{});
    CHECK(m.drift(idx::c1, idx::c2) == Complex{});
    // control noise reaches p through the feedback
    CHECK(std::abs(m.noise_input(idx::p, 2) + lambda * st) < 1e-15);
    CHECK(std::abs(m.noise_input(idx::p, 3) + lambda * ct) < 1e-15);
  }
  SUBCASE("mechanical channels") {
    p.include_mech_noise = true;
    p.n_thermal = 3.0;
    const StateSpaceModel m = build_locking_model(p, Complex{});
    REQUIRE(m.channels.size() == 6);
    CHECK(m.channels[0].name == "q_in");
    CHECK(m.channels[1].psd == 3.5);
    CHECK(m.noise_input(idx::q, 0).real() == doctest::Approx(std::sqrt(0.1)));
    CHECK(m.channels[2].psd == 0.5);
  }
}

TEST_CASE("invalid parameters are rejected") {
  OptomechParams p;
  p.mech_damping = -0.1;
  CHECK_THROWS_AS(build_detuned_model(p), Error);
  p = OptomechParams{};
  p.cavity_decay = 0.0;
  CHECK_THROWS_AS(build_detuned_model(p), Error);
  p = OptomechParams{};
  p.n_thermal = -1.0;
  CHECK_THROWS_AS(build_locking_model(p, Complex{}), Error);
  CHECK_THROWS_AS(build_locking_model(OptomechParams{}, Complex{NAN, 0.0}), Error);
}

TEST_CASE("resolvent") {
  SUBCASE("scalar system") {
    CMatrix a(1, 1);
    a(0, 0) = -1.5;
    for (double w : {-2.0, 0.0, 0.3, 10.0}) {
      CHECK(std::abs(transfer_at(a, w)(0, 0) - 1.0 / Complex{1.5, -w}) < 1e-15);
    }
  }
  SUBCASE("oscillator block gives chi_qq") {
    OptomechParams p = fig2_detuned();
    p.coupling = 0.0;
    const StateSpaceModel m = build_detuned_model(p);
    for (double w : {0.01, 0.1, 0.5, 3.0}) {
      const Complex chi = mech_susceptibility(0.1, 0.1, w);
      CHECK(std::abs(transfer_at(m, w)(idx::q, idx::p) - chi) < 1e-12 * std::abs(chi));
    }
  }
  SUBCASE("real drift is conjugate symmetric") {
    const StateSpaceModel m = build_detuned_model(fig2_detuned());
    for (double w : {0.05, 0.7, 4.0}) {
      CHECK((transfer_at(m, -w) - transfer_at(m, w).conjugate()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("undamped pole") {
    OptomechParams p;
    p.mech_damping = 0.0;
    p.coupling = 0.0;
    try {
      transfer_at(build_detuned_model(p), p.mech_frequency);
      FAIL("expected a singular resolvent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularResolvent);
    }
  }
}

TEST_CASE("readout transfers") {
  SUBCASE("no coupling, no signal") {
    OptomechParams p = fig2_detuned();
    p.coupling = 0.0;
    CHECK(output_transfers(build_detuned_model(p), 0.3).signal == Complex{});
  }
  SUBCASE("on resonance b1 does not respond to q") {
    OptomechParams p = fig2_detuned();
    p.detuning = 0.0;
    const CMatrix r = transfer_at(build_detuned_model(p), 0.4);
    CHECK(std::abs(r(idx::b1, idx::q)) < 1e-15);
    CHECK(std::abs(r(idx::b1, idx::p)) < 1e-15);
    p.detuning = -5.0;
    CHECK(std::abs(transfer_at(build_detuned_model(p), 0.4)(idx::b1, idx::p)) > 1e-3);
  }
  SUBCASE("resonant reflection is unitary") {
    OptomechParams p;
    p.coupling = 0.0;
    p.readout_phase = std::numbers::pi / 2.0;
    p.cavity_decay = 2.0;
    for (double w : {0.0, 0.3, 1.0, 8.0}) {
      const OutputTransfers t = output_transfers(build_detuned_model(p), w);
      CHECK(std::abs(t.noise(0)) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(t.noise(1)) < 1e-15);
    }
  }
  SUBCASE("feedback port of the locking model") {
    const StateSpaceModel m = build_locking_model(fig2_locking_displacement(), Complex{});
    const OutputTransfers y = feedback_transfers(m, 0.2);
    // theta = 0 reads c2, which carries -g~ q
    CHECK(std::abs(y.signal) > 0.0);
    CHECK(y.noise.size() == 4);
    CHECK_THROWS_AS(feedback_transfers(build_detuned_model(fig2_detuned()), 0.2), Error);
  }
}
