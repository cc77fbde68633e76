#include <cmath>

#include "doctest.h"
#include "qlimit/error.hpp"
#include "qlimit/optomech/sweep.hpp"

using namespace qlimit;
using namespace qlimit::optomech;

namespace {

bool identical(const SensitivityCurve& a, const SensitivityCurve& b) {
  if (a.points.size() != b.points.size() || a.stability != b.stability) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const CurvePoint &x = a.points[i], &y = b.points[i];
    if (x.omega != y.omega || x.s_f != y.s_f || x.s_q != y.s_q || x.sql_f != y.sql_f ||
        x.uql_f != y.uql_f || x.sql_q != y.sql_q || x.uql_q != y.uql_q || x.lambda != y.lambda ||
        x.error != y.error) {
      return false;
    }
  }
  return true;
}

SweepRequest request(ModelKind kind, OptomechParams p, std::size_t n) {
  SweepRequest r;
  r.model = kind;
  r.params = p;
  r.omegas = FrequencyGrid{1e-2, 1e1, n, true}.points();
  return r;
}

}  // namespace

TEST_CASE("frequency grids") {
  const auto log = FrequencyGrid{}.points();
  REQUIRE(log.size() == 400);
  CHECK(log.front() == 1e-2);
  CHECK(log.back() == 1e1);
  for (std::size_t i = 1; i < log.size(); ++i) CHECK(log[i] > log[i - 1]);
  CHECK(log[133] / log[132] == doctest::Approx(log[1] / log[0]));

  const auto lin = FrequencyGrid{0.0, 1.0, 5, false}.points();
  CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  CHECK_THROWS_AS((FrequencyGrid{1.0, 1.0, 5, true}.points()), Error);
  CHECK_THROWS_AS((FrequencyGrid{0.1, 1.0, 1, true}.points()), Error);
  CHECK_THROWS_AS((FrequencyGrid{0.0, 1.0, 5, true}.points()), Error);
}

TEST_CASE("serial and OpenMP sweeps are identical") {
  SUBCASE("detuned") {
    const auto r = request(ModelKind::Detuned, fig2_detuned(), 400);
    CHECK(identical(sweep_serial(r), sweep_parallel(r)));
  }
  SUBCASE("locking, fixed lambda") {
    auto r = request(ModelKind::Locking, fig2_locking_force(), 200);
    r.lambda = {LambdaMode::Fixed, Complex{0.8, 0.0}};
    CHECK(identical(sweep_serial(r), sweep_parallel(r)));
  }
  SUBCASE("locking, optimized lambda") {
    auto r = request(ModelKind::Locking, fig2_locking_displacement(), 24);
    r.lambda.mode = LambdaMode::OptimizeDisplacement;
    CHECK(identical(sweep_serial(r), sweep_parallel(r)));
  }
}

TEST_CASE("sweep stability flags") {
  const auto stable = sweep_parallel(request(ModelKind::Detuned, fig2_detuned(), 4));
  CHECK(stable.stability == Stability::Stable);
  CHECK(stable.eigenvalues.size() == 4);

  OptomechParams blue = fig2_detuned();
  blue.detuning = 5.0;
  CHECK(sweep_parallel(request(ModelKind::Detuned, blue, 4)).stability == Stability::Unstable);

  auto r = request(ModelKind::Locking, fig2_locking_force(), 4);
  r.lambda = {LambdaMode::Fixed, Complex{0.5, 0.5}};
  CHECK(sweep_parallel(r).stability == Stability::NotApplicable);
  r.lambda = {LambdaMode::Fixed, Complex{0.5, 0.0}};
  CHECK(sweep_parallel(r).stability != Stability::NotApplicable);
  r.lambda.mode = LambdaMode::OptimizeForce;
  CHECK(sweep_parallel(r).stability == Stability::NotApplicable);
}

TEST_CASE("curve invariants") {
  auto r = request(ModelKind::Locking, fig2_locking_force(), 30);
  r.lambda.mode = LambdaMode::OptimizeForce;
  const SensitivityCurve c = sweep_parallel(r);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    const CurvePoint& p = c.points[i];
    REQUIRE(p.ok());
    if (i > 0) CHECK(p.omega > c.points[i - 1].omega);
    for (double v : {p.s_f, p.s_q, p.sql_f, p.uql_f, p.sql_q, p.uql_q}) {
      CHECK(std::isfinite(v));
      CHECK(v >= 0.0);
    }
    CHECK(p.s_f >= p.uql_f - 1e-9);
    CHECK(p.sql_f >= p.uql_f);
  }
}

TEST_CASE("failed points carry a reason instead of a number") {
  OptomechParams p = fig2_detuned();
  p.coupling = 0.0;
  const SensitivityCurve c = sweep_serial(request(ModelKind::Detuned, p, 2));
  for (const auto& pt : c.points) {
    CHECK_FALSE(pt.ok());
    CHECK(pt.error == "zero-signal-transfer");
  }
}

TEST_CASE("bad sweep requests") {
  auto r = request(ModelKind::Detuned, fig2_detuned(), 4);
  r.lambda.mode = LambdaMode::OptimizeForce;
  CHECK_THROWS_AS(sweep_serial(r), Error);
  r = request(ModelKind::Detuned, fig2_detuned(), 4);
  r.omegas = {0.2, 0.1};
  CHECK_THROWS_AS(sweep_parallel(r), Error);
  r.omegas.clear();
  CHECK_THROWS_AS(sweep_parallel(r), Error);
}
