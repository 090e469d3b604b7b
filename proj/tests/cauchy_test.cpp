#include "lieframe/cauchy.hpp"

#include <cmath>
#include <numbers>

#include "lieframe/errors.hpp"
#include "support.hpp"

using namespace lieframe;
using namespace lieframe::test;

namespace {

constexpr double kPi = std::numbers::pi;

double conformal_u(double x, double y) { return 0.2 * std::sin(2 * kPi * x) * std::cos(2 * kPi * y); }

// R = −2e^{−2u}Δu for q = e^{2u}(dx² + dy²)
double conformal_scalar(double x, double y) {
  double lap = -8 * kPi * kPi * conformal_u(x, y);
  return -2 * std::exp(-2 * conformal_u(x, y)) * lap;
}

SurfaceData conformal_surface(int n) {
  Grid2D g = periodic_box(n, n, 1, 1);
  SurfaceData d = example_isothermal(g, 0, 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double e = std::exp(2 * conformal_u(g.x(i), g.y(j)));
      d.q.xx[g.index(i, j)] = e;
      d.q.yy[g.index(i, j)] = e;
    }
  return d;
}

double curvature_error(int n) {
  SurfaceData d = conformal_surface(n);
  std::vector<double> r = scalar_curvature(d);
  double worst = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(r[d.grid.index(i, j)] - conformal_scalar(d.grid.x(i), d.grid.y(j))));
  return worst;
}

SurfaceSequence flat_sequence(int n, double dt) {
  std::vector<double> times;
  for (int k = -1; k <= 1; ++k) times.push_back(0.3 + k * dt);
  return example_flat_paracontact(periodic_box(n, n, 1, 1), times, 1, 0.5);
}

Grid2D strip(int n) {
  Grid2D g;
  g.nx = n;
  g.ny = n;
  g.hx = 1.0 / (n - 1);
  g.hy = 1.0 / n;
  return g;
}

}  // namespace

TEST_SUITE("cauchy") {
  TEST_CASE("flat data with F = 0 solves the constraints exactly") {
    SurfaceData d = example_isothermal(periodic_box(16, 16, 1, 1), 0, 1);
    ConstraintResiduals r = constraint_residuals(d, 1, 0, 0);
    CHECK(r.r1 == 0);
    CHECK(r.r2 == 0);
    CHECK(r.r3 == 0);
    CHECK(r.r4 == 0);
    CHECK(recover_epsilon(d).mean == 1);
  }

  TEST_CASE("perturbed second fundamental form is detected") {
    SurfaceData d = perturb_theta(example_isothermal(periodic_box(16, 16, 1, 1), 0, 1), 0.1, 9);
    CHECK(constraint_residuals(d, 1, 0, 0).r3 > 1e-3);
  }

  TEST_CASE("constraint constant") {
    CHECK(constraint_constant(1, 2, 3) == doctest::Approx(9.5));
    CHECK(constraint_constant(0, 1, 5) == doctest::Approx(2.5));
  }

  TEST_CASE("scalar curvature converges to the conformal formula") {
    double coarse = curvature_error(32), fine = curvature_error(64);
    CHECK(coarse < 1.0);
    CHECK(coarse / fine >= 3.5);
  }

  TEST_CASE("flat para-contact slices") {
    SurfaceData s = flat_paracontact_slice(periodic_box(8, 8, 1, 1), 0, 1, 0);
    CHECK(s.ax[0] == doctest::Approx(0).epsilon(1e-15));
    CHECK(s.ay[0] == doctest::Approx(1));
    CHECK(s.q.xx[0] == doctest::Approx(1));
    CHECK_THROWS_AS(flat_paracontact_slice(periodic_box(8, 8, 1, 1), 0, 0, 0), DegenerateParameters);

    SurfaceData t = flat_paracontact_slice(periodic_box(8, 8, 1, 1), 0.7, 1, 0.5);
    CHECK(constraint_residuals(t, 1, 0, 0).max() <= 1e-14);
    EpsilonEstimate e = recover_epsilon(t);
    CHECK(e.mean == doctest::Approx(1));
    CHECK(e.spread <= 1e-14);
  }

  TEST_CASE("flat para-contact flow converges at second order") {
    EvolutionResiduals coarse = evolution_residuals(flat_sequence(32, 0.05), 1, 0, 0);
    EvolutionResiduals fine = evolution_residuals(flat_sequence(64, 0.025), 1, 0, 0);
    CHECK(coarse.ricci_flow <= 1e-12);
    CHECK(coarse.alpha_flow > 0);
    CHECK(coarse.alpha_flow / fine.alpha_flow >= 3.5);
  }

  TEST_CASE("sign-flipped contact form breaks the flow") {
    SurfaceSequence s = flat_sequence(32, 0.05);
    for (auto& slice : s.slices)
      for (auto& v : slice.ay) v = -v;
    CHECK(evolution_residuals(s, 1, 0, 0).alpha_flow > 0.1);
  }

  TEST_CASE("static slices satisfy the metric flow but not the contact flow") {
    SurfaceData d = example_isothermal(periodic_box(16, 16, 1, 1), 0, 1);
    SurfaceSequence s{{d, d, d}, 0.1};
    EvolutionResiduals r = evolution_residuals(s, 1, 0, 0);
    CHECK(r.ricci_flow == 0);
    CHECK(r.alpha_flow == doctest::Approx(1));
    CHECK_THROWS(evolution_residuals(SurfaceSequence{{d, d}, 0.1}, 1, 0, 0));
  }

  TEST_CASE("null isothermal solution") {
    CHECK_THROWS_AS(example_null_isothermal(strip(16), 0), DegenerateParameters);
    SurfaceData coarse = example_null_isothermal(strip(32), 1), fine = example_null_isothermal(strip(64), 1);
    ConstraintResiduals rc = constraint_residuals(coarse, 0, 0, 0), rf = constraint_residuals(fine, 0, 0, 0);
    CHECK(rc.r1 > 0);
    CHECK(rc.r1 / rf.r1 >= 3.5);
    CHECK(rc.r2 <= 1e-12);
    CHECK(std::abs(recover_epsilon(fine).mean) <= 1e-12);
    SurfaceData off = example_isothermal(strip(32), 1, 2);
    CHECK(constraint_residuals(off, 0, 0, 0).r2 > 0.1);
  }

  TEST_CASE("validation") {
    SurfaceData d = example_isothermal(periodic_box(8, 8, 1, 1), 0, 1);
    d.q.xx[5] = -1;
    CHECK_THROWS_AS(d.validate(), SingularMetric);
    d = example_isothermal(periodic_box(8, 8, 1, 1), 0, 1);
    d.beta[3] = 0;
    CHECK_THROWS_AS(d.validate(), SingularMetric);
  }

  TEST_CASE("property: results do not depend on the thread count") {
    SurfaceData d = perturb_theta(conformal_surface(24), 0.05, 4);
    ConstraintResiduals a = constraint_residuals(d, 1, 0.5, 0.2, 1), b = constraint_residuals(d, 1, 0.5, 0.2, 4);
    CHECK(a.r1 == b.r1);
    CHECK(a.r2 == b.r2);
    CHECK(a.r3 == b.r3);
    CHECK(a.r4 == b.r4);
  }
}
