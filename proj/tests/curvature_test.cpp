#include "lieframe/curvature.hpp"

#include <chrono>

#include "lieframe/errors.hpp"
#include "support.hpp"

using namespace lieframe;
using namespace lieframe::test;

namespace {

const Family kLorentzian[] = {Family::g1, Family::g2, Family::g3, Family::g4, Family::g5, Family::g6, Family::g7};

// R(e_i,e_j)e_k from hand-assembled Koszul coefficients.
double riemann_oracle(const StructureConstants& sc, const FrameMetric& m, int i, int j, int k, int l) {
  const int n = sc.dim();
  double s = 0;
  for (int p = 0; p < n; ++p) {
    s += koszul(sc, m, j, k, p) * koszul(sc, m, i, p, l) - koszul(sc, m, i, k, p) * koszul(sc, m, j, p, l);
    s -= sc(i, j, p) * koszul(sc, m, p, k, l);
  }
  return s;
}

Form random_three_form(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Form w(3, dim);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(rng);
  return w;
}

}  // namespace

TEST_SUITE("curvature") {
  TEST_CASE("abelian algebra is flat") {
    for (const FrameMetric& m : {FrameMetric::lorentzian(3), FrameMetric::riemannian(3)}) {
      ConnectionCoeffs c = levi_civita(StructureConstants(3), m);
      for (int i = 0; i < 3; ++i) CHECK(max_abs(c.nabla(i)) == 0);
      CurvatureTensors t = curvature_of(StructureConstants(3), m);
      CHECK(max_abs(t.ricci) == 0);
      CHECK(t.scalar == 0);
    }
    CHECK(max_abs(closed_form_ricci(BracketParams9{}, FrameMetric::lorentzian(3)).ricci) == 0);
  }

  TEST_CASE("g3(1,1,1) Ricci tensor") {
    StructureConstants sc = make_family(g3(1, 1, 1));
    Mat expected = Vec(vec3(0.5, -0.5, -0.5)).asDiagonal();
    CurvatureTensors t = curvature_of(sc, FrameMetric::lorentzian(3));
    CHECK(max_abs(Mat(t.ricci - expected)) <= 1e-15);
    CurvatureTensors cf = closed_form_ricci(BracketParams9::from(sc), FrameMetric::lorentzian(3));
    CHECK(max_abs(Mat(cf.ricci - expected)) <= 1e-15);
    CHECK(t.scalar == doctest::Approx(-1.5));
  }

  TEST_CASE("closed form rejects brackets violating Jacobi") {
    BracketParams9 p;
    p.a = 1;
    p.c = 1;
    p.f = 1;
    CHECK_THROWS_AS(closed_form_ricci(p, FrameMetric::lorentzian(3)), JacobiViolation);
  }

  TEST_CASE("property: Levi-Civita coefficients match the Koszul formula") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial)
      for (Family f : kLorentzian) {
        StructureConstants sc = make_family(sample_family(f, rng));
        FrameMetric m = FrameMetric::lorentzian(3);
        ConnectionCoeffs c = levi_civita(sc, m);
        double worst = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(c(i, j, k) - koszul(sc, m, i, j, k)));
        CHECK(worst <= 1e-13 * std::max(1.0, sc.max_abs()));
        std::vector<double> t = torsion(c, sc);
        CHECK(*std::max_element(t.begin(), t.end()) <= 1e-12 * std::max(1.0, sc.max_abs()));
        CHECK(metric_compatibility_defect(c, m) <= 1e-12 * std::max(1.0, sc.max_abs()));
      }
  }

  TEST_CASE("property: Riemann tensor, Ricci symmetry and scalar trace") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 20; ++trial)
      for (Family f : kLorentzian) {
        StructureConstants sc = make_family(sample_family(f, rng));
        FrameMetric m = FrameMetric::lorentzian(3);
        CurvatureTensors t = curvature_of(sc, m);
        const double scale = std::max(1.0, sc.max_abs() * sc.max_abs());
        double worst = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
              for (int l = 0; l < 3; ++l)
                worst = std::max(worst, std::abs(t.R(i, j, k, l) - riemann_oracle(sc, m, i, j, k, l)));
        CHECK(worst <= 1e-12 * scale);
        CHECK(max_abs(Mat(t.ricci - t.ricci.transpose())) <= 1e-12 * scale);
        double trace = 0;
        for (int i = 0; i < 3; ++i) trace += m.eta(i) * t.ricci(i, i);
        CHECK(t.scalar == doctest::Approx(trace).epsilon(1e-12));
      }
  }

  TEST_CASE("property: closed-form Ricci agrees with the generic pipeline") {
    auto start = std::chrono::steady_clock::now();
    OracleReport r = closed_form_oracle(1000, 2024, 2);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(r.samples == 1000);
    CHECK(r.max_ricci_error <= kTol);
    CHECK(r.max_scalar_error <= kTol);
    CHECK(seconds < 5.0);
    OracleReport single = closed_form_oracle(100, 2024, 1), multi = closed_form_oracle(100, 2024, 4);
    CHECK(single.max_ricci_error == multi.max_ricci_error);
  }

  TEST_CASE("torsionful connection") {
    std::mt19937_64 rng(23);
    StructureConstants sc = direct_sum(make_family(sample_family(Family::g4, rng)),
                                       make_family(sample_family(Family::RiemannianUnimodular, rng)));
    FrameMetric m = FrameMetric::product(FrameMetric::lorentzian(3), FrameMetric::riemannian(3));
    ConnectionCoeffs lc = levi_civita(sc, m);
    ConnectionCoeffs same = torsionful_connection(lc, Form(3, 6), m);
    for (int i = 0; i < 6; ++i) CHECK(max_abs(Mat(same.nabla(i) - lc.nabla(i))) == 0);

    Form H = random_three_form(6, rng);
    ConnectionCoeffs th = torsionful_connection(lc, H, m);
    CHECK(metric_compatibility_defect(th, m) <= 1e-12);
    std::vector<double> t = torsion(th, sc);
    double worst = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(t[(i * 6 + j) * 6 + k] - m.eta(k) * H.eval({i, j, k})));
    CHECK(worst <= 1e-12);
  }

  TEST_CASE("H square") {
    FrameMetric m = FrameMetric::lorentzian(3);
    Mat hh = h_square(Form::volume(3), m);
    CHECK(max_abs(Mat(hh - Mat(Vec(vec3(2, -2, -2)).asDiagonal()))) == 0);
  }
}
