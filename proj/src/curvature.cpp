#include "lieframe/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

ConnectionCoeffs::ConnectionCoeffs(int dim)
    : dim_(dim), g_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

Vec ConnectionCoeffs::covariant(const Vec& u, const Vec& v) const {
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      double w = u[i] * v[j];
      if (w == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out[k] += w * (*this)(i, j, k);
    }
  return out;
}

Mat ConnectionCoeffs::nabla(int i) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

Vec CurvatureTensors::apply(const Vec& u, const Vec& v, const Vec& w) const {
  Vec out = Vec::Zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        double c = u[i] * v[j] * w[k];
        if (c == 0.0) continue;
        for (int l = 0; l < dim; ++l) out[l] += c * R(i, j, k, l);
      }
  return out;
}

ConnectionCoeffs levi_civita(const StructureConstants& sc, const FrameMetric& m) {
  const int n = sc.dim();
  ConnectionCoeffs conn(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // Koszul: 2 g(∇_i e_j, e_k) = g([e_i,e_j],e_k) − g([e_j,e_k],e_i) + g([e_k,e_i],e_j)
        double lowered = sc(i, j, k) * m.eta(k) - sc(j, k, i) * m.eta(i) + sc(k, i, j) * m.eta(j);
        conn(i, j, k) = 0.5 * lowered * m.eta(k);
      }
  return conn;
}

CurvatureTensors riemann_ricci(const ConnectionCoeffs& G, const StructureConstants& sc,
                               const FrameMetric& m) {
  const int n = sc.dim();
  CurvatureTensors t;
  t.dim = n;
  t.riemann.assign(static_cast<std::size_t>(n * n * n * n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double* out = &t.riemann[((i * n + j) * n + k) * n];
        for (int p = 0; p < n; ++p) {
          double a = G(j, k, p), b = G(i, k, p), c = sc(i, j, p);
          if (a == 0.0 && b == 0.0 && c == 0.0) continue;
          for (int l = 0; l < n; ++l) out[l] += a * G(i, p, l) - b * G(j, p, l) - c * G(p, k, l);
        }
      }
  t.ricci = Mat::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) t.ricci(u, v) += t.R(w, u, v, w);
  t.scalar = 0;
  for (int i = 0; i < n; ++i) t.scalar += m.eta(i) * t.ricci(i, i);
  return t;
}

CurvatureTensors curvature_of(const StructureConstants& sc, const FrameMetric& m) {
  return riemann_ricci(levi_civita(sc, m), sc, m);
}

BracketParams9 BracketParams9::from(const StructureConstants& sc) {
  BracketParams9 p;
  p.a = sc(0, 1, 0), p.b = sc(0, 1, 1), p.c = sc(0, 1, 2);
  p.d = sc(1, 2, 0), p.f = sc(1, 2, 1), p.h = sc(1, 2, 2);
  p.g = sc(0, 2, 0), p.j = sc(0, 2, 1), p.k = sc(0, 2, 2);
  return p;
}

StructureConstants BracketParams9::to_structure() const {
  StructureConstants sc(3);
  sc.set(0, 1, 0, a), sc.set(0, 1, 1, b), sc.set(0, 1, 2, c);
  sc.set(1, 2, 0, d), sc.set(1, 2, 1, f), sc.set(1, 2, 2, h);
  sc.set(0, 2, 0, g), sc.set(0, 2, 1, j), sc.set(0, 2, 2, k);
  return sc;
}

double BracketParams9::jacobi_residual() const {
  double r1 = b * d + k * d - f * a - h * g;
  double r2 = j * a - g * b + k * f - h * j;
  double r3 = a * k + h * b - g * c - f * c;
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)});
}

CurvatureTensors closed_form_ricci(const BracketParams9& p, const FrameMetric& m, double tol) {
  if (m.dim() != 3 || m.s_g() != -1) throw ConstraintViolation("closed-form Ricci needs a 3D Lorentzian frame");
  double res = p.jacobi_residual();
  if (res > tol) throw JacobiViolation("bracket parameters violate Jacobi (residual " + std::to_string(res) + ")");
  const double a = p.a, b = p.b, c = p.c, d = p.d, f = p.f, h = p.h, g = p.g, j = p.j, k = p.k;
  CurvatureTensors t;
  t.dim = 3;
  t.ricci = Mat::Zero(3, 3);
  Mat& R = t.ricci;
  R(0, 0) = a * a - b * b + g * f + g * g - k * k - a * h + d * d / 2 - c * j - c * c / 2 - j * j / 2;
  R(0, 1) = b * h - f * j - f * c + d * g - h * k;
  R(0, 2) = h * c + h * j - f * k - d * a + f * b;
  R(1, 1) = -a * a + b * b - f * f - h * h - f * g + b * k - j * j / 2 + d * c + c * c / 2 + d * d / 2;
  R(1, 2) = f * a - a * g + b * j - b * d + c * k;
  R(2, 2) = -g * g + k * k + a * h + k * b - f * f - h * h + j * j / 2 - j * d + d * d / 2 - c * c / 2;
  R(1, 0) = R(0, 1), R(2, 0) = R(0, 2), R(2, 1) = R(1, 2);
  t.scalar = -2 * a * a + 2 * b * b - 2 * g * f - 2 * g * g + 2 * k * k + 2 * a * h + d * d / 2 + c * j +
             c * c / 2 + j * j / 2 - 2 * f * f - 2 * h * h + 2 * b * k + d * c - j * d;
  return t;
}

CurvatureTensors closed_form_ricci(const BracketParams9& p, const FrameMetric& m) {
  return closed_form_ricci(p, m, tolerance());
}

ConnectionCoeffs torsionful_connection(const ConnectionCoeffs& conn, const Form& H, const FrameMetric& m) {
  if (H.degree() != 3) throw DegreeMismatch("torsion form must have degree 3");
  const int n = conn.dim();
  ConnectionCoeffs out = conn;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) += 0.5 * m.eta(k) * H.eval({i, j, k});
  return out;
}

std::vector<double> torsion(const ConnectionCoeffs& conn, const StructureConstants& sc) {
  const int n = conn.dim();
  std::vector<double> t(static_cast<std::size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t[(i * n + j) * n + k] = conn(i, j, k) - conn(j, i, k) - sc(i, j, k);
  return t;
}

double metric_compatibility_defect(const ConnectionCoeffs& conn, const FrameMetric& m) {
  const int n = conn.dim();
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(m.eta(k) * conn(i, j, k) + m.eta(j) * conn(i, k, j)));
  return worst;
}

Mat h_square(const Form& H, const FrameMetric& m) {
  const int n = H.dim();
  Mat out = Mat::Zero(n, n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out(u, v) += m.eta(k) * m.eta(l) * H.eval({u, k, l}) * H.eval({v, k, l});
  return out;
}

OracleReport closed_form_oracle(std::size_t samples, std::uint64_t seed, unsigned threads) {
  static const Family kFamilies[] = {Family::g1, Family::g2, Family::g3, Family::g4,
                                     Family::g5, Family::g6, Family::g7};
  const FrameMetric m = FrameMetric::lorentzian(3);
  std::vector<FamilySpec> specs(samples);
  std::vector<double> ric_err(samples), scal_err(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
    std::mt19937_64 rng(seq);
    specs[i] = sample_family(kFamilies[i % 7], rng);
    StructureConstants sc = make_family(specs[i]);
    CurvatureTensors generic = curvature_of(sc, m);
    CurvatureTensors closed = closed_form_ricci(BracketParams9::from(sc), m, 1e-9);
    ric_err[i] = (generic.ricci - closed.ricci).cwiseAbs().maxCoeff();
    scal_err[i] = std::abs(generic.scalar - closed.scalar);
  });
  OracleReport r;
  r.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    if (ric_err[i] > r.max_ricci_error || (i == 0)) {
      r.max_ricci_error = std::max(r.max_ricci_error, ric_err[i]);
      r.worst = specs[i];
    }
    r.max_scalar_error = std::max(r.max_scalar_error, scal_err[i]);
  }
  return r;
}

}  // namespace lieframe
