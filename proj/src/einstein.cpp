#include "lieframe/einstein.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {


std::vector<double> grid_values(const ScanGrid& g) {
  std::vector<double> v(g.points);
  for (int i = 0; i < g.points; ++i)
    v[i] = g.points == 1 ? g.lo : g.lo + (g.hi - g.lo) * i / (g.points - 1);
  return v;
}

FamilySpec spec_of(Family f, std::map<std::string, double> p) { return FamilySpec{f, std::move(p)}; }

// Unit vectors of a d-dimensional sphere, sampled deterministically.
std::vector<Vec> sphere_samples(int d) {
  std::vector<Vec> out;
  if (d == 0) {
    out.push_back(Vec::Zero(0));
  } else if (d == 1) {
    out.push_back(Vec::Constant(1, 1.0));
    out.push_back(Vec::Constant(1, -1.0));
  } else {
    const int n = 8;
    for (int k = 0; k < n; ++k) {
      double t = 2 * std::numbers::pi * k / n + 0.1;
      Vec v = Vec::Zero(d);
      v[0] = std::cos(t);
      v[1] = std::sin(t);
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

EtaEinsteinFit compute_fit(const ContactStructure& cs, const Mat& ric, double tol) {
  const int n = cs.m.dim();
  const Mat G = cs.m.matrix();
  const Mat A = cs.alpha * cs.alpha.transpose();
  const int rows = n * (n + 1) / 2;
  Mat M(rows, 2);
  Vec r(rows);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++k) {
      M(k, 0) = G(i, j);
      M(k, 1) = A(i, j);
      r[k] = 0.5 * (ric(i, j) + ric(j, i));
    }
  Vec sol = M.colPivHouseholderQr().solve(r);
  const double x = sol[0], y = sol[1];
  const double sg = cs.s_g();
  EtaEinsteinFit fit;
  fit.kappa = -sg * y;
  fit.lambda2 = 2 * sg * x - fit.kappa * cs.epsilon;
  fit.residual = max_abs(Mat(ric - x * G - y * A));
  fit.admissible = fit.residual <= tol && fit.lambda2 >= -tol && (sg == 1 || fit.kappa >= -tol);
  return fit;
}

EtaEinsteinFit fit_eta_einstein(const ContactStructure& cs, const CurvatureTensors& curv, double tol) {
  EtaEinsteinFit fit = compute_fit(cs, curv.ricci, tol);
  if (fit.residual > tol) throw NotEtaEinstein("Ricci residual " + std::to_string(fit.residual));
  if (!fit.admissible)
    throw Inadmissible("λ² = " + std::to_string(fit.lambda2) + ", κ = " + std::to_string(fit.kappa));
  return fit;
}

EtaEinsteinFit fit_eta_einstein(const ContactStructure& cs, const CurvatureTensors& curv) {
  return fit_eta_einstein(cs, curv, tolerance());
}

std::vector<IdentityCheck> eta_einstein_identities(const ContactStructure& cs, const CurvatureTensors& curv,
                                                   const EtaEinsteinFit& fit) {
  std::vector<IdentityCheck> out;
  const double sg = cs.s_g(), eps = cs.epsilon;
  const Vec xi = cs.xi();
  const double K = sg * (fit.lambda2 - eps * fit.kappa) / 4;
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec v1 = Vec::Unit(3, i), v2 = Vec::Unit(3, j);
      Vec lhs = curv.apply(v1, v2, xi);
      Vec rhs = K * (cs.alpha[j] * v1 - cs.alpha[i] * v2);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  out.push_back({"R(v₁,v₂)ξ = 𝒦(α(v₂)v₁ − α(v₁)v₂)", worst});

  const bool sas = is_sasakian(cs);
  if (eps * sg == 1) {
    bool relation = std::abs(fit.lambda2 - (1 + fit.kappa * eps)) <= 1e-7;
    out.push_back({"Sasakian ⇔ λ² = 1 + κε", sas == relation ? 0.0 : 1.0});
  }
  if (cs.epsilon == -1 && sg == -1 && !sas) {
    out.push_back({"non-Sasakian time-like: λ² = κ", std::abs(fit.lambda2 - fit.kappa)});
    out.push_back({"non-Sasakian time-like: λ² < ½", fit.lambda2 < 0.5 ? 0.0 : 1.0});
  }
  if (cs.epsilon == 0) {
    ContactFrame f = contact_frame(cs);
    auto ric = [&](const Vec& a, const Vec& b) { return a.dot(curv.ricci * b); };
    double r = 0;
    r = std::max(r, std::abs(ric(f.xi, f.xi)));
    r = std::max(r, std::abs(ric(f.xi, f.phi_u)));
    r = std::max(r, std::abs(ric(f.u, f.phi_u)));
    r = std::max(r, std::abs(ric(f.xi, f.u) + fit.lambda2 / 2));
    r = std::max(r, std::abs(ric(f.phi_u, f.phi_u) + fit.lambda2 / 2));
    r = std::max(r, std::abs(ric(f.u, f.u) - fit.kappa));
    out.push_back({"light-cone Ricci components", r});
  }
  return out;
}

std::vector<FamilySpec> family_grid(Family f, const ScanGrid& grid) {
  const std::vector<double> v = grid_values(grid);
  const double tol = tolerance();
  auto zero = [&](double x) { return std::abs(x) <= tol; };
  std::vector<FamilySpec> out;
  auto push = [&](FamilySpec s) {
    try {
      make_family(s);
      out.push_back(std::move(s));
    } catch (const ConstraintViolation&) {
    }
  };
  switch (f) {
    case Family::g1:
      for (double a : v)
        for (double b : v) push(spec_of(f, {{"a", a}, {"b", b}}));
      break;
    case Family::g2:
      // Jacobi forces a = 0 once c ≠ 0.
      for (double b : v)
        for (double c : v) push(spec_of(f, {{"a", 0.0}, {"b", b}, {"c", c}}));
      break;
    case Family::g3:
      for (double a : v)
        for (double b : v)
          for (double c : v) push(spec_of(f, {{"a", a}, {"b", b}, {"c", c}}));
      break;
    case Family::g4:
      for (double mu : {1.0, -1.0})
        for (double a : v)
          for (double b : v) push(spec_of(f, {{"a", a}, {"b", b}, {"mu", mu}}));
      break;
    case Family::g5:
    case Family::g6:
      // ac ± bd = 0: solve for d when b ≠ 0, otherwise scan d over the grid.
      for (double a : v)
        for (double b : v)
          for (double c : v) {
            double sign = f == Family::g5 ? -1.0 : 1.0;
            if (!zero(b)) {
              push(spec_of(f, {{"a", a}, {"b", b}, {"c", c}, {"d", sign * a * c / b}}));
            } else if (zero(a * c)) {
              for (double d : v) push(spec_of(f, {{"a", a}, {"b", b}, {"c", c}, {"d", d}}));
            }
          }
      break;
    case Family::g7:
      for (double x : v)
        for (double b : v)
          for (double d : v) {
            push(spec_of(f, {{"a", 0.0}, {"b", b}, {"c", x}, {"d", d}}));
            if (!zero(x)) push(spec_of(f, {{"a", x}, {"b", b}, {"c", 0.0}, {"d", d}}));
          }
      break;
    case Family::RiemannianUnimodular:
      for (double a : v)
        for (double b : v)
          for (double c : v) push(spec_of(f, {{"mu1", a}, {"mu2", b}, {"mu3", c}}));
      break;
    case Family::RiemannianNonunimodular:
      for (double a : v)
        for (double b : v)
          for (double c : v)
            for (double d : v) push(spec_of(f, {{"a", a}, {"b", b}, {"c", c}, {"f", d}}));
      break;
  }
  return out;
}

std::vector<Vec> contact_forms(const StructureConstants& sc, const FrameMetric& m, int orientation, int epsilon,
                               double tol) {
  const int n = 3;
  Mat L(3, 3);
  for (int i = 0; i < n; ++i) {
    Form e = Form::basis(n, {i});
    Form diff = hodge(e, m, orientation) - m.s_g() * mc_differential(e, sc);
    L.col(i) = diff.to_vector();
  }
  Eigen::JacobiSVD<Mat> svd(L, Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  std::vector<Vec> kernel;
  for (int k = 0; k < n; ++k)
    if (s[k] <= tol * std::max(1.0, s[0])) kernel.push_back(svd.matrixV().col(k));
  if (kernel.empty()) return {};
  Mat V(n, static_cast<int>(kernel.size()));
  for (std::size_t k = 0; k < kernel.size(); ++k) V.col(static_cast<int>(k)) = kernel[k];

  // α = V x with Σ q_i y_i² = ε in the eigenbasis of the restricted metric.
  Mat Q = V.transpose() * m.matrix() * V;
  Eigen::SelfAdjointEigenSolver<Mat> es(Q);
  std::vector<Vec> pos, neg, nul;
  for (int k = 0; k < Q.rows(); ++k) {
    Vec dir = V * es.eigenvectors().col(k);
    double q = es.eigenvalues()[k];
    if (q > 1e-9) pos.push_back(dir / std::sqrt(q));
    else if (q < -1e-9) neg.push_back(dir / std::sqrt(-q));
    else nul.push_back(dir);
  }
  auto combine = [](const std::vector<Vec>& dirs, const Vec& coeffs) {
    Vec out = Vec::Zero(3);
    for (std::size_t i = 0; i < dirs.size(); ++i) out += coeffs[static_cast<int>(i)] * dirs[i];
    return out;
  };
  std::vector<Vec> out;
  const std::vector<double> rhos{0.0, 0.5, 1.0};
  const std::vector<double> shifts{0.0, 1.0, -1.0};
  auto with_null = [&](const Vec& base) {
    if (nul.empty()) {
      out.push_back(base);
      return;
    }
    for (double t : shifts) out.push_back(base + t * nul[0]);
  };
  if (epsilon != 0) {
    const auto& same = epsilon > 0 ? pos : neg;
    const auto& other = epsilon > 0 ? neg : pos;
    if (same.empty()) return {};
    for (double rho : rhos)
      for (const Vec& a : sphere_samples(static_cast<int>(same.size()))) {
        Vec base = std::cosh(rho) * combine(same, a);
        if (other.empty()) {
          if (rho == 0.0) with_null(base);
          continue;
        }
        for (const Vec& b : sphere_samples(static_cast<int>(other.size())))
          with_null(base + std::sinh(rho) * combine(other, b));
      }
  } else {
    if (!pos.empty() && !neg.empty())
      for (const Vec& a : sphere_samples(static_cast<int>(pos.size())))
        for (const Vec& b : sphere_samples(static_cast<int>(neg.size())))
          out.push_back(combine(pos, a) + combine(neg, b));
    for (const Vec& z : nul) out.push_back(z);
    for (Vec& a : out)
      if (std::abs(a[0]) > 1e-9) a /= a[0];
  }
  return out;
}

ScanResult scan_family(Family f, const ScanGrid& grid, int epsilon, double tol, unsigned threads) {
  const std::vector<FamilySpec> specs = family_grid(f, grid);
  const FrameMetric m = is_lorentzian(f) ? FrameMetric::lorentzian(3) : FrameMetric::riemannian(3);
  std::vector<std::vector<ScanHit>> per(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const StructureConstants sc = make_family(specs[i]);
    const CurvatureTensors curv = curvature_of(sc, m);
    for (int o : {1, -1})
      for (const Vec& alpha : contact_forms(sc, m, o, epsilon, tol)) {
        ContactStructure cs;
        try {
          cs = check_contact(sc, m, o, alpha, tol);
        } catch (const NotContact&) {
          continue;
        }
        if (cs.epsilon != epsilon) continue;
        per[i].push_back(ScanHit{specs[i], o, alpha, compute_fit(cs, curv.ricci, tol)});
      }
  });
  ScanResult r;
  r.samples = specs.size();
  for (auto& v : per)
    for (auto& h : v) {
      if (h.fit.admissible) r.hits.push_back(h);
      r.contact.push_back(std::move(h));
    }
  return r;
}

}  // namespace lieframe
