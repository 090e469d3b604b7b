#include "lieframe/contact.hpp"

#include <algorithm>
#include <cmath>

#include "lieframe/einstein.hpp"
#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {


Mat two_form_matrix(const Form& w) {
  const int n = w.dim();
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = w.eval({i, j});
  return m;
}

// Asymmetry of g(A·,·) for an endomorphism A.
double g_asymmetry(const Mat& A, const Mat& G) {
  Mat GA = G * A;
  return max_abs(Mat(GA - GA.transpose()));
}

}  // namespace

Vec ContactStructure::xi() const { return sharp(alpha_form(), m); }

Mat outer_endo(const Vec& v, const Vec& covector) { return v * covector.transpose(); }

double contact_residual(const StructureConstants& sc, const FrameMetric& m, int orientation, const Vec& alpha) {
  Form a = Form::one_form(alpha);
  Form lhs = hodge(a, m, orientation);
  Form rhs = mc_differential(a, sc);
  rhs *= m.s_g();
  return (lhs - rhs).max_abs();
}

ContactStructure check_contact(const StructureConstants& sc, const FrameMetric& m, int orientation,
                               const Vec& alpha, double tol) {
  if (sc.dim() != 3 || m.dim() != 3 || alpha.size() != 3)
    throw ConstraintViolation("contact structures are three-dimensional");
  if (orientation != 1 && orientation != -1) throw ConstraintViolation("orientation must be ±1");
  if (max_abs(alpha) <= tol) throw NotContact("α ≠ 0", 0.0);
  double r = contact_residual(sc, m, orientation, alpha);
  if (r > tol) throw NotContact("∗α = 𝔰_g dα", r);
  Vec x = sharp(Form::one_form(alpha), m);
  double n2 = m.inner(x, x);
  int eps = 0;
  double dist = std::abs(n2);
  for (int e : {-1, 1})
    if (std::abs(n2 - e) < dist) dist = std::abs(n2 - e), eps = e;
  if (dist > tol) throw NotContact("|α|² ∈ {−1, 0, +1}", dist);
  if (m.s_g() == 1 && eps != 1) throw NotContact("Riemannian structures need |α|² = 1", std::abs(n2 - 1));
  return ContactStructure{sc, m, orientation, alpha, eps};
}

ContactStructure check_contact(const StructureConstants& sc, const FrameMetric& m, int orientation,
                               const Vec& alpha) {
  return check_contact(sc, m, orientation, alpha, tolerance());
}

Mat characteristic_endo(const ContactStructure& cs) {
  Form star = hodge(cs.alpha_form(), cs.m, cs.orientation);
  Mat phi(3, 3);
  for (int v = 0; v < 3; ++v)
    phi.col(v) = -cs.s_g() * sharp(interior_product(Vec::Unit(3, v), star), cs.m);
  return phi;
}

HTensor h_tensor(const ContactStructure& cs, double tol) {
  Mat phi = characteristic_endo(cs);
  Vec xi = cs.xi();
  Mat h(3, 3);
  for (int v = 0; v < 3; ++v) {
    Vec e = Vec::Unit(3, v);
    h.col(v) = cs.sc.bracket(xi, phi * e) - phi * cs.sc.bracket(xi, e);
  }
  HTensor out{h, std::nullopt};
  if (cs.epsilon == 0) {
    ContactFrame f = contact_frame(cs);
    double mu = cs.m.inner(f.u, h * f.u);
    double defect = max_abs(Mat(h - mu * outer_endo(xi, cs.alpha)));
    if (defect > tol) throw DecompositionFailure("𝔥 − μ ξ⊗α residual " + std::to_string(defect));
    out.mu = mu;
  }
  return out;
}

HTensor h_tensor(const ContactStructure& cs) { return h_tensor(cs, tolerance()); }

Mat tau_endo(const ContactStructure& cs) { return h_tensor(cs).h * characteristic_endo(cs); }

ContactFrame contact_frame(const ContactStructure& cs) {
  const FrameMetric& m = cs.m;
  Vec xi = cs.xi();
  Mat phi = characteristic_endo(cs);
  ContactFrame f;
  f.xi = xi;
  if (cs.epsilon == 0) {
    Vec bar = -xi;
    bar[0] = xi[0];
    f.u = -bar / (2 * xi[0] * xi[0]);
  } else {
    const int target = cs.s_g() * cs.epsilon;
    const double xx = m.inner(xi, xi);
    auto project = [&](const Vec& e) { Vec w = e - (m.inner(e, xi) / xx) * xi; return w; };
    std::vector<Vec> candidates{Vec::Unit(3, 1), Vec::Unit(3, 2), Vec::Unit(3, 0)};
    bool found = false;
    for (const Vec& e : candidates) {
      Vec w = project(e);
      double n2 = m.inner(w, w);
      if (std::abs(n2) > 1e-6 && (n2 > 0 ? 1 : -1) == target) {
        f.u = w / std::sqrt(std::abs(n2));
        found = true;
        break;
      }
    }
    if (!found) {
      // Diagonalize the Gram matrix of ξ^⊥ and take an eigenvector of the wanted sign.
      Eigen::FullPivLU<Mat> lu(Mat((m.matrix() * xi).transpose()));
      Mat basis = lu.kernel();
      Eigen::SelfAdjointEigenSolver<Mat> es(Mat(basis.transpose() * m.matrix() * basis));
      for (int k = 0; k < es.eigenvalues().size(); ++k) {
        Vec w = basis * es.eigenvectors().col(k);
        double n2 = m.inner(w, w);
        if (std::abs(n2) > 1e-12 && (n2 > 0 ? 1 : -1) == target) {
          f.u = w / std::sqrt(std::abs(n2));
          found = true;
          break;
        }
      }
      if (!found) throw EigenFailure("no contact-frame vector of the required causal type");
    }
  }
  f.phi_u = phi * f.u;
  return f;
}

bool is_sasakian(const ContactStructure& cs, double tol) { return max_abs(h_tensor(cs, tol).h) <= tol; }
bool is_sasakian(const ContactStructure& cs) { return is_sasakian(cs, tolerance()); }

KContactReport k_contact(const ContactStructure& cs, double tol) {
  Mat G = cs.m.matrix();
  Vec xi = cs.xi();
  Mat ad = cs.sc.ad(xi);
  Mat L = -(ad.transpose() * G + G * ad);
  KContactReport r;
  r.witness = max_abs(L);
  r.k_contact = r.witness <= tol;
  if (cs.epsilon == 0) {
    ContactFrame f = contact_frame(cs);
    r.null_witness = cs.m.inner(cs.sc.bracket(xi, f.u), f.u);
  }
  return r;
}

KContactReport k_contact(const ContactStructure& cs) { return k_contact(cs, tolerance()); }

Mat j_endo(const ContactStructure& cs) {
  if (cs.epsilon != 0) throw WrongCausalType("J is defined for null structures only");
  Mat J = Mat::Zero(4, 4);
  J.topLeftCorner(3, 3) = characteristic_endo(cs);
  J.block(0, 3, 3, 1) = cs.xi();
  J.block(3, 0, 1, 3) = cs.alpha.transpose();
  return J;
}

NijenhuisReport nijenhuis_J(const ContactStructure& cs, double tol) {
  Mat J = j_endo(cs);
  auto br = [&](const Vec& a, const Vec& b) {
    Vec out = Vec::Zero(4);
    out.head(3) = cs.sc.bracket(a.head(3), b.head(3));
    return out;
  };
  NijenhuisReport r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec v1 = Vec::Unit(4, i), v2 = Vec::Unit(4, j);
      Vec n = br(J * v1, J * v2) - J * br(v1, J * v2) - J * br(J * v1, v2) + J * J * br(v1, v2);
      r.max_abs = std::max(r.max_abs, max_abs(n));
    }
  Eigen::JacobiSVD<Mat> svd(J, Eigen::ComputeFullV);
  const Vec& s = svd.singularValues();
  std::vector<Vec> kernel;
  for (int k = 0; k < 4; ++k)
    if (s[k] <= tol * std::max(1.0, s[0])) kernel.push_back(svd.matrixV().col(k));
  for (std::size_t a = 0; a < kernel.size(); ++a)
    for (std::size_t b = a + 1; b < kernel.size(); ++b)
      r.ker_defect = std::max(r.ker_defect, max_abs(Vec(J * br(kernel[a], kernel[b]))));
  r.ker_involutive = r.ker_defect <= tol;
  return r;
}

NijenhuisReport nijenhuis_J(const ContactStructure& cs) { return nijenhuis_J(cs, tolerance()); }

Mat l_endo(const ContactStructure& cs, const CurvatureTensors& curv) {
  Vec xi = cs.xi();
  Mat l(3, 3);
  for (int v = 0; v < 3; ++v) l.col(v) = curv.apply(Vec::Unit(3, v), xi, xi);
  return l;
}

Mat nabla_xi(const ContactStructure& cs, const ConnectionCoeffs& conn) {
  Vec xi = cs.xi();
  Mat out(3, 3);
  for (int v = 0; v < 3; ++v) out.col(v) = conn.covariant(Vec::Unit(3, v), xi);
  return out;
}

SpecialFrame timelike_special_frame(const ContactStructure& cs, double tol) {
  if (cs.epsilon != -1 || cs.s_g() != -1) throw WrongCausalType("special frame needs a time-like Reeb field");
  EtaEinsteinFit fit = fit_eta_einstein(cs, curvature_of(cs.sc, cs.m), tol);
  ContactFrame f = contact_frame(cs);
  Mat h = h_tensor(cs, tol).h;
  Mat h2(2, 2);
  Vec b[2] = {f.u, f.phi_u};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) h2(i, j) = cs.m.inner(b[i], h * b[j]);
  if (std::abs(h2(0, 1) - h2(1, 0)) > tol) throw EigenFailure("𝔥 is not symmetric on ker α");
  SpecialFrame sf;
  sf.xi = f.xi;
  if (max_abs(h) <= tol) {
    sf.X = f.u;
    sf.mu = 0;
  } else {
    Eigen::SelfAdjointEigenSolver<Mat> es(h2);
    if (es.info() != Eigen::Success) throw EigenFailure("eigen-decomposition of 𝔥 failed");
    Vec c = es.eigenvectors().col(1);
    sf.X = c[0] * f.u + c[1] * f.phi_u;
    sf.mu = es.eigenvalues()[1];
    double expected = std::sqrt(std::max(0.0, 1 - (fit.lambda2 + fit.kappa)));
    if (std::abs(sf.mu - expected) > 1e-6)
      throw EigenFailure("𝔥 eigenvalue " + std::to_string(sf.mu) + " differs from √(1−(λ²+κ))");
  }
  sf.phi_X = characteristic_endo(cs) * sf.X;
  return sf;
}

SpecialFrame timelike_special_frame(const ContactStructure& cs) { return timelike_special_frame(cs, tolerance()); }

std::vector<IdentityCheck> contact_identities(const ContactStructure& cs) {
  std::vector<IdentityCheck> out;
  auto add = [&](std::string name, double r) { out.push_back({std::move(name), r}); };
  const Mat G = cs.m.matrix();
  const Mat I = Mat::Identity(3, 3);
  const double sg = cs.s_g(), eps = cs.epsilon;
  const Vec xi = cs.xi();
  const Vec& a = cs.alpha;
  const Mat phi = characteristic_endo(cs);
  const Mat xa = outer_endo(xi, a);
  const ConnectionCoeffs conn = levi_civita(cs.sc, cs.m);
  const CurvatureTensors curv = riemann_ricci(conn, cs.sc, cs.m);
  const Mat h = h_tensor(cs, 1e300).h;
  const Mat tau = h * phi;
  const Mat dalpha = two_form_matrix(mc_differential(cs.alpha_form(), cs.sc));

  add("contact equation ∗α = 𝔰_g dα", contact_residual(cs.sc, cs.m, cs.orientation, a));
  add("|α|² = ε", std::abs(cs.m.inner(xi, xi) - eps));
  add("g(·, φ·) = dα", max_abs(Mat(G * phi - dalpha)));
  add("φ(ξ) = 0", max_abs(Vec(phi * xi)));
  add("α∘φ = 0", max_abs(Vec(phi.transpose() * a)));
  add("φ² = 𝔰_g(−ε Id + ξ⊗α)", max_abs(Mat(phi * phi - sg * (-eps * I + xa))));
  add("g(φ·, φ·) = 𝔰_g(ε g − α⊗α)", max_abs(Mat(phi.transpose() * G * phi - sg * (eps * G - a * a.transpose()))));
  add("φ skew-adjoint", max_abs(Mat(G * phi + (G * phi).transpose())));

  Mat dxi = Mat::Zero(3, 3);
  for (int i = 0; i < 3; ++i) dxi += xi[i] * conn.nabla(i);
  add("∇_ξ ξ = 0", max_abs(Vec(conn.covariant(xi, xi))));
  add("∇_ξ φ = 0", max_abs(Mat(dxi * phi - phi * dxi)));
  add("𝔥(ξ) = 0", max_abs(Vec(h * xi)));
  add("𝔩(ξ) = 0", max_abs(Vec(l_endo(cs, curv) * xi)));
  add("Tr 𝔥 = 0", std::abs(h.trace()));
  add("𝓛_ξ α = 0", max_abs(Vec(cs.sc.ad(xi).transpose() * a)));
  add("Tr τ = 0", std::abs(tau.trace()));
  add("𝔥φ + φ𝔥 = 0", max_abs(Mat(h * phi + phi * h)));
  add("𝔥 g-symmetric", g_asymmetry(h, G));
  add("τ g-symmetric", g_asymmetry(tau, G));
  add("2φ(∇ξ) = 𝔥 + 𝔰_g(ε Id − ξ⊗α)", max_abs(Mat(2 * phi * nabla_xi(cs, conn) - h - sg * (eps * I - xa))));

  ContactFrame f = contact_frame(cs);
  add("frame g(u,u) = 𝔰_g ε", std::abs(cs.m.inner(f.u, f.u) - sg * eps));
  add("frame g(u,ξ) = 1 − ε²", std::abs(cs.m.inner(f.u, xi) - (1 - eps * eps)));
  add("frame g(φu,φu) = 1", std::abs(cs.m.inner(f.phi_u, f.phi_u) - 1));
  add("frame g(ξ,φu) = 0", std::abs(cs.m.inner(xi, f.phi_u)));
  add("frame g(u,φu) = 0", std::abs(cs.m.inner(f.u, f.phi_u)));

  const double ricxx = xi.dot(curv.ricci * xi);
  if (cs.epsilon != 0) {
    add("Ric(ξ,ξ) = ε𝔰_g(½ − ¼ Tr 𝔥²)", std::abs(ricxx - eps * sg * (0.5 - 0.25 * (h * h).trace())));
    if (eps * sg == 1) {
      bool sas = max_abs(h) <= tolerance();
      bool ric = std::abs(ricxx - sg * eps / 2) <= tolerance();
      add("Sasakian ⇔ Ric(ξ,ξ) = 𝔰_g ε/2", sas == ric ? 0.0 : 1.0);
    }
  } else {
    add("φ³ = 0", max_abs(Mat(phi * phi * phi)));
    add("φ𝔥 = 0", max_abs(Mat(phi * h)));
    add("𝔥φ = 0", max_abs(Mat(h * phi)));
    add("τ = 0", max_abs(tau));
    const double mu = cs.m.inner(f.u, h * f.u);
    add("𝔥 = μ ξ⊗α", max_abs(Mat(h - mu * xa)));
    Mat B(3, 3);
    B << f.xi, f.u, f.phi_u;
    Mat Binv = B.inverse();
    Vec c1 = Binv * cs.sc.bracket(f.xi, f.u);
    Vec c2 = Binv * cs.sc.bracket(f.xi, f.phi_u);
    Vec c3 = Binv * cs.sc.bracket(f.u, f.phi_u);
    add("[ξ,u] ∈ span(ξ, φu)", std::abs(c1[1]));
    add("[ξ,φu] = (μ − c) ξ", std::max({std::abs(c2[1]), std::abs(c2[2]), std::abs(c2[0] - (mu - c1[2]))}));
    add("[u,φu] has unit u-component", std::abs(c3[1] - 1));
    if (std::abs(mu) <= tolerance()) {
      KContactReport kc = k_contact(cs);
      bool shortcut = std::abs(kc.null_witness) <= tolerance();
      add("Sasakian: K-contact ⇔ g([ξ,u],u) = 0", shortcut == kc.k_contact ? 0.0 : 1.0);
    }
  }
  return out;
}

}  // namespace lieframe
