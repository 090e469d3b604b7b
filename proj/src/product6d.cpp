#include "lieframe/product6d.hpp"

#include <cmath>
#include <sstream>

#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {

Vec vec3(double a, double b, double c) { return Vec{{a, b, c}}; }

FactorSpec factor(Family f, std::map<std::string, double> params, Vec alpha, int orientation) {
  return FactorSpec{FamilySpec{f, std::move(params)}, std::move(alpha), orientation};
}

FactorSpec su2(double m2, double m3) {
  return factor(Family::RiemannianUnimodular, {{"mu1", 1}, {"mu2", m2}, {"mu3", m3}}, vec3(1, 0, 0), -1);
}

FactorSpec e2_riemannian() { return su2(0, 1); }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

bool matches(double found, double expected, double tol) {
  return std::abs(found - expected) <= tol * std::max(1.0, std::abs(expected));
}

// Time-like table: κ_X = −l².
std::optional<CatalogSample> tl_sl2r_sasakian(double l) {
  double l2 = l * l;
  if (l2 >= 1) return std::nullopt;
  double lam2 = 1 - l2;
  return CatalogSample{factor(Family::g3, {{"a", lam2}, {"b", lam2}, {"c", 1}}, vec3(1, 0, 0), 0), su2(lam2, lam2),
                       std::sqrt(lam2), l};
}

std::optional<CatalogSample> tl_g6_sasakian(double l) {
  double l2 = l * l;
  if (l2 >= 1) return std::nullopt;
  double lam2 = 1 - l2;
  return CatalogSample{
      factor(Family::g6, {{"a", std::sqrt(lam2)}, {"b", 1}, {"c", 0}, {"d", 0}}, vec3(1, 0, 0), 0),
      su2(lam2, lam2), std::sqrt(lam2), l};
}

std::optional<CatalogSample> tl_h3(double l) {
  if (std::abs(l * l - 1) > 1e-12) return std::nullopt;
  return CatalogSample{factor(Family::g3, {{"a", 0}, {"b", 0}, {"c", -1}}, vec3(-1, 0, 0), 0), su2(0, 0), 0, l};
}

std::optional<CatalogSample> tl_sl2r_non_sasakian(double l) {
  double l2 = l * l;
  if (l2 <= 0 || l2 >= 0.5) return std::nullopt;
  double root = std::sqrt(1 - 2 * l2);
  double b = (1 + root) / 2;
  return CatalogSample{factor(Family::g3, {{"a", 1 - b}, {"b", b}, {"c", 1}}, vec3(1, 0, 0), 0),
                       su2((1 - root) / 2, (1 + root) / 2), l, l};
}

std::optional<CatalogSample> tl_flat(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 0}, {"c", 1}}, vec3(-1, 0, 0), 0), e2_riemannian(), 0, l};
}

// Space-like table: κ_X = l².
std::optional<CatalogSample> sl_sl2r(double l) {
  double t = 1 + l * l;
  return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", t}, {"c", t}}, vec3(0, 1, 0), 1), su2(t, t),
                       std::sqrt(t), l};
}

std::optional<CatalogSample> sl_g6(double l) {
  double t = 1 + l * l;
  return CatalogSample{factor(Family::g6, {{"a", 0}, {"b", 0}, {"c", -1}, {"d", std::sqrt(t)}}, vec3(0, 0, 1), 1),
                       su2(t, t), std::sqrt(t), l};
}

std::optional<CatalogSample> sl_e11(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 0}, {"c", 1}}, vec3(0, 1, 0), 1), e2_riemannian(), 0, l};
}

std::optional<CatalogSample> sl_e2(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 1}, {"c", 0}}, vec3(0, 1, 0), 1), e2_riemannian(), 0, l};
}

// Null table: κ_X = 0. Rows whose κ_N scales as 1/α₀² fix α₀ from l.
std::optional<CatalogSample> nl_sl2r(double l) {
  if (l == 0)
    return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 1}, {"c", 1}}, vec3(1, 1, 0), 1), su2(1, 1), 1, l};
  double a0 = 1 / std::abs(l);
  return CatalogSample{factor(Family::g4, {{"a", 1}, {"b", 0}, {"mu", -1}}, vec3(a0, 0, -a0), 1), su2(1, 1), 1, l};
}

std::optional<CatalogSample> nl_g6_sasakian(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g6, {{"a", 0.5}, {"b", -0.5}, {"c", -0.5}, {"d", 0.5}}, vec3(1, 0, -1), 1),
                       su2(1, 1), 1, l};
}

std::optional<CatalogSample> nl_g6_non_sasakian(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g6, {{"a", -0.5}, {"b", -1.5}, {"c", -1.5}, {"d", -0.5}}, vec3(1, 0, -1), 1),
                       su2(1, 1), 1, l};
}

std::optional<CatalogSample> nl_e11_sasakian(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g2, {{"a", 0}, {"b", 0.5}, {"c", -0.5}}, vec3(1, 0, 1), 1), su2(1, 1), 1, l};
}

std::optional<CatalogSample> nl_e11_non_sasakian(double l) {
  if (l != 0) return std::nullopt;
  return CatalogSample{factor(Family::g2, {{"a", 0}, {"b", 1.5}, {"c", 0.5}}, vec3(1, 0, 1), 1), su2(1, 1), 1, l};
}

std::optional<CatalogSample> nl_flat(double l) {
  if (l == 0)
    return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 0}, {"c", 1}}, vec3(1, 1, 0), 1), e2_riemannian(), 0, l};
  double a0 = std::sqrt(2.0) / std::abs(l);
  return CatalogSample{factor(Family::g4, {{"a", 0}, {"b", 0}, {"mu", -1}}, vec3(a0, 0, -a0), 1), e2_riemannian(), 0, l};
}

}  // namespace

ContactStructure make_factor(const FactorSpec& f, double tol) {
  StructureConstants sc = make_family(f.spec);
  FrameMetric m = is_lorentzian(f.spec.family) ? FrameMetric::lorentzian(3) : FrameMetric::riemannian(3);
  if (f.orientation != 0) return check_contact(sc, m, f.orientation, f.alpha, tol);
  try {
    return check_contact(sc, m, 1, f.alpha, tol);
  } catch (const NotContact&) {
    return check_contact(sc, m, -1, f.alpha, tol);
  }
}

Form embed(const Form& w, int dim, int offset) {
  Form out(w.degree(), dim);
  const auto& ts = w.tuples();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::vector<int> t = ts[i];
    for (int& k : t) k += offset;
    out.at(t) = w[i];
  }
  return out;
}

Form product_torsion(const ContactStructure& n, const ContactStructure& x, double lambda, double c) {
  const int dn = n.m.dim(), dx = x.m.dim(), d = dn + dx;
  Form aN = embed(n.alpha_form(), d, 0);
  Form aX = embed(x.alpha_form(), d, dn);
  Form starN = embed(hodge(n.alpha_form(), n.m, n.orientation), d, 0);
  Form starX = embed(hodge(x.alpha_form(), x.m, x.orientation), d, dn);
  Form H = lambda * embed(Form::volume(dn, n.orientation), d, 0);
  H += c * wedge(starN, aX);
  H += c * wedge(aN, starX);
  H += lambda * embed(Form::volume(dx, x.orientation), d, dn);
  return H;
}

ProductSolution build_solution(const ContactStructure& n, const ContactStructure& x, double lambda, double l,
                               double tol) {
  if (n.m.s_g() != -1) throw IncompatibleFactors("the first factor must be Lorentzian");
  if (x.m.s_g() != 1) throw IncompatibleFactors("the second factor must be Riemannian");
  ProductSolution sol;
  sol.n_struct = n;
  sol.x_struct = x;
  sol.n_fit = compute_fit(n, curvature_of(n.sc, n.m).ricci, tol);
  sol.x_fit = compute_fit(x, curvature_of(x.sc, x.m).ricci, tol);
  if (!sol.n_fit.admissible) throw IncompatibleFactors("Lorentzian factor is not εη-Einstein");
  if (!sol.x_fit.admissible) throw IncompatibleFactors("Riemannian factor is not εη-Einstein");
  const double lam2 = lambda * lambda, l2 = l * l;
  if (!matches(sol.n_fit.lambda2, lam2, tol) || !matches(sol.x_fit.lambda2, lam2, tol))
    throw IncompatibleFactors("λ² mismatch: N has " + num(sol.n_fit.lambda2) + ", X has " + num(sol.x_fit.lambda2) +
                              ", λ² = " + num(lam2));
  if (!matches(sol.n_fit.kappa, l2, tol))
    throw IncompatibleFactors("κ_N ≠ l²: κ_N = " + num(sol.n_fit.kappa) + ", l² = " + num(l2));
  if (!matches(sol.x_fit.kappa, n.epsilon * l2, tol))
    throw IncompatibleFactors("κ_X ≠ ε_N l²: κ_X = " + num(sol.x_fit.kappa) + ", ε_N l² = " + num(n.epsilon * l2));
  sol.lambda = lambda;
  sol.l = l;
  sol.sc6 = direct_sum(n.sc, x.sc);
  sol.m6 = FrameMetric::product(n.m, x.m);
  sol.orientation6 = n.orientation * x.orientation;
  sol.H = product_torsion(n, x, lambda, l);
  return sol;
}

SugraResiduals verify_supergravity(const ProductSolution& sol) {
  SugraResiduals r;
  const FrameMetric& m = sol.m6;
  const int d = m.dim(), dn = sol.n_struct.m.dim();
  ConnectionCoeffs lc = levi_civita(sol.sc6, m);
  CurvatureTensors g = riemann_ricci(lc, sol.sc6, m);
  CurvatureTensors th = riemann_ricci(torsionful_connection(lc, sol.H, m), sol.sc6, m);
  r.ricci_H = max_abs(th.ricci);
  r.dH = mc_differential(sol.H, sol.sc6).max_abs();
  r.dstarH = mc_differential(hodge(sol.H, m, sol.orientation6), sol.sc6).max_abs();
  r.normH = pairing_full(sol.H, sol.H, m);

  Mat hh = h_square(sol.H, m);
  Mat sym = 0.5 * (th.ricci + th.ricci.transpose());
  r.symmetric_check = max_abs(Mat(sym - (g.ricci - 0.25 * hh)));
  r.mixed_block = max_abs(Mat(hh.block(0, dn, dn, d - dn)));

  const double lam2 = sol.lambda * sol.lambda, l2 = sol.l * sol.l;
  const double eps = sol.n_struct.epsilon;
  const Vec& aN = sol.n_struct.alpha;
  const Vec& aX = sol.x_struct.alpha;
  Mat chi = sol.n_struct.m.matrix(), h = sol.x_struct.m.matrix();
  Mat expect_n = -(lam2 / 2) * chi - (l2 / 2) * eps * chi + l2 * aN * aN.transpose();
  Mat expect_x = (lam2 / 2) * h + (l2 / 2) * eps * h - l2 * eps * aX * aX.transpose();
  r.block_formula = std::max(max_abs(Mat(0.25 * hh.topLeftCorner(dn, dn) - expect_n)),
                             max_abs(Mat(0.25 * hh.bottomRightCorner(d - dn, d - dn) - expect_x)));
  return r;
}

const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows{
      {-1, "SL(2,R) Sasakian × SU(2) Sasakian", "λ² = 1 − l², 1 > l² ≥ 0", {0, 0.3, 0.5, 0.7, 0.9},
       tl_sl2r_sasakian},
      {-1, "g6 Sasakian × SU(2) Sasakian", "λ² = 1 − l², 1 > l² ≥ 0", {0, 0.3, 0.5, 0.7, 0.9}, tl_g6_sasakian},
      {-1, "H3 Sasakian × H3 Sasakian", "λ² = 0, l² = 1", {1, -1}, tl_h3},
      {-1, "SL(2,R) × SU(2), non-Sasakian", "λ² = l², ½ > l² > 0", {0.1, 0.3, 0.4, 0.5, 0.6},
       tl_sl2r_non_sasakian},
      {-1, "E(1,1) × E(2), non-Sasakian", "λ² = 0, l² = 0", {0}, tl_flat},
      {1, "SL(2,R) para-Sasakian × SU(2) Sasakian", "λ² = 1 + l², l² ≥ 0", {0, 0.5, 1, 1.5, 2}, sl_sl2r},
      {1, "g6 para-Sasakian × SU(2) Sasakian", "λ² = 1 + l², l² ≥ 0", {0, 0.5, 1, 1.5, 2}, sl_g6},
      {1, "E(1,1) × E(2), non-Sasakian", "λ² = 0, l² = 0", {0}, sl_e11},
      {1, "E(2) × E(2), non-Sasakian", "λ² = 0, l² = 0", {0}, sl_e2},
      {0, "SL(2,R) Sasakian × SU(2) Sasakian", "λ² = 1, l² ≥ 0", {0, 0.5, 1, 1.5, 2}, nl_sl2r},
      {0, "g6 Sasakian × SU(2) Sasakian", "λ² = 1, l² = 0", {0}, nl_g6_sasakian},
      {0, "g6 non-Sasakian × SU(2) Sasakian", "λ² = 1, l² = 0", {0}, nl_g6_non_sasakian},
      {0, "E(1,1) Sasakian × SU(2) Sasakian", "λ² = 1, l² = 0", {0}, nl_e11_sasakian},
      {0, "E(1,1) non-Sasakian × SU(2) Sasakian", "λ² = 1, l² = 0", {0}, nl_e11_non_sasakian},
      {0, "E(1,1) × E(2), non-Sasakian", "λ² = 0, l² ≥ 0", {0, 0.5, 1, 1.5, 2}, nl_flat},
  };
  return rows;
}

CatalogEntry verify_catalog_sample(const CatalogRow& row, double l, double tol) {
  CatalogEntry e;
  e.epsilon_n = row.epsilon_n;
  e.row = row.name;
  e.l = l;
  auto sample = row.instantiate(l);
  if (!sample) {
    e.failure = "l = " + num(l) + " outside the row range " + row.range;
    return e;
  }
  sample->l = l;
  e.lambda = sample->lambda;
  e.sample = sample;
  try {
    ContactStructure n = make_factor(sample->n, tol);
    ContactStructure x = make_factor(sample->x, tol);
    if (n.epsilon != row.epsilon_n) throw RowFailure("Lorentzian factor has the wrong causal type");
    e.solution = build_solution(n, x, sample->lambda, l, tol);
    e.residuals = verify_supergravity(*e.solution);
    if (!e.residuals.solves(tol)) {
      e.failure = "supergravity residuals exceed tolerance";
    } else if (e.residuals.symmetric_check > tol || e.residuals.block_formula > tol) {
      e.failure = "H∘H cross-check exceeds tolerance";
    } else {
      e.pass = true;
    }
  } catch (const Error& err) {
    e.failure = err.what();
  }
  return e;
}

std::vector<CatalogEntry> catalog(int epsilon_n, const std::vector<double>& l_samples, double tol, unsigned threads) {
  if (epsilon_n < -1 || epsilon_n > 1) throw UsageError("ε_N must be −1, 0 or 1");
  std::vector<std::pair<const CatalogRow*, double>> jobs;
  for (const auto& row : catalog_rows()) {
    if (row.epsilon_n != epsilon_n) continue;
    const auto& ls = l_samples.empty() ? row.default_l : l_samples;
    for (double l : ls)
      if (row.instantiate(l)) jobs.emplace_back(&row, l);
  }
  std::vector<CatalogEntry> out(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = verify_catalog_sample(*jobs[i].first, jobs[i].second, tol); });
  return out;
}

CatalogSample preset(const std::string& name) {
  if (name == "ads3xs3")
    return CatalogSample{factor(Family::g3, {{"a", 1}, {"b", 1}, {"c", 1}}, vec3(1, 1, 0), 1), su2(1, 1), 1, 0};
  throw UsageError("unknown preset '" + name + "'");
}

}  // namespace lieframe
