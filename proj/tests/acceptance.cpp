// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "lieframe/cauchy.hpp"
#include "lieframe/curvature.hpp"
#include "lieframe/einstein.hpp"
#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"
#include "lieframe/product6d.hpp"

using namespace lieframe;

namespace {

constexpr double kTol = 1e-9;
constexpr double kRatio = 3.5;
constexpr unsigned kThreads = 4;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

std::vector<TableRowReport> all_table_reports() {
  std::vector<TableRowReport> out;
  for (Classification c : all_classifications()) {
    auto insts = table_instances(c);
    std::vector<TableRowReport> reps(insts.size());
    parallel_for(insts.size(), kThreads, [&](std::size_t i) { reps[i] = verify_table_row(insts[i], kTol); });
    out.insert(out.end(), reps.begin(), reps.end());
  }
  return out;
}

const std::vector<TableRowReport>& table_reports() {
  static const std::vector<TableRowReport> r = all_table_reports();
  return r;
}

struct ScanCase {
  Family family;
  int epsilon;
};

const ScanCase kScans[] = {{Family::g5, 1}, {Family::g7, 1}, {Family::g1, 0}};

// Pinned 21-point grids first, then 25-point grids that contain the values ±1 and ±1/2 where contact
// structures of the target type occur.
const std::vector<ScanResult>& scans() {
  static const std::vector<ScanResult> r = [] {
    std::vector<ScanResult> out;
    for (int points : {21, 25})
      for (const auto& s : kScans)
        out.push_back(scan_family(s.family, ScanGrid{-3, 3, points}, s.epsilon, kTol, kThreads));
    return out;
  }();
  return r;
}

Outcome oracle_equivalence() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  OracleReport r = closed_form_oracle(1000, 1, kThreads);
  double t = seconds_since(start);
  o.detail << r.samples << " samples, max Ricci error " << r.max_ricci_error << ", max scalar error "
           << r.max_scalar_error << ", " << t << " s";
  if (r.samples < 1000) o.fail("fewer than 1000 samples");
  if (r.max_ricci_error > kTol || r.max_scalar_error > kTol) o.fail(o.detail.str());
  if (t >= 5) o.fail("runtime " + std::to_string(t) + " s");
  return o;
}

bool anchor(Outcome& o, const char* name, const ContactStructure& cs, double l2, double k) {
  EtaEinsteinFit f = fit_eta_einstein(cs, curvature_of(cs.sc, cs.m));
  bool ok = std::abs(f.lambda2 - l2) <= kTol && std::abs(f.kappa - k) <= kTol;
  if (!ok) {
    std::ostringstream s;
    s << name << " gave (" << f.lambda2 << ", " << f.kappa << ")";
    o.fail(s.str());
  }
  return ok;
}

Outcome table_verification() {
  Outcome o;
  std::set<std::string> failing;
  std::size_t passed = 0;
  std::string first_failure;
  for (const auto& r : table_reports()) {
    if (r.pass) {
      ++passed;
      continue;
    }
    failing.insert(classification_id(r.table) + " [" + r.row + "]");
    if (first_failure.empty()) first_failure = r.failure;
  }
  o.detail << passed << "/" << table_reports().size() << " instances pass";
  if (!failing.empty()) {
    std::ostringstream s;
    s << table_reports().size() - passed << " instances fail in rows:";
    for (const auto& f : failing) s << " " << f;
    s << " (first failure: " << first_failure << ")";
    o.fail(s.str());
  }
  const FrameMetric m = FrameMetric::lorentzian(3);
  auto g3 = [](double a, double b, double c) {
    return make_family(FamilySpec{Family::g3, {{"a", a}, {"b", b}, {"c", c}}});
  };
  anchor(o, "g3(1,1,1) time-like", check_contact(g3(1, 1, 1), m, 1, vec3(1, 0, 0), kTol), 1, 0);
  anchor(o, "g3(b=3/4) non-Sasakian", check_contact(g3(0.25, 0.75, 1), m, 1, vec3(1, 0, 0), kTol), 0.375, 0.375);
  StructureConstants g4 = make_family(FamilySpec{Family::g4, {{"a", 1}, {"b", 0}, {"mu", -1}}});
  anchor(o, "g4 null (a=s, alpha0=1)", check_contact(g4, m, 1, vec3(1, 0, -1), kTol), 1, 1);
  return o;
}

Outcome nonexistence_scans() {
  Outcome o;
  const std::size_t n = std::size(kScans);
  bool ok = true;
  for (std::size_t i = 0; i < scans().size(); ++i) {
    const ScanResult& r = scans()[i];
    const ScanCase& c = kScans[i % n];
    o.detail << (i ? ", " : "") << family_name(c.family) << " eps=" << c.epsilon << " " << (i < n ? 21 : 25)
             << " points: " << r.samples << " samples, " << r.contact.size() << " contact, " << r.hits.size()
             << " hits";
    ok = ok && r.hits.empty() && (i < n || !r.contact.empty());
  }
  if (!ok) o.fail(o.detail.str());
  return o;
}

Outcome identity_suite() {
  Outcome o;
  std::vector<ContactStructure> structures;
  for (const auto& r : table_reports())
    if (r.structure) structures.push_back(*r.structure);
  for (const auto& r : scans())
    for (const auto& h : r.contact)
      structures.push_back(check_contact(make_family(h.spec), FrameMetric::lorentzian(3), h.orientation, h.alpha, kTol));
  double worst = 0;
  std::string worst_name;
  std::size_t fits = 0;
  auto consider = [&](const std::vector<IdentityCheck>& ids) {
    for (const auto& id : ids)
      if (id.residual > worst) worst = id.residual, worst_name = id.name;
  };
  for (const auto& cs : structures) {
    consider(contact_identities(cs));
    CurvatureTensors t = curvature_of(cs.sc, cs.m);
    EtaEinsteinFit f = compute_fit(cs, t.ricci, kTol);
    if (f.admissible && f.residual <= kTol) {
      ++fits;
      consider(eta_einstein_identities(cs, t, f));
    }
  }
  o.detail << structures.size() << " structures, " << fits << " with admissible fits, worst residual " << worst;
  if (!worst_name.empty()) o.detail << " (" << worst_name << ")";
  if (worst > kTol) o.fail(o.detail.str());
  return o;
}

Outcome null_sasakian_vs_k_contact() {
  Outcome o;
  std::size_t g1 = 0, non_sasakian = 0;
  for (const auto& r : table_reports()) {
    if (!r.structure || r.structure->epsilon != 0) continue;
    const ContactStructure& cs = *r.structure;
    if (r.table == Classification::NullSasakian && r.spec.family == Family::g1) {
      ++g1;
      KContactReport k = k_contact(cs);
      double expected = r.spec.param("a") / r.sample.at("alpha0");
      if (!is_sasakian(cs) || k.k_contact || std::abs(std::abs(k.null_witness) - std::abs(expected)) > kTol)
        o.fail("g1 instance flags or witness wrong");
      if (nijenhuis_J(cs).max_abs > kTol) o.fail("g1 instance has N_J != 0");
    }
    if (!is_sasakian(cs)) {
      ++non_sasakian;
      NijenhuisReport n = nijenhuis_J(cs);
      if (n.max_abs <= kTol || !n.ker_involutive) o.fail("non-Sasakian null instance " + r.row);
    }
  }
  if (g1 == 0) o.fail("no g1 Sasakian null instance");
  if (non_sasakian == 0) o.fail("no non-Sasakian null instance");
  if (o.pass)
    o.detail << g1 << " g1 instances Sasakian and not K-contact with witness a/alpha0, N_J = 0; " << non_sasakian
             << " non-Sasakian null instances with N_J != 0 and involutive ker J";
  return o;
}

Outcome supergravity() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  CatalogSample p = preset("ads3xs3");
  ProductSolution sol = build_solution(make_factor(p.n, kTol), make_factor(p.x, kTol), p.lambda, p.l, kTol);
  SugraResiduals r = verify_supergravity(sol);
  if (!r.solves(kTol) || r.symmetric_check > kTol) o.fail("AdS3 x S3 preset residuals too large");
  std::size_t entries = 0, passing = 0;
  for (int eps : {-1, 0, 1}) {
    std::map<std::string, int> good;
    for (const auto& e : catalog(eps, {}, kTol, kThreads)) {
      ++entries;
      bool ok = e.pass && e.residuals.symmetric_check <= kTol;
      if (ok) ++passing, ++good[e.row];
      else o.fail("eps_N=" + std::to_string(eps) + " row " + e.row + " l=" + std::to_string(e.l) + ": " + e.failure);
    }
    int best = 0;
    for (const auto& [row, n] : good) best = std::max(best, n);
    if (best < 5) o.fail("eps_N=" + std::to_string(eps) + " has no row with 5 passing l-samples");
  }
  ProductSolution perturbed = sol;
  perturbed.H = product_torsion(sol.n_struct, sol.x_struct, sol.lambda + 0.1, sol.l);
  double detector = verify_supergravity(perturbed).ricci_H;
  if (detector <= 1e-3) o.fail("lambda-perturbed configuration not detected");
  double t = seconds_since(start);
  if (t >= 10) o.fail("runtime " + std::to_string(t) + " s");
  if (o.pass)
    o.detail << "preset max residual " << std::max({r.ricci_H, r.dH, r.dstarH, std::abs(r.normH)}) << ", " << passing
             << "/" << entries << " catalog samples solve, perturbed residual " << detector << ", " << t << " s";
  return o;
}

Outcome cauchy_residuals() {
  Outcome o;
  auto check_pair = [&](const char* name, double coarse, double fine) {
    if (coarse <= 1e-12 && fine <= 1e-12) return;
    double ratio = coarse / fine;
    o.detail << name << " ratio " << ratio << "; ";
    if (!(ratio >= kRatio)) o.fail(std::string(name) + " ratio " + std::to_string(ratio));
  };
  EvolutionResiduals flow[2];
  ConstraintResiduals flat[2], null[2];
  for (int level = 0; level < 2; ++level) {
    const int n = 32 << level;
    const double dt = 0.05 / (1 << level);
    SurfaceSequence s = example_flat_paracontact(periodic_box(n, n, 1, 1), {0.5 - dt, 0.5, 0.5 + dt}, 1, 0.5);
    flow[level] = evolution_residuals(s, 1, 0, 0, kThreads);
    flat[level] = constraint_residuals(s.slices[1], 1, 0, 0, kThreads);
    Grid2D g;
    g.nx = g.ny = n;
    g.hx = 1.0 / (n - 1);
    g.hy = 1.0 / n;
    null[level] = constraint_residuals(example_null_isothermal(g, 1), 0, 0, 0, kThreads);
  }
  check_pair("flat alpha-flow", flow[0].alpha_flow, flow[1].alpha_flow);
  check_pair("flat ricci-flow", flow[0].ricci_flow, flow[1].ricci_flow);
  check_pair("flat constraints", flat[0].max(), flat[1].max());
  check_pair("null r1", null[0].r1, null[1].r1);
  check_pair("null r2", null[0].r2, null[1].r2);
  check_pair("null r3", null[0].r3, null[1].r3);
  check_pair("null r4", null[0].r4, null[1].r4);
  ConstraintResiduals zero = constraint_residuals(example_isothermal(periodic_box(32, 32, 1, 1), 0, 1), 1, 0, 0);
  if (zero.r1 != 0 || zero.r2 != 0 || zero.r3 != 0 || zero.r4 != 0) o.fail("F = 0 flat data not exactly zero");
  else o.detail << "F = 0 flat constraints exactly zero";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"closed-form Ricci oracle", oracle_equivalence},
      {"classification tables", table_verification},
      {"non-existence scans", nonexistence_scans},
      {"contact identity suite", identity_suite},
      {"null Sasakian versus K-contact", null_sasakian_vs_k_contact},
      {"supergravity solutions", supergravity},
      {"Cauchy residual convergence", cauchy_residuals},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d %s: %s | %s\n", index++, o.pass ? "PASS" : "FAIL", name, o.detail.str().c_str());
    failures += !o.pass;
  }
  std::fflush(stdout);
  return failures ? 1 : 0;
}
