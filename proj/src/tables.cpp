#include <cmath>
#include <functional>
#include <numbers>

#include "lieframe/einstein.hpp"
#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {

struct ClassificationName {
  Classification c;
  const char* id;
  const char* alias;
};

const ClassificationName kNames[] = {
    {Classification::Timelike, "thm-1.2", "timelike"},
    {Classification::Para, "thm-1.3", "para"},
    {Classification::Null, "thm-1.4", "null"},
    {Classification::Riemannian, "thm-4.14", "riemannian"},
    {Classification::NullContact, "prop-3.8", "null-contact"},
    {Classification::NullSasakian, "prop-3.16", "null-sasakian"},
    {Classification::NullKContact, "prop-3.22", "null-k-contact"},
};

const std::vector<double> kScales{0.5, 1.0, 1.5, 2.0, 3.0};
const std::vector<double> kAngles{0.3, 1.2, 2.0, 3.5, 5.0};
const std::vector<double> kRapidities{-1.0, -0.5, 0.0, 0.5, 1.0};
const std::vector<double> kNonzero{-2.0, -1.0, -0.5, 0.5, 2.0};
const std::vector<double> kSigns{1.0, -1.0};

Vec vec3(double a, double b, double c) { return Vec{{a, b, c}}; }

class Builder {
 public:
  explicit Builder(Classification t) : table_(t) {}

  void add(const std::string& row, Family f, std::map<std::string, double> params, Vec alpha, int orientation,
           std::map<std::string, double> sample, RowExpectation e) {
    out_.push_back(RowInstance{table_, row, FamilySpec{f, std::move(params)}, std::move(alpha), orientation,
                               std::move(sample), std::move(e)});
  }

  std::vector<RowInstance> take() { return std::move(out_); }

 private:
  Classification table_;
  std::vector<RowInstance> out_;
};

RowExpectation expect(int eps, std::optional<double> l2, std::optional<double> k, std::optional<bool> sas,
                      std::optional<bool> kc, std::optional<GroupName> g, bool ee = true) {
  RowExpectation e;
  e.epsilon = eps;
  e.eta_einstein = ee;
  e.lambda2 = l2;
  e.kappa = k;
  e.sasakian = sas;
  e.k_contact = kc;
  e.group = g;
  return e;
}

void timelike_rows(Builder& b) {
  using G = GroupName;
  for (double a : {0.05, 0.15, 0.25, 0.35, 0.45}) {
    double bb = 1 - a, l2 = 2 * bb * (1 - bb);
    b.add("g3 non-Sasakian: 1/2 > a = 1-b > 0, c = 1", Family::g3, {{"a", a}, {"b", bb}, {"c", 1}},
          vec3(1, 0, 0), 0, {{"a", a}}, expect(-1, l2, l2, false, false, G::SL2R_cover));
  }
  b.add("g3: a = c = 1, b = 0", Family::g3, {{"a", 1}, {"b", 0}, {"c", 1}}, vec3(-1, 0, 0), 0, {},
        expect(-1, 0, 0, false, false, G::E11_cover));
  for (double a : {0.2, 0.4, 0.6, 0.8, 1.0})
    b.add("g3 Sasakian: 1 >= a = b > 0, c = 1", Family::g3, {{"a", a}, {"b", a}, {"c", 1}}, vec3(1, 0, 0), 0,
          {{"a", a}}, expect(-1, a, 1 - a, true, true, G::SL2R_cover));
  b.add("g3 Sasakian: a = b = 0, c = -1", Family::g3, {{"a", 0}, {"b", 0}, {"c", -1}}, vec3(-1, 0, 0), 0, {},
        expect(-1, 0, 1, true, true, G::H3));
  for (double a : {-1.0, -0.5, 0.25, 0.75, 1.0})
    b.add("g6 Sasakian: b = 1, c = d = 0, 1 >= a^2 > 0", Family::g6, {{"a", a}, {"b", 1}, {"c", 0}, {"d", 0}},
          vec3(1, 0, 0), 0, {{"a", a}}, expect(-1, a * a, 1 - a * a, true, true, G::NonUnimodular));
}

void para_rows(Builder& b) {
  using G = GroupName;
  const std::vector<double> ts{1.0, 1.5, 2.0, 2.5, 3.0};
  for (double s : kSigns) {
    const int o = static_cast<int>(s);
    for (double sigma : kSigns)
      for (double t : ts) {
        b.add("g3: a = s, b = c, sc >= 1", Family::g3, {{"a", s}, {"b", s * t}, {"c", s * t}},
              vec3(0, sigma, 0), o, {{"s", s}, {"sign", sigma}, {"sc", t}},
              expect(1, t, t - 1, true, true, G::SL2R_cover));
        b.add("g3: b = s, a = c, sc >= 1", Family::g3, {{"a", s * t}, {"b", s}, {"c", s * t}},
              vec3(0, 0, sigma), o, {{"s", s}, {"sign", sigma}, {"sc", t}},
              expect(1, t, t - 1, true, true, G::SL2R_cover));
      }
    for (double sigma : kSigns)
      for (double r : kRapidities)
        b.add("g3: b = 0, a = c = s", Family::g3, {{"a", s}, {"b", 0}, {"c", s}},
              vec3(std::sinh(r), sigma * std::cosh(r), 0), o, {{"s", s}, {"sign", sigma}, {"rapidity", r}},
              expect(1, 0, 0, false, false, G::E11_cover));
    for (double th : kAngles)
      b.add("g3: c = 0, a = b = s", Family::g3, {{"a", s}, {"b", s}, {"c", 0}}, vec3(0, std::cos(th), std::sin(th)),
            o, {{"s", s}, {"angle", th}}, expect(1, 0, 0, false, false, G::E2_cover));
    for (double r : kRapidities)
      for (double th : kAngles)
        b.add("g3: a = b = c = s", Family::g3, {{"a", s}, {"b", s}, {"c", s}},
              vec3(std::sinh(r), std::cosh(r) * std::cos(th), std::cosh(r) * std::sin(th)), o,
              {{"s", s}, {"rapidity", r}, {"angle", th}}, expect(1, 1, 0, true, true, G::SL2R_cover));
    for (double sigma : kSigns)
      for (double d : {-3.0, -1.5, -1.0, 1.0, 2.0})
        b.add("g6: a = b = 0, d^2 >= 1, c = -s", Family::g6, {{"a", 0}, {"b", 0}, {"c", -s}, {"d", d}},
              vec3(0, 0, sigma), o, {{"s", s}, {"sign", sigma}, {"d", d}},
              expect(1, d * d, d * d - 1, true, true, G::NonUnimodular));
    for (double mu : kSigns)
      for (double sigma : kSigns)
        for (double v : {-2.0, -1.0, -0.5, 0.2, 0.4}) {
          // v = sμa keeps c² > a², so the normalization α₂² = 1 + α₀² has a real solution.
          double a = s * mu * v, bb = -mu * a, d = -a + mu * s, c = -s + mu * a;
          double t = sigma / std::sqrt(c * c - a * a);
          b.add("g6: b = -mu a != 0, d = -a + mu s, c = -s + mu a", Family::g6,
                {{"a", a}, {"b", bb}, {"c", c}, {"d", d}}, vec3(a * t, 0, c * t), o,
                {{"s", s}, {"mu", mu}, {"sign", sigma}, {"a", a}}, expect(1, 1, 0, true, true, G::NonUnimodular));
        }
  }
}

void null_eta_rows(Builder& b) {
  using G = GroupName;
  for (double s : kSigns) {
    const int o = static_cast<int>(s);
    for (double mu : kSigns)
      for (double v : {-1.0, 0.0, 0.5, 2.0, 3.0})
        for (double a0 : kScales) {
          double bb = s * v, c = mu * (bb - s);
          bool sas = v == 0.5;
          b.add("g2: a = 0, mu c = b - s, c != 0", Family::g2, {{"a", 0}, {"b", bb}, {"c", c}},
                vec3(a0, 0, mu * a0), o, {{"s", s}, {"mu", mu}, {"b", bb}, {"alpha0", a0}},
                expect(0, 4 * (bb - s) * (bb - s), 0, sas, sas, G::E11_cover));
        }
    for (double th : {0.0, 1.2, 2.4, 3.6, 4.8})
      for (double a0 : kScales)
        b.add("g3: a = b = c = s", Family::g3, {{"a", s}, {"b", s}, {"c", s}},
              a0 * vec3(1, std::cos(th), std::sin(th)), o, {{"s", s}, {"angle", th}, {"alpha0", a0}},
              expect(0, 1, 0, true, true, G::SL2R_cover));
    for (double sigma : kSigns)
      for (double a0 : kScales)
        b.add("g3: a = c = s, b = 0", Family::g3, {{"a", s}, {"b", 0}, {"c", s}}, a0 * vec3(1, sigma, 0), o,
              {{"s", s}, {"sign", sigma}, {"alpha0", a0}}, expect(0, 0, 0, false, false, G::E11_cover));
    const double mu = -s;
    for (double a0 : kScales) {
      b.add("g4: b = 0, a = s", Family::g4, {{"a", s}, {"b", 0}, {"mu", mu}}, a0 * vec3(1, 0, mu), o,
            {{"s", s}, {"alpha0", a0}}, expect(0, 1, 1 / (a0 * a0), true, true, G::SL2R_cover));
      b.add("g4: b = 0, a = 0", Family::g4, {{"a", 0}, {"b", 0}, {"mu", mu}}, a0 * vec3(1, 0, mu), o,
            {{"s", s}, {"alpha0", a0}}, expect(0, 0, 2 / (a0 * a0), false, false, G::E11_cover));
    }
    for (double m6 : kSigns)
      for (double v : {0.5, -1.0, 1.0, 1.5, -0.3})
        for (double a0 : kScales) {
          double a = m6 * s * v, bc = m6 * a - s;
          bool sas = v == 0.5;
          b.add("g6: a = d != 0, b = c, a = mu(b + s)", Family::g6, {{"a", a}, {"b", bc}, {"c", bc}, {"d", a}},
                a0 * vec3(1, 0, -m6), o, {{"s", s}, {"mu", m6}, {"a", a}, {"alpha0", a0}},
                expect(0, 4 * a * a, 0, sas, sas, G::NonUnimodular));
        }
  }
}

void riemannian_rows(Builder& b) {
  using G = GroupName;
  for (double m : {0.25, 0.5, 1.0, 2.0, 3.0})
    b.add("SU(2) Sasakian: lambda^2 = 1 + kappa, kappa > -1", Family::RiemannianUnimodular,
          {{"mu1", 1}, {"mu2", m}, {"mu3", m}}, vec3(1, 0, 0), -1, {{"mu", m}},
          expect(1, m, m - 1, true, true, G::SU2));
  b.add("H3 Sasakian: lambda^2 = 0, kappa = -1", Family::RiemannianUnimodular, {{"mu1", 1}, {"mu2", 0}, {"mu3", 0}},
        vec3(1, 0, 0), -1, {}, expect(1, 0, -1, true, true, G::H3));
  for (double m : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    double l2 = 0.5 - 0.5 * m * m;
    b.add("SU(2) non-Sasakian: lambda^2 = -kappa = (1 - mu^2)/2", Family::RiemannianUnimodular,
          {{"mu1", 1}, {"mu2", (1 - m) / 2}, {"mu3", (1 + m) / 2}}, vec3(1, 0, 0), -1, {{"mu", m}},
          expect(1, l2, -l2, false, false, G::SU2));
  }
  b.add("E(2) non-Sasakian: lambda^2 = kappa = 0", Family::RiemannianUnimodular, {{"mu1", 1}, {"mu2", 0}, {"mu3", 1}},
        vec3(1, 0, 0), -1, {}, expect(1, 0, 0, false, false, G::E2_cover));
}

// Null rows shared by the contact, Sasakian and K-contact tables.
void null_structure_rows(Builder& b, Classification t) {
  using G = GroupName;
  const bool all = t == Classification::NullContact;
  const bool sas_table = t != Classification::NullContact;
  auto e = [&](std::optional<bool> sas, std::optional<bool> kc, GroupName g) {
    if (all) return expect(0, std::nullopt, std::nullopt, std::nullopt, std::nullopt, g, false);
    return expect(0, std::nullopt, std::nullopt, sas, kc, g, false);
  };
  for (double s : kSigns) {
    const int o = static_cast<int>(s);
    if (t != Classification::NullKContact)
      for (double a : kNonzero)
        for (double a0 : kScales)
          b.add("g1: a != 0, b = s", Family::g1, {{"a", a}, {"b", s}}, a0 * vec3(1, 0, -1), o,
                {{"s", s}, {"a", a}, {"alpha0", a0}}, e(true, false, G::SL2R_cover));
    for (double mu : kSigns) {
      for (double v : kNonzero)
        for (double a0 : kScales) {
          double a, bb, c;
          if (all) {
            a = v, bb = s * 2, c = mu * (bb - s);
          } else {
            a = s * v, bb = (a + s) / 2, c = mu * (a - s) / 2;
          }
          b.add(all ? "g2: a != 0, mu c = b - s, c != 0" : "g2: 2 mu c = a - s, 2b = a + s, a != s, a != 0", Family::g2,
                {{"a", a}, {"b", bb}, {"c", c}}, a0 * vec3(1, 0, mu), o,
                {{"s", s}, {"mu", mu}, {"a", a}, {"alpha0", a0}}, e(true, true, G::SL2R_cover));
        }
      if (all) {
        for (double v : {-1.0, 0.0, 0.5, 2.0, 3.0})
          for (double a0 : kScales) {
            double bb = s * v;
            b.add("g2: a = 0, mu c = b - s, c != 0", Family::g2, {{"a", 0}, {"b", bb}, {"c", mu * (bb - s)}},
                  a0 * vec3(1, 0, mu), o, {{"s", s}, {"mu", mu}, {"b", bb}, {"alpha0", a0}},
                  e(std::nullopt, std::nullopt, G::E11_cover));
          }
      } else {
        for (double a0 : kScales)
          b.add("g2: a = 0, c = -mu s/2, b = s/2", Family::g2, {{"a", 0}, {"b", s / 2}, {"c", -mu * s / 2}},
                a0 * vec3(1, 0, mu), o, {{"s", s}, {"mu", mu}, {"alpha0", a0}}, e(true, true, G::E11_cover));
      }
    }
    if (all) {
      for (double sigma : kSigns)
        for (double a : kNonzero)
          for (double a0 : kScales)
            b.add("g3: a != 0, b = c = s", Family::g3, {{"a", a}, {"b", s}, {"c", s}}, a0 * vec3(1, 0, sigma), o,
                  {{"s", s}, {"sign", sigma}, {"a", a}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::SL2R_cover));
      for (double sigma : kSigns)
        for (double bb : kNonzero)
          for (double a0 : kScales)
            b.add("g3: a = c = s, b != 0", Family::g3, {{"a", s}, {"b", bb}, {"c", s}}, a0 * vec3(1, sigma, 0), o,
                  {{"s", s}, {"sign", sigma}, {"b", bb}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::SL2R_cover));
      for (double sigma : kSigns)
        for (double a0 : kScales)
          b.add("g3: a = s, b = 0, c = s", Family::g3, {{"a", s}, {"b", 0}, {"c", s}}, a0 * vec3(1, sigma, 0), o,
                {{"s", s}, {"sign", sigma}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::E11_cover));
    }
    for (double th : kAngles)
      for (double a0 : kScales)
        b.add(all ? "g3: a = b = c = s, alpha1, alpha2 != 0" : "g3: a = b = c = s", Family::g3,
              {{"a", s}, {"b", s}, {"c", s}}, a0 * vec3(1, std::cos(th), std::sin(th)), o,
              {{"s", s}, {"angle", th}, {"alpha0", a0}}, e(true, true, G::SL2R_cover));
    for (double mu : kSigns) {
      if (all) {
        for (double a : kNonzero)
          for (double a0 : kScales)
            b.add("g4: b = s + mu, a != 0", Family::g4, {{"a", a}, {"b", s + mu}, {"mu", mu}}, a0 * vec3(1, 0, mu), o,
                  {{"s", s}, {"mu", mu}, {"a", a}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::SL2R_cover));
        for (double a0 : kScales)
          b.add("g4: b = s + mu, a = 0", Family::g4, {{"a", 0}, {"b", s + mu}, {"mu", mu}}, a0 * vec3(1, 0, mu), o,
                {{"s", s}, {"mu", mu}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::E11_cover));
      } else {
        for (double a0 : kScales)
          b.add("g4: b = s + mu, a = s", Family::g4, {{"a", s}, {"b", s + mu}, {"mu", mu}}, a0 * vec3(1, 0, mu), o,
                {{"s", s}, {"mu", mu}, {"alpha0", a0}}, e(true, true, G::SL2R_cover));
      }
    }
    for (double mu : kSigns) {
      if (all) {
        for (double a : kNonzero)
          for (double a0 : kScales) {
            double bc = mu * a - s;
            b.add("g6: mu a = b + s, mu d = c + s, b = c, a = d != 0", Family::g6,
                  {{"a", a}, {"b", bc}, {"c", bc}, {"d", a}}, a0 * vec3(1, 0, -mu), o,
                  {{"s", s}, {"mu", mu}, {"a", a}, {"alpha0", a0}}, e(std::nullopt, std::nullopt, G::NonUnimodular));
          }
      } else {
        for (double a0 : kScales)
          b.add("g6: b = c = -s/2, a = d = mu s/2", Family::g6,
                {{"a", mu * s / 2}, {"b", -s / 2}, {"c", -s / 2}, {"d", mu * s / 2}}, a0 * vec3(1, 0, -mu), o,
                {{"s", s}, {"mu", mu}, {"alpha0", a0}}, e(true, true, G::NonUnimodular));
      }
    }
  }
  (void)sas_table;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

std::vector<Classification> all_classifications() {
  std::vector<Classification> out;
  for (const auto& n : kNames) out.push_back(n.c);
  return out;
}

std::string classification_id(Classification c) {
  for (const auto& n : kNames)
    if (n.c == c) return n.id;
  return "?";
}

Classification classification_from_id(const std::string& id) {
  for (const auto& n : kNames)
    if (id == n.id || id == n.alias) return n.c;
  throw UsageError("unknown classification table '" + id + "'");
}

std::vector<RowInstance> table_instances(Classification table) {
  Builder b(table);
  switch (table) {
    case Classification::Timelike: timelike_rows(b); break;
    case Classification::Para: para_rows(b); break;
    case Classification::Null: null_eta_rows(b); break;
    case Classification::Riemannian: riemannian_rows(b); break;
    case Classification::NullContact:
    case Classification::NullSasakian:
    case Classification::NullKContact: null_structure_rows(b, table); break;
  }
  return b.take();
}

std::vector<std::string> table_rows(Classification table) {
  std::vector<std::string> rows;
  for (const auto& inst : table_instances(table))
    if (rows.empty() || rows.back() != inst.row) {
      bool seen = false;
      for (const auto& r : rows) seen = seen || r == inst.row;
      if (!seen) rows.push_back(inst.row);
    }
  return rows;
}

TableRowReport verify_table_row(const RowInstance& inst, double tol) {
  TableRowReport r;
  r.table = inst.table;
  r.row = inst.row;
  r.sample = inst.sample;
  r.spec = inst.spec;
  r.alpha = inst.alpha;
  r.orientation = inst.orientation;
  r.sasakian_expected = inst.expect.sasakian;
  r.k_contact_expected = inst.expect.k_contact;
  r.group_expected = inst.expect.group;
  auto fail = [&](std::string why) {
    r.pass = false;
    r.failure = std::move(why);
    return r;
  };

  StructureConstants sc;
  try {
    sc = make_family(inst.spec);
  } catch (const ConstraintViolation& e) {
    return fail(std::string("family constraint: ") + e.what());
  }
  const FrameMetric m = is_lorentzian(inst.spec.family) ? FrameMetric::lorentzian(3) : FrameMetric::riemannian(3);

  std::vector<int> orientations = inst.orientation == 0 ? std::vector<int>{1, -1} : std::vector<int>{inst.orientation};
  std::string contact_error;
  for (int o : orientations) {
    try {
      r.structure = check_contact(sc, m, o, inst.alpha, tol);
      r.orientation = o;
      break;
    } catch (const NotContact& e) {
      contact_error = e.what();
    }
  }
  if (!r.structure) return fail("contact: " + contact_error);
  const ContactStructure& cs = *r.structure;
  r.contact_ok = true;
  r.epsilon = cs.epsilon;
  if (cs.epsilon != inst.expect.epsilon)
    return fail("causal type: expected ε = " + std::to_string(inst.expect.epsilon) + ", found " +
                std::to_string(cs.epsilon));

  const CurvatureTensors curv = curvature_of(sc, m);
  r.fit = compute_fit(cs, curv.ricci, tol);
  r.fit_ok = r.fit.admissible;
  r.sasakian_found = is_sasakian(cs, tol);
  r.k_contact_found = k_contact(cs, tol).k_contact;
  r.group_found = identify_group(inst.spec);

  if (inst.expect.eta_einstein) {
    if (r.fit.residual > tol) return fail("εη-Einstein fit residual " + std::to_string(r.fit.residual));
    if (!r.fit.admissible) return fail("εη-Einstein constants inadmissible");
    if (inst.expect.lambda2 && !close(r.fit.lambda2, *inst.expect.lambda2, 1e-9))
      return fail("λ² = " + std::to_string(r.fit.lambda2) + ", expected " + std::to_string(*inst.expect.lambda2));
    if (inst.expect.kappa && !close(r.fit.kappa, *inst.expect.kappa, 1e-9))
      return fail("κ = " + std::to_string(r.fit.kappa) + ", expected " + std::to_string(*inst.expect.kappa));
  }
  if (inst.expect.sasakian && *inst.expect.sasakian != *r.sasakian_found)
    return fail(std::string("Sasakian flag: expected ") + (*inst.expect.sasakian ? "yes" : "no"));
  if (inst.expect.k_contact && *inst.expect.k_contact != *r.k_contact_found)
    return fail(std::string("K-contact flag: expected ") + (*inst.expect.k_contact ? "yes" : "no"));
  if (inst.expect.group && *inst.expect.group != *r.group_found)
    return fail("group: expected " + group_name(*inst.expect.group) + ", found " + group_name(*r.group_found));
  r.pass = true;
  return r;
}

TableRowReport require_table_row(const RowInstance& inst, double tol) {
  TableRowReport r = verify_table_row(inst, tol);
  if (!r.pass) throw RowFailure(inst.row + ": " + r.failure);
  return r;
}

}  // namespace lieframe
