#include "lieframe/liealg.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
double max_abs(const Vec& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

StructureConstants::StructureConstants(int dim)
    : dim_(dim), c_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

void StructureConstants::set(int i, int j, int k, double v) {
  c_[(i * dim_ + j) * dim_ + k] = v;
  c_[(j * dim_ + i) * dim_ + k] = -v;
}

void StructureConstants::add(int i, int j, int k, double v) {
  c_[(i * dim_ + j) * dim_ + k] += v;
  c_[(j * dim_ + i) * dim_ + k] -= v;
}

Vec StructureConstants::bracket(const Vec& u, const Vec& v) const {
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      double w = u[i] * v[j];
      if (w == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out[k] += w * (*this)(i, j, k);
    }
  }
  return out;
}

Mat StructureConstants::ad(const Vec& u) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) m.col(j) = bracket(u, Vec::Unit(dim_, j));
  return m;
}

double StructureConstants::max_abs() const {
  double m = 0;
  for (double x : c_) m = std::max(m, std::abs(x));
  return m;
}

namespace {

const std::array<std::pair<Family, const char*>, 9> kFamilyNames{{
    {Family::g1, "g1"},
    {Family::g2, "g2"},
    {Family::g3, "g3"},
    {Family::g4, "g4"},
    {Family::g5, "g5"},
    {Family::g6, "g6"},
    {Family::g7, "g7"},
    {Family::RiemannianUnimodular, "riemannian_unimodular"},
    {Family::RiemannianNonunimodular, "riemannian_nonunimodular"},
}};

bool is_zero(double x) { return std::abs(x) <= tolerance(); }

int sign_of(double x) { return is_zero(x) ? 0 : (x > 0 ? 1 : -1); }

void require(bool ok, const char* constraint) {
  if (!ok) throw ConstraintViolation(constraint);
}

GroupName g3_lookup(int a, int b, int c) {
  struct Row {
    int a, b, c;
    GroupName g;
  };
  static const Row rows[] = {
      {1, 1, 1, GroupName::SL2R_cover},  {1, -1, -1, GroupName::SL2R_cover},
      {1, 1, -1, GroupName::SU2},        {1, 1, 0, GroupName::E2_cover},
      {1, 0, -1, GroupName::E2_cover},   {1, -1, 0, GroupName::E11_cover},
      {1, 0, 1, GroupName::E11_cover},   {1, 0, 0, GroupName::H3},
      {0, 0, -1, GroupName::H3},         {0, 0, 0, GroupName::R3},
  };
  // The frame changes e_0 -> -e_0 and e_1 <-> e_2 act on (a,b,c) by global
  // negation and by swapping a and b; closing the table under both makes it total.
  for (int neg = 0; neg < 2; ++neg) {
    for (int swap = 0; swap < 2; ++swap) {
      int x = swap ? b : a, y = swap ? a : b, z = c;
      if (neg) x = -x, y = -y, z = -z;
      for (const auto& r : rows)
        if (r.a == x && r.b == y && r.c == z) return r.g;
    }
  }
  throw ConstraintViolation("g3 sign pattern not tabulated");
}

GroupName milnor_lookup(double m1, double m2, double m3) {
  std::array<int, 3> s{sign_of(m1), sign_of(m2), sign_of(m3)};
  int pos = 0, neg = 0;
  for (int x : s) pos += x > 0, neg += x < 0;
  if (neg > pos) std::swap(pos, neg);
  if (pos == 3) return GroupName::SU2;
  if (pos == 2 && neg == 1) return GroupName::SL2R_cover;
  if (pos == 2 && neg == 0) return GroupName::E2_cover;
  if (pos == 1 && neg == 1) return GroupName::E11_cover;
  if (pos == 1) return GroupName::H3;
  return GroupName::R3;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

Family family_from_name(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (name == n) return fam;
  throw ConstraintViolation("unknown family '" + name + "'");
}

bool is_lorentzian(Family f) {
  return f != Family::RiemannianUnimodular && f != Family::RiemannianNonunimodular;
}

double FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw ConstraintViolation("missing parameter '" + name + "' for " + family_name(family));
  return it->second;
}

std::string group_name(GroupName g) {
  switch (g) {
    case GroupName::SL2R_cover: return "SL2R_cover";
    case GroupName::SU2: return "SU2";
    case GroupName::E2_cover: return "E2_cover";
    case GroupName::E11_cover: return "E11_cover";
    case GroupName::H3: return "H3";
    case GroupName::R3: return "R3";
    case GroupName::NonUnimodular: return "NonUnimodular";
  }
  return "?";
}

double jacobi_defect(const StructureConstants& sc) {
  const int n = sc.dim();
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = 0;
          for (int l = 0; l < n; ++l)
            s += sc(i, j, l) * sc(l, k, m) + sc(j, k, l) * sc(l, i, m) +
                 sc(k, i, l) * sc(l, j, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

StructureConstants make_family(const FamilySpec& spec) {
  StructureConstants sc(3);
  auto p = [&](const char* n) { return spec.param(n); };
  switch (spec.family) {
    case Family::g1: {
      double a = p("a"), b = p("b");
      require(!is_zero(a), "a ≠ 0");
      sc.set(1, 2, 1, a);
      sc.set(1, 2, 0, -b);
      sc.set(1, 0, 1, -a);
      sc.set(1, 0, 2, -b);
      sc.set(2, 0, 1, b);
      sc.set(2, 0, 2, a);
      sc.set(2, 0, 0, a);
      break;
    }
    case Family::g2: {
      double a = p("a"), b = p("b"), c = p("c");
      require(!is_zero(c), "c ≠ 0");
      require(is_zero(a * c), "a·c = 0 (Jacobi identity of the g2 brackets)");
      sc.set(1, 2, 2, c);
      sc.set(1, 2, 0, -b);
      sc.set(1, 0, 2, -b);
      sc.set(1, 0, 0, c);
      sc.set(2, 0, 1, a);
      break;
    }
    case Family::g3: {
      double a = p("a"), b = p("b"), c = p("c");
      sc.set(1, 2, 0, -c);
      sc.set(1, 0, 2, -b);
      sc.set(2, 0, 1, a);
      break;
    }
    case Family::g4: {
      double a = p("a"), b = p("b"), mu = p("mu");
      require(mu == 1.0 || mu == -1.0, "μ ∈ {−1, +1}");
      sc.set(1, 2, 2, -1);
      sc.set(1, 2, 0, 2 * mu - b);
      sc.set(1, 0, 2, -b);
      sc.set(1, 0, 0, 1);
      sc.set(2, 0, 1, a);
      break;
    }
    case Family::g5: {
      double a = p("a"), b = p("b"), c = p("c"), d = p("d");
      require(!is_zero(a + d), "a + d ≠ 0");
      require(is_zero(a * c + b * d), "ac + bd = 0");
      sc.set(1, 0, 1, a);
      sc.set(1, 0, 2, b);
      sc.set(2, 0, 1, c);
      sc.set(2, 0, 2, d);
      break;
    }
    case Family::g6: {
      double a = p("a"), b = p("b"), c = p("c"), d = p("d");
      require(!is_zero(a + d), "a + d ≠ 0");
      require(is_zero(a * c - b * d), "ac − bd = 0");
      sc.set(1, 2, 2, a);
      sc.set(1, 2, 0, b);
      sc.set(1, 0, 2, c);
      sc.set(1, 0, 0, d);
      break;
    }
    case Family::g7: {
      double a = p("a"), b = p("b"), c = p("c"), d = p("d");
      require(!is_zero(a + d), "a + d ≠ 0");
      require(is_zero(a * c), "ac = 0");
      sc.set(1, 2, 1, -a);
      sc.set(1, 2, 2, -b);
      sc.set(1, 2, 0, -b);
      sc.set(1, 0, 1, a);
      sc.set(1, 0, 2, b);
      sc.set(1, 0, 0, b);
      sc.set(2, 0, 1, c);
      sc.set(2, 0, 2, d);
      sc.set(2, 0, 0, d);
      break;
    }
    case Family::RiemannianUnimodular: {
      sc.set(1, 2, 0, p("mu1"));
      sc.set(2, 0, 1, p("mu2"));
      sc.set(0, 1, 2, p("mu3"));
      break;
    }
    case Family::RiemannianNonunimodular: {
      double a = p("a"), b = p("b"), c = p("c"), f = p("f");
      require(!is_zero(a + f), "a + f ≠ 0");
      sc.set(0, 1, 1, a);
      sc.set(0, 1, 2, b);
      sc.set(0, 2, 1, c);
      sc.set(0, 2, 2, f);
      break;
    }
  }
  return sc;
}

GroupName identify_group(const FamilySpec& spec) {
  make_family(spec);
  auto p = [&](const char* n) { return spec.param(n); };
  switch (spec.family) {
    case Family::g1:
      return is_zero(p("b")) ? GroupName::E11_cover : GroupName::SL2R_cover;
    case Family::g2:
      return is_zero(p("a")) ? GroupName::E11_cover : GroupName::SL2R_cover;
    case Family::g3:
      return g3_lookup(sign_of(p("a")), sign_of(p("b")), sign_of(p("c")));
    case Family::g4: {
      double a = p("a"), b = p("b"), mu = p("mu");
      if (!is_zero(b - mu))
        return is_zero(a) ? GroupName::E11_cover : GroupName::SL2R_cover;
      if (is_zero(a)) return GroupName::H3;
      // b = μ: the sign of μa separates E(1,1) from E(2).
      return mu * a < 0 ? GroupName::E11_cover : GroupName::E2_cover;
    }
    case Family::RiemannianUnimodular:
      return milnor_lookup(p("mu1"), p("mu2"), p("mu3"));
    case Family::g5:
    case Family::g6:
    case Family::g7:
    case Family::RiemannianNonunimodular:
      return GroupName::NonUnimodular;
  }
  return GroupName::NonUnimodular;
}

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
  const int n = a.dim(), m = b.dim();
  StructureConstants out(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i < j) out.set(i, j, k, a(i, j, k));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (i < j) out.set(n + i, n + j, n + k, b(i, j, k));
  return out;
}

FamilySpec sample_family(Family f, std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> u(-range, range);
  // Magnitudes bounded away from zero where a parameter must not vanish.
  auto nonzero = [&] {
    double v = u(rng);
    return std::abs(v) < 0.1 ? (v < 0 ? -0.1 : 0.1) : v;
  };
  auto sign = [&] { return u(rng) < 0 ? -1.0 : 1.0; };
  FamilySpec s{f, {}};
  switch (f) {
    case Family::g1:
      s.params = {{"a", nonzero()}, {"b", u(rng)}};
      break;
    case Family::g2:
      s.params = {{"a", 0.0}, {"b", u(rng)}, {"c", nonzero()}};
      break;
    case Family::g3:
      s.params = {{"a", u(rng)}, {"b", u(rng)}, {"c", u(rng)}};
      break;
    case Family::g4:
      s.params = {{"a", u(rng)}, {"b", u(rng)}, {"mu", sign()}};
      break;
    case Family::g5:
    case Family::g6: {
      double a = nonzero(), b = u(rng), d = u(rng);
      if (std::abs(a + d) < 0.1) d += 0.5;
      double c = (f == Family::g5 ? -1 : 1) * b * d / a;
      s.params = {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
      break;
    }
    case Family::g7: {
      bool a_zero = u(rng) < 0;
      double a = a_zero ? 0.0 : nonzero(), c = a_zero ? u(rng) : 0.0, d = u(rng);
      if (std::abs(a + d) < 0.1) d += 0.5;
      s.params = {{"a", a}, {"b", u(rng)}, {"c", c}, {"d", d}};
      break;
    }
    case Family::RiemannianUnimodular:
      s.params = {{"mu1", u(rng)}, {"mu2", u(rng)}, {"mu3", u(rng)}};
      break;
    case Family::RiemannianNonunimodular: {
      double a = u(rng), f2 = u(rng);
      if (std::abs(a + f2) < 0.1) f2 += 0.5;
      s.params = {{"a", a}, {"b", u(rng)}, {"c", u(rng)}, {"f", f2}};
      break;
    }
  }
  return s;
}

}  // namespace lieframe
