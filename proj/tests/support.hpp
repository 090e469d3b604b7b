#pragma once

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lieframe/contact.hpp"
#include "lieframe/einstein.hpp"
#include "lieframe/liealg.hpp"

namespace lieframe::test {

inline constexpr double kTol = 1e-9;

inline Vec vec3(double a, double b, double c) {
  Vec v(3);
  v << a, b, c;
  return v;
}

inline FamilySpec spec(Family f, std::map<std::string, double> p) { return FamilySpec{f, std::move(p)}; }

inline FamilySpec g3(double a, double b, double c) { return spec(Family::g3, {{"a", a}, {"b", b}, {"c", c}}); }

inline FamilySpec su2(double m1, double m2, double m3) {
  return spec(Family::RiemannianUnimodular, {{"mu1", m1}, {"mu2", m2}, {"mu3", m3}});
}

inline ContactStructure lorentzian(const FamilySpec& s, const Vec& alpha, int orientation) {
  return check_contact(make_family(s), FrameMetric::lorentzian(3), orientation, alpha, kTol);
}

inline ContactStructure riemannian(const FamilySpec& s, const Vec& alpha, int orientation) {
  return check_contact(make_family(s), FrameMetric::riemannian(3), orientation, alpha, kTol);
}

// Cyclic sum of [[e_i,e_j],e_k] evaluated straight from the coefficient array.
inline double brute_jacobi(const StructureConstants& sc) {
  const int n = sc.dim();
  double worst = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = 0;
          for (int l = 0; l < n; ++l)
            s += sc(i, j, l) * sc(l, k, m) + sc(j, k, l) * sc(l, i, m) + sc(k, i, l) * sc(l, j, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

// Koszul formula in an orthonormal frame, written out term by term.
inline double koszul(const StructureConstants& sc, const FrameMetric& m, int i, int j, int k) {
  double ek = m.eta(k);
  return ek * 0.5 * (sc(i, j, k) * ek - sc(j, k, i) * m.eta(i) + sc(k, i, j) * m.eta(j));
}

inline Mat metric3(const FrameMetric& m) { return m.matrix(); }

}  // namespace lieframe::test
