#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lieframe/einstein.hpp"

namespace lieframe {

// A three-dimensional factor before validation: family, contact form and orientation (0: try +1 then −1).
struct FactorSpec {
  FamilySpec spec;
  Vec alpha;
  int orientation = 0;
};

// Throws ConstraintViolation or NotContact.
ContactStructure make_factor(const FactorSpec& f, double tol);

struct ProductSolution {
  ContactStructure n_struct;  // Lorentzian factor
  ContactStructure x_struct;  // Riemannian factor
  EtaEinsteinFit n_fit, x_fit;
  double lambda = 0;
  double l = 0;
  StructureConstants sc6;
  FrameMetric m6;
  int orientation6 = 1;
  Form H;
};

// Places a form on the coordinates offset, ..., offset + w.dim() − 1 of a dim-dimensional algebra.
Form embed(const Form& w, int dim, int offset);

// H = λν_χ + c(∗_χα_N)∧α_X + cα_N∧(∗_hα_X) + λν_h with the determinant convention for ∧.
// Solutions use c = l.
Form product_torsion(const ContactStructure& n, const ContactStructure& x, double lambda, double c);

// Throws IncompatibleFactors naming the violated relation.
ProductSolution build_solution(const ContactStructure& n, const ContactStructure& x, double lambda, double l,
                               double tol);

struct SugraResiduals {
  double ricci_H = 0;
  double dH = 0;
  double dstarH = 0;
  double normH = 0;
  // Symmetric part of Ric(∇^H) against Ric^g − ¼H∘H.
  double symmetric_check = 0;
  // H∘H on TN⊗TX.
  double mixed_block = 0;
  // ¼H∘H on each factor against the closed-form block expressions.
  double block_formula = 0;

  bool solves(double tol) const { return ricci_H <= tol && dH <= tol && dstarH <= tol && std::abs(normH) <= tol; }
};

SugraResiduals verify_supergravity(const ProductSolution& sol);

struct CatalogSample {
  FactorSpec n, x;
  double lambda = 0;
  double l = 0;
};

struct CatalogRow {
  int epsilon_n = 0;
  std::string name;
  std::string range;
  std::vector<double> default_l;
  // Returns nullopt when l lies outside the row's range.
  std::optional<CatalogSample> (*instantiate)(double l) = nullptr;
};

struct CatalogEntry {
  int epsilon_n = 0;
  std::string row;
  double l = 0;
  double lambda = 0;
  bool pass = false;
  std::string failure;
  SugraResiduals residuals;
  std::optional<CatalogSample> sample;
  std::optional<ProductSolution> solution;
};

const std::vector<CatalogRow>& catalog_rows();

// Every row of the matching table at the given l samples (the row defaults when empty).
// Samples outside a row's range are skipped.
std::vector<CatalogEntry> catalog(int epsilon_n, const std::vector<double>& l_samples, double tol,
                                  unsigned threads = 1);

CatalogEntry verify_catalog_sample(const CatalogRow& row, double l, double tol);

// Named configurations: "ads3xs3".
CatalogSample preset(const std::string& name);

}  // namespace lieframe
