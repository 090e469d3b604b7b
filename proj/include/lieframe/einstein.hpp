#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieframe/contact.hpp"

namespace lieframe {

// Ric = (𝔰_g/2)(λ² + κε) g − 𝔰_g κ α⊗α
struct EtaEinsteinFit {
  double lambda2 = 0;
  double kappa = 0;
  double residual = 0;
  bool admissible = false;
};

// Least-squares fit without judging the result.
EtaEinsteinFit compute_fit(const ContactStructure& cs, const Mat& ricci, double tol);
// Throws NotEtaEinstein or Inadmissible.
EtaEinsteinFit fit_eta_einstein(const ContactStructure& cs, const CurvatureTensors& curv, double tol);
EtaEinsteinFit fit_eta_einstein(const ContactStructure& cs, const CurvatureTensors& curv);

// Curvature identities implied by an admissible fit.
std::vector<IdentityCheck> eta_einstein_identities(const ContactStructure& cs, const CurvatureTensors& curv,
                                                   const EtaEinsteinFit& fit);

enum class Classification {
  Timelike,          // εη-Einstein, time-like Reeb field
  Para,              // εη-Einstein, space-like Reeb field
  Null,              // εη-Einstein, null Reeb field
  Riemannian,        // εη-Einstein, Riemannian
  NullContact,       // null contact structures
  NullSasakian,      // Sasakian null contact structures
  NullKContact,      // null K-contact structures
};

std::vector<Classification> all_classifications();
std::string classification_id(Classification c);
Classification classification_from_id(const std::string& id);

struct RowExpectation {
  int epsilon = 0;
  bool eta_einstein = true;
  std::optional<double> lambda2, kappa;
  std::optional<bool> sasakian, k_contact;
  std::optional<GroupName> group;
};

struct RowInstance {
  Classification table = Classification::Timelike;
  std::string row;
  FamilySpec spec;
  Vec alpha;
  int orientation = 0;  // 0: try +1 then −1
  std::map<std::string, double> sample;
  RowExpectation expect;
};

struct TableRowReport {
  Classification table = Classification::Timelike;
  std::string row;
  std::map<std::string, double> sample;
  FamilySpec spec;
  Vec alpha;
  int orientation = 0;
  bool contact_ok = false;
  int epsilon = 0;
  bool fit_ok = false;
  EtaEinsteinFit fit;
  std::optional<bool> sasakian_expected, sasakian_found;
  std::optional<bool> k_contact_expected, k_contact_found;
  std::optional<GroupName> group_expected, group_found;
  bool pass = false;
  std::string failure;  // first failed check
  std::optional<ContactStructure> structure;
};

// Table rows with their free parameters instantiated at deterministic samples.
std::vector<RowInstance> table_instances(Classification table);
std::vector<std::string> table_rows(Classification table);

TableRowReport verify_table_row(const RowInstance& inst, double tol);
// Throws RowFailure naming the first failed check.
TableRowReport require_table_row(const RowInstance& inst, double tol);

struct ScanGrid {
  double lo = -3, hi = 3;
  int points = 21;
};

struct ScanHit {
  FamilySpec spec;
  int orientation = 1;
  Vec alpha;
  EtaEinsteinFit fit;
};

struct ScanResult {
  std::size_t samples = 0;
  std::vector<ScanHit> contact;   // every contact structure of the target type found
  std::vector<ScanHit> hits;      // admissible εη-Einstein fits
};

// Parameter samples of a family on the grid, with constraint equations solved where needed.
std::vector<FamilySpec> family_grid(Family f, const ScanGrid& grid);

// Solutions α of ∗α = 𝔰_g dα with |α|² = ε: the null space of the linear map
// intersected with the quadric, sampled deterministically on positive-dimensional solution sets.
std::vector<Vec> contact_forms(const StructureConstants& sc, const FrameMetric& m, int orientation, int epsilon,
                               double tol);

ScanResult scan_family(Family f, const ScanGrid& grid, int epsilon, double tol, unsigned threads = 1);

}  // namespace lieframe
