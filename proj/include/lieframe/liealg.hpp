#pragma once

#include <Eigen/Dense>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace lieframe {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// 0 for empty inputs.
double max_abs(const Mat& m);
double max_abs(const Vec& v);

// [e_i, e_j] = sum_k c(i,j,k) e_k
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  // Sets c(i,j,k) = v and c(j,i,k) = -v.
  void set(int i, int j, int k, double v);
  void add(int i, int j, int k, double v);

  Vec bracket(const Vec& u, const Vec& v) const;
  // Matrix of ad_u: column j is [u, e_j].
  Mat ad(const Vec& u) const;
  double max_abs() const;

  const std::vector<double>& raw() const { return c_; }

 private:
  int dim_ = 0;
  std::vector<double> c_;
};

enum class Family {
  g1, g2, g3, g4, g5, g6, g7,
  RiemannianUnimodular,
  RiemannianNonunimodular
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);
bool is_lorentzian(Family f);

struct FamilySpec {
  Family family = Family::g3;
  std::map<std::string, double> params;

  double param(const std::string& name) const;
};

enum class GroupName { SL2R_cover, SU2, E2_cover, E11_cover, H3, R3, NonUnimodular };

std::string group_name(GroupName g);

double jacobi_defect(const StructureConstants& sc);

// Throws ConstraintViolation naming the violated parameter constraint.
StructureConstants make_family(const FamilySpec& spec);

GroupName identify_group(const FamilySpec& spec);

// Random member of a family with parameters in [−range, range], constraint equations solved.
FamilySpec sample_family(Family f, std::mt19937_64& rng, double range = 3.0);

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);

}  // namespace lieframe
