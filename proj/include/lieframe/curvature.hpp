#pragma once

#include <cstdint>

#include "lieframe/exterior.hpp"
#include "lieframe/liealg.hpp"

namespace lieframe {

// ∇_{e_i} e_j = Σ_k gamma(i,j,k) e_k
class ConnectionCoeffs {
 public:
  ConnectionCoeffs() = default;
  explicit ConnectionCoeffs(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k) const { return g_[(i * dim_ + j) * dim_ + k]; }
  double& operator()(int i, int j, int k) { return g_[(i * dim_ + j) * dim_ + k]; }

  // ∇_u v for constant-coefficient fields.
  Vec covariant(const Vec& u, const Vec& v) const;
  // Matrix of ∇_{e_i} acting on frame components.
  Mat nabla(int i) const;

 private:
  int dim_ = 0;
  std::vector<double> g_;
};

struct CurvatureTensors {
  int dim = 0;
  // R(e_i,e_j)e_k = Σ_l riemann[((i*n+j)*n+k)*n+l] e_l
  std::vector<double> riemann;
  Mat ricci;
  double scalar = 0;

  double R(int i, int j, int k, int l) const { return riemann[((i * dim + j) * dim + k) * dim + l]; }
  // R(u,v)w for arbitrary frame vectors.
  Vec apply(const Vec& u, const Vec& v, const Vec& w) const;
};

ConnectionCoeffs levi_civita(const StructureConstants& sc, const FrameMetric& m);
CurvatureTensors riemann_ricci(const ConnectionCoeffs& conn, const StructureConstants& sc,
                               const FrameMetric& m);
CurvatureTensors curvature_of(const StructureConstants& sc, const FrameMetric& m);

// General 3D bracket: [e0,e1]=a e0+b e1+c e2, [e1,e2]=d e0+f e1+h e2, [e0,e2]=g e0+j e1+k e2.
struct BracketParams9 {
  double a = 0, b = 0, c = 0, d = 0, f = 0, h = 0, g = 0, j = 0, k = 0;

  static BracketParams9 from(const StructureConstants& sc);
  StructureConstants to_structure() const;
  // Max abs of the three Jacobi constraint expressions.
  double jacobi_residual() const;
};

// Closed-form Lorentzian Ricci and scalar curvature of the general 3D bracket.
// Throws JacobiViolation when the Jacobi constraints fail beyond tol.
CurvatureTensors closed_form_ricci(const BracketParams9& p, const FrameMetric& m, double tol);
CurvatureTensors closed_form_ricci(const BracketParams9& p, const FrameMetric& m);

struct OracleReport {
  std::size_t samples = 0;
  double max_ricci_error = 0;
  double max_scalar_error = 0;
  FamilySpec worst;
};

// Generic Koszul pipeline against the closed-form Ricci tensor on random Lorentzian family members.
// Sample i draws from a generator seeded with (seed, i), so results do not depend on threads.
OracleReport closed_form_oracle(std::size_t samples, std::uint64_t seed, unsigned threads = 1);

// ∇^H_{e_i} e_j = ∇_{e_i} e_j + ½ Σ_k η_k H(e_i,e_j,e_k) e_k
ConnectionCoeffs torsionful_connection(const ConnectionCoeffs& conn, const Form& H,
                                       const FrameMetric& m);

// T(e_i,e_j) = ∇_{e_i}e_j − ∇_{e_j}e_i − [e_i,e_j], stored as t[(i*n+j)*n+k].
std::vector<double> torsion(const ConnectionCoeffs& conn, const StructureConstants& sc);

// Max abs of η_k Γ(i,j,k) + η_j Γ(i,k,j).
double metric_compatibility_defect(const ConnectionCoeffs& conn, const FrameMetric& m);

// (H∘H)(u,v) = Σ_{k,l} η_k η_l H(u,e_k,e_l) H(v,e_k,e_l)
Mat h_square(const Form& H, const FrameMetric& m);

}  // namespace lieframe
