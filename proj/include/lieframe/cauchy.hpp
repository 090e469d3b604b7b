#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lieframe {

// Rectangular grid of nx × ny nodes at (x0 + i hx, y0 + j hy). Non-periodic axes drop the
// nodes whose stencils leave the grid from every residual norm.
struct Grid2D {
  int nx = 0, ny = 0;
  double hx = 1, hy = 1;
  double x0 = 0, y0 = 0;
  bool periodic_x = true, periodic_y = true;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
};

// Symmetric 2×2 tensor field stored by component.
struct SymField {
  std::vector<double> xx, xy, yy;

  static SymField constant(std::size_t n, double xx, double xy, double yy);
};

struct SurfaceData {
  Grid2D grid;
  SymField q;      // induced metric
  SymField theta;  // second fundamental form
  std::vector<double> F;
  std::vector<double> ax, ay;  // α⊥ = ax dx + ay dy
  std::vector<double> beta;    // lapse

  // Throws SingularMetric when q is not positive definite or β ≤ 0 at some node.
  void validate() const;
};

struct SurfaceSequence {
  std::vector<SurfaceData> slices;
  double dt = 0;
};

struct ConstraintResiduals {
  double r1 = 0;  // dα⊥ − F ν_q
  double r2 = 0;  // |α⊥|²_q − ε − F²
  double r3 = 0;  // R^q − |Θ|²_q + (Tr_qΘ)² + 𝒸 − 2κF²
  double r4 = 0;  // d Tr_qΘ + div_qΘ − κFα⊥

  double max() const;
};

struct EvolutionResiduals {
  double alpha_flow = 0;   // ∗_qα⊥ + (1/β)d(βF) − 𝓛_nα⊥
  double ricci_flow = 0;   // Ric^q + Tr_q(Θ)Θ − 2Θ(Id⊗W) − (1/β)(Θ̇ + ∇dβ) − κα⊥⊗α⊥ + ½(λ²+κε)q
};

struct EpsilonEstimate {
  double mean = 0;
  double spread = 0;  // max deviation from the mean
};

// 𝒸 = (5λ² + 3κε)/2
double constraint_constant(int epsilon, double lambda2, double kappa);

ConstraintResiduals constraint_residuals(const SurfaceData& d, int epsilon, double lambda2, double kappa,
                                         unsigned threads = 1);
// W = q⁻¹Θ. Needs at least three slices; derivatives in t are central.
EvolutionResiduals evolution_residuals(const SurfaceSequence& s, int epsilon, double lambda2, double kappa,
                                       unsigned threads = 1);

// |α⊥|²_q − F² over the evaluated nodes.
EpsilonEstimate recover_epsilon(const SurfaceData& d);

// Scalar curvature of q at every node (zero where the stencil is unavailable).
std::vector<double> scalar_curvature(const SurfaceData& d);

Grid2D periodic_box(int nx, int ny, double lx, double ly);

// F = 0, β = 1, e^{2U} = l1² + l2², α⊥ = (l2 cos t − l1 sin t) dx + (l1 cos t + l2 sin t) dy.
// Throws DegenerateParameters when l1² + l2² = 0.
SurfaceData flat_paracontact_slice(const Grid2D& grid, double t, double l1, double l2);
SurfaceSequence example_flat_paracontact(const Grid2D& grid, const std::vector<double>& times, double l1, double l2);

// q = ω²(dx² + dy²), α⊥ = e^{F0 x} dy, Θ = 0, β = 1 and F fixed by dα⊥ = Fν_q.
// The null structure is ω = F0; other ω give |α⊥|² − F² ≠ 0.
SurfaceData example_isothermal(const Grid2D& grid, double F0, double omega);
// ω = F0 on a grid periodic in y only. Throws DegenerateParameters when F0 = 0.
SurfaceData example_null_isothermal(const Grid2D& grid, double F0);

// Adds uniform noise of the given amplitude to Θ.
SurfaceData perturb_theta(SurfaceData d, double amplitude, std::uint64_t seed);

}  // namespace lieframe
