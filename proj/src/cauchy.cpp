#include "lieframe/cauchy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <random>

#include "lieframe/errors.hpp"
#include "lieframe/numeric.hpp"

namespace lieframe {

namespace {

using M2 = Eigen::Matrix2d;
using V2 = Eigen::Vector2d;

// Γ^k_{ij} stored at [k][i][j].
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;

class Stencil {
 public:
  explicit Stencil(const Grid2D& g) : g_(g) {}

  bool inside(int i, int j, int margin) const {
    bool ok_x = g_.periodic_x || (i >= margin && i < g_.nx - margin);
    bool ok_y = g_.periodic_y || (j >= margin && j < g_.ny - margin);
    return ok_x && ok_y;
  }

  std::size_t at(int i, int j) const {
    if (g_.periodic_x) i = ((i % g_.nx) + g_.nx) % g_.nx;
    if (g_.periodic_y) j = ((j % g_.ny) + g_.ny) % g_.ny;
    return g_.index(i, j);
  }

  template <class F>
  double d(const F& f, int axis, int i, int j) const {
    if (axis == 0) return (f(at(i + 1, j)) - f(at(i - 1, j))) / (2 * g_.hx);
    return (f(at(i, j + 1)) - f(at(i, j - 1))) / (2 * g_.hy);
  }

  double d(const std::vector<double>& v, int axis, int i, int j) const {
    return d([&](std::size_t k) { return v[k]; }, axis, i, j);
  }

  double dd(const std::vector<double>& v, int a, int b, int i, int j) const {
    if (a == 0 && b == 0) return (v[at(i + 1, j)] - 2 * v[at(i, j)] + v[at(i - 1, j)]) / (g_.hx * g_.hx);
    if (a == 1 && b == 1) return (v[at(i, j + 1)] - 2 * v[at(i, j)] + v[at(i, j - 1)]) / (g_.hy * g_.hy);
    return (v[at(i + 1, j + 1)] - v[at(i + 1, j - 1)] - v[at(i - 1, j + 1)] + v[at(i - 1, j - 1)]) /
           (4 * g_.hx * g_.hy);
  }

  const Grid2D& grid() const { return g_; }

 private:
  const Grid2D& g_;
};

M2 sym_at(const SymField& f, std::size_t k) {
  M2 m;
  m << f.xx[k], f.xy[k], f.xy[k], f.yy[k];
  return m;
}

const std::vector<double>& component(const SymField& f, int a, int b) {
  if (a == 0 && b == 0) return f.xx;
  if (a == 1 && b == 1) return f.yy;
  return f.xy;
}

Christoffel christoffel_at(const SurfaceData& d, const Stencil& st, int i, int j) {
  std::array<M2, 2> dq;
  for (int l = 0; l < 2; ++l)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) dq[l](a, b) = st.d(component(d.q, a, b), l, i, j);
  M2 qi = sym_at(d.q, st.at(i, j)).inverse();
  Christoffel G{};
  for (int k = 0; k < 2; ++k)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0;
        for (int l = 0; l < 2; ++l) s += qi(k, l) * (dq[a](b, l) + dq[b](a, l) - dq[l](a, b));
        G[k][a][b] = s / 2;
      }
  return G;
}

struct Geometry {
  std::vector<Christoffel> gamma;  // valid at margin 1
  std::vector<M2> ricci;           // valid at margin 2
};

Geometry geometry(const SurfaceData& d, const Stencil& st, unsigned threads) {
  const Grid2D& g = d.grid;
  Geometry geo;
  geo.gamma.assign(g.size(), Christoffel{});
  geo.ricci.assign(g.size(), M2::Zero());
  parallel_for(g.ny, threads, [&](std::size_t jj) {
    int j = static_cast<int>(jj);
    for (int i = 0; i < g.nx; ++i)
      if (st.inside(i, j, 1)) geo.gamma[g.index(i, j)] = christoffel_at(d, st, i, j);
  });
  parallel_for(g.ny, threads, [&](std::size_t jj) {
    int j = static_cast<int>(jj);
    for (int i = 0; i < g.nx; ++i) {
      if (!st.inside(i, j, 2)) continue;
      const Christoffel& G = geo.gamma[g.index(i, j)];
      M2 ric;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          double s = 0;
          for (int k = 0; k < 2; ++k) {
            s += st.d([&](std::size_t n) { return geo.gamma[n][k][a][b]; }, k, i, j);
            s -= st.d([&](std::size_t n) { return geo.gamma[n][k][a][k]; }, b, i, j);
            for (int l = 0; l < 2; ++l) s += G[k][k][l] * G[l][a][b] - G[k][b][l] * G[l][a][k];
          }
          ric(a, b) = s;
        }
      geo.ricci[g.index(i, j)] = ric;
    }
  });
  return geo;
}

// Thread-safe running maximum.
class MaxAccumulator {
 public:
  void add(double v) {
    double cur = value_.load();
    while (v > cur && !value_.compare_exchange_weak(cur, v)) {
    }
  }
  double value() const { return value_.load(); }

 private:
  std::atomic<double> value_{0.0};
};

double lapse_weighted_derivative(const SurfaceData& d, const Stencil& st, int axis, int i, int j) {
  return st.d([&](std::size_t k) { return d.beta[k] * d.F[k]; }, axis, i, j);
}

}  // namespace

SymField SymField::constant(std::size_t n, double xx, double xy, double yy) {
  return SymField{std::vector<double>(n, xx), std::vector<double>(n, xy), std::vector<double>(n, yy)};
}

void SurfaceData::validate() const {
  const std::size_t n = grid.size();
  auto sized = [n](std::size_t s) { return s == n; };
  if (!sized(q.xx.size()) || !sized(q.xy.size()) || !sized(q.yy.size()) || !sized(theta.xx.size()) ||
      !sized(theta.xy.size()) || !sized(theta.yy.size()) || !sized(F.size()) || !sized(ax.size()) ||
      !sized(ay.size()) || !sized(beta.size()))
    throw DegenerateParameters("field sizes do not match the grid");
  if (grid.hx <= 0 || grid.hy <= 0) throw DegenerateParameters("grid spacings must be positive");
  for (std::size_t k = 0; k < n; ++k) {
    double det = q.xx[k] * q.yy[k] - q.xy[k] * q.xy[k];
    if (q.xx[k] <= 0 || det <= 0) throw SingularMetric("q is not positive definite at node " + std::to_string(k));
    if (beta[k] <= 0) throw SingularMetric("lapse is not positive at node " + std::to_string(k));
  }
}

double ConstraintResiduals::max() const { return std::max({r1, r2, r3, r4}); }

double constraint_constant(int epsilon, double lambda2, double kappa) {
  return 0.5 * (5 * lambda2 + 3 * kappa * epsilon);
}

ConstraintResiduals constraint_residuals(const SurfaceData& d, int epsilon, double lambda2, double kappa,
                                         unsigned threads) {
  d.validate();
  const Grid2D& g = d.grid;
  Stencil st(g);
  Geometry geo = geometry(d, st, threads);
  const double cc = constraint_constant(epsilon, lambda2, kappa);
  std::vector<double> tr(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    tr[k] = (sym_at(d.q, k).inverse() * sym_at(d.theta, k)).trace();

  MaxAccumulator r1, r2, r3, r4;
  parallel_for(g.ny, threads, [&](std::size_t jj) {
    int j = static_cast<int>(jj);
    for (int i = 0; i < g.nx; ++i) {
      const std::size_t k = g.index(i, j);
      M2 q = sym_at(d.q, k), qi = q.inverse(), th = sym_at(d.theta, k);
      V2 a(d.ax[k], d.ay[k]);
      const double F = d.F[k];
      r2.add(std::abs(a.dot(qi * a) - epsilon - F * F));
      if (st.inside(i, j, 1)) {
        double da = st.d(d.ay, 0, i, j) - st.d(d.ax, 1, i, j);
        r1.add(std::abs(da - F * std::sqrt(q.determinant())));
        const Christoffel& G = geo.gamma[k];
        for (int b = 0; b < 2; ++b) {
          double div = 0;
          for (int a1 = 0; a1 < 2; ++a1)
            for (int c = 0; c < 2; ++c) {
              double cov = st.d(component(d.theta, a1, b), c, i, j);
              for (int l = 0; l < 2; ++l) cov -= G[l][c][a1] * th(l, b) + G[l][c][b] * th(a1, l);
              div += qi(a1, c) * cov;
            }
          r4.add(std::abs(st.d(tr, b, i, j) + div - kappa * F * a[b]));
        }
      }
      if (st.inside(i, j, 2)) {
        double R = (qi * geo.ricci[k]).trace();
        double th2 = (qi * th * qi * th).trace();
        r3.add(std::abs(R - th2 + tr[k] * tr[k] + cc - 2 * kappa * F * F));
      }
    }
  });
  return ConstraintResiduals{r1.value(), r2.value(), r3.value(), r4.value()};
}

EvolutionResiduals evolution_residuals(const SurfaceSequence& s, int epsilon, double lambda2, double kappa,
                                       unsigned threads) {
  if (s.slices.size() < 3) throw DegenerateParameters("evolution residuals need at least three slices");
  if (s.dt <= 0) throw DegenerateParameters("time step must be positive");
  const Grid2D& g = s.slices.front().grid;
  for (const auto& sl : s.slices) {
    sl.validate();
    if (sl.grid.nx != g.nx || sl.grid.ny != g.ny) throw DegenerateParameters("slices must share the grid");
  }
  Stencil st(g);
  MaxAccumulator flow, ric;
  for (std::size_t t = 1; t + 1 < s.slices.size(); ++t) {
    const SurfaceData& d = s.slices[t];
    const SurfaceData& prev = s.slices[t - 1];
    const SurfaceData& next = s.slices[t + 1];
    Geometry geo = geometry(d, st, threads);
    parallel_for(g.ny, threads, [&](std::size_t jj) {
      int j = static_cast<int>(jj);
      for (int i = 0; i < g.nx; ++i) {
        if (!st.inside(i, j, 1)) continue;
        const std::size_t k = g.index(i, j);
        M2 q = sym_at(d.q, k), qi = q.inverse(), th = sym_at(d.theta, k);
        V2 a(d.ax[k], d.ay[k]);
        V2 da((next.ax[k] - prev.ax[k]) / (2 * s.dt), (next.ay[k] - prev.ay[k]) / (2 * s.dt));
        const double beta = d.beta[k];
        V2 up = qi * a;
        V2 star = std::sqrt(q.determinant()) * V2(-up[1], up[0]);
        for (int b = 0; b < 2; ++b) {
          double v = star[b] + lapse_weighted_derivative(d, st, b, i, j) / beta - da[b] / beta;
          flow.add(std::abs(v));
        }
        if (!st.inside(i, j, 2)) continue;
        M2 thdot = (sym_at(next.theta, k) - sym_at(prev.theta, k)) / (2 * s.dt);
        const Christoffel& G = geo.gamma[k];
        M2 hess;
        for (int a1 = 0; a1 < 2; ++a1)
          for (int b = 0; b < 2; ++b) {
            double h = st.dd(d.beta, a1, b, i, j);
            for (int c = 0; c < 2; ++c) h -= G[c][a1][b] * st.d(d.beta, c, i, j);
            hess(a1, b) = h;
          }
        double tr = (qi * th).trace();
        M2 e = geo.ricci[k] + tr * th - 2 * th * qi * th - (thdot + hess) / beta - kappa * a * a.transpose() +
               0.5 * (lambda2 + kappa * epsilon) * q;
        ric.add(e.cwiseAbs().maxCoeff());
      }
    });
  }
  return EvolutionResiduals{flow.value(), ric.value()};
}

EpsilonEstimate recover_epsilon(const SurfaceData& d) {
  d.validate();
  std::vector<double> v(d.grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    M2 qi = sym_at(d.q, k).inverse();
    V2 a(d.ax[k], d.ay[k]);
    v[k] = a.dot(qi * a) - d.F[k] * d.F[k];
  }
  EpsilonEstimate e;
  for (double x : v) e.mean += x;
  e.mean /= static_cast<double>(v.size());
  for (double x : v) e.spread = std::max(e.spread, std::abs(x - e.mean));
  return e;
}

std::vector<double> scalar_curvature(const SurfaceData& d) {
  d.validate();
  Stencil st(d.grid);
  Geometry geo = geometry(d, st, 1);
  std::vector<double> R(d.grid.size(), 0.0);
  for (int j = 0; j < d.grid.ny; ++j)
    for (int i = 0; i < d.grid.nx; ++i)
      if (st.inside(i, j, 2)) {
        std::size_t k = d.grid.index(i, j);
        R[k] = (sym_at(d.q, k).inverse() * geo.ricci[k]).trace();
      }
  return R;
}

Grid2D periodic_box(int nx, int ny, double lx, double ly) {
  if (nx < 3 || ny < 3) throw DegenerateParameters("grids need at least 3 nodes per axis");
  Grid2D g;
  g.nx = nx;
  g.ny = ny;
  g.hx = lx / nx;
  g.hy = ly / ny;
  return g;
}

SurfaceData flat_paracontact_slice(const Grid2D& grid, double t, double l1, double l2) {
  const double e2u = l1 * l1 + l2 * l2;
  if (e2u == 0) throw DegenerateParameters("l1² + l2² must be nonzero");
  const std::size_t n = grid.size();
  SurfaceData d;
  d.grid = grid;
  d.q = SymField::constant(n, e2u, 0, e2u);
  d.theta = SymField::constant(n, 0, 0, 0);
  d.F.assign(n, 0.0);
  d.beta.assign(n, 1.0);
  d.ax.assign(n, l2 * std::cos(t) - l1 * std::sin(t));
  d.ay.assign(n, l1 * std::cos(t) + l2 * std::sin(t));
  return d;
}

SurfaceSequence example_flat_paracontact(const Grid2D& grid, const std::vector<double>& times, double l1,
                                         double l2) {
  if (times.size() < 2) throw DegenerateParameters("a sequence needs at least two times");
  SurfaceSequence s;
  s.dt = times[1] - times[0];
  for (std::size_t k = 1; k < times.size(); ++k)
    if (std::abs((times[k] - times[k - 1]) - s.dt) > 1e-12 * std::max(1.0, std::abs(s.dt)))
      throw DegenerateParameters("times must be uniformly spaced");
  for (double t : times) s.slices.push_back(flat_paracontact_slice(grid, t, l1, l2));
  return s;
}

SurfaceData example_isothermal(const Grid2D& grid, double F0, double omega) {
  if (omega == 0) throw DegenerateParameters("conformal factor must be nonzero");
  const std::size_t n = grid.size();
  const double w2 = omega * omega;
  SurfaceData d;
  d.grid = grid;
  d.q = SymField::constant(n, w2, 0, w2);
  d.theta = SymField::constant(n, 0, 0, 0);
  d.beta.assign(n, 1.0);
  d.ax.assign(n, 0.0);
  d.ay.resize(n);
  d.F.resize(n);
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      std::size_t k = grid.index(i, j);
      d.ay[k] = std::exp(F0 * grid.x(i));
      d.F[k] = F0 * d.ay[k] / w2;
    }
  return d;
}

SurfaceData example_null_isothermal(const Grid2D& grid, double F0) {
  if (F0 == 0) throw DegenerateParameters("the null isothermal metric F0²(dx² + dy²) needs F0 ≠ 0");
  Grid2D g = grid;
  g.periodic_x = false;
  return example_isothermal(g, F0, F0);
}

SurfaceData perturb_theta(SurfaceData d, double amplitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  for (std::size_t k = 0; k < d.grid.size(); ++k) {
    d.theta.xx[k] += u(rng);
    d.theta.xy[k] += u(rng);
    d.theta.yy[k] += u(rng);
  }
  return d;
}

}  // namespace lieframe
