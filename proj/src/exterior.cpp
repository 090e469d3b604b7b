#include "lieframe/exterior.hpp"

#include <algorithm>
#include <cmath>

#include "lieframe/errors.hpp"

namespace lieframe {

namespace {

constexpr int kMaxDim = 8;

struct TupleTables {
  std::vector<std::vector<int>> tuples[kMaxDim + 1][kMaxDim + 1];
  std::vector<int> index_of_mask[kMaxDim + 1];

  TupleTables() {
    for (int n = 0; n <= kMaxDim; ++n) {
      index_of_mask[n].assign(1u << n, -1);
      for (int k = 0; k <= n; ++k) {
        std::vector<int> t(k);
        for (int i = 0; i < k; ++i) t[i] = i;
        while (true) {
          int mask = 0;
          for (int x : t) mask |= 1 << x;
          index_of_mask[n][mask] = static_cast<int>(tuples[n][k].size());
          tuples[n][k].push_back(t);
          int i = k - 1;
          while (i >= 0 && t[i] == n - k + i) --i;
          if (i < 0) break;
          ++t[i];
          for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
        }
      }
    }
  }
};

const TupleTables& tables() {
  static const TupleTables t;
  return t;
}

int mask_of(const std::vector<int>& t) {
  int m = 0;
  for (int x : t) m |= 1 << x;
  return m;
}

}  // namespace

FrameMetric FrameMetric::lorentzian(int dim) {
  FrameMetric m{std::vector<int>(dim, 1)};
  m.signs[0] = -1;
  return m;
}

FrameMetric FrameMetric::riemannian(int dim) { return FrameMetric{std::vector<int>(dim, 1)}; }

FrameMetric FrameMetric::product(const FrameMetric& a, const FrameMetric& b) {
  FrameMetric m{a.signs};
  m.signs.insert(m.signs.end(), b.signs.begin(), b.signs.end());
  return m;
}

int FrameMetric::s_g() const {
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; }) ? 1 : -1;
}

double FrameMetric::inner(const Vec& u, const Vec& v) const {
  double s = 0;
  for (int i = 0; i < dim(); ++i) s += signs[i] * u[i] * v[i];
  return s;
}

Mat FrameMetric::matrix() const {
  Mat g = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) g(i, i) = signs[i];
  return g;
}

const std::vector<std::vector<int>>& index_tuples(int n, int k) {
  return tables().tuples[n][k];
}

int tuple_index(int n, const std::vector<int>& t) { return tables().index_of_mask[n][mask_of(t)]; }

int permutation_sign(const std::vector<int>& indices) {
  std::vector<int> p = indices;
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

Form::Form(int degree, int dim) : degree_(degree), dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw DegreeOverflow("unsupported dimension");
  if (degree < 0 || degree > dim) throw DegreeOverflow("degree exceeds dimension");
  comps_.assign(index_tuples(dim, degree).size(), 0.0);
}

Form Form::one_form(const Vec& c) {
  Form f(1, static_cast<int>(c.size()));
  for (int i = 0; i < c.size(); ++i) f.comps_[i] = c[i];
  return f;
}

Form Form::basis(int dim, std::initializer_list<int> indices, double coeff) {
  std::vector<int> idx(indices);
  Form f(static_cast<int>(idx.size()), dim);
  int s = permutation_sign(idx);
  if (s == 0) return f;
  std::sort(idx.begin(), idx.end());
  f.at(idx) = s * coeff;
  return f;
}

Form Form::volume(int dim, int orientation) {
  Form f(dim, dim);
  f.comps_[0] = orientation;
  return f;
}

double& Form::at(const std::vector<int>& t) { return comps_[tuple_index(dim_, t)]; }
double Form::at(const std::vector<int>& t) const { return comps_[tuple_index(dim_, t)]; }

double Form::eval(const std::vector<int>& indices) const {
  int s = permutation_sign(indices);
  if (s == 0) return 0.0;
  return s * comps_[tables().index_of_mask[dim_][mask_of(indices)]];
}

Vec Form::to_vector() const {
  Vec v(static_cast<int>(comps_.size()));
  for (std::size_t i = 0; i < comps_.size(); ++i) v[static_cast<int>(i)] = comps_[i];
  return v;
}

double Form::max_abs() const {
  double m = 0;
  for (double x : comps_) m = std::max(m, std::abs(x));
  return m;
}

Form& Form::operator+=(const Form& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw DegreeMismatch("adding forms of different type");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw DegreeMismatch("subtracting forms of different type");
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

Form& Form::operator*=(double s) {
  for (double& x : comps_) x *= s;
  return *this;
}

Form wedge(const Form& w, const Form& e) {
  if (w.dim() != e.dim()) throw DegreeMismatch("wedge of forms on different spaces");
  if (w.degree() + e.degree() > w.dim()) throw DegreeOverflow("wedge degree exceeds dimension");
  Form out(w.degree() + e.degree(), w.dim());
  const auto& ti = w.tuples();
  const auto& tj = e.tuples();
  for (std::size_t a = 0; a < ti.size(); ++a) {
    if (w[a] == 0.0) continue;
    for (std::size_t b = 0; b < tj.size(); ++b) {
      if (e[b] == 0.0) continue;
      std::vector<int> joined = ti[a];
      joined.insert(joined.end(), tj[b].begin(), tj[b].end());
      int s = permutation_sign(joined);
      if (s == 0) continue;
      std::sort(joined.begin(), joined.end());
      out.at(joined) += s * w[a] * e[b];
    }
  }
  return out;
}

Form hodge(const Form& w, const FrameMetric& m, int orientation) {
  const int n = w.dim();
  Form out(n - w.degree(), n);
  const auto& tuples = w.tuples();
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    if (w[a] == 0.0) continue;
    const auto& I = tuples[a];
    std::vector<int> J;
    for (int i = 0; i < n; ++i)
      if (std::find(I.begin(), I.end(), i) == I.end()) J.push_back(i);
    double eta = 1;
    for (int i : I) eta *= m.eta(i);
    std::vector<int> IJ = I;
    IJ.insert(IJ.end(), J.begin(), J.end());
    out.at(J) += orientation * eta * permutation_sign(IJ) * w[a];
  }
  return out;
}

Form mc_differential(const Form& w, const StructureConstants& sc) {
  const int n = w.dim(), p = w.degree();
  if (p + 1 > n) return Form(n, n);
  Form out(p + 1, n);
  const auto& targets = out.tuples();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const auto& K = targets[t];
    double sum = 0;
    for (int a = 0; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) {
        std::vector<int> rest;
        for (int x = 0; x <= p; ++x)
          if (x != a && x != b) rest.push_back(K[x]);
        double term = 0;
        for (int mm = 0; mm < n; ++mm) {
          double c = sc(K[a], K[b], mm);
          if (c == 0.0) continue;
          std::vector<int> args{mm};
          args.insert(args.end(), rest.begin(), rest.end());
          term += c * w.eval(args);
        }
        sum += ((a + b) % 2 == 0 ? 1.0 : -1.0) * term;
      }
    out[t] = sum;
  }
  return out;
}

double pairing_sorted(const Form& w, const Form& e, const FrameMetric& m) {
  if (w.degree() != e.degree() || w.dim() != e.dim()) throw DegreeMismatch("pairing forms of different degree");
  const auto& tuples = w.tuples();
  double s = 0;
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    double eta = 1;
    for (int i : tuples[a]) eta *= m.eta(i);
    s += w[a] * e[a] * eta;
  }
  return s;
}

double pairing_full(const Form& w, const Form& e, const FrameMetric& m) {
  double fact = 1;
  for (int k = 2; k <= w.degree(); ++k) fact *= k;
  return fact * pairing_sorted(w, e, m);
}

Vec sharp(const Form& alpha, const FrameMetric& m) {
  if (alpha.degree() != 1) throw DegreeMismatch("sharp expects a one-form");
  Vec v(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i) v[i] = m.eta(i) * alpha[i];
  return v;
}

Form flat(const Vec& v, const FrameMetric& m) {
  Form f(1, static_cast<int>(v.size()));
  for (int i = 0; i < v.size(); ++i) f[i] = m.eta(i) * v[i];
  return f;
}

Form interior_product(const Vec& v, const Form& w) {
  if (w.degree() < 1) throw DegreeMismatch("interior product needs degree ≥ 1");
  const int n = w.dim();
  Form out(w.degree() - 1, n);
  const auto& targets = out.tuples();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    double s = 0;
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0.0) continue;
      std::vector<int> args{i};
      args.insert(args.end(), targets[t].begin(), targets[t].end());
      s += v[i] * w.eval(args);
    }
    out[t] = s;
  }
  return out;
}

}  // namespace lieframe
