#pragma once

#include <initializer_list>
#include <vector>

#include "lieframe/liealg.hpp"

namespace lieframe {

// Diagonal frame metric g(e_i, e_j) = signs[i] δ_ij.
struct FrameMetric {
  std::vector<int> signs;

  static FrameMetric lorentzian(int dim);
  static FrameMetric riemannian(int dim);
  static FrameMetric product(const FrameMetric& a, const FrameMetric& b);

  int dim() const { return static_cast<int>(signs.size()); }
  int s_g() const;
  double eta(int i) const { return signs[i]; }
  double inner(const Vec& u, const Vec& v) const;
  Mat matrix() const;
};

// Strictly increasing index tuples of length k in [0, n), in lexicographic order.
const std::vector<std::vector<int>>& index_tuples(int n, int k);
int tuple_index(int n, const std::vector<int>& sorted_tuple);

class Form {
 public:
  Form() = default;
  Form(int degree, int dim);

  static Form one_form(const Vec& components);
  static Form basis(int dim, std::initializer_list<int> indices, double coeff = 1.0);
  static Form volume(int dim, int orientation = 1);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  std::size_t size() const { return comps_.size(); }

  double& operator[](std::size_t i) { return comps_[i]; }
  double operator[](std::size_t i) const { return comps_[i]; }
  double& at(const std::vector<int>& sorted_tuple);
  double at(const std::vector<int>& sorted_tuple) const;
  // ω(e_{i1}, ..., e_{ik}) for arbitrary (possibly unsorted or repeated) indices.
  double eval(const std::vector<int>& indices) const;

  const std::vector<std::vector<int>>& tuples() const { return index_tuples(dim_, degree_); }
  Vec to_vector() const;
  double max_abs() const;

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(double s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(double s, Form a) { return a *= s; }
  friend Form operator-(Form a) { return a *= -1.0; }

 private:
  int degree_ = 0;
  int dim_ = 0;
  std::vector<double> comps_;
};

Form wedge(const Form& w, const Form& e);
Form hodge(const Form& w, const FrameMetric& m, int orientation);
Form mc_differential(const Form& w, const StructureConstants& sc);
// Sum over all index tuples; k! times the sorted-tuple pairing.
double pairing_full(const Form& w, const Form& e, const FrameMetric& m);
double pairing_sorted(const Form& w, const Form& e, const FrameMetric& m);
Vec sharp(const Form& alpha, const FrameMetric& m);
Form flat(const Vec& v, const FrameMetric& m);
Form interior_product(const Vec& v, const Form& w);

// Sign of the permutation that sorts `indices`; 0 if any index repeats.
int permutation_sign(const std::vector<int>& indices);

}  // namespace lieframe
