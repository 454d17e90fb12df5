#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace g2flow {

inline constexpr int kDim = 7;

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

struct DegreeError : std::runtime_error {
  explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

struct MetricError : std::runtime_error {
  explicit MetricError(const std::string& what) : std::runtime_error(what) {}
};

/// C(7,k) for 0 <= k <= 7.
int binom7(int k);

/// Sorted index tuple (0-based) of the r-th lexicographic k-combination of {0..6}.
std::span<const int> combo(int degree, int rank);

/// Rank of a sorted k-combination; the inverse of combo().
int combo_rank(std::span<const int> sorted_indices);

// Antisymmetric degree-k coefficient tensor on the fixed 7-frame, stored packed
// over lexicographic k-combinations.  Components are frame evaluations without
// factorial weights: (e^1 ^ e^2)(e_1, e_2) = 1.
class AltForm {
 public:
  AltForm() { coeffs_.fill(0.0); }
  explicit AltForm(int degree);

  /// Basis monomial e^{i1...ik} from 0-based indices, e.g. basis({0,1,2}).
  static AltForm basis(std::initializer_list<int> indices);

  int degree() const { return degree_; }
  /// Number of packed coefficients, C(7,degree).
  int size() const { return binom7(degree_); }

  double operator[](int rank) const { return coeffs_[static_cast<size_t>(rank)]; }
  double& operator[](int rank) { return coeffs_[static_cast<size_t>(rank)]; }

  /// Fully antisymmetric component for an arbitrary index tuple (0-based).
  /// Repeated indices give 0; unsorted tuples pick up the permutation sign.
  double component(std::span<const int> indices) const;
  void set_component(std::span<const int> indices, double value);

  AltForm& operator+=(const AltForm& other);
  AltForm& operator-=(const AltForm& other);
  AltForm& operator*=(double s);

  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  friend AltForm operator*(double s, AltForm a) { return a *= s; }
  friend AltForm operator*(AltForm a, double s) { return a *= s; }
  friend AltForm operator-(AltForm a) { return a *= -1.0; }

  double max_abs() const;
  bool is_zero(double tol = 0.0) const { return max_abs() <= tol; }

 private:
  int degree_ = 0;
  std::array<double, 35> coeffs_{};
};

/// a ^ b.  Throws DegreeError if deg(a)+deg(b) > 7.
AltForm wedge(const AltForm& a, const AltForm& b);

/// u -| w, contraction of the (raised) vector u into the first slot.
/// Throws DegreeError on degree-0 input.
AltForm interior(const Vec7& u, const AltForm& w);

// Symmetric positive-definite 7x7 metric with cached inverse, volume density
// sqrt(det g), and packed index-raising tables for every form degree.
class Metric7 {
 public:
  static Metric7 identity();
  /// Throws MetricError unless g is symmetric positive definite.
  static Metric7 from_matrix(const Mat7& g);

  const Mat7& matrix() const { return g_; }
  const Mat7& inverse() const { return g_inv_; }
  double volume_density() const { return volume_density_; }

  /// Packed raising operator on degree-k forms: (raise(k) * w_packed)[J] =
  /// w^{J} = det(g^{-1}[J|I]) w_I summed over combinations I.
  const Eigen::MatrixXd& raise_table(int degree) const;

 private:
  Metric7() = default;
  Mat7 g_;
  Mat7 g_inv_;
  double volume_density_ = 1.0;
  std::array<Eigen::MatrixXd, 8> raise_tables_;
};

/// <a,b>_g with the normalization that makes decomposable orthonormal-frame
/// monomials e^{i1...ik} orthonormal.  Throws DegreeError on degree mismatch.
double form_inner(const AltForm& a, const AltForm& b, const Metric7& g);

/// Hodge star for the given metric and orientation (+1: e^{1...7} positive).
/// Satisfies a ^ *b = <a,b> vol and ** = id in dimension 7.
AltForm hodge_star(const AltForm& w, const Metric7& g, int orientation = +1);

/// The oriented volume form, orientation * sqrt(det g) * e^{1...7}.
AltForm volume_form(const Metric7& g, int orientation = +1);

// Dense rank-3 / rank-4 tensors on the 7-frame (no symmetry assumed).
struct Tensor3 {
  std::array<double, 343> v{};
  double& operator()(int a, int b, int c) { return v[static_cast<size_t>((a * 7 + b) * 7 + c)]; }
  double operator()(int a, int b, int c) const { return v[static_cast<size_t>((a * 7 + b) * 7 + c)]; }
  double max_abs() const;
};

struct Tensor4 {
  std::array<double, 2401> v{};
  double& operator()(int a, int b, int c, int d) {
    return v[static_cast<size_t>(((a * 7 + b) * 7 + c) * 7 + d)];
  }
  double operator()(int a, int b, int c, int d) const {
    return v[static_cast<size_t>(((a * 7 + b) * 7 + c) * 7 + d)];
  }
  double max_abs() const;
};

/// Dense expansion of a degree-3 form; inverse of dense3_to_form.
Tensor3 form_to_dense3(const AltForm& w);
AltForm dense3_to_form(const Tensor3& t);
Tensor4 form_to_dense4(const AltForm& w);
AltForm dense4_to_form(const Tensor4& t);

/// Musical isomorphisms on 2-tensors: raise/lower one slot with g.
Mat7 raise_first(const Mat7& t, const Metric7& g);   // T^a_b  = g^{am} T_{mb}
Mat7 raise_second(const Mat7& t, const Metric7& g);  // T_a^b  = T_{am} g^{mb}
Mat7 lower_first(const Mat7& t, const Metric7& g);
Mat7 lower_second(const Mat7& t, const Metric7& g);

/// Frobenius norm of a 2-tensor with both indices raised by g.
double tensor_norm2(const Mat7& t, const Metric7& g);
double tensor3_norm2(const Tensor3& t, const Metric7& g);
double tensor4_norm2(const Tensor4& t, const Metric7& g);

}  // namespace g2flow
