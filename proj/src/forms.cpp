#include "g2flow/forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

namespace g2flow {

namespace {

constexpr std::array<int, 8> kBinom = {1, 7, 21, 35, 35, 21, 7, 1};

struct ComboTables {
  // combos[k] is the flat list of lexicographic k-combinations of {0..6}.
  std::array<std::vector<int>, 8> combos;
  // rank_of_mask[mask] = packed rank of the combination encoded by the bitmask.
  std::array<int, 128> rank_of_mask{};

  ComboTables() {
    for (int k = 0; k <= 7; ++k) {
      std::vector<int> cur(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
      int rank = 0;
      while (true) {
        int mask = 0;
        for (int x : cur) mask |= 1 << x;
        rank_of_mask[static_cast<size_t>(mask)] = rank;
        combos[static_cast<size_t>(k)].insert(combos[static_cast<size_t>(k)].end(), cur.begin(),
                                              cur.end());
        ++rank;
        // next lexicographic combination
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == 7 - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
          cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
      }
    }
  }
};

const ComboTables& tables() {
  static const ComboTables t;
  return t;
}

// Sorts idx in place, returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::span<int> idx) {
  int sign = 1;
  const int n = static_cast<int>(idx.size());
  for (int i = 1; i < n; ++i) {
    int j = i;
    while (j > 0 && idx[static_cast<size_t>(j - 1)] > idx[static_cast<size_t>(j)]) {
      std::swap(idx[static_cast<size_t>(j - 1)], idx[static_cast<size_t>(j)]);
      sign = -sign;
      --j;
    }
    if (j > 0 && idx[static_cast<size_t>(j - 1)] == idx[static_cast<size_t>(j)]) return 0;
  }
  return sign;
}

// Sign of the shuffle merging two disjoint sorted tuples a, b into one sorted
// tuple: parity of the number of pairs (x in a, y in b) with x > y.
int merge_sign(std::span<const int> a, std::span<const int> b) {
  int inv = 0;
  for (int x : a)
    for (int y : b)
      if (x > y) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

int binom7(int k) {
  if (k < 0 || k > 7) return 0;
  return kBinom[static_cast<size_t>(k)];
}

std::span<const int> combo(int degree, int rank) {
  const auto& flat = tables().combos[static_cast<size_t>(degree)];
  return {flat.data() + static_cast<size_t>(rank) * static_cast<size_t>(degree),
          static_cast<size_t>(degree)};
}

int combo_rank(std::span<const int> sorted_indices) {
  int mask = 0;
  for (int x : sorted_indices) mask |= 1 << x;
  return tables().rank_of_mask[static_cast<size_t>(mask)];
}

AltForm::AltForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 7) throw DegreeError("form degree must be in [0,7]");
  coeffs_.fill(0.0);
}

AltForm AltForm::basis(std::initializer_list<int> indices) {
  AltForm w(static_cast<int>(indices.size()));
  std::vector<int> idx(indices);
  int sign = sort_sign(idx);
  if (sign == 0) throw DegreeError("repeated index in basis monomial");
  w[combo_rank(idx)] = static_cast<double>(sign);
  return w;
}

double AltForm::component(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw DegreeError("component index count does not match degree");
  std::array<int, 7> buf;
  std::copy(indices.begin(), indices.end(), buf.begin());
  std::span<int> s(buf.data(), indices.size());
  int sign = sort_sign(s);
  if (sign == 0) return 0.0;
  return sign * coeffs_[static_cast<size_t>(combo_rank(s))];
}

void AltForm::set_component(std::span<const int> indices, double value) {
  if (static_cast<int>(indices.size()) != degree_)
    throw DegreeError("component index count does not match degree");
  std::array<int, 7> buf;
  std::copy(indices.begin(), indices.end(), buf.begin());
  std::span<int> s(buf.data(), indices.size());
  int sign = sort_sign(s);
  if (sign == 0) throw DegreeError("cannot set component with repeated index");
  coeffs_[static_cast<size_t>(combo_rank(s))] = sign * value;
}

AltForm& AltForm::operator+=(const AltForm& other) {
  if (degree_ != other.degree_) throw DegreeError("degree mismatch in form addition");
  for (int r = 0; r < size(); ++r) coeffs_[static_cast<size_t>(r)] += other.coeffs_[static_cast<size_t>(r)];
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& other) {
  if (degree_ != other.degree_) throw DegreeError("degree mismatch in form subtraction");
  for (int r = 0; r < size(); ++r) coeffs_[static_cast<size_t>(r)] -= other.coeffs_[static_cast<size_t>(r)];
  return *this;
}

AltForm& AltForm::operator*=(double s) {
  for (int r = 0; r < size(); ++r) coeffs_[static_cast<size_t>(r)] *= s;
  return *this;
}

double AltForm::max_abs() const {
  double m = 0.0;
  for (int r = 0; r < size(); ++r) m = std::max(m, std::abs(coeffs_[static_cast<size_t>(r)]));
  return m;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  const int ka = a.degree(), kb = b.degree();
  if (ka + kb > 7) throw DegreeError("wedge degree overflow");
  AltForm out(ka + kb);
  if (ka == 0) {
    out = b;
    out *= a[0];
    return out;
  }
  if (kb == 0) {
    out = a;
    out *= b[0];
    return out;
  }
  const int n_out = binom7(ka + kb);
  // For each output combination, sum over splits into a ka-subset and its
  // complement, with the shuffle sign.
  std::array<int, 7> ja{}, jb{};
  for (int r = 0; r < n_out; ++r) {
    auto idx = combo(ka + kb, r);
    double acc = 0.0;
    const int total = ka + kb;
    // enumerate ka-subsets of idx via bitmask over positions
    for (int mask = 0; mask < (1 << total); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != ka) continue;
      int na = 0, nb = 0;
      for (int p = 0; p < total; ++p) {
        if (mask & (1 << p))
          ja[static_cast<size_t>(na++)] = idx[static_cast<size_t>(p)];
        else
          jb[static_cast<size_t>(nb++)] = idx[static_cast<size_t>(p)];
      }
      std::span<const int> sa(ja.data(), static_cast<size_t>(ka));
      std::span<const int> sb(jb.data(), static_cast<size_t>(kb));
      const double ca = a[combo_rank(sa)];
      const double cb = b[combo_rank(sb)];
      if (ca == 0.0 || cb == 0.0) continue;
      acc += merge_sign(sa, sb) * ca * cb;
    }
    out[r] = acc;
  }
  return out;
}

AltForm interior(const Vec7& u, const AltForm& w) {
  const int k = w.degree();
  if (k == 0) throw DegreeError("interior product of a 0-form");
  AltForm out(k - 1);
  std::array<int, 7> buf{};
  for (int r = 0; r < binom7(k - 1); ++r) {
    auto rest = combo(k - 1, r);
    double acc = 0.0;
    for (int m = 0; m < 7; ++m) {
      if (u[m] == 0.0) continue;
      buf[0] = m;
      std::copy(rest.begin(), rest.end(), buf.begin() + 1);
      bool repeat = false;
      for (int p = 0; p < k - 1; ++p)
        if (rest[static_cast<size_t>(p)] == m) repeat = true;
      if (repeat) continue;
      acc += u[m] * w.component(std::span<const int>(buf.data(), static_cast<size_t>(k)));
    }
    out[r] = acc;
  }
  return out;
}

Metric7 Metric7::identity() { return from_matrix(Mat7::Identity()); }

Metric7 Metric7::from_matrix(const Mat7& g) {
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + g.cwiseAbs().maxCoeff()))
    throw MetricError("metric is not symmetric");
  Eigen::LLT<Mat7> llt(g);
  if (llt.info() != Eigen::Success) throw MetricError("metric is not positive definite");
  Metric7 m;
  m.g_ = 0.5 * (g + g.transpose());
  m.g_inv_ = llt.solve(Mat7::Identity());
  m.g_inv_ = 0.5 * (m.g_inv_ + m.g_inv_.transpose()).eval();
  m.volume_density_ = std::sqrt(m.g_.determinant());

  // raise_table(k)[J,I] = det of the k x k minor of g^{-1} with rows J, cols I
  for (int k = 0; k <= 7; ++k) {
    const int n = binom7(k);
    Eigen::MatrixXd tab(n, n);
    Eigen::MatrixXd minor(k, k);
    for (int rj = 0; rj < n; ++rj) {
      auto J = combo(k, rj);
      for (int ri = 0; ri < n; ++ri) {
        auto I = combo(k, ri);
        if (k == 0) {
          tab(rj, ri) = 1.0;
          continue;
        }
        for (int p = 0; p < k; ++p)
          for (int q = 0; q < k; ++q)
            minor(p, q) = m.g_inv_(J[static_cast<size_t>(p)], I[static_cast<size_t>(q)]);
        tab(rj, ri) = (k == 1) ? minor(0, 0) : minor.determinant();
      }
    }
    m.raise_tables_[static_cast<size_t>(k)] = std::move(tab);
  }
  return m;
}

const Eigen::MatrixXd& Metric7::raise_table(int degree) const {
  return raise_tables_[static_cast<size_t>(degree)];
}

double form_inner(const AltForm& a, const AltForm& b, const Metric7& g) {
  if (a.degree() != b.degree()) throw DegreeError("form_inner degree mismatch");
  const int n = a.size();
  const Eigen::MatrixXd& tab = g.raise_table(a.degree());
  double acc = 0.0;
  for (int rj = 0; rj < n; ++rj) {
    double br = 0.0;
    for (int ri = 0; ri < n; ++ri) br += tab(rj, ri) * b[ri];
    acc += a[rj] * br;
  }
  return acc;
}

AltForm hodge_star(const AltForm& w, const Metric7& g, int orientation) {
  const int k = w.degree();
  const int n = w.size();
  const Eigen::MatrixXd& tab = g.raise_table(k);
  const double scale = orientation * g.volume_density();
  AltForm out(7 - k);
  std::array<int, 7> comp{};
  for (int rj = 0; rj < n; ++rj) {
    // raised coefficient w^J
    double wj = 0.0;
    for (int ri = 0; ri < n; ++ri) wj += tab(rj, ri) * w[ri];
    if (wj == 0.0) continue;
    auto J = combo(k, rj);
    int mask = 0;
    for (int x : J) mask |= 1 << x;
    int nc = 0;
    for (int x = 0; x < 7; ++x)
      if (!(mask & (1 << x))) comp[static_cast<size_t>(nc++)] = x;
    std::span<const int> K(comp.data(), static_cast<size_t>(7 - k));
    out[combo_rank(K)] += scale * merge_sign(J, K) * wj;
  }
  return out;
}

AltForm volume_form(const Metric7& g, int orientation) {
  AltForm vol(7);
  vol[0] = orientation * g.volume_density();
  return vol;
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double Tensor4::max_abs() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Tensor3 form_to_dense3(const AltForm& w) {
  Tensor3 t;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        const std::array<int, 3> idx = {a, b, c};
        t(a, b, c) = w.component(idx);
      }
  return t;
}

AltForm dense3_to_form(const Tensor3& t) {
  AltForm w(3);
  for (int r = 0; r < binom7(3); ++r) {
    auto I = combo(3, r);
    w[r] = t(I[0], I[1], I[2]);
  }
  return w;
}

Tensor4 form_to_dense4(const AltForm& w) {
  Tensor4 t;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          const std::array<int, 4> idx = {a, b, c, d};
          t(a, b, c, d) = w.component(idx);
        }
  return t;
}

AltForm dense4_to_form(const Tensor4& t) {
  AltForm w(4);
  for (int r = 0; r < binom7(4); ++r) {
    auto I = combo(4, r);
    w[r] = t(I[0], I[1], I[2], I[3]);
  }
  return w;
}

Mat7 raise_first(const Mat7& t, const Metric7& g) { return g.inverse() * t; }
Mat7 raise_second(const Mat7& t, const Metric7& g) { return t * g.inverse(); }
Mat7 lower_first(const Mat7& t, const Metric7& g) { return g.matrix() * t; }
Mat7 lower_second(const Mat7& t, const Metric7& g) { return t * g.matrix(); }

double tensor_norm2(const Mat7& t, const Metric7& g) {
  const Mat7 raised = g.inverse() * t * g.inverse();
  return (t.array() * raised.array()).sum();
}

double tensor3_norm2(const Tensor3& t, const Metric7& g) {
  const Mat7& gi = g.inverse();
  double acc = 0.0;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        double raised = 0.0;
        for (int p = 0; p < 7; ++p)
          for (int q = 0; q < 7; ++q)
            for (int r = 0; r < 7; ++r) raised += gi(a, p) * gi(b, q) * gi(c, r) * t(p, q, r);
        acc += t(a, b, c) * raised;
      }
  return acc;
}

double tensor4_norm2(const Tensor4& t, const Metric7& g) {
  const Mat7& gi = g.inverse();
  // contract one index at a time to keep this O(7^5)
  Tensor4 t1, t2, t3, t4;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          double s = 0.0;
          for (int p = 0; p < 7; ++p) s += gi(a, p) * t(p, b, c, d);
          t1(a, b, c, d) = s;
        }
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          double s = 0.0;
          for (int p = 0; p < 7; ++p) s += gi(b, p) * t1(a, p, c, d);
          t2(a, b, c, d) = s;
        }
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          double s = 0.0;
          for (int p = 0; p < 7; ++p) s += gi(c, p) * t2(a, b, p, d);
          t3(a, b, c, d) = s;
        }
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          double s = 0.0;
          for (int p = 0; p < 7; ++p) s += gi(d, p) * t3(a, b, c, p);
          t4(a, b, c, d) = s;
        }
  double acc = 0.0;
  for (size_t i = 0; i < t.v.size(); ++i) acc += t.v[i] * t4.v[i];
  return acc;
}

}  // namespace g2flow
