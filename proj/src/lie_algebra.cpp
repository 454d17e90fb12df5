#include "g2flow/lie_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace g2flow {

double jacobi_residual(const Tensor3& c) {
  double worst = 0.0;
  for (int n = 0; n < 7; ++n)
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          double s = 0.0;
          for (int m = 0; m < 7; ++m)
            s += c(m, i, j) * c(n, m, k) + c(m, j, k) * c(n, m, i) + c(m, k, i) * c(n, m, j);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

LieAlgebraData LieAlgebraData::create_unchecked(const Tensor3& c, std::string name) {
  LieAlgebraData alg;
  alg.c = c;
  alg.name = std::move(name);
  alg.jacobi_residual = g2flow::jacobi_residual(c);
  alg.unimodular = true;
  for (int i = 0; i < 7; ++i) {
    double tr = 0.0;
    for (int k = 0; k < 7; ++k) tr += c(k, i, k);
    if (std::abs(tr) > 1e-12) alg.unimodular = false;
  }
  return alg;
}

LieAlgebraData LieAlgebraData::create(const Tensor3& c, std::string name) {
  for (int k = 0; k < 7; ++k)
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (std::abs(c(k, i, j) + c(k, j, i)) > 1e-12)
          throw InvalidAlgebra("structure constants not antisymmetric in (i,j)");
  LieAlgebraData alg = create_unchecked(c, std::move(name));
  if (alg.jacobi_residual > 1e-12)
    throw InvalidAlgebra("Jacobi identity violated, residual " +
                         std::to_string(alg.jacobi_residual));
  return alg;
}

LieAlgebraData LieAlgebraData::from_quadruples(
    const std::vector<std::tuple<int, int, int, double>>& quads, std::string name) {
  Tensor3 c;
  for (const auto& [i, j, k, value] : quads) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
      throw InvalidAlgebra("quadruple index out of range 1..7");
    if (i == j) throw InvalidAlgebra("quadruple with i == j");
    c(k - 1, i - 1, j - 1) += value;
    c(k - 1, j - 1, i - 1) -= value;
  }
  return create(c, std::move(name));
}

std::vector<std::tuple<int, int, int, double>> LieAlgebraData::to_quadruples() const {
  std::vector<std::tuple<int, int, int, double>> out;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        if (c(k, i, j) != 0.0) out.emplace_back(i + 1, j + 1, k + 1, c(k, i, j));
  return out;
}

AltForm ce_differential(const AltForm& w, const LieAlgebraData& alg) {
  const int k = w.degree();
  if (k > 6) throw DegreeError("ce_differential needs degree <= 6");
  AltForm out(k + 1);
  std::array<int, 7> rest{};
  for (int r = 0; r < binom7(k + 1); ++r) {
    auto B = combo(k + 1, r);
    double acc = 0.0;
    for (int p = 0; p < k + 1; ++p) {
      for (int q = p + 1; q < k + 1; ++q) {
        // remaining indices, order preserved
        int n = 1;  // slot 0 reserved for the bracket index m
        for (int s = 0; s < k + 1; ++s)
          if (s != p && s != q) rest[static_cast<size_t>(n++)] = B[static_cast<size_t>(s)];
        const int sign = ((p + q) % 2 == 0) ? 1 : -1;
        for (int m = 0; m < 7; ++m) {
          const double cm = alg.c(m, B[static_cast<size_t>(p)], B[static_cast<size_t>(q)]);
          if (cm == 0.0) continue;
          rest[0] = m;
          acc += sign * cm *
                 w.component(std::span<const int>(rest.data(), static_cast<size_t>(k)));
        }
      }
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace g2flow
