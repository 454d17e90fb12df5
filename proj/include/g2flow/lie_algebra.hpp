#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "g2flow/forms.hpp"

namespace g2flow {

struct InvalidAlgebra : std::runtime_error {
  explicit InvalidAlgebra(const std::string& what) : std::runtime_error(what) {}
};

// Structure constants of a 7-dimensional Lie algebra on the fixed frame:
// [e_i, e_j] = c^k_{ij} e_k, with c(k,i,j) antisymmetric in (i,j).
struct LieAlgebraData {
  Tensor3 c;  // c(k,i,j) = c^k_{ij}
  std::string name;
  bool unimodular = true;       // c^k_{ik} = 0 for all i
  double jacobi_residual = 0.0; // max over (n,i,j,k) of the cyclic sum

  /// Validating constructor; throws InvalidAlgebra when the Jacobi identity
  /// fails beyond 1e-12 or antisymmetry is violated.
  static LieAlgebraData create(const Tensor3& c, std::string name);

  /// Same as create() but never throws; used to probe near-algebras.
  static LieAlgebraData create_unchecked(const Tensor3& c, std::string name);

  /// Build from 1-based quadruples (i, j, k, value) meaning [e_i,e_j] has
  /// coefficient `value` on e_k; antisymmetry in (i,j) is completed.
  static LieAlgebraData from_quadruples(
      const std::vector<std::tuple<int, int, int, double>>& quads, std::string name);

  std::vector<std::tuple<int, int, int, double>> to_quadruples() const;

  bool is_abelian(double tol = 0.0) const { return c.max_abs() <= tol; }
};

/// Max residual of the Jacobi identity cyclic sum.
double jacobi_residual(const Tensor3& c);

/// Chevalley-Eilenberg differential on invariant forms:
/// (dw)(X_0..X_k) = sum_{i<j} (-1)^{i+j} w([X_i,X_j], X_0..^i..^j..X_k).
/// Satisfies d.d = 0 exactly when Jacobi holds.
AltForm ce_differential(const AltForm& w, const LieAlgebraData& alg);

}  // namespace g2flow
