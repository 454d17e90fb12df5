#pragma once

#include "g2flow/forms.hpp"
#include "g2flow/lie_algebra.hpp"

namespace g2flow {

// Levi-Civita connection coefficients on the invariant frame,
// gamma(k,i,j) = Gamma^k_{ij} with nabla_{e_i} e_j = Gamma^k_{ij} e_k.
// Metric compatibility and Gamma^k_{ij} - Gamma^k_{ji} = c^k_{ij} hold by
// construction (Koszul formula).
struct ConnectionData {
  Tensor3 gamma;
};

struct CurvatureData {
  Tensor4 riem;   // riem(i,j,k,l) = g(R(e_i,e_j)e_k, e_l)
  Mat7 ric;       // ric(i,j) = g^{kl} riem(k,i,j,l)
  double scal = 0.0;
  Mat7 ric_star;  // riem_{mnpq} phi^{mn}_a phi^{pq}_b
};

/// Levi-Civita connection of an invariant metric.  Throws MetricError upstream
/// if g is invalid (Metric7 construction enforces SPD).
ConnectionData levi_civita(const Metric7& g, const LieAlgebraData& alg);

// Covariant derivatives of invariant tensors: purely algebraic in Gamma.
// First output index is the derivative direction.
Mat7 covd_covector(const Vec7& w_lower, const ConnectionData& conn);            // (a,b) = nabla_a w_b
Tensor3 covd_2tensor(const Mat7& t, const ConnectionData& conn);                // (a,b,c) = nabla_a t_{bc}
Tensor4 covd_dense3(const Tensor3& t, const ConnectionData& conn);              // (a,b,c,d) = nabla_a t_{bcd}
/// nabla of a degree-4 form, returned as nabla(a)(b,c,d,e) = one Tensor4 per a.
std::array<Tensor4, 7> covd_dense4(const Tensor4& t, const ConnectionData& conn);

/// Max-abs residual of nabla g (0 for a Levi-Civita connection).
double metric_compatibility_residual(const Metric7& g, const ConnectionData& conn);

/// div X = nabla_a X^a for an invariant vector field.
double div_vector(const Vec7& x, const ConnectionData& conn);

/// (div beta)_b = nabla^a beta_{ab}.
Vec7 div_tensor(const Mat7& beta, const ConnectionData& conn, const Metric7& g);

/// (curl X)^a = (nabla_b X_c) phi^{abc}.
Vec7 curl_vector(const Vec7& x_raised, const ConnectionData& conn, const Metric7& g,
                 const Tensor3& phi_dense);

/// (curl beta)_{ab} = (nabla_m beta_{na}) phi_b^{mn}; traceless when beta is symmetric.
Mat7 curl_tensor(const Mat7& beta, const ConnectionData& conn, const Metric7& g,
                 const Tensor3& phi_dense);

/// (alpha o beta)_{ab} = phi_{amn} phi_{bpq} alpha^{mp} beta^{nq}; commutative.
Mat7 circ_product(const Mat7& alpha, const Mat7& beta, const Metric7& g,
                  const Tensor3& phi_dense);

/// Curvature tensors of the connection; phi feeds the ric_star contraction.
CurvatureData curvature(const ConnectionData& conn, const LieAlgebraData& alg, const Metric7& g,
                        const AltForm& phi);

/// Hodge codifferential d* = (-1)^k * d * on degree-k invariant forms; adjoint
/// to d under the frame-volume pairing on unimodular algebras (both orientations
/// give the same operator, so none is passed).
AltForm hodge_codifferential(const AltForm& w, const Metric7& g, const LieAlgebraData& alg);

}  // namespace g2flow
