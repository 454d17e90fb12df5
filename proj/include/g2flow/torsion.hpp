#pragma once

#include <string>
#include <vector>

#include "g2flow/connection.hpp"
#include "g2flow/g2.hpp"

namespace g2flow {

struct NotCoclosed : std::runtime_error {
  explicit NotCoclosed(const std::string& what) : std::runtime_error(what) {}
};

struct TorsionClassFlags {
  bool torsion_free = false;
  bool closed = false;
  bool coclosed = false;
  bool nearly_parallel = false;
  bool locally_conformally_parallel = false;
};

// Full torsion 2-tensor (stored fully lowered) with its irreducible components:
// T = 1/4 tau0 g - tau1 -| phi + 1/2 tau2 - 1/3 tau3.
struct TorsionData {
  Mat7 T = Mat7::Zero();
  double tau0 = 0.0;
  Vec7 tau1 = Vec7::Zero();  // 1-form components
  AltForm tau2{2};           // 14-component 2-form
  Mat7 tau3 = Mat7::Zero();  // traceless symmetric
  TorsionClassFlags flags;
};

/// Solves nabla_a phi_{bcd} = T_a^e psi_{ebcd} for T by contracting nabla phi
/// against psi and dividing by the derived psi-psi constant.
TorsionData full_torsion(const G2Structure& s, const ConnectionData& conn);

/// Irreducible components of a given torsion tensor; round-trips exactly.
TorsionData torsion_components(const Mat7& T, const G2Structure& s);

/// Class flags of a structure; a component counts as vanishing when its norm
/// is below 1e-10 * (1 + |T|).
TorsionClassFlags torsion_class(const G2Structure& s, const LieAlgebraData& alg);

// Named residuals, ordered; the report is data - nothing throws on large values.
struct ResidualReport {
  std::vector<std::pair<std::string, double>> residuals;
  void add(std::string name, double value) { residuals.emplace_back(std::move(name), value); }
  double max_residual() const;
};

/// Residuals of the first-order torsion/curvature identities of a general
/// invariant structure (defining relations, d phi / d psi reconstruction,
/// the curvature integrability condition and its traces).
ResidualReport identity_suite(const G2Structure& s, const TorsionData& t, const CurvatureData& cur,
                              const ConnectionData& conn, const LieAlgebraData& alg);

/// Extra identities valid for co-closed structures (symmetric torsion).
/// Throws NotCoclosed when |d psi| > 1e-10 * (1 + |psi|).
ResidualReport coclosed_identity_suite(const G2Structure& s, const TorsionData& t,
                                       const CurvatureData& cur, const ConnectionData& conn,
                                       const LieAlgebraData& alg);

// Contractions used across the identity suites.
Vec7 contract_2tensor_phi(const Mat7& t, const G2Structure& s);   // (T -| phi)_a = T^{mn} phi_{mna}
Mat7 contract_2tensor_psi(const Mat7& t, const G2Structure& s);   // (T -| psi)_{ab} = T^{mn} psi_{mnab}
double psi_bilinear(const Mat7& a, const Mat7& b, const G2Structure& s);  // psi_{abcd} a^{ab} b^{cd}

}  // namespace g2flow
