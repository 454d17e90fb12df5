#pragma once

#include <optional>

#include "g2flow/forms.hpp"

namespace g2flow {

struct NotPositive : std::runtime_error {
  explicit NotPositive(const std::string& what) : std::runtime_error(what) {}
};

/// The reference positive 3-form on the 7-frame,
/// e^{123} + e^{145} + e^{167} + e^{246} - e^{257} - e^{347} - e^{356}.
/// Every contraction constant used by the projections is derived from it.
const AltForm& standard_phi();

/// Its dual 4-form for the identity metric and positive orientation.
const AltForm& standard_psi();

struct MetricFromPhi {
  Metric7 g = Metric7::identity();
  AltForm vol{7};    // oriented volume form
  int orientation = 1;  // sign of det B against e^{1...7}
};

/// Metric induced by a 3-form via the bilinear form
/// B(u,v) vol0 = (u -| phi) ^ (v -| phi) ^ phi, normalized so that the
/// standard form maps to the identity metric.  Returns nullopt when B is not
/// definite (phi is not a positive 3-form).
std::optional<MetricFromPhi> try_metric_from_phi(const AltForm& phi);

/// Throwing variant of try_metric_from_phi.
MetricFromPhi metric_from_phi(const AltForm& phi);

// A positive 3-form with its derived metric, orientation, dual 4-form, and the
// contraction constants the projections need.  Immutable once constructed.
class G2Structure {
 public:
  /// Throws NotPositive when phi is not a positive 3-form.
  static G2Structure from_phi(const AltForm& phi);

  const AltForm& phi() const { return phi_; }
  const AltForm& psi() const { return psi_; }
  const AltForm& vol() const { return vol_; }
  const Metric7& metric() const { return g_; }
  int orientation() const { return orientation_; }

  const Tensor3& phi_dense() const { return phi_dense_; }
  const Tensor4& psi_dense() const { return psi_dense_; }

  AltForm star(const AltForm& w) const { return hodge_star(w, g_, orientation_); }
  double inner(const AltForm& a, const AltForm& b) const { return form_inner(a, b, g_); }

  // Derived contraction constants (computed from this structure, equal for all
  // positive 3-forms; 6, 24, 3, 4 for the standard form):
  double c_phiphi() const { return c_phiphi_; }    // phi_{amn} phi_b^{mn} = c g_{ab}
  double c_psipsi() const { return c_psipsi_; }    // psi_{amnp} psi_b^{mnp} = c g_{ab}
  double c_v7_phi() const { return c_v7_phi_; }    // <u-|phi, v-|phi>   = c g(u,v)
  double c_v7_psi() const { return c_v7_psi_; }    // <u-|psi, v-|psi>   = c g(u,v)
  double kappa27() const { return kappa27_; }      // traceless response of the 27-extraction

 private:
  G2Structure() = default;

  AltForm phi_{3}, psi_{4}, vol_{7};
  Metric7 g_ = Metric7::identity();
  int orientation_ = 1;
  Tensor3 phi_dense_;
  Tensor4 psi_dense_;
  double c_phiphi_ = 0, c_psipsi_ = 0, c_v7_phi_ = 0, c_v7_psi_ = 0, kappa27_ = 0;
};

struct Decomp2 {
  Vec7 x7;      // b = x7 -| phi + b14
  AltForm b14;  // component annihilated by pairing against u -| phi
};

struct Decomp3 {
  double f;   // coefficient on phi (3-forms) / psi (4-forms)
  Vec7 x;     // vector of the 7-dimensional component
  Mat7 h27;   // traceless symmetric part
};

/// Split a 2-form as x -| phi plus a 14-component.
Decomp2 project_2form(const AltForm& b, const G2Structure& s);

/// Split a 3-form as f phi + x -| psi + i_phi(h27).
Decomp3 project_3form(const AltForm& w, const G2Structure& s);

/// Split a 4-form as f psi + x ^ phi + *i_phi(h27).
Decomp3 project_4form(const AltForm& c, const G2Structure& s);

/// i_phi(h)_{abc} = h^d_{[a} phi_{bc]d}; maps g to phi.
AltForm i_phi(const Mat7& h, const G2Structure& s);

/// i_psi(h)_{abcd} = -h^e_{[a} psi_{bcd]e}; satisfies
/// 4 i_psi(h) = -3 * i_phi(h) + (Tr h) psi.
AltForm i_psi(const Mat7& h, const G2Structure& s);

}  // namespace g2flow
