#include "g2flow/torsion.hpp"

#include <algorithm>
#include <cmath>

namespace g2flow {

namespace {

Vec7 frame_vector(int a) {
  Vec7 u = Vec7::Zero();
  u[a] = 1.0;
  return u;
}

Mat7 sym(const Mat7& m) { return 0.5 * (m + m.transpose()); }
Mat7 skew(const Mat7& m) { return 0.5 * (m - m.transpose()); }

AltForm two_form_from_matrix(const Mat7& skew_matrix) {
  AltForm w(2);
  for (int r = 0; r < binom7(2); ++r) {
    auto I = combo(2, r);
    w[r] = skew_matrix(I[0], I[1]);
  }
  return w;
}

Mat7 matrix_from_two_form(const AltForm& w) {
  Mat7 m = Mat7::Zero();
  for (int r = 0; r < binom7(2); ++r) {
    auto I = combo(2, r);
    m(I[0], I[1]) = w[r];
    m(I[1], I[0]) = -w[r];
  }
  return m;
}

}  // namespace

double ResidualReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, value] : residuals) m = std::max(m, std::abs(value));
  return m;
}

Vec7 contract_2tensor_phi(const Mat7& t, const G2Structure& s) {
  const Mat7 tu = s.metric().inverse() * t * s.metric().inverse();  // T^{mn}
  const Tensor3& phi = s.phi_dense();
  Vec7 out = Vec7::Zero();
  for (int a = 0; a < 7; ++a) {
    double acc = 0.0;
    for (int m = 0; m < 7; ++m)
      for (int n = 0; n < 7; ++n) acc += tu(m, n) * phi(m, n, a);
    out[a] = acc;
  }
  return out;
}

Mat7 contract_2tensor_psi(const Mat7& t, const G2Structure& s) {
  const Mat7 tu = s.metric().inverse() * t * s.metric().inverse();
  const Tensor4& psi = s.psi_dense();
  Mat7 out = Mat7::Zero();
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      double acc = 0.0;
      for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) acc += tu(m, n) * psi(m, n, a, b);
      out(a, b) = acc;
    }
  return out;
}

double psi_bilinear(const Mat7& a, const Mat7& b, const G2Structure& s) {
  const Mat7 au = s.metric().inverse() * a * s.metric().inverse();
  const Mat7 bu = s.metric().inverse() * b * s.metric().inverse();
  const Tensor4& psi = s.psi_dense();
  double acc = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = 0; l < 7; ++l) acc += psi(i, j, k, l) * au(i, j) * bu(k, l);
  return acc;
}

TorsionData full_torsion(const G2Structure& s, const ConnectionData& conn) {
  const Tensor4 nphi = covd_dense3(s.phi_dense(), conn);
  const Mat7& gi = s.metric().inverse();
  const Tensor4& psi = s.psi_dense();

  // psi with the last three indices raised: psi_f^{bcd}
  Tensor4 psi_up3;
  for (int f = 0; f < 7; ++f)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d) {
          double acc = 0.0;
          for (int p = 0; p < 7; ++p)
            for (int q = 0; q < 7; ++q)
              for (int r = 0; r < 7; ++r)
                acc += gi(b, p) * gi(c, q) * gi(d, r) * psi(f, p, q, r);
          psi_up3(f, b, c, d) = acc;
        }

  Mat7 t_low = Mat7::Zero();
  for (int a = 0; a < 7; ++a)
    for (int f = 0; f < 7; ++f) {
      double acc = 0.0;
      for (int b = 0; b < 7; ++b)
        for (int c = 0; c < 7; ++c)
          for (int d = 0; d < 7; ++d) acc += nphi(a, b, c, d) * psi_up3(f, b, c, d);
      t_low(a, f) = acc / s.c_psipsi();
    }
  return torsion_components(t_low, s);
}

TorsionData torsion_components(const Mat7& T, const G2Structure& s) {
  TorsionData out;
  out.T = T;
  const Mat7& gi = s.metric().inverse();
  const double tr = (gi.array() * T.array()).sum();
  out.tau0 = 4.0 / 7.0 * tr;

  const Mat7 sym0 = sym(T) - (tr / 7.0) * s.metric().matrix();
  out.tau3 = -3.0 * sym0;

  const AltForm beta = two_form_from_matrix(skew(T));
  const Decomp2 d2 = project_2form(beta, s);
  out.tau1 = -(s.metric().matrix() * d2.x7);  // lowered 1-form
  out.tau2 = 2.0 * d2.b14;

  const double t_norm = std::sqrt(std::max(0.0, tensor_norm2(T, s.metric())));
  const double tol = 1e-10 * (1.0 + t_norm);
  const double n0 = std::abs(out.tau0);
  const double n1 = out.tau1.norm();
  const double n2 = std::sqrt(std::max(0.0, s.inner(out.tau2, out.tau2)));
  const double n3 = std::sqrt(std::max(0.0, tensor_norm2(out.tau3, s.metric())));
  out.flags.torsion_free = n0 < tol && n1 < tol && n2 < tol && n3 < tol;
  out.flags.closed = n0 < tol && n1 < tol && n3 < tol;
  out.flags.coclosed = n1 < tol && n2 < tol;
  out.flags.nearly_parallel = n0 >= tol && n1 < tol && n2 < tol && n3 < tol;
  out.flags.locally_conformally_parallel = n0 < tol && n1 >= tol && n2 < tol && n3 < tol;
  return out;
}

TorsionClassFlags torsion_class(const G2Structure& s, const LieAlgebraData& alg) {
  const ConnectionData conn = levi_civita(s.metric(), alg);
  return full_torsion(s, conn).flags;
}

ResidualReport identity_suite(const G2Structure& s, const TorsionData& t, const CurvatureData& cur,
                              const ConnectionData& conn, const LieAlgebraData& alg) {
  ResidualReport rep;
  const Mat7& gm = s.metric().matrix();
  const Mat7& gi = s.metric().inverse();
  const Tensor3& phi = s.phi_dense();
  const Tensor4& psi = s.psi_dense();
  const Mat7& T = t.T;
  const Mat7 t_mixed_second = T * gi;  // T_a^e
  const double trT = (gi.array() * T.array()).sum();

  // defining relation: nabla_a phi_{bcd} - T_a^e psi_{ebcd}
  {
    const Tensor4 nphi = covd_dense3(phi, conn);
    double worst = 0.0;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        for (int c = 0; c < 7; ++c)
          for (int d = 0; d < 7; ++d) {
            double pred = 0.0;
            for (int e = 0; e < 7; ++e) pred += t_mixed_second(a, e) * psi(e, b, c, d);
            worst = std::max(worst, std::abs(nphi(a, b, c, d) - pred));
          }
    rep.add("nabla_phi_torsion", worst);
  }

  // nabla_a psi_{bcde} + 4 T_{a[b} phi_{cde]}
  {
    const auto npsi = covd_dense4(psi, conn);
    double worst = 0.0;
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b)
        for (int c = 0; c < 7; ++c)
          for (int d = 0; d < 7; ++d)
            for (int e = 0; e < 7; ++e) {
              const double anti = 0.25 * (T(a, b) * phi(c, d, e) - T(a, c) * phi(b, d, e) +
                                          T(a, d) * phi(b, c, e) - T(a, e) * phi(b, c, d));
              worst = std::max(worst, std::abs(npsi[static_cast<size_t>(a)](b, c, d, e) + 4.0 * anti));
            }
    rep.add("nabla_psi_torsion", worst);
  }

  // component decomposition round-trip and trace relations
  {
    Mat7 rec = 0.25 * t.tau0 * gm;
    // (tau1 -| phi)_{ab} = tau1^m phi_{mab}
    const Vec7 tau1_up = gi * t.tau1;
    Mat7 tau1_phi = Mat7::Zero();
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        double acc = 0.0;
        for (int m = 0; m < 7; ++m) acc += tau1_up[m] * phi(m, a, b);
        tau1_phi(a, b) = acc;
      }
    rec -= tau1_phi;
    rec += 0.5 * matrix_from_two_form(t.tau2);
    rec -= (1.0 / 3.0) * t.tau3;
    rep.add("torsion_decomposition", (rec - T).cwiseAbs().maxCoeff());
    rep.add("trace_tau0", std::abs(trT - 7.0 / 4.0 * t.tau0));
    rep.add("t_phi_tau1", (contract_2tensor_phi(T, s) + 6.0 * t.tau1).cwiseAbs().maxCoeff());
    // tau2 has no 7-part, tau3 is traceless symmetric
    rep.add("tau2_in_14", project_2form(t.tau2, s).x7.cwiseAbs().maxCoeff());
    rep.add("tau3_traceless_sym",
            std::max(std::abs((gi.array() * t.tau3.array()).sum()),
                     (t.tau3 - t.tau3.transpose()).cwiseAbs().maxCoeff()));
  }

  // d phi = tau0 psi + 3 tau1 ^ phi + * i_phi(tau3)
  {
    AltForm tau1_form(1);
    for (int i = 0; i < 7; ++i) tau1_form[i] = t.tau1[i];
    const AltForm dphi = ce_differential(s.phi(), alg);
    AltForm pred = t.tau0 * s.psi() + 3.0 * wedge(tau1_form, s.phi()) + s.star(i_phi(t.tau3, s));
    rep.add("dphi_reconstruction", (dphi - pred).max_abs());

    const AltForm dpsi = ce_differential(s.psi(), alg);
    AltForm pred2 = 4.0 * wedge(tau1_form, s.psi()) + s.star(t.tau2);
    rep.add("dpsi_reconstruction", (dpsi - pred2).max_abs());
  }

  // integrability: 1/2 riem_{ij}^{bc} phi^a_{bc} = nabla_i T_j^a - nabla_j T_i^a
  //                + T_i^b T_j^c phi^a_{bc}
  {
    const Tensor3 nT = covd_2tensor(T, conn);  // (i,j,a) = nabla_i T_{ja}
    // phi with all indices raised once where needed
    double worst = 0.0;
    const Mat7 t_up_second = T * gi;  // T_i^b
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int a = 0; a < 7; ++a) {
          double lhs = 0.0;
          for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c) {
              double riem_up = 0.0;
              for (int p = 0; p < 7; ++p)
                for (int q = 0; q < 7; ++q) riem_up += cur.riem(i, j, p, q) * gi(p, b) * gi(q, c);
              lhs += 0.5 * riem_up * phi(a, b, c);
            }
          double rhs = nT(i, j, a) - nT(j, i, a);
          for (int b = 0; b < 7; ++b)
            for (int c = 0; c < 7; ++c)
              rhs += t_up_second(i, b) * t_up_second(j, c) * phi(a, b, c);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    rep.add("integrability", worst);
  }

  // (nabla T) -| psi = -(T -| phi) -| T + T^2 -| phi + (Tr T)(T -| phi)
  {
    const Tensor3 nT = covd_2tensor(T, conn);
    const Vec7 t_phi = contract_2tensor_phi(T, s);
    const Vec7 t_phi_up = gi * t_phi;
    const Mat7 t2 = T * gi * T;  // (T^2)_{ab} = T_a^k T_{kb}
    const Vec7 t2_phi = contract_2tensor_phi(t2, s);
    double worst = 0.0;
    for (int a = 0; a < 7; ++a) {
      double lhs = 0.0;
      for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n)
          for (int p = 0; p < 7; ++p) {
            double nt_up = 0.0;
            for (int x = 0; x < 7; ++x)
              for (int y = 0; y < 7; ++y)
                for (int z = 0; z < 7; ++z) nt_up += gi(m, x) * gi(n, y) * gi(p, z) * nT(x, y, z);
            lhs += nt_up * psi(m, n, p, a);
          }
      double rhs = -t_phi_up.dot(T.col(a).eval());  // -(T -| phi)^m T_{ma}
      rhs -= t2_phi[a];
      rhs += trT * t_phi[a];
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    rep.add("nabla_torsion_psi", worst);
  }

  // 0 = d(Tr T) - div(T^t) - (T -| phi) -| T^t ; d(Tr T) = 0 on invariant data
  {
    const Vec7 div_tt = div_tensor(T.transpose(), conn, s.metric());
    const Vec7 t_phi_up = gi * contract_2tensor_phi(T, s);
    Vec7 res = -div_tt;
    for (int b = 0; b < 7; ++b) {
      double acc = 0.0;
      for (int m = 0; m < 7; ++m) acc += t_phi_up[m] * T(b, m);  // (T -| phi)^m T^t_{mb}
      res[b] -= acc;
    }
    rep.add("div_trace_identity", res.cwiseAbs().maxCoeff());
  }

  // Ric = -Sym(curl T^t - nabla(T -| phi) + T^2 - (Tr T) T)
  {
    const Mat7 curl_tt = curl_tensor(T.transpose(), conn, s.metric(), phi);
    const Mat7 n_tphi = covd_covector(contract_2tensor_phi(T, s), conn);
    const Mat7 t2 = T * gi * T;
    const Mat7 rhs = -sym(curl_tt - n_tphi + t2 - trT * T);
    rep.add("ricci_from_torsion", (cur.ric - rhs).cwiseAbs().maxCoeff());
  }

  // 1/4 Ric* = curl T + 1/2 T o T
  {
    const Mat7 curl_t = curl_tensor(T, conn, s.metric(), phi);
    const Mat7 toT = circ_product(T, T, s.metric(), phi);
    rep.add("ric_star_from_torsion",
            (0.25 * cur.ric_star - curl_t - 0.5 * toT).cwiseAbs().maxCoeff());
    rep.add("skew_curl_identity", (skew(curl_t) + 0.5 * skew(toT)).cwiseAbs().maxCoeff());
  }

  // R = 2 Tr(curl T) - psi(T,T) - Tr(T^2) + (Tr T)^2
  {
    const Mat7 curl_t = curl_tensor(T, conn, s.metric(), phi);
    const double tr_curl = (gi.array() * curl_t.array()).sum();
    const Mat7 t2 = T * gi * T;
    const double tr_t2 = (gi.array() * t2.array()).sum();
    const double rhs = 2.0 * tr_curl - psi_bilinear(T, T, s) - tr_t2 + trT * trT;
    rep.add("scalar_from_torsion", std::abs(cur.scal - rhs));
  }

  rep.add("trace_ric_star", std::abs((gi.array() * cur.ric_star.array()).sum() - 2.0 * cur.scal));
  return rep;
}

ResidualReport coclosed_identity_suite(const G2Structure& s, const TorsionData& t,
                                       const CurvatureData& cur, const ConnectionData& conn,
                                       const LieAlgebraData& alg) {
  const AltForm dpsi = ce_differential(s.psi(), alg);
  const double psi_norm = std::sqrt(std::max(0.0, s.inner(s.psi(), s.psi())));
  if (dpsi.max_abs() > 1e-10 * (1.0 + psi_norm))
    throw NotCoclosed("structure is not co-closed, |d psi| = " + std::to_string(dpsi.max_abs()));

  ResidualReport rep;
  const Mat7& gi = s.metric().inverse();
  const Mat7& T = t.T;
  const double trT = (gi.array() * T.array()).sum();
  const Tensor3& phi = s.phi_dense();

  // div T = d(Tr T), which vanishes for invariant data
  rep.add("div_torsion", div_tensor(T, conn, s.metric()).cwiseAbs().maxCoeff());

  const Mat7 curl_t = curl_tensor(T, conn, s.metric(), phi);
  rep.add("curl_symmetric", (curl_t - curl_t.transpose()).cwiseAbs().maxCoeff());

  const Mat7 t2 = T * gi * T;
  rep.add("ricci_coclosed", (cur.ric - curl_t + t2 - trT * T).cwiseAbs().maxCoeff());

  const Mat7 toT = circ_product(T, T, s.metric(), phi);
  rep.add("ric_star_coclosed_curl",
          (0.25 * cur.ric_star - curl_t - 0.5 * toT).cwiseAbs().maxCoeff());
  rep.add("ric_star_coclosed_ricci",
          (0.25 * cur.ric_star - cur.ric - 0.5 * toT - t2 + trT * T).cwiseAbs().maxCoeff());

  const double t_norm2 = tensor_norm2(T, s.metric());
  rep.add("scalar_coclosed", std::abs(cur.scal - trT * trT + t_norm2));
  return rep;
}

}  // namespace g2flow
