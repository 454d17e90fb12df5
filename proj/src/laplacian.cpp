#include "g2flow/laplacian.hpp"

#include <cmath>

namespace g2flow {

AltForm laplacian_direct(const AltForm& w, const G2Structure& s, const LieAlgebraData& alg) {
  const Metric7& g = s.metric();
  const int k = w.degree();
  if (k == 0) return hodge_codifferential(ce_differential(w, alg), g, alg);
  if (k == 7) return ce_differential(hodge_codifferential(w, g, alg), alg);
  AltForm out = ce_differential(hodge_codifferential(w, g, alg), alg);
  out += hodge_codifferential(ce_differential(w, alg), g, alg);
  return out;
}

LapDecomp laplacian_phi_decomposed(const G2Structure& s, const TorsionData& t,
                                   const CurvatureData& cur, const ConnectionData& conn) {
  const Metric7& g = s.metric();
  const Mat7& gi = g.inverse();
  const Mat7& T = t.T;
  const Tensor3& phi = s.phi_dense();
  const double t2norm = tensor_norm2(T, g);

  LapDecomp out;
  out.X = -(gi * div_tensor(T, conn, g));  // raised, ready for X -| psi

  const Vec7 t_phi = contract_2tensor_phi(T, s);
  const Mat7 t_psi = contract_2tensor_psi(T, s);
  const Mat7 tt = T.transpose() * gi * T;       // (T^t T)_{ab} = T^k_a T_{kb}
  const Mat7 outer = t_phi * t_phi.transpose(); // (T-|phi)(T-|phi)
  const Mat7 ToT = circ_product(T, T, g, phi);
  const Mat7 TtoTt = circ_product(T.transpose(), T.transpose(), g, phi);
  const Mat7 mix = circ_product(T, T.transpose(), g, phi);
  const Mat7 sym_mix_circ = 0.5 * (mix + mix.transpose());
  const Mat7 t_tpsi = T * gi * t_psi;                 // T (T -| psi)
  const Mat7 tt_tpsi = T.transpose() * gi * t_psi;    // T^t (T -| psi)
  const Mat7 symmix = 0.5 * ((t_tpsi - tt_tpsi) + (t_tpsi - tt_tpsi).transpose());

  out.h = -0.25 * cur.ric_star + (cur.scal + 2.0 * t2norm) / 6.0 * g.matrix() - tt -
          0.5 * outer + 0.25 * ToT + 0.25 * TtoTt - 0.5 * sym_mix_circ + symmix +
          0.5 * psi_bilinear(T, T, s) * g.matrix();
  return out;
}

CoclosedLapDecomp laplacian_psi_coclosed(const G2Structure& s, const TorsionData& t,
                                         const CurvatureData& cur, const ConnectionData& conn,
                                         const LieAlgebraData& alg) {
  const AltForm dpsi = ce_differential(s.psi(), alg);
  const double psi_norm = std::sqrt(std::max(0.0, s.inner(s.psi(), s.psi())));
  if (dpsi.max_abs() > 1e-10 * (1.0 + psi_norm))
    throw NotCoclosed("laplacian_psi_coclosed needs a co-closed structure");

  const Metric7& g = s.metric();
  const Mat7& gi = g.inverse();
  const Mat7& T = t.T;
  const Tensor3& phi = s.phi_dense();
  const double trT = (gi.array() * T.array()).sum();
  const double t2norm = tensor_norm2(T, g);

  CoclosedLapDecomp out;
  out.X = -div_tensor(T, conn, g);
  const Mat7 t2 = T * gi * T;
  const Mat7 ToT = circ_product(T, T, g, phi);
  out.s_ricci = -cur.ric + (cur.scal + 2.0 * t2norm) / 6.0 * g.matrix() + trT * T - 2.0 * t2 -
                0.5 * ToT;
  const Mat7 curl_t = curl_tensor(T, conn, g, phi);
  out.s_curl = -curl_t + (trT * trT + t2norm) / 6.0 * g.matrix() - t2 - 0.5 * ToT;
  return out;
}

AltForm assemble_lap3(const Vec7& X, const Mat7& h, const G2Structure& s) {
  AltForm out = interior(X, s.psi());
  out += 3.0 * i_phi(h, s);
  return out;
}

}  // namespace g2flow
