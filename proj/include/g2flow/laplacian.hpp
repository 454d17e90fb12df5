#pragma once

#include "g2flow/torsion.hpp"

namespace g2flow {

/// Hodge Laplacian dd* + d*d on invariant forms, built from the
/// Chevalley-Eilenberg differential and the codifferential of the structure's
/// metric.  Self-adjoint and commuting with * on unimodular algebras.
AltForm laplacian_direct(const AltForm& w, const G2Structure& s, const LieAlgebraData& alg);

struct LapDecomp {
  Vec7 X;  // vector of the 7-component: Lap phi = X -| psi + 3 i_phi(h)
  Mat7 h;  // symmetric part (trace included)
};

/// Laplacian of phi assembled purely from torsion and curvature:
/// X = -div T and h the quadratic torsion/curvature expression whose trace is
/// 2/3 R + 4/3 |T|^2.
LapDecomp laplacian_phi_decomposed(const G2Structure& s, const TorsionData& t,
                                   const CurvatureData& cur, const ConnectionData& conn);

struct CoclosedLapDecomp {
  Vec7 X;
  Mat7 s_ricci;  // route through Ric
  Mat7 s_curl;   // route through curl T; equals s_ricci for co-closed data
};

/// Co-closed specialization with both algebraic routes to the symmetric part.
/// Throws NotCoclosed when |d psi| is not negligible.
CoclosedLapDecomp laplacian_psi_coclosed(const G2Structure& s, const TorsionData& t,
                                         const CurvatureData& cur, const ConnectionData& conn,
                                         const LieAlgebraData& alg);

/// Assemble X -| psi + 3 i_phi(h) back into a 3-form.
AltForm assemble_lap3(const Vec7& X, const Mat7& h, const G2Structure& s);

}  // namespace g2flow
