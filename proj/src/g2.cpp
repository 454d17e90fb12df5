#include "g2flow/g2.hpp"

#include <cmath>

namespace g2flow {

namespace {

double real_root9(double x) { return std::copysign(std::pow(std::abs(x), 1.0 / 9.0), x); }

Vec7 frame_vector(int a) {
  Vec7 u = Vec7::Zero();
  u[a] = 1.0;
  return u;
}

// B_{ij} against the reference volume e^{1...7}.
Mat7 bilinear_from_phi(const AltForm& phi) {
  std::array<AltForm, 7> contractions;
  for (int a = 0; a < 7; ++a) contractions[static_cast<size_t>(a)] = interior(frame_vector(a), phi);
  Mat7 b;
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      const AltForm w =
          wedge(wedge(contractions[static_cast<size_t>(i)], contractions[static_cast<size_t>(j)]), phi);
      b(i, j) = w[0];
      b(j, i) = w[0];
    }
  return b;
}

// Normalization fixed so the standard form yields the identity metric.
double metric_normalization() {
  static const double lambda = [] {
    const Mat7 b0 = bilinear_from_phi(standard_phi());
    const double scaled = b0(0, 0) * (1.0 / real_root9(b0.determinant()));
    return 1.0 / scaled;
  }();
  return lambda;
}

Mat7 sym(const Mat7& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

const AltForm& standard_phi() {
  static const AltForm phi = [] {
    AltForm p = AltForm::basis({0, 1, 2});
    p += AltForm::basis({0, 3, 4});
    p += AltForm::basis({0, 5, 6});
    p += AltForm::basis({1, 3, 5});
    p -= AltForm::basis({1, 4, 6});
    p -= AltForm::basis({2, 3, 6});
    p -= AltForm::basis({2, 4, 5});
    return p;
  }();
  return phi;
}

const AltForm& standard_psi() {
  static const AltForm psi = hodge_star(standard_phi(), Metric7::identity(), +1);
  return psi;
}

std::optional<MetricFromPhi> try_metric_from_phi(const AltForm& phi) {
  if (phi.degree() != 3) throw DegreeError("metric_from_phi needs a 3-form");
  const Mat7 b = bilinear_from_phi(phi);
  Eigen::SelfAdjointEigenSolver<Mat7> eig(sym(b));
  const auto& ev = eig.eigenvalues();
  const double largest = std::max(std::abs(ev[0]), std::abs(ev[6]));
  if (largest <= 0.0) return std::nullopt;
  const bool positive = ev[0] > 1e-12 * largest;
  const bool negative = ev[6] < -1e-12 * largest;
  if (!positive && !negative) return std::nullopt;

  const double det_b = b.determinant();
  const Mat7 g = metric_normalization() * (1.0 / real_root9(det_b)) * b;
  MetricFromPhi out;
  out.orientation = positive ? +1 : -1;
  try {
    out.g = Metric7::from_matrix(g);
  } catch (const MetricError&) {
    return std::nullopt;
  }
  out.vol = volume_form(out.g, out.orientation);
  return out;
}

MetricFromPhi metric_from_phi(const AltForm& phi) {
  auto r = try_metric_from_phi(phi);
  if (!r) throw NotPositive("3-form does not induce a definite bilinear form");
  return *r;
}

G2Structure G2Structure::from_phi(const AltForm& phi) {
  G2Structure s;
  auto m = try_metric_from_phi(phi);
  if (!m) throw NotPositive("3-form does not induce a definite bilinear form");
  s.phi_ = phi;
  s.g_ = m->g;
  s.orientation_ = m->orientation;
  s.vol_ = m->vol;
  s.psi_ = hodge_star(phi, s.g_, s.orientation_);
  s.phi_dense_ = form_to_dense3(s.phi_);
  s.psi_dense_ = form_to_dense4(s.psi_);

  // Contraction constants, by direct summation against this structure.
  const Mat7& gi = s.g_.inverse();
  // full contractions: phi_{amn} phi^{amn} = 7 c_phiphi, psi_{amnp} psi^{amnp} = 7 c_psipsi
  s.c_phiphi_ = tensor3_norm2(s.phi_dense_, s.g_) / 7.0;
  s.c_psipsi_ = tensor4_norm2(s.psi_dense_, s.g_) / 7.0;

  double tr_phi = 0.0, tr_psi = 0.0;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      const Vec7 ua = frame_vector(a), ub = frame_vector(b);
      tr_phi += gi(a, b) * form_inner(interior(ua, s.phi_), interior(ub, s.phi_), s.g_);
      tr_psi += gi(a, b) * form_inner(interior(ua, s.psi_), interior(ub, s.psi_), s.g_);
    }
  s.c_v7_phi_ = tr_phi / 7.0;
  s.c_v7_psi_ = tr_psi / 7.0;

  // Traceless response of the 27-extraction E(w)_{ab} = Sym(w_{mna} phi_b^{mn}),
  // probed on a fixed traceless symmetric tensor.
  Mat7 probe = Mat7::Zero();
  probe(0, 0) = 1.0;
  probe(1, 1) = -0.5;
  probe(2, 2) = -0.5;
  probe(0, 3) = probe(3, 0) = 0.25;
  {
    const double tr = (s.g_.inverse().array() * probe.array()).sum();
    probe -= (tr / 7.0) * s.g_.matrix();
  }
  s.kappa27_ = 0.0;  // set below once i_phi is available through the member data
  {
    // inline i_phi(probe)
    const Mat7 hu = gi * probe;  // h^d_a
    AltForm w(3);
    for (int r = 0; r < binom7(3); ++r) {
      auto idx = combo(3, r);
      const int a = idx[0], b = idx[1], c = idx[2];
      double v = 0.0;
      for (int d = 0; d < 7; ++d)
        v += hu(d, a) * s.phi_dense_(b, c, d) + hu(d, b) * s.phi_dense_(c, a, d) +
             hu(d, c) * s.phi_dense_(a, b, d);
      w[r] = v / 3.0;
    }
    const Tensor3 wd = form_to_dense3(w);
    Mat7 e = Mat7::Zero();
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        double v = 0.0;
        for (int m = 0; m < 7; ++m)
          for (int n = 0; n < 7; ++n) {
            double phi_up = 0.0;
            for (int p = 0; p < 7; ++p)
              for (int q = 0; q < 7; ++q) phi_up += gi(m, p) * gi(n, q) * s.phi_dense_(b, p, q);
            v += wd(m, n, a) * phi_up;
          }
        e(a, b) = v;
      }
    e = sym(e);
    const double num = (e.array() * (gi * probe * gi).array()).sum();
    const double den = (probe.array() * (gi * probe * gi).array()).sum();
    s.kappa27_ = num / den;
  }
  return s;
}

AltForm i_phi(const Mat7& h, const G2Structure& s) {
  const Mat7 hu = s.metric().inverse() * h;  // h^d_a
  const Tensor3& phi = s.phi_dense();
  AltForm w(3);
  for (int r = 0; r < binom7(3); ++r) {
    auto idx = combo(3, r);
    const int a = idx[0], b = idx[1], c = idx[2];
    double v = 0.0;
    for (int d = 0; d < 7; ++d)
      v += hu(d, a) * phi(b, c, d) + hu(d, b) * phi(c, a, d) + hu(d, c) * phi(a, b, d);
    w[r] = v / 3.0;
  }
  return w;
}

AltForm i_psi(const Mat7& h, const G2Structure& s) {
  const Mat7 hu = s.metric().inverse() * h;  // h^e_a
  const Tensor4& psi = s.psi_dense();
  AltForm w(4);
  for (int r = 0; r < binom7(4); ++r) {
    auto idx = combo(4, r);
    const int a = idx[0], b = idx[1], c = idx[2], d = idx[3];
    double v = 0.0;
    for (int e = 0; e < 7; ++e)
      v += hu(e, a) * psi(b, c, d, e) - hu(e, b) * psi(a, c, d, e) + hu(e, c) * psi(a, b, d, e) -
           hu(e, d) * psi(a, b, c, e);
    w[r] = -v / 4.0;
  }
  return w;
}

Decomp2 project_2form(const AltForm& b, const G2Structure& s) {
  if (b.degree() != 2) throw DegreeError("project_2form needs a 2-form");
  Vec7 m;
  for (int a = 0; a < 7; ++a) m[a] = s.inner(b, interior(frame_vector(a), s.phi()));
  Decomp2 out;
  out.x7 = s.metric().inverse() * m / s.c_v7_phi();
  out.b14 = b - interior(out.x7, s.phi());
  return out;
}

Decomp3 project_3form(const AltForm& w, const G2Structure& s) {
  if (w.degree() != 3) throw DegreeError("project_3form needs a 3-form");
  Decomp3 out;
  out.f = s.inner(w, s.phi()) / s.inner(s.phi(), s.phi());
  Vec7 m;
  for (int a = 0; a < 7; ++a) m[a] = s.inner(w, interior(frame_vector(a), s.psi()));
  out.x = s.metric().inverse() * m / s.c_v7_psi();

  AltForm w27 = w;
  w27 -= out.f * s.phi();
  w27 -= interior(out.x, s.psi());

  // 27-extraction: Sym(w_{mna} phi_b^{mn}) / kappa, with the residual trace removed
  const Mat7& gi = s.metric().inverse();
  const Tensor3 wd = form_to_dense3(w27);
  const Tensor3& phi = s.phi_dense();
  Mat7 e = Mat7::Zero();
  Tensor3 phi_up2;  // (m,n,b) = phi_b^{mn}
  for (int m = 0; m < 7; ++m)
    for (int n = 0; n < 7; ++n)
      for (int b = 0; b < 7; ++b) {
        double v = 0.0;
        for (int p = 0; p < 7; ++p)
          for (int q = 0; q < 7; ++q) v += gi(m, p) * gi(n, q) * phi(b, p, q);
        phi_up2(m, n, b) = v;
      }
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      double v = 0.0;
      for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) v += wd(m, n, a) * phi_up2(m, n, b);
      e(a, b) = v;
    }
  Mat7 h = 0.5 * (e + e.transpose()) / s.kappa27();
  const double tr = (gi.array() * h.array()).sum();
  h -= (tr / 7.0) * s.metric().matrix();
  out.h27 = h;
  return out;
}

Decomp3 project_4form(const AltForm& c, const G2Structure& s) {
  if (c.degree() != 4) throw DegreeError("project_4form needs a 4-form");
  Decomp3 out = project_3form(s.star(c), s);
  out.x = -out.x;  // *(x -| psi) = -x ^ phi, so the X ^ phi component flips sign
  return out;
}

}  // namespace g2flow
