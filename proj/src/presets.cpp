#include "g2flow/presets.hpp"

#include <stdexcept>

namespace g2flow {

namespace {

Preset make_flat7() {
  Preset p;
  p.algebra = LieAlgebraData::from_quadruples({}, "flat7");
  p.phi = standard_phi();
  p.note = "abelian algebra with the reference 3-form; torsion-free";
  return p;
}

Preset make_heisenberg7() {
  // One central direction: [e1,e2] = [e3,e4] = [e5,e6] = -e7, so that
  // d e^7 = e^{12} + e^{34} + e^{56}.  The reference 3-form is co-closed here
  // (d psi = 0, checked by the bring-up suite) while d phi != 0.
  Preset p;
  p.algebra = LieAlgebraData::from_quadruples(
      {{1, 2, 7, -1.0}, {3, 4, 7, -1.0}, {5, 6, 7, -1.0}}, "heisenberg7");
  p.phi = standard_phi();
  p.note = "7-dimensional Heisenberg algebra; reference 3-form is co-closed";
  return p;
}

Preset make_almost_abelian_a() {
  // Abelian ideal span(e1..e6), with ad(e7) = diag(a,b,c,-c,-b,-a) acting on
  // it: [e7, e_i] = A_ii e_i.  The diagonal pairing (1,6),(2,5),(3,4) keeps
  // ad(e7) inside the symplectic algebra of e^{16} - e^{25} - e^{34}, which
  // makes the reference 3-form co-closed; Tr A = 0 keeps the algebra
  // unimodular.  Solvable, not nilpotent.
  Preset p;
  const double a = 0.3, b = 0.2, c = -0.1;
  p.algebra = LieAlgebraData::from_quadruples({{7, 1, 1, a},
                                               {7, 2, 2, b},
                                               {7, 3, 3, c},
                                               {7, 4, 4, -c},
                                               {7, 5, 5, -b},
                                               {7, 6, 6, -a}},
                                              "almost_abelian_a");
  p.phi = standard_phi();
  p.note = "almost-abelian solvable algebra; reference 3-form is co-closed";
  return p;
}

Preset make_nilpotent_closed() {
  // Two-step nilpotent algebra with d e^6 = e^{12}, d e^7 = e^{13}; the
  // reference 3-form is closed here (d phi = 0) with skew torsion.
  Preset p;
  p.algebra =
      LieAlgebraData::from_quadruples({{1, 2, 6, -1.0}, {1, 3, 7, -1.0}}, "nilpotent_closed");
  p.phi = standard_phi();
  p.note = "two-step nilpotent algebra; reference 3-form is closed";
  return p;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"flat7", "heisenberg7", "almost_abelian_a", "nilpotent_closed"};
}

Preset preset(const std::string& name) {
  if (name == "flat7") return make_flat7();
  if (name == "heisenberg7") return make_heisenberg7();
  if (name == "almost_abelian_a") return make_almost_abelian_a();
  if (name == "nilpotent_closed") return make_nilpotent_closed();
  throw std::out_of_range("unknown preset: " + name);
}

}  // namespace g2flow
