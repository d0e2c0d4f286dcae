#include "doctest.h"
#include "gle/ricci.hpp"
#include "gle/rng.hpp"

using namespace gle;

namespace {

bool all_zero(const Matrix<Scalar>& m) {
  for (auto& e : m.a)
    if (!e.is_zero()) return false;
  return true;
}

bool all_zero4(const std::array<Matrix<Scalar>, 4>& t) {
  for (auto& m : t)
    if (!all_zero(m)) return false;
  return true;
}

Poly harmonic_h() {
  // H = x1^2 - x2^2
  return Poly::variable(1, 2) - Poly::variable(2, 2);
}
Poly nonharmonic_h() { return Poly::variable(1, 2) + Poly::variable(2, 2); }

}  // namespace

TEST_SUITE_BEGIN("ricci");

TEST_CASE("minkowski element transports to the flat connection") {
  AffineData c = to_connection(minkowski_element());
  CHECK(all_zero4(c.gamma));
  Matrix<Scalar> eta(4, 4);
  eta.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta.at(i, i) = Scalar(1);
  CHECK(c.g == eta);
  CHECK(torsion_free(c));
  CHECK(parallel_metric(c) == eta);
  CHECK(all_zero(ricci(c)));
}

TEST_CASE("conformal compatibility holds for arbitrary nondegenerate elements") {
  // a nondegenerate non-MC element: rescaled frame plus a vertical block
  Rng rng(81);
  LElement e;
  for (int mu = 0; mu < 4; ++mu) e += LElement::term(1 << mu, CDer::lift(mu));
  e += LElement::term(1 << 1, CDer::sigma(kSigma0) * Scalar::variable(0));
  e += LElement::term(1 << 2, CDer::sigma(kSigma23) * Scalar::variable(1));
  EElement x = reduce_mod_ideal(e);
  REQUIRE(nondegenerate(x));
  AffineData c = to_connection(x);
  auto alpha = conformal_one_form(c);
  CHECK(alpha.has_value());
}

TEST_CASE("rescaled minkowski frame: nonzero exact conformal 1-form") {
  Scalar phi = Scalar(1) + Scalar::variable(1);
  EElement x = rescaled_minkowski_element(phi);
  REQUIRE(nondegenerate(x));
  // the underlying metric is flat, so this element is Maurer-Cartan
  CHECK(mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  CHECK(torsion_free(c));
  auto alpha = conformal_one_form(c);
  REQUIRE(alpha.has_value());
  bool nonzero = false;
  for (auto& a : *alpha) nonzero = nonzero || !a.is_zero();
  CHECK(nonzero);
  // the parallel representative recovers the flat metric
  Matrix<Scalar> par = parallel_metric(c);
  Matrix<Scalar> eta(4, 4);
  eta.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta.at(i, i) = Scalar(1);
  CHECK(par == eta);
  CHECK(all_zero(ricci(c)));
}

TEST_CASE("rescaled by 1 + x1^2 recovers the flat metric") {
  Scalar phi = Scalar(1) + Scalar::variable(1) * Scalar::variable(1);
  EElement x = rescaled_minkowski_element(phi);
  CHECK(mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  Matrix<Scalar> par = parallel_metric(c);
  Matrix<Scalar> eta(4, 4);
  eta.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta.at(i, i) = Scalar(1);
  CHECK(par == eta);
}

TEST_CASE("pp-wave element: MC, torsion-free, parallel, Ricci-flat") {
  Poly H = harmonic_h();
  EElement x = ppwave_element(H);
  REQUIRE(nondegenerate(x));
  CHECK(mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  CHECK(torsion_free(c));
  // the transported connection equals the Levi-Civita oracle of the metric
  auto lc = levi_civita(ppwave_metric(H));
  for (int mu = 0; mu < 4; ++mu) CHECK(c.gamma[size_t(mu)] == lc[size_t(mu)]);
  // candidate metric is already parallel and matches the background
  Matrix<Scalar> par = parallel_metric(c);
  CHECK(par == ppwave_metric(H));
  CHECK(all_zero(ricci(c)));
  // cross-check with the tensor-calculus oracle route
  CHECK(all_zero(ricci_of(lc)));
}

TEST_CASE("non-harmonic pp-wave fails MC and Ricci-flatness") {
  Poly H = nonharmonic_h();
  EElement x = ppwave_element(H);
  CHECK(!mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  CHECK(torsion_free(c));  // still the Levi-Civita connection of its metric
  CHECK(!all_zero(ricci(c)));
}

TEST_CASE("vertical perturbation breaking MC shows torsion") {
  LElement e = minkowski_element().rep;
  e += LElement::term(1 << 1, CDer::sigma(kSigma2) * Scalar::variable(0));
  EElement x = reduce_mod_ideal(e);
  CHECK(!mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  CHECK(!torsion_free(c));
}

TEST_CASE("pp-wave with a generic polynomial profile") {
  // H harmonic in the transverse pair: real part of (x1 + i x2)^3
  Poly x1 = Poly::variable(1), x2 = Poly::variable(2);
  Poly H = x1 * x1 * x1 - Rat(3) * x1 * x2 * x2;
  EElement x = ppwave_element(H);
  CHECK(mc_defect(x).is_zero());
  AffineData c = to_connection(x);
  CHECK(all_zero(ricci(c)));
}

TEST_SUITE_END();
