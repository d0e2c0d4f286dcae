#include "doctest.h"
#include "gle/glaoid.hpp"
#include "gle/isotypic.hpp"
#include "gle/rng.hpp"

using namespace gle;

namespace {

CDer random_cder(Rng& rng) {
  CDer d;
  for (int i = 0; i < 4; ++i) d.vec[size_t(i)] = rng.scalar(2, 1);
  for (int i = 0; i < kNumSigma; ++i) d.vert[size_t(i)] = rng.scalar(2, 1);
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("frames");

TEST_CASE("sigma action table") {
  // sigma_1(theta_0) = theta_1, sigma_1(theta_2) = 0
  CDer s1 = CDer::sigma(kSigma1);
  CHECK(s1.apply(FrameVector::basis(0)) == FrameVector::basis(1));
  CHECK(s1.apply(FrameVector::basis(2)).is_zero());
  CHECK(s1.apply(FrameVector::basis(1)) == FrameVector::basis(0));
  // sigma_23(theta_2) = -theta_3, sigma_23(theta_3) = theta_2
  CDer s23 = CDer::sigma(kSigma23);
  FrameVector m3 = FrameVector::basis(3) * Scalar(-1);
  CHECK(s23.apply(FrameVector::basis(2)) == m3);
  CHECK(s23.apply(FrameVector::basis(3)) == FrameVector::basis(2));
  CHECK(s23.apply(FrameVector::basis(0)).is_zero());
  // lifted d_0 applied to x0*theta_1 -> theta_1
  CDer lift0 = CDer::lift(0);
  FrameVector v = FrameVector::basis(1) * Scalar::variable(0);
  CHECK(lift0.apply(v) == FrameVector::basis(1));
}

TEST_CASE("cder acts by Leibniz on the exterior algebra") {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    CDer d = random_cder(rng);
    ExtElement a, b;
    for (int t = 0; t < 3; ++t) {
      a.c[rng.below(kBasisSize)] += Scalar(rng.rat());
      b.c[rng.below(kBasisSize)] += Scalar(rng.rat());
    }
    CHECK(d.apply(wedge(a, b)) == wedge(d.apply(a), b) + wedge(a, d.apply(b)));
  }
}

TEST_CASE("bracket examples") {
  // [sigma_23, sigma_31] computed from the matrices; recorded oracle value.
  CDer b = bracket_cder(CDer::sigma(kSigma23), CDer::sigma(kSigma31));
  // matrix oracle
  auto comm = [](int s, int t) {
    Matrix<Scalar> ms = CDer::sigma(s).vertical_matrix();
    Matrix<Scalar> mt = CDer::sigma(t).vertical_matrix();
    return ms * mt - mt * ms;
  };
  CHECK(b.vertical_matrix() == comm(kSigma23, kSigma31));
  // [sigma_1, sigma_2] equals its matrix commutator too
  CDer b12 = bracket_cder(CDer::sigma(kSigma1), CDer::sigma(kSigma2));
  CHECK(b12.vertical_matrix() == comm(kSigma1, kSigma2));
  // [lifted d_0, x0 sigma_1] = sigma_1
  CDer xs = CDer::sigma(kSigma1) * Scalar::variable(0);
  CDer lb = bracket_cder(CDer::lift(0), xs);
  CHECK(lb == CDer::sigma(kSigma1));
}

TEST_CASE("jacobi identity on random triples") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    CDer a = random_cder(rng), b = random_cder(rng), c = random_cder(rng);
    CDer j = bracket_cder(a, bracket_cder(b, c)) + bracket_cder(b, bracket_cder(c, a)) +
             bracket_cder(c, bracket_cder(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("so(W) basis traces and dimension") {
  auto so = so_w_basis();
  CHECK(so.size() == 6);
  for (auto& d : so) {
    CHECK(d.trace().is_zero());
    CHECK(d.is_vertical());
  }
  CHECK(CDer::sigma(kSigma0).trace() == Scalar(4));
}

TEST_CASE("conformal factor of the basis derivations") {
  // f = 0 for the rotations, boosts and lifts; f = -2 for the dilation.
  for (int s : {kSigma1, kSigma2, kSigma3, kSigma23, kSigma31, kSigma12}) {
    auto f = conformal_factor(CDer::sigma(s));
    REQUIRE(f.has_value());
    CHECK(f->is_zero());
  }
  for (int mu = 0; mu < 4; ++mu) {
    auto f = conformal_factor(CDer::lift(mu));
    REQUIRE(f.has_value());
    CHECK(f->is_zero());
  }
  auto f0 = conformal_factor(CDer::sigma(kSigma0));
  REQUIRE(f0.has_value());
  CHECK(*f0 == Scalar(-2));
  // random combinations still satisfy the property
  Rng rng(23);
  for (int i = 0; i < 10; ++i) {
    CDer d;
    for (int s = 0; s < kNumSigma; ++s) d.vert[size_t(s)] = rng.scalar(2, 1);
    CHECK(conformal_factor(d).has_value());
  }
}

TEST_CASE("future cone membership") {
  FrameVector t0 = FrameVector::basis(0);
  CHECK(in_future_cone(t0));
  FrameVector w;
  w.w = {Scalar(Rat(5, 4)), Scalar(Rat(3, 4)), Scalar(0), Scalar(0)};
  CHECK(in_future_cone(w));
  CHECK(!in_future_cone(FrameVector::basis(1)));
  FrameVector null;
  null.w = {Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  CHECK(!in_future_cone(null));
}

TEST_CASE("isotypic decomposition of W") {
  // Action on W: the sigma matrices themselves; single component (1/2,1/2).
  auto so = so_w_basis();
  std::array<Matrix<Rat>, 6> rep;
  for (int g = 0; g < 6; ++g) {
    rep[size_t(g)] = Matrix<Rat>(4, 4);
    Matrix<Scalar> m = so[size_t(g)].vertical_matrix();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rep[size_t(g)].at(i, j) = m.at(i, j).constant_value();
  }
  auto comps = isotypic_decompose(rep);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].label.p == Rat(1, 2));
  CHECK(comps[0].label.q == Rat(1, 2));
  CHECK(!comps[0].label.paired);
  CHECK(comps[0].label.real_dim() == 4);

  // the opposite orientation yields the same subspaces
  auto comps2 = isotypic_decompose_opposite(rep);
  REQUIRE(comps2.size() == 1);
  CHECK(comps2[0].label.real_dim() == 4);
}

TEST_CASE("isotypic decomposition of wedge^2 W and the adjoint") {
  // Induced action on degree-2 monomials: (1,0) ⊕ (0,1), dimension 6.
  auto so = so_w_basis();
  const auto& monos = degree_monos(2);
  std::array<Matrix<Rat>, 6> rep;
  for (int g = 0; g < 6; ++g) {
    rep[size_t(g)] = Matrix<Rat>(6, 6);
    for (size_t j = 0; j < monos.size(); ++j) {
      ExtElement img = so[size_t(g)].apply(ExtElement::basis(monos[j]));
      for (size_t i = 0; i < monos.size(); ++i)
        rep[size_t(g)].at(int(i), int(j)) = img.c[size_t(monos[i])].constant_value();
    }
  }
  auto comps = isotypic_decompose(rep);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].label.p == Rat(1));
  CHECK(comps[0].label.q == Rat(0));
  CHECK(comps[0].label.paired);
  CHECK(comps[0].label.real_dim() == 6);

  // adjoint of so(W) on itself: also (1,0) ⊕ (0,1)
  std::array<Matrix<Rat>, 6> ad;
  const auto& c = sigma_structure_constants();
  const int sigma_of[6] = {kSigma1, kSigma2, kSigma3, kSigma23, kSigma31, kSigma12};
  for (int g = 0; g < 6; ++g) {
    ad[size_t(g)] = Matrix<Rat>(6, 6);
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 6; ++i)
        ad[size_t(g)].at(i, j) = c[size_t(sigma_of[g])][size_t(sigma_of[j])][size_t(sigma_of[i])];
  }
  auto comps2 = isotypic_decompose(ad);
  REQUIRE(comps2.size() == 1);
  CHECK(comps2[0].label.p == Rat(1));
  CHECK(comps2[0].label.q == Rat(0));
  CHECK(comps2[0].label.paired);
}

TEST_CASE("isotypic projector properties") {
  // On W ⊕ ∧2W the two components produce orthogonal idempotent projectors.
  auto so = so_w_basis();
  const auto& monos = degree_monos(2);
  int n = 4 + int(monos.size());
  std::array<Matrix<Rat>, 6> rep;
  for (int g = 0; g < 6; ++g) {
    rep[size_t(g)] = Matrix<Rat>(n, n);
    Matrix<Scalar> m = so[size_t(g)].vertical_matrix();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) rep[size_t(g)].at(i, j) = m.at(i, j).constant_value();
    for (size_t j = 0; j < monos.size(); ++j) {
      ExtElement img = so[size_t(g)].apply(ExtElement::basis(monos[j]));
      for (size_t i = 0; i < monos.size(); ++i)
        rep[size_t(g)].at(4 + int(i), 4 + int(j)) = img.c[size_t(monos[i])].constant_value();
    }
  }
  auto comps = isotypic_decompose(rep);
  REQUIRE(comps.size() == 2);
  Matrix<Rat> sum(n, n);
  for (auto& c : comps) {
    CHECK(c.projector * c.projector == c.projector);
    for (int g = 0; g < 6; ++g)
      CHECK(c.projector * rep[size_t(g)] == rep[size_t(g)] * c.projector);
    sum = sum + c.projector;
  }
  CHECK(sum == Matrix<Rat>::identity(n));
  CHECK(comps[0].projector * comps[1].projector == Matrix<Rat>(n, n));
}

TEST_SUITE_END();
