#include "doctest.h"
#include "gle/rng.hpp"
#include "gle/spinor.hpp"

using namespace gle;

namespace {

Matrix<CScalar> cmat(std::initializer_list<CScalar> e) {
  Matrix<CScalar> m(2, 2);
  int i = 0;
  for (auto& x : e) m.a[size_t(i++)] = x;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("spinor");

TEST_CASE("standard basis gives the standard frame") {
  Matrix<CScalar> id = cmat({CScalar(Scalar(1)), CScalar(), CScalar(), CScalar(Scalar(1))});
  SpinorFrame f = spinor_to_frame(id);
  Matrix<Scalar> eta(4, 4);
  eta.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta.at(i, i) = Scalar(1);
  CHECK(f.gram == eta);
}

TEST_CASE("determinant-one basis change gives a proper Lorentz frame") {
  // rational SL2 matrix
  CScalar one(Scalar(1)), im = CScalar::i();
  Matrix<CScalar> g = cmat({one + im, CScalar(Scalar(1)), im, one});
  // det = (1+i)*1 - 1*(i) = 1
  SpinorFrame f = spinor_to_frame(g);
  Matrix<Scalar> eta(4, 4);
  eta.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta.at(i, i) = Scalar(1);
  CHECK(f.gram == eta);  // unimodular change preserves the representative
  // frame is related to the standard one by the matrix L[b][a] with
  // theta'_a = sum_b L[b][a] theta_b; check L^T eta L = eta
  Matrix<Scalar> L(4, 4);
  for (int a = 0; a < 4; ++a) {
    // decompose theta'_a over the Pauli basis
    auto mix = f.theta[size_t(a)];
    CScalar half(Scalar(Rat(1, 2)));
    CScalar c0 = (mix.at(0, 0) + mix.at(1, 1)) * half;
    CScalar c1 = (mix.at(0, 1) + mix.at(1, 0)) * half;
    CScalar c2 = (mix.at(1, 0) - mix.at(0, 1)) * half * (-CScalar::i());
    CScalar c3 = (mix.at(0, 0) - mix.at(1, 1)) * half;
    const CScalar cs[4] = {c0, c1, c2, c3};
    for (int b = 0; b < 4; ++b) {
      REQUIRE(cs[b].im.is_zero());
      L.at(b, a) = cs[b].re;
    }
  }
  Matrix<Scalar> check(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Scalar acc;
      for (int c = 0; c < 4; ++c)
        acc += L.at(c, a) * L.at(c, b) * Rat(c == 0 ? -1 : 1);
      check.at(a, b) = acc;
    }
  CHECK(check == eta);
}

TEST_CASE("basis scaling rescales the inner product conformally") {
  Matrix<CScalar> g = cmat({CScalar(Scalar(2)), CScalar(), CScalar(), CScalar(Scalar(1))});
  SpinorFrame f = spinor_to_frame(g);
  // |det|^2 = 4 multiplies the Gram matrix
  Matrix<Scalar> eta4(4, 4);
  eta4.at(0, 0) = Scalar(-4);
  for (int i = 1; i < 4; ++i) eta4.at(i, i) = Scalar(4);
  CHECK(f.gram == eta4);
}

TEST_CASE("sigma table maps to the frame derivations of the same name") {
  std::array<Scalar, 4> zero_vf{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  for (int s = 0; s < kNumSigma; ++s) {
    CDer image = derend_v_morphism(spin_sigma(s), zero_vf);
    CHECK(image == CDer::sigma(s));
  }
  // kernel: i * identity maps to zero
  Matrix<CScalar> iid = cmat({CScalar::i(), CScalar(), CScalar(), CScalar::i()});
  CDer z = derend_v_morphism(iid, zero_vf);
  CHECK(z.is_zero());
}

TEST_CASE("morphism intertwines brackets") {
  std::array<Scalar, 4> zero_vf{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  Rng rng(91);
  for (int t = 0; t < 20; ++t) {
    Matrix<CScalar> d1(2, 2), d2(2, 2);
    for (auto& x : d1.a) x = CScalar(Scalar(rng.rat()), Scalar(rng.rat()));
    for (auto& x : d2.a) x = CScalar(Scalar(rng.rat()), Scalar(rng.rat()));
    CDer lhs = derend_v_morphism(d1 * d2 - d2 * d1, zero_vf);
    CDer rhs = bracket_cder(derend_v_morphism(d1, zero_vf), derend_v_morphism(d2, zero_vf));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ideal via the spinor representation") {
  SpinorIdealReport rep = ideal_via_representation();
  CHECK(rep.n_invariant);
  CHECK(rep.image_rank[0] == 0);
  CHECK(rep.image_rank[1] == 0);
  CHECK(rep.image_rank[2] == 10);
  CHECK(rep.image_rank[3] == 16);
  CHECK(rep.image_rank[4] == 6);
  CHECK(rep.total_rank == 32);
  CHECK(rep.equals_ideal);
}

TEST_SUITE_END();
