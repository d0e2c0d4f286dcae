#include "doctest.h"
#include "gle/glaoid.hpp"
#include "gle/rng.hpp"

using namespace gle;

namespace {

// Random homogeneous element with sparse polynomial coefficients.
LElement random_homogeneous(Rng& rng, int degree, bool constant = false) {
  LElement e;
  const auto& monos = degree_monos(degree);
  for (int t = 0; t < 3; ++t) {
    int mask = monos[rng.below(monos.size())];
    int g = int(rng.below(kNumGenerators));
    Scalar c = constant ? Scalar(rng.rat()) : rng.scalar(2, 1);
    CDer d = CDer::generator(g) * c;
    e += LElement::term(mask, d);
  }
  return e;
}

int graded_sign(int a, int b) { return (a * b) % 2 ? -1 : 1; }

}  // namespace

TEST_SUITE_BEGIN("glaoid");

TEST_CASE("bracket examples") {
  // [theta_0 ⊗ d0, theta_0 ⊗ d0] = 0
  LElement a = LElement::term(1, CDer::lift(0));
  CHECK(l_bracket(a, a).is_zero());
  // [1 ⊗ sigma_23, theta_2 ⊗ d0] = theta_3 ⊗ d0
  LElement s = LElement::term(0, CDer::sigma(kSigma23));
  LElement t = LElement::term(1 << 2, CDer::lift(0));
  LElement expect = LElement::term(1 << 3, -CDer::lift(0));
  // sigma_23(theta_2) = -theta_3 per the matrix rules
  CHECK(l_bracket(s, t) == expect);
}

TEST_CASE("Leibniz against the anchor") {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    int da = int(rng.below(3)), db = int(rng.below(3));
    LElement x = random_homogeneous(rng, da);
    LElement y = random_homogeneous(rng, db);
    Scalar f = rng.scalar(2, 2);
    // [x, f y] = rho(x)(f) ∧ y + f [x, y]   (f has degree 0)
    LElement lhs = l_bracket(x, y * f);
    LElement rhs = wedge_ext(anchor_on_scalar(x, f), y) + l_bracket(x, y) * f;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded antisymmetry") {
  Rng rng(32);
  for (int i = 0; i < 50; ++i) {
    int da = int(rng.below(3)), db = int(rng.below(3));
    LElement x = random_homogeneous(rng, da);
    LElement y = random_homogeneous(rng, db);
    LElement lhs = l_bracket(x, y);
    LElement rhs = l_bracket(y, x) * Rat(-graded_sign(da, db));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded Jacobi on random homogeneous triples") {
  Rng rng(33);
  for (int i = 0; i < 50; ++i) {
    int da = int(rng.below(2)), db = int(rng.below(2)), dc = int(rng.below(2));
    LElement x = random_homogeneous(rng, da);
    LElement y = random_homogeneous(rng, db);
    LElement z = random_homogeneous(rng, dc);
    LElement j = l_bracket(x, l_bracket(y, z)) * Rat(1) +
                 l_bracket(y, l_bracket(z, x)) * Rat(graded_sign(da, db + dc)) +
                 l_bracket(z, l_bracket(x, y)) * Rat(graded_sign(dc, da + db));
    CHECK(j.is_zero());
  }
}

TEST_CASE("anchor is a bracket morphism") {
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    int da = int(rng.below(2)), db = int(rng.below(2));
    LElement x = random_homogeneous(rng, da);
    LElement y = random_homogeneous(rng, db);
    Scalar f = rng.scalar(2, 2);
    // rho([x,y])(f) = rho(x)(rho(y)(f)) - (-1)^{da db} rho(y)(rho(x)(f))
    ExtElement lhs = anchor_on_scalar(l_bracket(x, y), f);
    ExtElement rhs = anchor_on_ext(x, anchor_on_scalar(y, f)) -
                     anchor_on_ext(y, anchor_on_scalar(x, f)) * Scalar(Rat(graded_sign(da, db)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("anchor examples") {
  LElement d0 = LElement::term(0, CDer::lift(0));
  ExtElement r = anchor_on_scalar(d0, Scalar::variable(0));
  CHECK(r == ExtElement::scalar(Scalar(1)));
  // anchor(theta_1 ⊗ sigma_23)(theta_2) = theta_1 ∧ sigma_23(theta_2) = -theta_1 ∧ theta_3
  LElement a = LElement::term(1 << 1, CDer::sigma(kSigma23));
  ExtElement img = anchor_on_ext(a, ExtElement::basis(1 << 2));
  ExtElement expect = ExtElement::basis((1 << 1) | (1 << 3)) * Scalar(-1);
  CHECK(img == expect);
}

TEST_CASE("explicit ideal basis: rank 10, anchored to zero") {
  auto basis = ideal_basis_explicit();
  CHECK(basis.size() == 10);
  SpanBasis<Rat> span(kLDim);
  for (auto& e : basis) {
    CHECK(e.homogeneous(2));
    CHECK(in_anchor_kernel(e));
    span.add(l_flatten_const(e));
  }
  CHECK(span.rank() == 10);
  // spec example: S = E11 - E22 gives
  // (theta0 theta1) sigma_1 - (theta2 theta3) sigma_23
  // - (theta0 theta2) sigma_2 + (theta3 theta1) sigma_31
  LElement want;
  want += LElement::term(0b0011, CDer::sigma(kSigma1));
  want += LElement::term(0b1100, -CDer::sigma(kSigma23));
  want += LElement::term(0b0101, -CDer::sigma(kSigma2));
  want += LElement::term(0b1010, -CDer::sigma(kSigma31));
  // theta3 theta1 = -theta1 theta3: +(theta3 theta1) sigma_31 = -(theta1 theta3) sigma_31
  SpanBasis<Rat> sb(kLDim);
  sb.add(l_flatten_const(want));
  // that element is the difference of the first and second diagonal basis vectors
  LElement diff = basis[0] - basis[1];
  CHECK(sb.contains(l_flatten_const(diff)));
}

TEST_CASE("isotypic ideal spans the same subspace") {
  auto explicit_b = ideal_basis_explicit();
  auto iso = ideal_basis_isotypic();
  CHECK(iso.size() == 10);
  SpanBasis<Rat> se(kLDim), si(kLDim);
  for (auto& e : explicit_b) se.add(l_flatten_const(e));
  for (auto& e : iso) si.add(l_flatten_const(e));
  CHECK(se.equals(si));
}

TEST_CASE("complementary components of m^2 are not in I") {
  auto mk = anchor_kernel_basis(2);
  const auto& ctx = IdealContext::get();
  const auto& slots = degree_slots(2);
  int outside = 0;
  for (auto& v : mk) {
    Vec<Rat> full(size_t(kLDim), Rat(0));
    for (size_t i = 0; i < slots.size(); ++i) full[size_t(slots[i])] = v[i];
    if (!ctx.contains(l_unflatten_const(full))) ++outside;
  }
  CHECK(outside > 0);  // m^2 strictly contains I^2
  CHECK(mk.size() > 10);
}

TEST_CASE("saturated ideal ranks 10, 16, 6") {
  const auto& ctx = IdealContext::get();
  CHECK(ctx.ideal().basis2.size() == 10);
  CHECK(ctx.ideal().basis3.size() == 16);
  CHECK(ctx.ideal().basis4.size() == 6);
  for (auto& e : ctx.ideal().basis3) CHECK(in_anchor_kernel(e));
  for (auto& e : ctx.ideal().basis4) CHECK(in_anchor_kernel(e));
}

TEST_CASE("ideal is closed under the bracket with L") {
  const auto& ctx = IdealContext::get();
  // 11 basis generators plus two function-coefficient generators: 13 total.
  std::vector<LElement> gens;
  for (int g = 0; g < kNumGenerators; ++g) gens.push_back(LElement::term(0, CDer::generator(g)));
  gens.push_back(LElement::term(0, CDer::sigma(kSigma1) * Scalar::variable(0)));
  gens.push_back(LElement::term(0, CDer::lift(0) * Scalar::variable(1)));
  for (auto& g : gens)
    for (auto& i : ctx.ideal().basis2) CHECK(ctx.contains(l_bracket(g, i)));
  // degree-1 sampled generators against all of I
  Rng rng(35);
  for (int t = 0; t < 10; ++t) {
    LElement g = LElement::term(1 << rng.below(4), CDer::generator(int(rng.below(11))) * rng.scalar(2, 1));
    for (int d = 2; d <= 4; ++d)
      for (auto& i : ctx.ideal_basis(d)) CHECK(ctx.contains(l_bracket(g, i)));
  }
}

TEST_CASE("degree rank table L, I, E") {
  const auto& ctx = IdealContext::get();
  int l_expect[5] = {11, 44, 66, 44, 11};
  int i_expect[5] = {0, 0, 10, 16, 6};
  int e_expect[5] = {11, 44, 56, 28, 5};
  int total = 0;
  for (int k = 0; k <= 4; ++k) {
    CHECK(ctx.l_rank(k) == l_expect[k]);
    CHECK(ctx.i_rank(k) == i_expect[k]);
    CHECK(ctx.e_rank(k) == e_expect[k]);
    total += ctx.e_rank(k);
  }
  CHECK(total == 144);
}

TEST_CASE("reduction is idempotent and kills the ideal") {
  const auto& ctx = IdealContext::get();
  Rng rng(36);
  for (auto& i : ctx.ideal().basis2) CHECK(ctx.reduce(i).is_zero());
  for (auto& i : ctx.ideal().basis4) CHECK(ctx.reduce(i).is_zero());
  for (int t = 0; t < 20; ++t) {
    LElement e = random_homogeneous(rng, int(rng.below(5)));
    LElement r = ctx.reduce(e);
    CHECK(ctx.reduce(r) == r);
    CHECK(ctx.contains(e - r));
  }
}

TEST_CASE("induced bracket on E is well defined") {
  const auto& ctx = IdealContext::get();
  Rng rng(37);
  for (int t = 0; t < 20; ++t) {
    LElement a = random_homogeneous(rng, int(rng.below(3)));
    LElement b = random_homogeneous(rng, int(rng.below(3)));
    const auto& ib = ctx.ideal_basis(2 + int(rng.below(3)));
    LElement i = ib[rng.below(ib.size())] * rng.scalar(2, 1);
    CHECK(ctx.reduce(l_bracket(a + i, b)) == ctx.reduce(l_bracket(a, b)));
  }
}

TEST_CASE("mc defect") {
  EElement mink = minkowski_element();
  CHECK(nondegenerate(mink));
  CHECK(mc_defect(mink).is_zero());
  // perturbed element fails MC
  LElement pert = mink.rep + LElement::term(1 << 1, CDer::sigma(kSigma0) * Scalar::variable(0));
  EElement x = reduce_mod_ideal(pert);
  CHECK(!mc_defect(x).is_zero());
}

TEST_SUITE_END();
