#include "doctest.h"
#include "gle/clifford.hpp"
#include "gle/rng.hpp"

using namespace gle;

namespace {

MultiVector random_mv(Rng& rng, int max_terms = 4) {
  MultiVector m;
  for (int t = 0; t < max_terms; ++t)
    m.c[rng.below(kBasisSize)] += Scalar(rng.rat());
  return m;
}

MultiVector theta(int i) { return MultiVector::basis(1 << i); }

}  // namespace

TEST_SUITE_BEGIN("clifford");

TEST_CASE("generator relations") {
  // theta_0^2 = 1, theta_i^2 = -1, anticommutation
  CHECK(clifford_mul(theta(0), theta(0)) == MultiVector::scalar(Scalar(1)));
  for (int i = 1; i < 4; ++i)
    CHECK(clifford_mul(theta(i), theta(i)) == MultiVector::scalar(Scalar(-1)));
  CHECK(clifford_mul(theta(1), theta(2)) == MultiVector::basis(0b0110));
  CHECK(clifford_mul(theta(2), theta(1)) == -MultiVector::basis(0b0110));
  // (theta_0 theta_1)^2 = 1
  MultiVector t01 = MultiVector::basis(0b0011);
  CHECK(clifford_mul(t01, t01) == MultiVector::scalar(Scalar(1)));
}

TEST_CASE("associativity on random triples") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    MultiVector a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
    CHECK(clifford_mul(clifford_mul(a, b), c) == clifford_mul(a, clifford_mul(b, c)));
  }
}

TEST_CASE("parity and filtration respected by products") {
  Rng rng(102);
  for (int i = 0; i < 50; ++i) {
    MultiVector a = random_mv(rng, 2), b = random_mv(rng, 2);
    MultiVector ab = clifford_mul(a, b);
    CHECK(ab.filtration_level() <= a.filtration_level() + b.filtration_level());
    int pa = a.parity(), pb = b.parity();
    if (pa >= 0 && pb >= 0 && !ab.is_zero()) CHECK(ab.parity() == ((pa + pb) % 2));
  }
}

TEST_CASE("transpose is the W-fixing anti-automorphism") {
  CHECK(transpose(MultiVector::scalar(Scalar(1))) == MultiVector::scalar(Scalar(1)));
  CHECK(transpose(MultiVector::basis(0b0011)) == -MultiVector::basis(0b0011));
  CHECK(transpose(MultiVector::basis(0b1110)) == -MultiVector::basis(0b1110));
  for (int i = 0; i < 4; ++i) CHECK(transpose(theta(i)) == theta(i));
  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    MultiVector a = random_mv(rng), b = random_mv(rng);
    CHECK(transpose(clifford_mul(a, b)) == clifford_mul(transpose(b), transpose(a)));
  }
}

TEST_CASE("module isomorphism Cl to wedge W") {
  // basis rule and mutual inverses
  CHECK(cl_to_ext(MultiVector::basis(0b0011)) == ExtElement::basis(0b0011));
  Rng rng(104);
  for (int i = 0; i < 20; ++i) {
    MultiVector a = random_mv(rng);
    CHECK(ext_to_cl(cl_to_ext(a)) == a);
  }
  // c_w intertwines the left Clifford action
  for (int i = 0; i < 20; ++i) {
    MultiVector a = random_mv(rng);
    std::array<Scalar, 4> w{};
    for (auto& x : w) x = Scalar(rng.rat());
    MultiVector left = clifford_mul(MultiVector::vector(w), a);
    CHECK(cl_to_ext(left) == clifford_action(w, cl_to_ext(a)));
  }
  // c_{theta_0}(theta_0 ^ theta_1) = theta_1 and c_{theta_1}(1) = theta_1
  std::array<Scalar, 4> w0{Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  CHECK(clifford_action(w0, ExtElement::basis(0b0011)) == ExtElement::basis(0b0010));
  std::array<Scalar, 4> w1{Scalar(0), Scalar(1), Scalar(0), Scalar(0)};
  CHECK(clifford_action(w1, ExtElement::scalar(Scalar(1))) == ExtElement::basis(0b0010));
}

TEST_CASE("wedge graded commutativity") {
  Rng rng(105);
  for (int i = 0; i < 50; ++i) {
    int dj = int(rng.below(5)), dk = int(rng.below(5));
    ExtElement a, b;
    for (int m = 0; m < kBasisSize; ++m) {
      if (mono_degree(m) == dj) a.c[size_t(m)] = Scalar(rng.rat());
      if (mono_degree(m) == dk) b.c[size_t(m)] = Scalar(rng.rat());
    }
    ExtElement ab = wedge(a, b), ba = wedge(b, a);
    if ((dj * dk) % 2 == 1) CHECK(ab == -ba);
    else CHECK(ab == ba);
  }
  for (int i = 0; i < 4; ++i) {
    ExtElement t = ExtElement::basis(1 << i);
    CHECK(wedge(t, t).is_zero());
  }
}

TEST_CASE("Gr compatibility: top part of product is the wedge") {
  Rng rng(106);
  for (int i = 0; i < 50; ++i) {
    MultiVector a = random_mv(rng), b = random_mv(rng);
    if (a.is_zero() || b.is_zero()) continue;
    int j = a.filtration_level(), k = b.filtration_level();
    MultiVector prod = clifford_mul(a, b);
    ExtElement top = cl_to_ext(prod).graded_part(j + k);
    ExtElement wedge_top = wedge(cl_to_ext(a).graded_part(j), cl_to_ext(b).graded_part(k));
    CHECK(top == wedge_top);
  }
}

TEST_CASE("finite Clifford group") {
  auto F = clifford_group();
  CHECK(F.size() == 32);
  for (auto& f : F)
    for (auto& g : F) {
      auto h = cl_group_mul(f, g);
      bool found = false;
      for (auto& e : F) found = found || (e == h);
      CHECK(found);
    }
  CHECK(character(0, {1, 0b0001}) == 1);
  CHECK(character(0, {1, 0b0010}) == -1);
  Rng rng(107);
  for (int i = 0; i < 50; ++i) {
    auto& f = F[rng.below(F.size())];
    auto& g = F[rng.below(F.size())];
    for (int k = 0; k < 4; ++k)
      CHECK(character(k, cl_group_mul(f, g)) == character(k, f) * character(k, g));
  }
  // chi_i(f) is the conjugation sign: f theta_i = chi theta_i f
  for (auto& f : F) {
    MultiVector fv = MultiVector::basis(f.mask) * Scalar(Rat(f.sign));
    for (int i = 0; i < 4; ++i) {
      MultiVector lhs = clifford_mul(fv, theta(i));
      MultiVector rhs = clifford_mul(theta(i), fv) * Scalar(Rat(character(i, f)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("invariant average") {
  S2Cl pi = invariant_average();
  CHECK(pi.is_symmetric());
  CHECK(pi.parity() == 0);  // even
  CHECK((pi * pi) == pi);   // idempotent
  for (int j = 0; j < 4; ++j) {
    std::array<Rat, 4> x{};
    x[size_t(j)] = Rat(1);
    CHECK(pi.mul_right_first(x) == pi.mul_right_second(x));
  }
  std::array<Rat, 4> mixed{Rat(2), Rat(-1), Rat(1, 3), Rat(5)};
  CHECK(pi.mul_right_first(mixed) == pi.mul_right_second(mixed));

  // pi(1 ⊗ theta_0) = (1/|F|) sum_f f ⊗ theta_0 f
  std::array<Rat, 4> e0{Rat(1), Rat(0), Rat(0), Rat(0)};
  S2Cl lhs = pi.mul_right_second(e0);
  S2Cl rhs;
  for (int m = 0; m < kBasisSize; ++m) {
    int sign = cl_blade_sign(1, m);  // theta_0 * theta_m
    rhs.t.at(m, 1 ^ m) += Gaussian(Rat(sign, 16));
  }
  CHECK(lhs == rhs);
}

TEST_CASE("average independent of generators (rational rotation)") {
  std::array<std::array<Rat, 4>, 4> gens{};
  gens[0] = {Rat(1), Rat(0), Rat(0), Rat(0)};
  gens[1] = {Rat(0), Rat(3, 5), Rat(4, 5), Rat(0)};
  gens[2] = {Rat(0), Rat(-4, 5), Rat(3, 5), Rat(0)};
  gens[3] = {Rat(0), Rat(0), Rat(0), Rat(1)};
  CHECK(invariant_average_for(gens) == invariant_average());
}

TEST_CASE("free module characterization") {
  CliffordModule reg = clifford_regular_module();
  auto rep = check_free_module(reg);
  CHECK(rep.free);
  CHECK(rep.rank == 1);
  CHECK(rep.t_valid);

  auto rep2 = check_free_module(module_direct_sum(reg, reg));
  CHECK(rep2.free);
  CHECK(rep2.rank == 2);

  CliffordModule half = half_spinor_module();
  CHECK(half.dim == 8);
  auto rep3 = check_free_module(half);
  CHECK(!rep3.free);
  CHECK(!rep3.t_exists);  // no even involution implementing P exists
}

TEST_SUITE_END();
