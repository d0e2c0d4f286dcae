#include "doctest.h"
#include "gle/linalg.hpp"
#include "gle/rng.hpp"
#include "gle/scalar.hpp"

using namespace gle;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rref rank and kernel over Q") {
  Matrix<Rat> m(3, 4);
  // rows: [1 2 3 4; 2 4 6 8; 0 1 1 0]
  Rat vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = vals[r][c];
  CHECK(rank(m) == 2);
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (auto& v : ker) {
    auto img = m.apply(v);
    for (auto& x : img) CHECK(sgn(x) == 0);
  }
}

TEST_CASE("solve and inverse") {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    int n = 4;
    Matrix<Rat> m(n, n);
    for (auto& x : m.a) x = rng.rat();
    auto inv = inverse(m);
    if (!inv) continue;
    CHECK((m * *inv) == Matrix<Rat>::identity(n));
    Vec<Rat> b(size_t(n), Rat(0));
    for (auto& x : b) x = rng.rat();
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    auto mb = m.apply(*x);
    for (int i = 0; i < n; ++i) CHECK(mb[size_t(i)] == b[size_t(i)]);
  }
}

TEST_CASE("bareiss determinant matches cofactor on small cases") {
  Matrix<Rat> m(3, 3);
  Rat vals[3][3] = {{Rat(1, 2), 2, 3}, {0, Rat(1, 3), 1}, {5, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r][c];
  // det = 1/2*(1/3*1-0) - 2*(0-5) + 3*(0-5/3)
  Rat expect = Rat(1, 2) * Rat(1, 3) + Rat(10) - Rat(5);
  CHECK(det_bareiss(m) == expect);
}

TEST_CASE("positive definiteness by exact minors") {
  Matrix<Rat> m(3, 3);
  Rat vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r][c];
  CHECK(positive_definite(m));
  m.at(0, 0) = Rat(0);
  CHECK(first_nonpositive_leading_minor(m) == 1);
}

TEST_CASE("span basis membership") {
  SpanBasis<Rat> sp(3);
  CHECK(sp.add({Rat(1), Rat(0), Rat(1)}));
  CHECK(sp.add({Rat(0), Rat(1), Rat(1)}));
  CHECK(!sp.add({Rat(1), Rat(1), Rat(2)}));
  CHECK(sp.contains({Rat(2), Rat(-3), Rat(-1)}));
  CHECK(!sp.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST_CASE("elimination over the rational function field") {
  // Generic rank computations also run with Scalar entries.
  Scalar x0 = Scalar::variable(0);
  Matrix<Scalar> m(2, 2);
  m.at(0, 0) = x0;
  m.at(0, 1) = Scalar(1);
  m.at(1, 0) = x0 * x0;
  m.at(1, 1) = x0;
  CHECK(rank(m) == 1);
  m.at(1, 1) = x0 + Scalar(1);
  CHECK(rank(m) == 2);
}

TEST_SUITE_END();
