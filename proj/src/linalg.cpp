#include "gle/linalg.hpp"

namespace gle {

namespace {

// Clear denominators: returns integer matrix D*m with D > 0 the lcm of all
// entry denominators. Minors pick up known positive powers of D.
Matrix<Rat> to_integer(const Matrix<Rat>& m) {
  Int lcm(1);
  for (auto& x : m.a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  Matrix<Rat> r = m;
  if (lcm != 1) {
    Rat f(lcm);
    for (auto& x : r.a) x *= f;
  }
  return r;
}

}  // namespace

Rat det_bareiss(Matrix<Rat> m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return Rat(1);
  Matrix<Rat> w = to_integer(m);
  // det(w) = D^n det(m) with D the denominator lcm.
  Int lcm(1);
  for (auto& x : m.a) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());

  Rat prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(w.at(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero(w.at(i, k))) { p = i; break; }
      if (p < 0) return Rat(0);
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  Rat det = w.at(n - 1, n - 1) * sign;
  Rat dn(1);
  for (int i = 0; i < n; ++i) dn *= Rat(lcm);
  return det / dn;
}

int first_nonpositive_leading_minor(const Matrix<Rat>& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  Matrix<Rat> w = to_integer(m);
  // Bareiss without pivoting: after step k, w[k][k] is the k+1-st leading
  // principal minor of the integer matrix. A positive definite matrix never
  // produces a zero pivot, so hitting one reports the offending index.
  Rat prev(1);
  for (int k = 0; k < n; ++k) {
    if (sgn(w.at(k, k)) <= 0) return k + 1;
    if (k == n - 1) break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
    prev = w.at(k, k);
  }
  return 0;
}

}  // namespace gle
