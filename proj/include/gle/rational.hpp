#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gle {

using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }

/// Gaussian rational a + b*i, the coefficient field for isotypic projections
/// and Hermitian forms with constant entries.
struct Gaussian {
  Rat re, im;

  Gaussian() : re(0), im(0) {}
  Gaussian(const Rat& r) : re(r), im(0) {}
  Gaussian(const Rat& r, const Rat& i) : re(r), im(i) {}
  Gaussian(long r) : re(r), im(0) {}

  static Gaussian i() { return Gaussian(Rat(0), Rat(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian operator/(const Gaussian& o) const {
    Rat n = o.norm2();
    Gaussian t = *this * o.conj();
    return {t.re / n, t.im / n};
  }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

inline bool is_zero(const Gaussian& a) { return a.is_zero(); }

inline std::string to_string(const Gaussian& a) {
  if (sgn(a.im) == 0) return a.re.get_str();
  if (sgn(a.re) == 0) return a.im.get_str() + "*i";
  return a.re.get_str() + (sgn(a.im) > 0 ? "+" : "") + a.im.get_str() + "*i";
}

}  // namespace gle
