#pragma once

#include "gle/rational.hpp"
#include "gle/scalar.hpp"

namespace gle {

/// Complexified scalar re + i*im with Scalar components. Conjugation is the
/// involutive ring anti-automorphism fixing Scalar.
struct CScalar {
  Scalar re, im;

  CScalar() = default;
  CScalar(const Scalar& r) : re(r) {}
  CScalar(const Scalar& r, const Scalar& i) : re(r), im(i) {}
  CScalar(long r) : re(r) {}
  CScalar(const Gaussian& g) : re(g.re), im(g.im) {}

  static CScalar i() { return CScalar(Scalar(0), Scalar(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  CScalar conj() const { return {re, -im}; }
  Scalar norm2() const { return re * re + im * im; }

  CScalar operator-() const { return {-re, -im}; }
  CScalar operator+(const CScalar& o) const { return {re + o.re, im + o.im}; }
  CScalar operator-(const CScalar& o) const { return {re - o.re, im - o.im}; }
  CScalar operator*(const CScalar& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CScalar operator/(const CScalar& o) const {
    Scalar n = o.norm2();
    if (n.is_zero()) throw DivisionByZero();
    CScalar t = *this * o.conj();
    return {t.re / n, t.im / n};
  }
  CScalar& operator+=(const CScalar& o) { re += o.re; im += o.im; return *this; }
  CScalar& operator-=(const CScalar& o) { *this = *this - o; return *this; }
  CScalar& operator*=(const CScalar& o) { *this = *this * o; return *this; }
  bool operator==(const CScalar& o) const { return re == o.re && im == o.im; }
  bool operator!=(const CScalar& o) const { return !(*this == o); }

  CScalar derivative(int mu) const { return {re.derivative(mu), im.derivative(mu)}; }
  std::string str() const {
    if (im.is_zero()) return re.str();
    return "(" + re.str() + ") + i*(" + im.str() + ")";
  }
};

inline bool is_zero(const CScalar& a) { return a.is_zero(); }

}  // namespace gle
