#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "gle/poly.hpp"

namespace gle {

class DivisionByZero : public std::runtime_error {
 public:
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Exact rational function in x0..x3. The model of smooth functions: closed
/// under field operations and partial derivatives, with decidable equality.
///
/// Canonical form: gcd(num, den) = 1, den integer-primitive with positive
/// leading coefficient (so den = 1 for polynomials).
class Scalar {
 public:
  Scalar() : num_(), den_(Rat(1)) {}
  Scalar(long c) : num_(Rat(c)), den_(Rat(1)) {}
  Scalar(const Rat& c) : num_(c), den_(Rat(1)) {}
  explicit Scalar(const Poly& p) : num_(p), den_(Rat(1)) {}
  Scalar(const Poly& n, const Poly& d) : num_(n), den_(d) { normalize(); }

  static Scalar variable(int v) { return Scalar(Poly::variable(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }
  // Semantic equality by cross-multiplication; does not rely on the stored
  // fractions being fully reduced.
  bool operator==(const Scalar& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Exact partial derivative with respect to x^mu.
  Scalar derivative(int mu) const;

  Rat eval(const std::array<Rat, 4>& x) const;
  double eval_double(const std::array<double, 4>& x) const;

  std::string str() const;
  static Scalar parse(const std::string& s);

 private:
  void normalize();
  Poly num_, den_;
};

inline Scalar operator*(const Rat& c, const Scalar& s) { return Scalar(c) * s; }

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Partial derivative operator, spec-level entry point.
inline Scalar partial(int mu, const Scalar& f) { return f.derivative(mu); }

}  // namespace gle
