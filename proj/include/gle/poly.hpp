#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "gle/rational.hpp"

namespace gle {

constexpr int kNumVars = 4;  // coordinates x0..x3

/// Exponent vector of a monomial in x0..x3, packed 8 bits per variable.
struct Mono {
  uint32_t bits = 0;

  int exp(int v) const { return int((bits >> (8 * v)) & 0xff); }
  void set_exp(int v, int e) {
    bits = (bits & ~(0xffu << (8 * v))) | (uint32_t(e) << (8 * v));
  }
  int total_degree() const { return exp(0) + exp(1) + exp(2) + exp(3); }

  Mono operator*(const Mono& o) const { return {bits + o.bits}; }
  bool divides(const Mono& o) const {
    for (int v = 0; v < kNumVars; ++v)
      if (exp(v) > o.exp(v)) return false;
    return true;
  }
  Mono quotient(const Mono& o) const { return {bits - o.bits}; }
  bool operator==(const Mono& o) const { return bits == o.bits; }
};

/// Graded lexicographic order; total on monomials, used for canonical form.
struct MonoCmp {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.bits < b.bits;
  }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

/// Sparse polynomial in x0..x3 with rational coefficients.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, MonoCmp>;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (!gle::is_zero(c)) terms_[Mono{}] = c;
  }
  Poly(long c) : Poly(Rat(c)) {}

  static Poly variable(int v, int e = 1) {
    Poly p;
    Mono m;
    m.set_exp(v, e);
    p.terms_[m] = 1;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.bits == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rat(0) : it->second;
  }
  int total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total_degree();
  }
  int degree_in(int v) const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.exp(v));
    return d;
  }

  // Leading term under graded lex.
  const Mono& lead_mono() const { return terms_.rbegin()->first; }
  const Rat& lead_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int e) const;
  Poly derivative(int v) const;
  Rat eval(const std::array<Rat, 4>& x) const;
  double eval_double(const std::array<double, 4>& x) const;

  /// Rational content: c such that (*this)/c has coprime integer coefficients
  /// and positive leading coefficient. Zero polynomial has content 0.
  Rat content() const;
  Poly primitive_part() const;

  /// Exact division; throws std::logic_error if not exact.
  static Poly divexact(const Poly& a, const Poly& b);
  /// Gcd, normalized to primitive with positive leading coefficient.
  static Poly gcd(Poly a, Poly b);

  std::string str() const;
  static Poly parse(const std::string& s);  // full expression grammar, see scalar.hpp

 private:
  TermMap terms_;  // nonzero coefficients only
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

}  // namespace gle
