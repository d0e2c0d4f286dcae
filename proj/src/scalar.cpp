#include "gle/scalar.hpp"

#include <cctype>

namespace gle {

void Scalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly g = Poly::gcd(num_, den_);
    if (!(g == Poly(Rat(1)))) {
      num_ = Poly::divexact(num_, g);
      den_ = Poly::divexact(den_, g);
    }
  }
  // Make the denominator integer-primitive with positive leading coefficient.
  Rat c = den_.content();
  if (!(c == Rat(1))) {
    den_ = den_ * (Rat(1) / c);
    num_ = num_ * (Rat(1) / c);
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::derivative(int mu) const {
  // Quotient rule; normalization reduces the result.
  return Scalar(num_.derivative(mu) * den_ - num_ * den_.derivative(mu), den_ * den_);
}

Rat Scalar::eval(const std::array<Rat, 4>& x) const {
  Rat d = den_.eval(x);
  if (sgn(d) == 0) throw DivisionByZero();
  return num_.eval(x) / d;
}

double Scalar::eval_double(const std::array<double, 4>& x) const {
  return num_.eval_double(x) / den_.eval_double(x);
}

std::string Scalar::str() const {
  if (is_polynomial()) {
    Rat d = den_.constant_value();
    if (d == Rat(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  Scalar parse_expr() {
    Scalar r = parse_term();
    while (true) {
      if (accept('+')) r += parse_term();
      else if (accept('-')) r -= parse_term();
      else return r;
    }
  }

  Scalar parse_term() {
    Scalar r = parse_factor();
    while (true) {
      if (accept('*')) r *= parse_factor();
      else if (accept('/')) r /= parse_factor();
      else return r;
    }
  }

  Scalar parse_factor() {
    int sign = 1;
    while (true) {
      if (accept('-')) sign = -sign;
      else if (accept('+')) {}
      else break;
    }
    Scalar base = parse_primary();
    if (accept('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw ParseError("expected exponent at position " + std::to_string(pos));
      base = base.pow(std::stoi(s.substr(start, pos - start)));
    }
    return sign < 0 ? -base : base;
  }

  Scalar parse_primary() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of input");
    if (accept('(')) {
      Scalar r = parse_expr();
      if (!accept(')')) throw ParseError("expected ')' at position " + std::to_string(pos));
      return r;
    }
    char c = s[pos];
    if (c == 'x') {
      ++pos;
      if (pos >= s.size() || s[pos] < '0' || s[pos] > '3')
        throw ParseError("expected variable index 0..3 at position " + std::to_string(pos));
      int v = s[pos] - '0';
      ++pos;
      return Scalar::variable(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return Scalar(Rat(Int(s.substr(start, pos - start))));
    }
    throw ParseError(std::string("unexpected character '") + c + "' at position " +
                     std::to_string(pos));
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& str) {
  Parser p(str);
  Scalar r = p.parse_expr();
  p.skip_ws();
  if (p.pos != str.size()) throw ParseError("trailing input at position " + std::to_string(p.pos));
  return r;
}

Poly Poly::parse(const std::string& str) {
  Scalar s = Scalar::parse(str);
  if (!s.is_polynomial()) throw ParseError("expected polynomial, got rational function");
  return s.num() * (Rat(1) / s.den().constant_value());
}

}  // namespace gle
