#include "gle/poly.hpp"

#include <algorithm>
#include <vector>

namespace gle {

void Poly::add_term(const Mono& m, const Rat& c) {
  if (gle::is_zero(c)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (gle::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (gle::is_zero(c)) return Poly();
  Poly r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(Rat(1));
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(int v) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int e = m.exp(v);
    if (e == 0) continue;
    Mono mm = m;
    mm.set_exp(v, e - 1);
    r.add_term(mm, c * e);
  }
  return r;
}

Rat Poly::eval(const std::array<Rat, 4>& x) const {
  Rat r(0);
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < kNumVars; ++v)
      for (int e = 0; e < m.exp(v); ++e) t *= x[v];
    r += t;
  }
  return r;
}

double Poly::eval_double(const std::array<double, 4>& x) const {
  double r = 0;
  for (auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int v = 0; v < kNumVars; ++v)
      for (int e = 0; e < m.exp(v); ++e) t *= x[v];
    r += t;
  }
  return r;
}

Rat Poly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_gcd(0), den_lcm(1);
  for (auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(lead_coeff()) < 0) c = -c;
  return c;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  Poly r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k / c);
  return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::logic_error("divexact by zero");
  Poly rem = a, q;
  while (!rem.is_zero()) {
    const Mono& lm = rem.lead_mono();
    if (!b.lead_mono().divides(lm)) throw std::logic_error("divexact: not divisible");
    Mono qm = lm.quotient(b.lead_mono());
    Rat qc = rem.lead_coeff() / b.lead_coeff();
    Poly t;
    t.terms_.emplace(qm, qc);
    q += t;
    rem -= t * b;
  }
  return q;
}

namespace {

// View p as a univariate polynomial in variable v with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, int v) {
  std::vector<Poly> cs(size_t(std::max(0, p.degree_in(v)) + 1));
  for (auto& [m, c] : p.terms()) {
    Mono mm = m;
    int e = m.exp(v);
    mm.set_exp(v, 0);
    cs[size_t(e)].add_term(mm, c);
  }
  while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
  return cs;
}

// Content with respect to variable v: gcd of the coefficient polynomials.
Poly content_in(const Poly& p, int v) {
  Poly g;
  for (auto& c : coeffs_in(p, v))
    if (!c.is_zero()) g = Poly::gcd(g, c);
  return g;
}

// Pseudo-remainder of a by b in variable v.
Poly prem(Poly a, const Poly& b, int v) {
  auto bc = coeffs_in(b, v);
  int db = int(bc.size()) - 1;
  Poly blc = bc.back();
  while (true) {
    auto ac = coeffs_in(a, v);
    int da = a.is_zero() ? -1 : int(ac.size()) - 1;
    if (da < db) return a;
    Poly alc = ac.back();
    // a <- blc*a - alc*v^(da-db)*b
    a = blc * a - alc * Poly::variable(v, da - db) * b;
  }
}

}  // namespace

namespace {

// Substitute the integer xi for variable v.
Poly eval_var(const Poly& p, int v, const Int& xi) {
  Poly r;
  for (auto& [m, c] : p.terms()) {
    Int f(1);
    for (int e = 0; e < m.exp(v); ++e) f *= xi;
    Mono mm = m;
    mm.set_exp(v, 0);
    r.add_term(mm, c * Rat(f));
  }
  return r;
}

bool divides_exactly(const Poly& a, const Poly& g, Poly* quot = nullptr) {
  try {
    Poly q = Poly::divexact(a, g);
    if (quot) *quot = q;
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

// Largest |numerator| over the (integer) coefficients.
Int max_abs_coeff(const Poly& p) {
  Int m(0);
  for (auto& [mono, c] : p.terms()) {
    Int a = abs(c.get_num());
    if (a > m) m = a;
  }
  return m;
}

// Coefficient-wise balanced residue mod xi, in [-xi/2, xi/2).
Poly balanced_mod(const Poly& p, const Int& xi) {
  Poly r;
  Int half = xi / 2;
  for (auto& [m, c] : p.terms()) {
    Int q = c.get_num();  // integer coefficients by construction
    Int res;
    mpz_fdiv_r(res.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
    if (res >= half) res -= xi;
    if (res != 0) r.add_term(m, Rat(res));
  }
  return r;
}

// Heuristic gcd on integer-primitive polynomials (Char-Geddes-Gonnet):
// evaluate one variable at a large integer, recurse, lift back through the
// balanced base-xi digits, certify by exact division.
bool gcd_heu(const Poly& a, const Poly& b, Poly& out, int depth);

bool gcd_heu_with_var(const Poly& a, const Poly& b, int v, Poly& out, int depth) {
  Int bound = std::min(max_abs_coeff(a), max_abs_coeff(b));
  Int xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Poly av = eval_var(a, v, xi), bv = eval_var(b, v, xi);
    Poly gxi;
    if (gcd_heu(av, bv, gxi, depth + 1)) {
      // Reconstruct candidate digits in base xi.
      Poly g;
      Poly rem = gxi;
      int e = 0;
      bool ok = true;
      while (!rem.is_zero()) {
        if (e > 60) { ok = false; break; }
        Poly digit = balanced_mod(rem, xi);
        if (!digit.is_zero()) g += digit * Poly::variable(v, e);
        rem = rem - digit;
        // exact coefficient-wise division by xi
        Poly next;
        for (auto& [m, c] : rem.terms()) next.add_term(m, c / Rat(xi));
        rem = next;
        ++e;
      }
      // No primitive part here: the integer content of the digits encodes
      // the lower recursion levels' variables.
      if (ok && !g.is_zero() && divides_exactly(a, g) && divides_exactly(b, g)) {
        out = g;
        return true;
      }
    }
    xi = 2 * xi + 29;
  }
  return false;
}

bool gcd_heu(const Poly& a, const Poly& b, Poly& out, int depth) {
  if (depth > 8) return false;
  if (a.is_zero()) { out = b; return true; }
  if (b.is_zero()) { out = a; return true; }
  if (a.is_constant() || b.is_constant()) {
    // Integer-primitive inputs have integer coefficients; content gcd.
    Int ga = a.content().get_num(), gb = b.content().get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    out = Poly(Rat(g));
    return true;
  }
  // Variable with smallest positive combined degree.
  int v = -1, best = 1 << 20;
  for (int i = 0; i < kNumVars; ++i) {
    int da = a.degree_in(i), db = b.degree_in(i);
    if (da <= 0 && db <= 0) continue;
    if (da <= 0 || db <= 0) {
      // gcd cannot involve x_i; it divides the coefficients of the operand
      // containing x_i. Defer: treat like any candidate variable.
    }
    int d = std::max(da, 0) + std::max(db, 0);
    if (d < best) { best = d; v = i; }
  }
  if (v < 0) { out = Poly(Rat(1)); return true; }
  return gcd_heu_with_var(a, b, v, out, depth);
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  a = a.primitive_part();
  b = b.primitive_part();
  Poly g;
  if (gcd_heu(a, b, g, 0)) return g.primitive_part();

  // Fallback: primitive Euclidean remainder sequence in the first variable.
  int v = -1;
  for (int i = 0; i < kNumVars && v < 0; ++i)
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) v = i;
  if (v < 0) return Poly(Rat(1));
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly gc = gcd(ca, cb);
  Poly f1 = divexact(a, ca), f2 = divexact(b, cb);
  if (f1.degree_in(v) < f2.degree_in(v)) std::swap(f1, f2);
  while (true) {
    Poly r = prem(f1, f2, v);
    if (r.is_zero()) break;
    Poly cr = content_in(r, v);
    f1 = f2;
    f2 = divexact(r, cr);
    if (f2.degree_in(v) == 0) { f2 = Poly(Rat(1)); break; }
  }
  return (gc * f2).primitive_part();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // Print descending in the canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Mono& m = it->first;
    Rat c = it->second;
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (neg) c = -c;
    std::string coeff = c.get_str();
    bool has_vars = m.bits != 0;
    if (!has_vars) {
      out += coeff;
    } else {
      bool printed = false;
      if (coeff != "1") {
        out += coeff;
        printed = true;
      }
      for (int v = 0; v < kNumVars; ++v) {
        int e = m.exp(v);
        if (e == 0) continue;
        if (printed) out += "*";
        out += "x" + std::to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
        printed = true;
      }
    }
  }
  return out;
}

}  // namespace gle
