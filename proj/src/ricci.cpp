#include "gle/ricci.hpp"

#include "gle/hyperbolic.hpp"

namespace gle {

namespace {

Rat eta(int a) { return Rat(a == 0 ? -1 : 1); }

}  // namespace

AffineData to_connection(const EElement& x) {
  AffineData c;
  c.frame = Matrix<Scalar>(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) c.frame.at(a, mu) = x.rep.blocks[size_t(1 << a)].vec[size_t(mu)];
  auto inv = inverse(c.frame);
  if (!inv) throw Degenerate("frame block is singular");
  c.inv = *inv;  // Y[mu][a] with sum_mu X[b][mu] Y[mu][a] = delta_ab

  // vertical matrices of the grade-1 blocks
  std::array<Matrix<Scalar>, 4> vert;
  for (int a = 0; a < 4; ++a) vert[size_t(a)] = x.rep.blocks[size_t(1 << a)].vertical_matrix();

  // E_a = sum_mu X[a][mu] d_mu; nabla_mu dx^nu = -Gamma^nu_{mu lam} dx^lam
  for (int mu = 0; mu < 4; ++mu) c.gamma[size_t(mu)] = Matrix<Scalar>(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam) {
        Scalar acc;
        for (int a = 0; a < 4; ++a) {
          if (c.inv.at(mu, a).is_zero()) continue;
          Scalar inner;
          for (int cc = 0; cc < 4; ++cc) {
            if (c.inv.at(lam, cc).is_zero()) continue;
            // E_a(X[cc][nu]) + sum_b V_a[cc][b] X[b][nu]
            Scalar term;
            for (int rho = 0; rho < 4; ++rho)
              if (!c.frame.at(a, rho).is_zero())
                term += c.frame.at(a, rho) * c.frame.at(cc, nu).derivative(rho);
            for (int b = 0; b < 4; ++b)
              if (!vert[size_t(a)].at(cc, b).is_zero())
                term += vert[size_t(a)].at(cc, b) * c.frame.at(b, nu);
            inner += c.inv.at(lam, cc) * term;
          }
          acc += c.inv.at(mu, a) * inner;
        }
        c.gamma[size_t(mu)].at(nu, lam) = -acc;
      }

  // candidate metric eta_ab e^a e^b
  c.g = Matrix<Scalar>(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      Scalar acc;
      for (int a = 0; a < 4; ++a) acc += c.inv.at(mu, a) * c.inv.at(nu, a) * eta(a);
      c.g.at(mu, nu) = acc;
    }
  return c;
}

std::array<Matrix<Scalar>, 4> torsion(const AffineData& c) {
  std::array<Matrix<Scalar>, 4> t;
  for (int nu = 0; nu < 4; ++nu) {
    t[size_t(nu)] = Matrix<Scalar>(4, 4);
    for (int mu = 0; mu < 4; ++mu)
      for (int lam = 0; lam < 4; ++lam)
        t[size_t(nu)].at(mu, lam) =
            c.gamma[size_t(mu)].at(nu, lam) - c.gamma[size_t(lam)].at(nu, mu);
  }
  return t;
}

bool torsion_free(const AffineData& c) {
  auto t = torsion(c);
  for (auto& m : t)
    for (auto& e : m.a)
      if (!e.is_zero()) return false;
  return true;
}

namespace {

Matrix<Scalar> covariant_g(const AffineData& c, int mu) {
  Matrix<Scalar> d(4, 4);
  for (int nu = 0; nu < 4; ++nu)
    for (int lam = 0; lam < 4; ++lam) {
      Scalar acc = c.g.at(nu, lam).derivative(mu);
      for (int rho = 0; rho < 4; ++rho) {
        acc -= c.gamma[size_t(mu)].at(rho, nu) * c.g.at(rho, lam);
        acc -= c.gamma[size_t(mu)].at(rho, lam) * c.g.at(nu, rho);
      }
      d.at(nu, lam) = acc;
    }
  return d;
}

}  // namespace

std::optional<std::array<Scalar, 4>> conformal_one_form(const AffineData& c) {
  std::array<Scalar, 4> alpha;
  for (int mu = 0; mu < 4; ++mu) {
    Matrix<Scalar> d = covariant_g(c, mu);
    // find a nonzero g entry to divide by
    Scalar a;
    bool found = false;
    for (int nu = 0; nu < 4 && !found; ++nu)
      for (int lam = 0; lam < 4 && !found; ++lam)
        if (!c.g.at(nu, lam).is_zero()) {
          a = d.at(nu, lam) / c.g.at(nu, lam);
          found = true;
        }
    if (!found) return std::nullopt;
    // verify d = a * g
    for (int nu = 0; nu < 4; ++nu)
      for (int lam = 0; lam < 4; ++lam)
        if (!(d.at(nu, lam) == a * c.g.at(nu, lam))) return std::nullopt;
    alpha[size_t(mu)] = a;
  }
  return alpha;
}

namespace {

// Square-free part of a polynomial (Yun-style, gcd only).
Poly squarefree_part(const Poly& p) {
  if (p.is_constant()) return Poly(Rat(1));
  Poly g = p;
  for (int v = 0; v < kNumVars; ++v) {
    Poly d = p.derivative(v);
    if (!d.is_zero()) g = Poly::gcd(g, d);
  }
  return Poly::divexact(p.primitive_part(), g.is_constant() ? Poly(Rat(1)) : g);
}

// Coprime refinement of a set of squarefree polynomials.
std::vector<Poly> coprime_refine(std::vector<Poly> set) {
  std::vector<Poly> out;
  while (!set.empty()) {
    Poly p = set.back();
    set.pop_back();
    if (p.is_constant()) continue;
    bool split = false;
    for (size_t i = 0; i < out.size(); ++i) {
      Poly g = Poly::gcd(p, out[i]);
      if (g.is_constant()) continue;
      if (!(Poly::divexact(out[i], g).is_constant())) {
        // split the existing factor
        Poly rest = Poly::divexact(out[i], g);
        out[i] = g;
        set.push_back(rest);
      }
      Poly prest = Poly::divexact(p, g);
      if (!prest.is_constant()) set.push_back(prest);
      split = true;
      break;
    }
    if (!split) out.push_back(p.primitive_part());
  }
  return out;
}

}  // namespace

Matrix<Scalar> parallel_metric(const AffineData& c) {
  auto alpha_opt = conformal_one_form(c);
  if (!alpha_opt) throw NotExact("connection is not conformally compatible");
  std::array<Scalar, 4> alpha = *alpha_opt;
  bool all_zero = true;
  for (auto& a : alpha) all_zero = all_zero && a.is_zero();
  if (all_zero) return c.g;  // already parallel; psi = 1

  // Solve d log psi = -alpha with psi a rational function: collect candidate
  // irreducible-ish factors from the numerators and denominators of alpha.
  std::vector<Poly> cands;
  for (auto& a : alpha) {
    if (a.is_zero()) continue;
    cands.push_back(squarefree_part(a.den()));
    cands.push_back(squarefree_part(a.num()));
  }
  std::vector<Poly> factors = coprime_refine(cands);
  if (factors.empty()) throw NotExact("no candidate factors for the conformal potential");

  // exponents from sampled points, verified symbolically afterwards
  size_t nf = factors.size();
  std::vector<std::array<Rat, 4>> samples = {
      {Rat(1, 3), Rat(1, 5), Rat(1, 7), Rat(1, 11)},
      {Rat(2, 3), Rat(-1, 4), Rat(1, 2), Rat(-2, 7)},
      {Rat(-1, 2), Rat(3, 5), Rat(-1, 3), Rat(1, 6)},
      {Rat(1, 4), Rat(2, 7), Rat(3, 8), Rat(-1, 5)},
      {Rat(-2, 5), Rat(1, 9), Rat(-3, 7), Rat(2, 9)},
  };
  Matrix<Rat> sys(int(4 * samples.size()), int(nf));
  Vec<Rat> rhs(size_t(4 * samples.size()), Rat(0));
  int row = 0;
  for (auto& pt : samples) {
    for (int mu = 0; mu < 4; ++mu) {
      for (size_t i = 0; i < nf; ++i) {
        Scalar dlog = Scalar(factors[i].derivative(mu)) / Scalar(factors[i]);
        sys.at(row, int(i)) = dlog.eval(pt);
      }
      rhs[size_t(row)] = -alpha[size_t(mu)].eval(pt);
      ++row;
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw NotExact("the conformal 1-form is not a rational log-derivative");
  // verify symbolically and demand integer exponents
  for (int mu = 0; mu < 4; ++mu) {
    Scalar acc;
    for (size_t i = 0; i < nf; ++i)
      acc += Scalar(factors[i].derivative(mu)) / Scalar(factors[i]) * (*sol)[i];
    if (!(acc == -alpha[size_t(mu)]))
      throw NotExact("log-derivative matching failed symbolically");
  }
  Scalar psi(1);
  for (size_t i = 0; i < nf; ++i) {
    const Rat& e = (*sol)[i];
    if (e.get_den() != 1) throw NotExact("non-integer exponent in the conformal potential");
    long ei = e.get_num().get_si();
    psi *= Scalar(factors[i]).pow(int(ei));
  }
  // normalize psi(0) = 1
  std::array<Rat, 4> origin{Rat(0), Rat(0), Rat(0), Rat(0)};
  Rat at0 = psi.eval(origin);
  if (sgn(at0) == 0) throw NotExact("conformal potential vanishes at the origin");
  psi = psi / Scalar(at0);
  Matrix<Scalar> out(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) out.at(mu, nu) = psi * c.g.at(mu, nu);
  // the result must be parallel
  AffineData check = c;
  check.g = out;
  for (int mu = 0; mu < 4; ++mu) {
    Matrix<Scalar> d = covariant_g(check, mu);
    for (auto& e : d.a)
      if (!e.is_zero()) throw NotExact("parallel check failed");
  }
  return out;
}

Matrix<Scalar> ricci_of(const std::array<Matrix<Scalar>, 4>& gamma) {
  // R^rho_{sigma mu nu} = d_mu G^rho_{nu sigma} - d_nu G^rho_{mu sigma}
  //                      + G^rho_{mu lam} G^lam_{nu sigma} - G^rho_{nu lam} G^lam_{mu sigma}
  Matrix<Scalar> ric(4, 4);
  for (int sigma = 0; sigma < 4; ++sigma)
    for (int nu = 0; nu < 4; ++nu) {
      Scalar acc;
      for (int mu = 0; mu < 4; ++mu) {
        acc += gamma[size_t(nu)].at(mu, sigma).derivative(mu);
        acc -= gamma[size_t(mu)].at(mu, sigma).derivative(nu);
        for (int lam = 0; lam < 4; ++lam) {
          acc += gamma[size_t(mu)].at(mu, lam) * gamma[size_t(nu)].at(lam, sigma);
          acc -= gamma[size_t(nu)].at(mu, lam) * gamma[size_t(mu)].at(lam, sigma);
        }
      }
      ric.at(sigma, nu) = acc;
    }
  return ric;
}

Matrix<Scalar> ricci(const AffineData& c) { return ricci_of(c.gamma); }

std::array<Matrix<Scalar>, 4> levi_civita(const Matrix<Scalar>& g) {
  auto ginv_opt = inverse(g);
  if (!ginv_opt) throw Degenerate("metric is singular");
  const Matrix<Scalar>& gi = *ginv_opt;
  std::array<Matrix<Scalar>, 4> gamma;
  for (int mu = 0; mu < 4; ++mu) gamma[size_t(mu)] = Matrix<Scalar>(4, 4);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        Scalar acc;
        for (int lam = 0; lam < 4; ++lam) {
          Scalar inner = g.at(lam, nu).derivative(mu) + g.at(lam, mu).derivative(nu) -
                         g.at(mu, nu).derivative(lam);
          if (!inner.is_zero()) acc += gi.at(rho, lam) * inner;
        }
        gamma[size_t(mu)].at(rho, nu) = acc * Rat(1, 2);
      }
  return gamma;
}

EElement element_from_metric_and_coframe(const Matrix<Scalar>& g, const Matrix<Scalar>& coframe) {
  // dual frame E_a with e^b(E_a) = delta
  auto dual_opt = inverse(coframe);
  if (!dual_opt) throw Degenerate("coframe is singular");
  Matrix<Scalar> dual = dual_opt->transposed();  // dual.at(a, mu): E_a = sum dual[a][mu] d_mu

  auto gamma = levi_civita(g);
  LElement x;
  for (int a = 0; a < 4; ++a) {
    CDer d;
    for (int mu = 0; mu < 4; ++mu) d.vec[size_t(mu)] = dual.at(a, mu);
    // W_a[b][c] = (nabla_{E_a} e^b)(E_c)
    Matrix<Scalar> mat(4, 4);  // mat.at(c, b) so that delta_a(theta_b) = sum_c mat[c][b] theta_c
    for (int b = 0; b < 4; ++b) {
      // cov derivative of the coframe: (nabla_mu e^b)_nu = d_mu e^b_nu - G^lam_{mu nu} e^b_lam
      for (int cc = 0; cc < 4; ++cc) {
        Scalar acc;
        for (int mu = 0; mu < 4; ++mu) {
          if (dual.at(a, mu).is_zero()) continue;
          for (int nu = 0; nu < 4; ++nu) {
            if (dual.at(cc, nu).is_zero()) continue;
            Scalar cov = coframe.at(b, nu).derivative(mu);
            for (int lam = 0; lam < 4; ++lam)
              cov -= gamma[size_t(mu)].at(lam, nu) * coframe.at(b, lam);
            acc += dual.at(a, mu) * dual.at(cc, nu) * cov;
          }
        }
        mat.at(cc, b) = acc;
      }
    }
    auto sig = sigma_decompose(mat);
    if (!sig) throw NotExact("spin connection leaves the conformal algebra");
    d.vert = *sig;
    x += LElement::term(1 << a, d);
  }
  return reduce_mod_ideal(x);
}

Matrix<Scalar> ppwave_metric(const Poly& H) {
  Matrix<Scalar> g(4, 4);
  g.at(0, 0) = Scalar(H);
  g.at(0, 3) = Scalar(1);
  g.at(3, 0) = Scalar(1);
  g.at(1, 1) = Scalar(1);
  g.at(2, 2) = Scalar(1);
  return g;
}

EElement ppwave_element(const Poly& H) {
  Scalar h(H);
  Matrix<Scalar> coframe(4, 4);
  Scalar half(Rat(1, 2));
  coframe.at(0, 0) = (Scalar(1) - h) * half;
  coframe.at(0, 3) = Scalar(-1);
  coframe.at(1, 1) = Scalar(1);
  coframe.at(2, 2) = Scalar(1);
  coframe.at(3, 0) = (Scalar(1) + h) * half;
  coframe.at(3, 3) = Scalar(1);
  return element_from_metric_and_coframe(ppwave_metric(H), coframe);
}

EElement rescaled_minkowski_element(const Scalar& phi) {
  Matrix<Scalar> eta_m(4, 4);
  eta_m.at(0, 0) = Scalar(-1);
  for (int i = 1; i < 4; ++i) eta_m.at(i, i) = Scalar(1);
  Matrix<Scalar> coframe(4, 4);
  for (int a = 0; a < 4; ++a) coframe.at(a, a) = phi;
  return element_from_metric_and_coframe(eta_m, coframe);
}

}  // namespace gle
