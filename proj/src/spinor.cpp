#include "gle/spinor.hpp"

namespace gle {

namespace {

Matrix<CScalar> mat2(std::initializer_list<CScalar> entries) {
  Matrix<CScalar> m(2, 2);
  int i = 0;
  for (auto& e : entries) m.a[size_t(i++)] = e;
  return m;
}

Matrix<CScalar> conj_transpose(const Matrix<CScalar>& m) {
  Matrix<CScalar> t(m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c).conj();
  return t;
}

Matrix<CScalar> pauli_c(int a) {
  CScalar one(Scalar(1)), im = CScalar::i(), zero;
  switch (a) {
    case 0: return mat2({one, zero, zero, one});
    case 1: return mat2({zero, one, one, zero});
    case 2: return mat2({zero, -im, im, zero});
    default: return mat2({one, zero, zero, -one});
  }
}

// Decompose a Hermitian 2x2 matrix over the Pauli basis; real coefficients.
std::array<Scalar, 4> pauli_decompose(const Matrix<CScalar>& m) {
  CScalar half(Scalar(Rat(1, 2)));
  CScalar c0 = (m.at(0, 0) + m.at(1, 1)) * half;
  CScalar c3 = (m.at(0, 0) - m.at(1, 1)) * half;
  CScalar c1 = (m.at(0, 1) + m.at(1, 0)) * half;
  CScalar c2 = (m.at(1, 0) - m.at(0, 1)) * half * CScalar::i() * CScalar(Scalar(-1));
  for (const CScalar* c : {&c0, &c1, &c2, &c3})
    if (!c->im.is_zero()) throw std::logic_error("matrix is not Hermitian");
  return {c0.re, c1.re, c2.re, c3.re};
}

}  // namespace

CScalar spinor_pairing(const Matrix<CScalar>& a, const Matrix<CScalar>& b) {
  // -(1/2) of the canonical wedge-wedge pairing in the (v, w) coordinates
  CScalar beta = a.at(0, 0) * b.at(1, 1) - a.at(0, 1) * b.at(1, 0) - a.at(1, 0) * b.at(0, 1) +
                 a.at(1, 1) * b.at(0, 0);
  return beta * CScalar(Scalar(Rat(-1, 2)));
}

SpinorFrame spinor_to_frame(const Matrix<CScalar>& g) {
  SpinorFrame f;
  Matrix<CScalar> gh = conj_transpose(g);
  for (int a = 0; a < 4; ++a) f.theta[size_t(a)] = g * pauli_c(a) * gh;
  f.gram = Matrix<Scalar>(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CScalar ip = spinor_pairing(f.theta[size_t(a)], f.theta[size_t(b)]);
      if (!ip.im.is_zero()) throw std::logic_error("Gram matrix is not real");
      f.gram.at(a, b) = ip.re;
    }
  return f;
}

CDer derend_v_morphism(const Matrix<CScalar>& vertical, const std::array<Scalar, 4>& vecfield) {
  CDer d;
  d.vec = vecfield;
  Matrix<CScalar> vh = conj_transpose(vertical);
  Matrix<Scalar> mat(4, 4);  // mat[c][b]: theta_b -> sum_c mat[c][b] theta_c
  for (int b = 0; b < 4; ++b) {
    Matrix<CScalar> img = vertical * pauli_c(b) + pauli_c(b) * vh;
    auto coeffs = pauli_decompose(img);
    for (int c = 0; c < 4; ++c) mat.at(c, b) = coeffs[size_t(c)];
  }
  auto sig = sigma_decompose(mat);
  if (!sig) throw std::logic_error("image leaves the conformal derivations");
  d.vert = *sig;
  return d;
}

Matrix<CScalar> spin_sigma(int which) {
  CScalar one(Scalar(1)), im = CScalar::i(), zero;
  CScalar h(Scalar(Rat(1, 2)));
  switch (which) {
    case kSigma0: return mat2({h, zero, zero, h});
    case kSigma1: return mat2({zero, h, h, zero});
    case kSigma2: return mat2({zero, -im * h, im * h, zero});
    case kSigma3: return mat2({h, zero, zero, -h});
    case kSigma23: return mat2({zero, im * h, im * h, zero});
    case kSigma31: return mat2({zero, h, -h, zero});
    default: return mat2({im * h, zero, zero, -im * h});
  }
}

namespace {

// Complexified frame coordinates of a 2x2 matrix (not necessarily Hermitian).
std::array<CScalar, 4> frame_coords(const Matrix<CScalar>& m) {
  CScalar half(Scalar(Rat(1, 2)));
  CScalar mi = -CScalar::i();
  return {(m.at(0, 0) + m.at(1, 1)) * half, (m.at(0, 1) + m.at(1, 0)) * half,
          (m.at(1, 0) - m.at(0, 1)) * half * mi, (m.at(0, 0) - m.at(1, 1)) * half};
}

// V-realification slots: {v, iv, w, iw}. Complex coefficient z on column p.
std::array<Scalar, 4> v_coords(const CScalar& zv, const CScalar& zw) {
  return {zv.re, zv.im, zw.re, zw.im};
}

constexpr int kM1Dim = kBasisSize * 4;  // (mask, V-slot)

// element (z * theta_mask) ⊗ (alpha v + beta w) into the real 64 coordinates
void add_m1(Vec<Rat>& out, int mask, const CScalar& z, const CScalar& alpha, const CScalar& beta) {
  CScalar za = z * alpha, zb = z * beta;
  auto vc = v_coords(za, zb);
  for (int s = 0; s < 4; ++s) {
    if (!vc[size_t(s)].is_constant()) throw std::logic_error("non-constant spinor coordinates");
    out[size_t(mask * 4 + s)] += vc[size_t(s)].constant_value();
  }
}

// Real span of the degree-2 generators of N.
std::vector<Vec<Rat>> n2_span() {
  std::vector<Vec<Rat>> gens;
  CScalar one(Scalar(1)), im = CScalar::i(), zero;
  const std::array<std::pair<CScalar, CScalar>, 6> samples = {{
      {one, zero}, {zero, one}, {one, one}, {one, im}, {one, -one}, {one, -im},
  }};
  for (auto& [al, be] : samples) {
    // vv-bar and vw-bar for v = al*v + be*w, as 2x2 matrices (v x-bar)_{pq} = v_p conj(x_q)
    Matrix<CScalar> vvb(2, 2), vwb(2, 2);
    vvb.at(0, 0) = al;         // conj(v) column for x = v: conj coords (1,0)
    vvb.at(1, 0) = be;
    vwb.at(0, 1) = al;         // x = w: conj coords (0,1)
    vwb.at(1, 1) = be;
    auto c = frame_coords(vvb);
    auto d = frame_coords(vwb);
    // wedge coefficients (c ∧ d)_{ab} on the mask (1<<a)|(1<<b), a < b
    for (const CScalar& mult : {one, im}) {
      Vec<Rat> g(size_t(kM1Dim), Rat(0));
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          CScalar coeff = (c[size_t(a)] * d[size_t(b)] - c[size_t(b)] * d[size_t(a)]) * mult;
          if (coeff.is_zero()) continue;
          add_m1(g, (1 << a) | (1 << b), coeff, al, be);
        }
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

}  // namespace

SpinorIdealReport ideal_via_representation() {
  SpinorIdealReport rep;
  // the 12 generators of DerEnd(V) and their CDer images
  struct Gen {
    Matrix<CScalar> d{2, 2};
    bool lift = false;
    int mu = 0;
  };
  std::vector<Gen> gens;
  for (int mu = 0; mu < 4; ++mu) {
    Gen g;
    g.lift = true;
    g.mu = mu;
    gens.push_back(g);
  }
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int which = 0; which < 2; ++which) {
        Gen g;
        g.d.at(p, q) = which ? CScalar::i() : CScalar(Scalar(1));
        gens.push_back(g);
      }
  const int ng = int(gens.size());
  std::vector<CDer> img;
  for (auto& g : gens) {
    if (g.lift) img.push_back(CDer::lift(g.mu));
    else img.push_back(derend_v_morphism(g.d, {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}));
  }
  // real 4x4 action of D on the V-slots {v, iv, w, iw}
  auto v_action = [&](const Matrix<CScalar>& d) {
    Matrix<Rat> a(4, 4);
    // columns: image of v, iv, w, iw
    for (int col = 0; col < 4; ++col) {
      CScalar alpha = (col < 2) ? ((col == 0) ? CScalar(Scalar(1)) : CScalar::i()) : CScalar();
      CScalar beta = (col >= 2) ? ((col == 2) ? CScalar(Scalar(1)) : CScalar::i()) : CScalar();
      CScalar nv = d.at(0, 0) * alpha + d.at(0, 1) * beta;
      CScalar nw = d.at(1, 0) * alpha + d.at(1, 1) * beta;
      auto vc = v_coords(nv, nw);
      for (int r = 0; r < 4; ++r) a.at(r, col) = vc[size_t(r)].constant_value();
    }
    return a;
  };

  auto n2 = n2_span();
  SpanBasis<Rat> n2_basis(kM1Dim);
  for (auto& g : n2) n2_basis.add(g);

  // N invariance under the 12 generators (acting on the M1 coordinates)
  rep.n_invariant = true;
  for (int gi = 0; gi < ng; ++gi) {
    Matrix<Rat> va = gens[size_t(gi)].lift ? Matrix<Rat>(4, 4) : v_action(gens[size_t(gi)].d);
    for (auto& n : n2) {
      Vec<Rat> out(size_t(kM1Dim), Rat(0));
      for (int mask = 0; mask < kBasisSize; ++mask) {
        // lambda-action on the mask through the CDer image
        ExtElement monomial = ExtElement::basis(mask);
        ExtElement moved = img[size_t(gi)].apply(monomial);
        for (int slot = 0; slot < 4; ++slot) {
          const Rat& val = n[size_t(mask * 4 + slot)];
          if (sgn(val) == 0) continue;
          for (int m2 = 0; m2 < kBasisSize; ++m2)
            if (!moved.c[size_t(m2)].is_zero())
              out[size_t(m2 * 4 + slot)] += val * moved.c[size_t(m2)].constant_value();
          for (int r = 0; r < 4; ++r)
            if (sgn(va.at(r, slot)) != 0) out[size_t(mask * 4 + r)] += val * va.at(r, slot);
        }
      }
      if (!n2_basis.contains(out)) rep.n_invariant = false;
    }
  }

  // Per-degree kernel of the representation conditions.
  const auto& ideal_ctx = IdealContext::get();
  rep.equals_ideal = true;
  for (int k = 0; k <= 4; ++k) {
    const auto& monos = degree_monos(k);
    int cols = int(monos.size()) * ng;
    std::vector<Vec<Rat>> rows;
    auto ensure_rows = [&](size_t count) {
      while (rows.size() < count) rows.emplace_back(size_t(cols), Rat(0));
    };
    // N-span at degree k+... the action values on M1 generators live in
    // degree k+0 of the wedge factor joined with the V slot.
    SpanBasis<Rat> nk_basis(kM1Dim);
    for (auto& n : n2) {
      // wedge with monomials of degree k-2
      if (k >= 2) {
        for (int m : degree_monos(k - 2)) {
          Vec<Rat> lifted(size_t(kM1Dim), Rat(0));
          for (int mask = 0; mask < kBasisSize; ++mask) {
            if (m & mask) continue;
            int sign = merge_sign(m, mask);
            for (int slot = 0; slot < 4; ++slot) {
              const Rat& val = n[size_t(mask * 4 + slot)];
              if (sgn(val) != 0) lifted[size_t((m | mask) * 4 + slot)] += Rat(sign) * val;
            }
          }
          nk_basis.add(lifted);
        }
      }
    }

    // fixed row layout: anchor-on-coordinates, anchor-on-frame, traces, M1/N
    const size_t kBaseA = 0;
    const size_t kBaseB = kBaseA + 4 * kBasisSize;
    const size_t kBaseC = kBaseB + 4 * kBasisSize;
    const size_t kBaseD = kBaseC + 2 * kBasisSize;
    ensure_rows(kBaseD + 4 * kM1Dim);

    for (size_t jm = 0; jm < monos.size(); ++jm) {
      for (int g = 0; g < ng; ++g) {
        int col = int(jm) * ng + g;
        const CDer& di = img[size_t(g)];
        int mask = monos[jm];
        // (a) anchor on coordinates: rho(xi)(x^mu) has coefficient vec_mu on theta_mask
        for (int mu = 0; mu < 4; ++mu) {
          const Scalar& v = di.vec[size_t(mu)];
          if (!v.is_zero())
            rows[kBaseA + size_t(mu * kBasisSize + mask)][size_t(col)] += v.constant_value();
        }
        // (b) anchor on the frame: theta_mask ∧ (vertical action on theta_a)
        Matrix<Scalar> vm = di.vertical_matrix();
        for (int a = 0; a < 4; ++a)
          for (int i2 = 0; i2 < 4; ++i2) {
            const Scalar& coeff = vm.at(i2, a);
            if (coeff.is_zero() || (mask & (1 << i2))) continue;
            int sign = merge_sign(mask, 1 << i2);
            rows[kBaseB + size_t(a * kBasisSize + (mask | (1 << i2)))][size_t(col)] +=
                Rat(sign) * coeff.constant_value();
          }
        // (c) M2: complex trace
        if (!gens[size_t(g)].lift) {
          CScalar tr = gens[size_t(g)].d.at(0, 0) + gens[size_t(g)].d.at(1, 1);
          if (!tr.re.is_zero())
            rows[kBaseC + size_t(mask)][size_t(col)] += tr.re.constant_value();
          if (!tr.im.is_zero())
            rows[kBaseC + size_t(kBasisSize + mask)][size_t(col)] += tr.im.constant_value();
        }
        // (d) M1/N: values on the four V generators, reduced modulo N
        Matrix<Rat> va = gens[size_t(g)].lift ? Matrix<Rat>(4, 4) : v_action(gens[size_t(g)].d);
        for (int genv = 0; genv < 4; ++genv) {
          Vec<Rat> value(size_t(kM1Dim), Rat(0));
          for (int r = 0; r < 4; ++r)
            if (sgn(va.at(r, genv)) != 0) value[size_t(mask * 4 + r)] += va.at(r, genv);
          Vec<Rat> red = nk_basis.reduced(value);
          for (int t = 0; t < kM1Dim; ++t)
            if (sgn(red[size_t(t)]) != 0)
              rows[kBaseD + size_t(genv * kM1Dim + t)][size_t(col)] += red[size_t(t)];
        }
      }
    }

    Matrix<Rat> cond(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) cond.set_row(int(r), rows[r]);
    auto ker = kernel_basis(cond);

    // image span in L and comparison with the ideal
    SpanBasis<Rat> image(kLDim);
    for (auto& kv : ker) {
      LElement e;
      for (size_t jm = 0; jm < monos.size(); ++jm)
        for (int g = 0; g < ng; ++g) {
          const Rat& cf = kv[size_t(jm) * size_t(ng) + size_t(g)];
          if (sgn(cf) == 0) continue;
          e += LElement::term(monos[jm], img[size_t(g)] * Scalar(cf));
        }
      if (!e.is_zero()) image.add(l_flatten_const(e));
    }
    rep.image_rank[size_t(k)] = image.rank();
    rep.total_rank += image.rank();
    bool degree_ok;
    if (k < 2) {
      degree_ok = (image.rank() == 0);
    } else {
      SpanBasis<Rat> ideal_span(kLDim);
      for (auto& ie : ideal_ctx.ideal_basis(k)) ideal_span.add(l_flatten_const(ie));
      degree_ok = image.equals(ideal_span);
    }
    rep.equals_ideal = rep.equals_ideal && degree_ok;
  }
  return rep;
}

}  // namespace gle
