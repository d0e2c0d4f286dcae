#include "gle/gauge.hpp"

namespace gle {

namespace {

Mat2 pauli(int i) {
  Mat2 s;
  Gaussian one(Rat(1)), im = Gaussian::i();
  switch (i) {
    case 0: s.at(0, 0) = one; s.at(1, 1) = one; break;
    case 1: s.at(0, 1) = one; s.at(1, 0) = one; break;
    case 2: s.at(0, 1) = -im; s.at(1, 0) = im; break;
    default: s.at(0, 0) = one; s.at(1, 1) = -one; break;
  }
  return s;
}

Mat2 scale(const Mat2& m, const Gaussian& g) {
  Mat2 r = m;
  for (auto& x : r.m) x = x * g;
  return r;
}

}  // namespace

Mat2 hash_mono(int mask) {
  Gaussian mi = -Gaussian::i();
  switch (mask) {
    case 0b0001: return pauli(0);
    case 0b0010: return pauli(1);
    case 0b0100: return pauli(2);
    case 0b1000: return pauli(3);
    // degree 3, from <theta1 theta2 theta3> = -i s0, <theta0 theta2 theta3> = -i s1,
    // <theta0 theta3 theta1> = -i s2, <theta0 theta1 theta2> = -i s3, resorted:
    // theta0 theta3 theta1 = -theta0 theta1 theta3.
    case 0b1110: return scale(pauli(0), mi);
    case 0b1101: return scale(pauli(1), mi);
    case 0b1011: return scale(pauli(2), Gaussian::i());
    case 0b0111: return scale(pauli(3), mi);
    default: return Mat2{};
  }
}

Mat2 hash_map(const MultiVector& x) {
  Mat2 out;
  for (int m = 0; m < kBasisSize; ++m) {
    if (x.c[size_t(m)].is_zero()) continue;
    if (!x.c[size_t(m)].is_constant()) throw std::logic_error("hash_map needs constant input");
    Gaussian c(x.c[size_t(m)].constant_value());
    Mat2 h = hash_mono(m);
    for (int i = 0; i < 4; ++i) out.m[size_t(i)] += h.m[size_t(i)] * c;
  }
  return out;
}

HermForm HermForm::identity() {
  HermForm f;
  for (int i = 0; i < 18; ++i) f.h.at(i, i) = Gaussian(Rat(1));
  return f;
}

bool HermForm::is_hermitian() const {
  for (int i = 0; i < 18; ++i)
    for (int j = 0; j < 18; ++j)
      if (!(h.at(i, j) == h.at(j, i).conj())) return false;
  return true;
}

bool HermForm::is_positive_definite() const {
  // Realify: [[Re, -Im], [Im, Re]] is symmetric PD iff h is PD.
  Matrix<Rat> r(36, 36);
  for (int i = 0; i < 18; ++i)
    for (int j = 0; j < 18; ++j) {
      r.at(i, j) = h.at(i, j).re;
      r.at(i, 18 + j) = -h.at(i, j).im;
      r.at(18 + i, j) = h.at(i, j).im;
      r.at(18 + i, 18 + j) = h.at(i, j).re;
    }
  return positive_definite(r);
}

bool OddForm::is_symmetric() const {
  for (int i = 0; i < 144; ++i)
    for (int j = i + 1; j < 144; ++j)
      if (!(b.at(i, j) == b.at(j, i))) return false;
  return true;
}

bool OddForm::is_odd() const {
  for (int i = 0; i < 144; ++i)
    for (int j = 0; j < 144; ++j) {
      if (sgn(b.at(i, j)) == 0) continue;
      if ((mono_degree(i % kBasisSize) + mono_degree(j % kBasisSize)) % 2 == 0) return false;
    }
  return true;
}

Matrix<Rat> OddForm::paired_with(const std::array<Rat, 4>& w) const {
  // entries b(e_i, w e_j): multiply the column index by w on coordinates.
  const auto& ctx = SlashedContext::get();
  Matrix<Rat> r(144, 144);
  for (int j = 0; j < 144; ++j) {
    Vec<Rat> col(size_t(144), Rat(0));
    col[size_t(j)] = Rat(1);
    Vec<Rat> wcol = ctx.cl_mul_coords(w, col);
    for (int i = 0; i < 144; ++i) {
      Rat acc(0);
      for (int k = 0; k < 144; ++k)
        if (sgn(wcol[size_t(k)]) != 0) acc += b.at(i, k) * wcol[size_t(k)];
      r.at(i, j) = acc;
    }
  }
  return r;
}

OddForm build_b(const HermForm& h) {
  if (!h.is_hermitian()) throw NotHermitian("form is not Hermitian");
  // Precompute <theta_S^T theta_R>_# for all pairs.
  static const auto pair_table = [] {
    std::array<std::array<Mat2, kBasisSize>, kBasisSize> t{};
    for (int s = 0; s < kBasisSize; ++s)
      for (int r = 0; r < kBasisSize; ++r) {
        int sign = reversal_sign(mono_degree(s)) * cl_blade_sign(s, r);
        Mat2 base = hash_mono(s ^ r);
        t[size_t(s)][size_t(r)] = scale(base, Gaussian(Rat(sign)));
      }
    return t;
  }();
  OddForm out;
  for (int j = 0; j < 9; ++j)
    for (int k = 0; k < 9; ++k)
      for (int s = 0; s < kBasisSize; ++s)
        for (int r = 0; r < kBasisSize; ++r) {
          const Mat2& m = pair_table[size_t(s)][size_t(r)];
          Gaussian acc;
          for (int al = 0; al < 2; ++al)
            for (int be = 0; be < 2; ++be) {
              const Gaussian& hv = h.h.at(2 * j + al, 2 * k + be);
              if (hv.is_zero()) continue;
              acc += hv * m.at(al, be);
            }
          out.b.at(j * kBasisSize + s, k * kBasisSize + r) = acc.re;
        }
  return out;
}

int bh_map_rank() {
  // The map decomposes over the (j,k) blocks of h: diagonal blocks carry 4
  // real parameters, off-diagonal blocks 8; ranks add because distinct
  // blocks feed disjoint coordinate sets of b.
  int total = 0;
  auto block_rank = [&](int j, int k) {
    // parametrize the Hermitian-form block and collect the b-entries
    std::vector<Matrix<Gaussian>> params;
    if (j == k) {
      for (int t = 0; t < 4; ++t) {
        Matrix<Gaussian> p(2, 2);
        if (t < 2) p.at(t, t) = Gaussian(Rat(1));
        else if (t == 2) { p.at(0, 1) = Gaussian(Rat(1)); p.at(1, 0) = Gaussian(Rat(1)); }
        else { p.at(0, 1) = Gaussian::i(); p.at(1, 0) = -Gaussian::i(); }
        params.push_back(p);
      }
    } else {
      for (int t = 0; t < 8; ++t) {
        Matrix<Gaussian> p(2, 2);
        Gaussian v = (t & 1) ? Gaussian::i() : Gaussian(Rat(1));
        p.at((t >> 1) / 2, (t >> 1) % 2) = v;
        params.push_back(p);
      }
    }
    Matrix<Rat> m(2 * kBasisSize * kBasisSize, int(params.size()));
    for (size_t t = 0; t < params.size(); ++t) {
      HermForm h;
      for (int al = 0; al < 2; ++al)
        for (int be = 0; be < 2; ++be) {
          h.h.at(2 * j + al, 2 * k + be) = params[t].at(al, be);
          h.h.at(2 * k + be, 2 * j + al) = params[t].at(al, be).conj();
        }
      OddForm b = build_b(h);
      int row = 0;
      for (int s = 0; s < kBasisSize; ++s)
        for (int r = 0; r < kBasisSize; ++r) {
          m.at(row++, int(t)) = b.b.at(j * kBasisSize + s, k * kBasisSize + r);
          m.at(row++, int(t)) = b.b.at(k * kBasisSize + s, j * kBasisSize + r);
        }
    }
    return rank(m);
  };
  for (int j = 0; j < 9; ++j)
    for (int k = j; k < 9; ++k) total += block_rank(j, k);
  return total;
}

OddForm average_project(const OddForm& b_raw) {
  // b(x,y) = (1/|F|) sum_f chi_0(f) b_raw(f x, f y); the ± pairs coincide,
  // leaving the 16 blade actions.
  OddForm out;
  for (int u = 0; u < kBasisSize; ++u) {
    int chi = character(0, {1, u});
    // coordinate action of left multiplication by theta_u
    // slot (j, s) -> (j, u^s) with sign cl_blade_sign(u, s)
    Matrix<Rat> conj(144, 144);
    for (int j = 0; j < 9; ++j)
      for (int s = 0; s < kBasisSize; ++s)
        conj.at(j * kBasisSize + (u ^ s), j * kBasisSize + s) = Rat(cl_blade_sign(u, s));
    Matrix<Rat> term = conj.transposed() * b_raw.b * conj;
    Rat w(chi, 16);
    w.canonicalize();
    out.b = out.b + term.scaled(w);
  }
  return out;
}

const std::vector<int>& even_slots() {
  static const std::vector<int> slots = [] {
    std::vector<int> v;
    for (int j = 0; j < 9; ++j)
      for (int s = 0; s < kBasisSize; ++s)
        if (mono_degree(s) % 2 == 0) v.push_back(j * kBasisSize + s);
    return v;
  }();
  return slots;
}

OddForm lift_even_form(const Matrix<Rat>& b_even) {
  const auto& slots = even_slots();
  const auto& ctx = SlashedContext::get();
  OddForm out;
  std::array<Rat, 4> theta0{Rat(1), Rat(0), Rat(0), Rat(0)};
  for (size_t i = 0; i < slots.size(); ++i)
    for (int v = 0; v < 144; ++v) {
      if (mono_degree(v % kBasisSize) % 2 == 0) continue;  // odd second slot
      // b'(x, y) = b''(x, theta_0 y) for even x, odd y
      Vec<Rat> col(size_t(144), Rat(0));
      col[size_t(v)] = Rat(1);
      Vec<Rat> t0y = ctx.cl_mul_coords(theta0, col);
      Rat acc(0);
      for (size_t k = 0; k < slots.size(); ++k) {
        const Rat& c = t0y[size_t(slots[k])];
        if (sgn(c) != 0) acc += b_even.at(int(i), int(k)) * c;
      }
      out.b.at(slots[i], v) = acc;
      out.b.at(v, slots[i]) = acc;
    }
  return out;
}

const std::array<std::array<Rat, 4>, 5>& future_cone_samples() {
  static const std::array<std::array<Rat, 4>, 5> w = {{
      {Rat(1), Rat(0), Rat(0), Rat(0)},
      {Rat(5, 4), Rat(3, 4), Rat(0), Rat(0)},
      {Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)},
      {Rat(2), Rat(1), Rat(-1, 2), Rat(1, 2)},
      {Rat(3), Rat(-1), Rat(1), Rat(-1)},
  }};
  return w;
}

GaugeData build_gauge(const OddForm& b) {
  if (!b.is_symmetric()) throw SplittingFailed("form not symmetric");
  if (!b.is_odd()) throw SplittingFailed("form not odd");
  const auto& ctx = SlashedContext::get();
  GaugeData g;
  g.b = b;

  for (int k = 0; k <= 4; ++k) {
    const auto& lvl = ctx.eslash_level(k).coords;
    int n = int(lvl.size());
    if (k == 0) {
      g.eslash_g[0] = lvl;  // E_G^0 = the whole level
    } else {
      const auto& prev = ctx.eslash_level(k - 1).coords;
      // pairing matrix: rows level-k basis, cols level-(k-1) basis
      std::vector<Vec<Rat>> bprev;
      for (auto& pv : prev) bprev.push_back(b.b.apply(pv));
      Matrix<Rat> pair(n, int(prev.size()));
      for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < prev.size(); ++j) {
          Rat acc(0);
          for (int p = 0; p < 144; ++p)
            if (sgn(lvl[size_t(i)][size_t(p)]) != 0) acc += lvl[size_t(i)][size_t(p)] * bprev[j][size_t(p)];
          pair.at(i, int(j)) = acc;
        }
      for (auto& c : kernel_basis(pair.transposed())) {
        Vec<Rat> v(size_t(144), Rat(0));
        for (int i = 0; i < n; ++i)
          if (sgn(c[size_t(i)]) != 0)
            for (int p = 0; p < 144; ++p) v[size_t(p)] += c[size_t(i)] * lvl[size_t(i)][size_t(p)];
        g.eslash_g[size_t(k)].push_back(std::move(v));
      }
    }
  }

  // Splitting checks at the sampled future-timelike vectors.
  for (int k = 1; k <= 4; ++k) {
    const auto& prev = ctx.eslash_level(k - 1).coords;
    for (const auto& w : future_cone_samples()) {
      SpanBasis<Rat> span(144);
      for (auto& v : g.eslash_g[size_t(k)])
        if (!span.add(v)) throw SplittingFailed("gauge basis dependent");
      for (auto& v : prev)
        if (!span.add(ctx.cl_mul_coords(w, v)))
          throw SplittingFailed("splitting sum not direct at level " + std::to_string(k));
      if (span.rank() != ctx.e_rank(k))
        throw SplittingFailed("splitting does not fill level " + std::to_string(k));
    }
  }
  // E_G^k ∩ level (k-2) = 0.
  for (int k = 2; k <= 4; ++k) {
    SpanBasis<Rat> span(144);
    for (auto& v : g.eslash_g[size_t(k)]) span.add(v);
    int before = span.rank();
    for (auto& v : ctx.eslash_level(k - 2).coords) span.add(v);
    if (span.rank() != before + ctx.e_rank(k - 2))
      throw SplittingFailed("gauge meets the lower filtration step");
  }

  // Project to E and assemble B^k.
  const auto& ideal_ctx = IdealContext::get();
  for (int k = 0; k <= 4; ++k) {
    SpanBasis<Rat> image(ideal_ctx.e_rank(k));
    for (auto& v : g.eslash_g[size_t(k)]) {
      auto coeffs = ctx.level_coefficients(k, v);
      if (!coeffs) throw SplittingFailed("gauge vector escapes its level");
      Vec<Rat> pe = ctx.project_level_to_e(k, *coeffs);
      if (!image.add(pe)) throw SplittingFailed("projection to E not injective");
      g.e_g[size_t(k)].push_back(std::move(pe));
    }
  }
  for (int k = 0; k <= 3; ++k) {
    int nk = int(g.eslash_g[size_t(k)].size());
    int m = ideal_ctx.e_rank(k + 1);
    g.Bk[size_t(k)] = Matrix<Rat>(nk, m);
    for (int col = 0; col < m; ++col) {
      Vec<Rat> unit(size_t(m), Rat(0));
      unit[size_t(col)] = Rat(1);
      Vec<Rat> y = ctx.e_coords(ctx.lift_from_e(k + 1, unit));
      Vec<Rat> by = b.b.apply(y);
      for (int i = 0; i < nk; ++i) {
        Rat acc(0);
        for (int p = 0; p < 144; ++p)
          if (sgn(g.eslash_g[size_t(k)][size_t(i)][size_t(p)]) != 0)
            acc += g.eslash_g[size_t(k)][size_t(i)][size_t(p)] * by[size_t(p)];
        g.Bk[size_t(k)].at(i, col) = acc;
      }
    }
  }
  return g;
}

const GaugeData& default_gauge() {
  static const GaugeData g = build_gauge(build_b(HermForm::identity()));
  return g;
}

}  // namespace gle
