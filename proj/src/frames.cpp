#include "gle/frames.hpp"

namespace gle {

const char* const kSigmaNames[kNumSigma] = {"s0", "s1", "s2", "s3", "s23", "s31", "s12"};

const std::array<std::array<int, 4>, 4>& sigma_matrix(int s) {
  // M[i][j]: sigma(theta_j) = sum_i M[i][j] theta_i, per Def. of the frame
  // derivations: sigma_i(theta_0) = theta_i, sigma_i(theta_j) = delta_ij theta_0,
  // sigma_ij(theta_0) = 0, sigma_ij(theta_k) = delta_jk theta_i - delta_ik theta_j.
  static const std::array<std::array<std::array<int, 4>, 4>, kNumSigma> mats = [] {
    std::array<std::array<std::array<int, 4>, 4>, kNumSigma> m{};
    // sigma_0 = identity
    for (int i = 0; i < 4; ++i) m[kSigma0][size_t(i)][size_t(i)] = 1;
    // boosts
    for (int b = 1; b <= 3; ++b) {
      m[size_t(kSigma0 + b)][size_t(b)][0] = 1;  // theta_0 -> theta_b
      m[size_t(kSigma0 + b)][0][size_t(b)] = 1;  // theta_b -> theta_0
    }
    // rotations sigma_ij with (i,j) in {(2,3),(3,1),(1,2)}
    const int rot[3][2] = {{2, 3}, {3, 1}, {1, 2}};
    for (int r = 0; r < 3; ++r) {
      int i = rot[r][0], j = rot[r][1];
      // theta_j -> theta_i, theta_i -> -theta_j
      m[size_t(kSigma23 + r)][size_t(i)][size_t(j)] = 1;
      m[size_t(kSigma23 + r)][size_t(j)][size_t(i)] = -1;
    }
    return m;
  }();
  return mats[size_t(s)];
}

Scalar FrameVector::minkowski_square() const {
  return w[0] * w[0] - w[1] * w[1] - w[2] * w[2] - w[3] * w[3];
}

bool in_future_cone(const FrameVector& v) {
  // Rational sample grid over the coordinate box [-1,1]^4.
  static const Rat pts[3] = {Rat(0), Rat(1), Rat(-1, 2)};
  for (auto& a : pts)
    for (auto& b : pts)
      for (auto& c : pts)
        for (auto& d : pts) {
          std::array<Rat, 4> x{a, b, c, d};
          try {
            if (sgn(v.w[0].eval(x)) <= 0) return false;
            if (sgn(v.minkowski_square().eval(x)) <= 0) return false;
          } catch (const DivisionByZero&) {
            return false;  // pole inside the sampled domain
          }
        }
  return true;
}

CDer CDer::operator+(const CDer& o) const {
  CDer r;
  for (int i = 0; i < 4; ++i) r.vec[size_t(i)] = vec[size_t(i)] + o.vec[size_t(i)];
  for (int i = 0; i < kNumSigma; ++i) r.vert[size_t(i)] = vert[size_t(i)] + o.vert[size_t(i)];
  return r;
}
CDer CDer::operator-(const CDer& o) const {
  CDer r;
  for (int i = 0; i < 4; ++i) r.vec[size_t(i)] = vec[size_t(i)] - o.vec[size_t(i)];
  for (int i = 0; i < kNumSigma; ++i) r.vert[size_t(i)] = vert[size_t(i)] - o.vert[size_t(i)];
  return r;
}
CDer CDer::operator-() const {
  CDer r;
  for (int i = 0; i < 4; ++i) r.vec[size_t(i)] = -vec[size_t(i)];
  for (int i = 0; i < kNumSigma; ++i) r.vert[size_t(i)] = -vert[size_t(i)];
  return r;
}
CDer CDer::operator*(const Scalar& s) const {
  CDer r;
  for (int i = 0; i < 4; ++i) r.vec[size_t(i)] = vec[size_t(i)] * s;
  for (int i = 0; i < kNumSigma; ++i) r.vert[size_t(i)] = vert[size_t(i)] * s;
  return r;
}
CDer& CDer::operator+=(const CDer& o) {
  for (int i = 0; i < 4; ++i) vec[size_t(i)] += o.vec[size_t(i)];
  for (int i = 0; i < kNumSigma; ++i) vert[size_t(i)] += o.vert[size_t(i)];
  return *this;
}

Scalar CDer::apply(const Scalar& f) const {
  Scalar r;
  for (int mu = 0; mu < 4; ++mu)
    if (!vec[size_t(mu)].is_zero()) r += vec[size_t(mu)] * f.derivative(mu);
  return r;
}

FrameVector CDer::apply(const FrameVector& v) const {
  FrameVector r;
  for (int i = 0; i < 4; ++i) r.w[size_t(i)] = apply(v.w[size_t(i)]);
  for (int s = 0; s < kNumSigma; ++s) {
    if (vert[size_t(s)].is_zero()) continue;
    const auto& m = sigma_matrix(s);
    for (int j = 0; j < 4; ++j) {
      if (v.w[size_t(j)].is_zero()) continue;
      for (int i = 0; i < 4; ++i)
        if (m[size_t(i)][size_t(j)] != 0)
          r.w[size_t(i)] += vert[size_t(s)] * v.w[size_t(j)] * Rat(m[size_t(i)][size_t(j)]);
    }
  }
  return r;
}

ExtElement CDer::apply(const ExtElement& e) const {
  ExtElement r;
  for (int mask = 0; mask < kBasisSize; ++mask) {
    const Scalar& coeff = e.c[size_t(mask)];
    if (coeff.is_zero()) continue;
    // vector field on the coefficient
    Scalar dc = apply(coeff);
    if (!dc.is_zero()) r.c[size_t(mask)] += dc;
    // vertical action, one wedge slot at a time
    for (int s = 0; s < kNumSigma; ++s) {
      if (vert[size_t(s)].is_zero()) continue;
      const auto& m = sigma_matrix(s);
      for (int j = 0; j < 4; ++j) {
        if (!(mask & (1 << j))) continue;
        int rest = mask ^ (1 << j);
        // position sign of slot j inside the sorted monomial
        int below = mask & ((1 << j) - 1);
        int slot_sign = (mono_degree(below) & 1) ? -1 : 1;
        for (int i = 0; i < 4; ++i) {
          int mij = m[size_t(i)][size_t(j)];
          if (mij == 0 || (rest & (1 << i))) continue;
          // reinsert theta_i into rest
          int below_i = rest & ((1 << i) - 1);
          int ins_sign = (mono_degree(below_i) & 1) ? -1 : 1;
          Scalar term = vert[size_t(s)] * coeff * Rat(mij * slot_sign * ins_sign);
          r.c[size_t(rest | (1 << i))] += term;
        }
      }
    }
  }
  return r;
}

Matrix<Scalar> CDer::vertical_matrix() const {
  Matrix<Scalar> m(4, 4);
  for (int s = 0; s < kNumSigma; ++s) {
    if (vert[size_t(s)].is_zero()) continue;
    const auto& sm = sigma_matrix(s);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (sm[size_t(i)][size_t(j)] != 0)
          m.at(i, j) += vert[size_t(s)] * Rat(sm[size_t(i)][size_t(j)]);
  }
  return m;
}

Scalar CDer::trace() const { return vert[kSigma0] * Rat(4); }

const std::array<std::array<std::array<Rat, kNumSigma>, kNumSigma>, kNumSigma>&
sigma_structure_constants() {
  static const auto table = [] {
    std::array<std::array<std::array<Rat, kNumSigma>, kNumSigma>, kNumSigma> c{};
    // Solve [sigma_s, sigma_t] = sum_u c[s][t][u] sigma_u via the 4x4 matrices.
    // The sigma matrices have disjoint supports, so coefficients read off
    // directly: entry (i,j) of sigma_u determines c via matching.
    for (int s = 0; s < kNumSigma; ++s)
      for (int t = 0; t < kNumSigma; ++t) {
        // commutator matrix
        std::array<std::array<int, 4>, 4> comm{};
        const auto& a = sigma_matrix(s);
        const auto& b = sigma_matrix(t);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            int v = 0;
            for (int k = 0; k < 4; ++k)
              v += a[size_t(i)][size_t(k)] * b[size_t(k)][size_t(j)] -
                   b[size_t(i)][size_t(k)] * a[size_t(k)][size_t(j)];
            comm[size_t(i)][size_t(j)] = v;
          }
        // project on each sigma_u using the Frobenius pairing; the sigma
        // matrices are orthogonal under it with norms 4, 2, 2, 2, 2, 2, 2.
        for (int u = 0; u < kNumSigma; ++u) {
          const auto& mu = sigma_matrix(u);
          int dot = 0, norm = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              dot += comm[size_t(i)][size_t(j)] * mu[size_t(i)][size_t(j)];
              norm += mu[size_t(i)][size_t(j)] * mu[size_t(i)][size_t(j)];
            }
          Rat coeff(dot, norm);
          coeff.canonicalize();
          c[size_t(s)][size_t(t)][size_t(u)] = coeff;
        }
        // verify the projection reproduces the commutator exactly
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            Rat v(0);
            for (int u = 0; u < kNumSigma; ++u)
              v += c[size_t(s)][size_t(t)][size_t(u)] *
                   Rat(sigma_matrix(u)[size_t(i)][size_t(j)]);
            if (v != Rat(comm[size_t(i)][size_t(j)]))
              throw std::logic_error("sigma commutator not in the sigma span");
          }
      }
    return c;
  }();
  return table;
}

CDer bracket_cder(const CDer& a, const CDer& b) {
  CDer r;
  // vector part: Lie bracket of the vector fields
  for (int nu = 0; nu < 4; ++nu) {
    Scalar v;
    for (int mu = 0; mu < 4; ++mu) {
      if (!a.vec[size_t(mu)].is_zero()) v += a.vec[size_t(mu)] * b.vec[size_t(nu)].derivative(mu);
      if (!b.vec[size_t(mu)].is_zero()) v -= b.vec[size_t(mu)] * a.vec[size_t(nu)].derivative(mu);
    }
    r.vec[size_t(nu)] = v;
  }
  // X(g_t) sigma_t - Y(f_t) sigma_t
  for (int t = 0; t < kNumSigma; ++t) {
    Scalar v;
    for (int mu = 0; mu < 4; ++mu) {
      if (!a.vec[size_t(mu)].is_zero()) v += a.vec[size_t(mu)] * b.vert[size_t(t)].derivative(mu);
      if (!b.vec[size_t(mu)].is_zero()) v -= b.vec[size_t(mu)] * a.vert[size_t(t)].derivative(mu);
    }
    r.vert[size_t(t)] = v;
  }
  // pointwise matrix commutator of the vertical parts
  const auto& c = sigma_structure_constants();
  for (int s = 0; s < kNumSigma; ++s) {
    if (a.vert[size_t(s)].is_zero()) continue;
    for (int t = 0; t < kNumSigma; ++t) {
      if (b.vert[size_t(t)].is_zero()) continue;
      Scalar f = a.vert[size_t(s)] * b.vert[size_t(t)];
      for (int u = 0; u < kNumSigma; ++u) {
        const Rat& k = c[size_t(s)][size_t(t)][size_t(u)];
        if (sgn(k) != 0) r.vert[size_t(u)] += f * k;
      }
    }
  }
  return r;
}

std::array<CDer, 6> so_w_basis() {
  return {CDer::sigma(kSigma1),  CDer::sigma(kSigma2),  CDer::sigma(kSigma3),
          CDer::sigma(kSigma23), CDer::sigma(kSigma31), CDer::sigma(kSigma12)};
}

std::optional<Scalar> conformal_factor(const CDer& d) {
  // T(x,y) = d<x,y> - <dx,y> - <x,dy> must equal f<x,y> on the frame.
  // Diagonal inner product eta = diag(-1,1,1,1) with constant entries, so
  // d<theta_i,theta_j> = 0 and T_ij = -<d theta_i, theta_j> - <theta_i, d theta_j>.
  Matrix<Scalar> m = d.vertical_matrix();
  auto eta = [](int i) { return Rat(i == 0 ? -1 : 1); };
  Matrix<Scalar> t(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      t.at(i, j) = -(m.at(j, i) * eta(j) + m.at(i, j) * eta(i));
  std::optional<Scalar> f;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      if (!t.at(i, j).is_zero()) return std::nullopt;
    }
  for (int i = 0; i < 4; ++i) {
    Scalar fi = t.at(i, i) * eta(i);  // t_ii = f * eta_ii
    if (!f) f = fi;
    else if (!(*f == fi)) return std::nullopt;
  }
  return f;
}

std::optional<std::array<Scalar, kNumSigma>> sigma_decompose(const Matrix<Scalar>& m) {
  // 16 equations, 7 unknowns; consistent iff m lies in the sigma span.
  std::array<Scalar, kNumSigma> out{};
  // Use the disjoint-support structure: each entry of m is a single sigma
  // coefficient up to sign. Solve then verify.
  out[kSigma0] = m.at(0, 0);
  for (int b = 1; b <= 3; ++b) out[size_t(kSigma0 + b)] = m.at(b, 0);
  const int rot[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  for (int r = 0; r < 3; ++r)
    out[size_t(kSigma23 + r)] = m.at(rot[r][0], rot[r][1]);
  // verify
  Matrix<Scalar> chk(4, 4);
  for (int s = 0; s < kNumSigma; ++s) {
    if (out[size_t(s)].is_zero()) continue;
    const auto& sm = sigma_matrix(s);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (sm[size_t(i)][size_t(j)] != 0)
          chk.at(i, j) += out[size_t(s)] * Rat(sm[size_t(i)][size_t(j)]);
  }
  if (!(chk == m)) return std::nullopt;
  return out;
}

}  // namespace gle
