#include "gle/glaoid.hpp"

#include <stdexcept>

namespace gle {

LElement LElement::operator+(const LElement& o) const {
  LElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] + o.blocks[size_t(m)];
  return r;
}
LElement LElement::operator-(const LElement& o) const {
  LElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] - o.blocks[size_t(m)];
  return r;
}
LElement LElement::operator-() const {
  LElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = -blocks[size_t(m)];
  return r;
}
LElement LElement::operator*(const Scalar& s) const {
  LElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] * s;
  return r;
}
LElement& LElement::operator+=(const LElement& o) {
  for (int m = 0; m < kBasisSize; ++m) blocks[size_t(m)] += o.blocks[size_t(m)];
  return *this;
}

LElement wedge_mono(int mask, const LElement& a) {
  LElement r;
  for (int m = 0; m < kBasisSize; ++m) {
    if (a.blocks[size_t(m)].is_zero() || (mask & m)) continue;
    int sign = merge_sign(mask, m);
    r.blocks[size_t(mask | m)] += (sign < 0 ? -a.blocks[size_t(m)] : a.blocks[size_t(m)]);
  }
  return r;
}

LElement wedge_ext(const ExtElement& w, const LElement& a) {
  LElement r;
  for (int wm = 0; wm < kBasisSize; ++wm) {
    if (w.c[size_t(wm)].is_zero()) continue;
    r += wedge_mono(wm, a) * w.c[size_t(wm)];
  }
  return r;
}

LElement l_bracket(const LElement& a, const LElement& b) {
  LElement r;
  for (int s = 0; s < kBasisSize; ++s) {
    const CDer& da = a.blocks[size_t(s)];
    if (da.is_zero()) continue;
    for (int t = 0; t < kBasisSize; ++t) {
      const CDer& db = b.blocks[size_t(t)];
      if (db.is_zero()) continue;
      // term 1: (theta_s ∧ theta_t) [da, db]
      if (!(s & t)) {
        CDer br = bracket_cder(da, db);
        if (!br.is_zero()) {
          int sign = merge_sign(s, t);
          r.blocks[size_t(s | t)] += (sign < 0 ? -br : br);
        }
      }
      // term 2: (theta_s ∧ lambda(da)(theta_t)) db
      ExtElement lt = da.apply(ExtElement::basis(t));
      if (!lt.is_zero()) {
        for (int u = 0; u < kBasisSize; ++u) {
          if (lt.c[size_t(u)].is_zero() || (s & u)) continue;
          int sign = merge_sign(s, u);
          Scalar coeff = lt.c[size_t(u)];
          r.blocks[size_t(s | u)] += db * (sign < 0 ? -coeff : coeff);
        }
      }
      // term 3: - (lambda(db)(theta_s) ∧ theta_t) da
      ExtElement ls = db.apply(ExtElement::basis(s));
      if (!ls.is_zero()) {
        for (int u = 0; u < kBasisSize; ++u) {
          if (ls.c[size_t(u)].is_zero() || (u & t)) continue;
          int sign = merge_sign(u, t);
          Scalar coeff = ls.c[size_t(u)];
          r.blocks[size_t(u | t)] += da * (sign < 0 ? coeff : -coeff);
        }
      }
    }
  }
  return r;
}

ExtElement anchor_on_scalar(const LElement& a, const Scalar& f) {
  ExtElement r;
  for (int m = 0; m < kBasisSize; ++m) {
    const CDer& d = a.blocks[size_t(m)];
    if (d.is_zero()) continue;
    Scalar df = d.apply(f);
    if (!df.is_zero()) r.c[size_t(m)] += df;
  }
  return r;
}

ExtElement anchor_on_ext(const LElement& a, const ExtElement& w) {
  ExtElement r;
  for (int m = 0; m < kBasisSize; ++m) {
    const CDer& d = a.blocks[size_t(m)];
    if (d.is_zero()) continue;
    ExtElement dw = d.apply(w);
    if (dw.is_zero()) continue;
    ExtElement mono = ExtElement::basis(m);
    r += wedge(mono, dw);
  }
  return r;
}

bool in_anchor_kernel(const LElement& a) {
  for (int mu = 0; mu < 4; ++mu)
    if (!anchor_on_scalar(a, Scalar::variable(mu)).is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    if (!anchor_on_ext(a, ExtElement::basis(1 << i)).is_zero()) return false;
  return true;
}

Vec<Scalar> l_flatten(const LElement& a) {
  Vec<Scalar> v(size_t(kLDim), Scalar(0));
  for (int m = 0; m < kBasisSize; ++m) {
    const CDer& d = a.blocks[size_t(m)];
    for (int mu = 0; mu < 4; ++mu) v[size_t(m * kNumGenerators + mu)] = d.vec[size_t(mu)];
    for (int s = 0; s < kNumSigma; ++s) v[size_t(m * kNumGenerators + 4 + s)] = d.vert[size_t(s)];
  }
  return v;
}

LElement l_unflatten(const Vec<Scalar>& v) {
  LElement a;
  for (int m = 0; m < kBasisSize; ++m) {
    CDer& d = a.blocks[size_t(m)];
    for (int mu = 0; mu < 4; ++mu) d.vec[size_t(mu)] = v[size_t(m * kNumGenerators + mu)];
    for (int s = 0; s < kNumSigma; ++s) d.vert[size_t(s)] = v[size_t(m * kNumGenerators + 4 + s)];
  }
  return a;
}

Vec<Rat> l_flatten_const(const LElement& a) {
  Vec<Scalar> v = l_flatten(a);
  Vec<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_constant()) throw std::logic_error("element is not constant");
    r[i] = v[i].constant_value();
  }
  return r;
}

LElement l_unflatten_const(const Vec<Rat>& v) {
  Vec<Scalar> s(v.size());
  for (size_t i = 0; i < v.size(); ++i) s[i] = Scalar(v[i]);
  return l_unflatten(s);
}

const std::vector<int>& degree_monos(int k) {
  static const auto table = [] {
    std::array<std::vector<int>, 5> t;
    for (int m = 0; m < kBasisSize; ++m) t[size_t(mono_degree(m))].push_back(m);
    return t;
  }();
  return table[size_t(k)];
}

const std::vector<int>& degree_slots(int k) {
  static const auto table = [] {
    std::array<std::vector<int>, 5> t;
    for (int k2 = 0; k2 <= 4; ++k2)
      for (int m : degree_monos(k2))
        for (int g = 0; g < kNumGenerators; ++g) t[size_t(k2)].push_back(m * kNumGenerators + g);
    return t;
  }();
  return table[size_t(k)];
}

std::vector<LElement> ideal_basis_explicit() {
  // u_j = theta_0 theta_j + i theta_{j+1} theta_{j+2} (cyclic),
  // v_k = sigma_k + i sigma_{rot(k)}.
  // For S in the symmetric traceless basis, the real part of u^T S v.
  const int pair_mask[3] = {0b0011, 0b0101, 0b1001};  // theta_0 theta_j
  // duals theta_2 theta_3, theta_3 theta_1, theta_1 theta_2 on sorted masks,
  // with the reordering sign of theta_3 theta_1 = -theta_1 theta_3.
  const int dual_mask[3] = {0b1100, 0b1010, 0b0110};
  const int dual_sign[3] = {1, -1, 1};
  const int boost_idx[3] = {kSigma1, kSigma2, kSigma3};
  const int rot_idx[3] = {kSigma23, kSigma31, kSigma12};

  auto real_part = [&](int j, int k) {
    // Re[u_j v_k] = theta0 theta_j ⊗ sigma_k - dual_j ⊗ sigma_rot(k)
    LElement e;
    e.blocks[size_t(pair_mask[j])] += CDer::sigma(boost_idx[k]);
    CDer d = CDer::sigma(rot_idx[k]) * Rat(-dual_sign[j]);
    e.blocks[size_t(dual_mask[j])] += d;
    return e;
  };
  auto imag_part = [&](int j, int k) {
    // Im[u_j v_k] = theta0 theta_j ⊗ sigma_rot(k) + dual_j ⊗ sigma_k
    LElement e;
    e.blocks[size_t(pair_mask[j])] += CDer::sigma(rot_idx[k]);
    CDer d = CDer::sigma(boost_idx[k]) * Rat(dual_sign[j]);
    e.blocks[size_t(dual_mask[j])] += d;
    return e;
  };

  // Basis of symmetric traceless 3x3: E11-E33, E22-E33, E12+E21, E13+E31, E23+E32.
  const std::vector<std::vector<std::pair<int, int>>> s_basis = {
      {{0, 0}}, {{1, 1}},                // diagonal, minus E33 handled below
      {{0, 1}, {1, 0}}, {{0, 2}, {2, 0}}, {{1, 2}, {2, 1}}};

  std::vector<LElement> out;
  for (int im = 0; im < 2; ++im) {
    for (size_t b = 0; b < s_basis.size(); ++b) {
      LElement e;
      auto add = [&](int j, int k, int sgn) {
        LElement t = im ? imag_part(j, k) : real_part(j, k);
        e += (sgn < 0 ? -t : t);
      };
      if (b < 2) {
        add(int(b), int(b), 1);
        add(2, 2, -1);
      } else {
        for (auto& [j, k] : s_basis[b]) add(j, k, 1);
      }
      out.push_back(e);
    }
  }
  return out;
}

std::vector<Vec<Rat>> anchor_kernel_basis(int k) {
  // Constant elements of degree k annihilating C∞ and W.
  const auto& slots = degree_slots(k);
  int n = int(slots.size());
  // rows: for each mu: the W-coordinate conditions; vector parts must vanish,
  // and for each frame vector theta_i the wedge image must vanish.
  std::vector<Vec<Rat>> rows;
  // condition: vector components zero (annihilate C∞)
  for (int idx = 0; idx < n; ++idx) {
    int slot = slots[size_t(idx)];
    if (slot % kNumGenerators < 4) {
      Vec<Rat> row(size_t(n), Rat(0));
      row[size_t(idx)] = Rat(1);
      rows.push_back(std::move(row));
    }
  }
  // condition: anchor on theta_i vanishes; images lie in degree k+1.
  for (int i = 0; i < 4; ++i) {
    // For each target monomial of degree k+1 one scalar condition.
    std::vector<Vec<Rat>> cond(kBasisSize, Vec<Rat>(size_t(n), Rat(0)));
    for (int idx = 0; idx < n; ++idx) {
      int slot = slots[size_t(idx)];
      int mask = slot / kNumGenerators, g = slot % kNumGenerators;
      if (g < 4) continue;  // lifts annihilate the frame
      LElement e = LElement::term(mask, CDer::sigma(g - 4));
      ExtElement img = anchor_on_ext(e, ExtElement::basis(1 << i));
      for (int tm = 0; tm < kBasisSize; ++tm) {
        if (img.c[size_t(tm)].is_zero()) continue;
        cond[size_t(tm)][size_t(idx)] = img.c[size_t(tm)].constant_value();
      }
    }
    for (auto& c : cond) rows.push_back(std::move(c));
  }
  Matrix<Rat> m(int(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) m.set_row(int(r), rows[r]);
  return kernel_basis(m);
}

std::vector<LElement> ideal_basis_isotypic() {
  // m^2 with the adjoint so(W)-action, extract (2,0) ⊕ (0,2).
  auto mk = anchor_kernel_basis(2);
  int dim = int(mk.size());
  const auto& slots = degree_slots(2);
  auto to_l = [&](const Vec<Rat>& coords) {
    Vec<Rat> full(size_t(kLDim), Rat(0));
    for (size_t i = 0; i < slots.size(); ++i) full[size_t(slots[i])] = coords[i];
    return l_unflatten_const(full);
  };
  // basis matrix for solving coordinates
  Matrix<Rat> bmat(int(slots.size()), dim);
  for (int j = 0; j < dim; ++j)
    for (size_t i = 0; i < slots.size(); ++i) bmat.at(int(i), j) = mk[size_t(j)][i];

  auto so = so_w_basis();
  std::array<Matrix<Rat>, 6> rep;
  for (int g = 0; g < 6; ++g) {
    rep[size_t(g)] = Matrix<Rat>(dim, dim);
    LElement gen = LElement::term(0, so[size_t(g)]);
    for (int j = 0; j < dim; ++j) {
      LElement img = l_bracket(gen, to_l(mk[size_t(j)]));
      Vec<Rat> flat = l_flatten_const(img);
      Vec<Rat> coords(slots.size());
      for (size_t i = 0; i < slots.size(); ++i) coords[i] = flat[size_t(slots[i])];
      auto sol = solve(bmat, coords);
      if (!sol) throw ComponentNotFound("adjoint action leaves m^2");
      for (int i = 0; i < dim; ++i) rep[size_t(g)].at(i, j) = (*sol)[size_t(i)];
    }
  }
  auto comps = isotypic_decompose(rep);
  for (auto& c : comps) {
    if (c.label.p == Rat(2) && c.label.q == Rat(0) && c.label.paired) {
      std::vector<LElement> out;
      for (auto& v : c.basis) {
        Vec<Rat> coords(size_t(dim), Rat(0));
        for (int i = 0; i < dim; ++i) coords[size_t(i)] = v[size_t(i)];
        // v is in m^2-coordinates; expand to L-coordinates
        Vec<Rat> full(size_t(kLDim), Rat(0));
        for (int j = 0; j < dim; ++j)
          for (size_t i = 0; i < slots.size(); ++i)
            full[size_t(slots[i])] += v[size_t(j)] * mk[size_t(j)][i];
        out.push_back(l_unflatten_const(full));
      }
      return out;
    }
  }
  throw ComponentNotFound("(2,0) ⊕ (0,2) not present in m^2");
}

IdealBasis ideal_saturate(const std::vector<LElement>& basis2) {
  IdealBasis out;
  out.basis2 = basis2;
  auto saturate = [&](const std::vector<LElement>& lower, int degree) {
    SpanBasis<Rat> span(kLDim);
    std::vector<LElement> basis;
    for (int i = 0; i < 4; ++i)
      for (auto& e : lower) {
        LElement w = wedge_mono(1 << i, e);
        if (w.is_zero()) continue;
        if (span.add(l_flatten_const(w))) basis.push_back(l_unflatten_const(span.rows().back()));
      }
    (void)degree;
    return basis;
  };
  out.basis3 = saturate(out.basis2, 3);
  out.basis4 = saturate(out.basis3, 4);
  return out;
}

const std::vector<LElement>& IdealContext::ideal_basis(int degree) const {
  switch (degree) {
    case 2: return ideal_.basis2;
    case 3: return ideal_.basis3;
    default: return ideal_.basis4;
  }
}

int IdealContext::i_rank(int k) const {
  switch (k) {
    case 2: return int(ideal_.basis2.size());
    case 3: return int(ideal_.basis3.size());
    case 4: return int(ideal_.basis4.size());
    default: return 0;
  }
}

IdealContext::IdealContext() {
  ideal_ = ideal_saturate(ideal_basis_explicit());
  for (int k = 0; k <= 4; ++k) {
    const auto& slots = degree_slots(k);
    std::vector<Vec<Rat>> rows;
    if (k >= 2)
      for (auto& e : ideal_basis(k)) {
        Vec<Rat> flat = l_flatten_const(e);
        Vec<Rat> row(slots.size());
        for (size_t i = 0; i < slots.size(); ++i) row[i] = flat[size_t(slots[i])];
        rows.push_back(std::move(row));
      }
    Matrix<Rat> m(int(rows.size()), int(slots.size()));
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(int(r), rows[r]);
    std::vector<int> piv = rref(m);
    for (size_t r = 0; r < piv.size(); ++r) rref_rows_[size_t(k)].push_back(m.row(int(r)));
    for (int c : piv) pivots_[size_t(k)].push_back(c);
    std::vector<bool> is_piv(slots.size(), false);
    for (int c : piv) is_piv[size_t(c)] = true;
    for (size_t c = 0; c < slots.size(); ++c)
      if (!is_piv[c]) comp_slots_[size_t(k)].push_back(int(c));
  }
}

const IdealContext& IdealContext::get() {
  static const IdealContext ctx;
  return ctx;
}

LElement IdealContext::reduce(const LElement& a) const {
  Vec<Scalar> flat = l_flatten(a);
  for (int k = 2; k <= 4; ++k) {
    const auto& slots = degree_slots(k);
    const auto& rows = rref_rows_[size_t(k)];
    const auto& piv = pivots_[size_t(k)];
    for (size_t r = 0; r < rows.size(); ++r) {
      Scalar coeff = flat[size_t(slots[size_t(piv[r])])];
      if (coeff.is_zero()) continue;
      for (size_t i = 0; i < slots.size(); ++i) {
        const Rat& entry = rows[r][i];
        if (sgn(entry) == 0) continue;
        flat[size_t(slots[i])] -= coeff * entry;
      }
    }
  }
  return l_unflatten(flat);
}

Vec<Scalar> IdealContext::e_coords(const LElement& a, int k) const {
  const auto& slots = degree_slots(k);
  Vec<Scalar> flat = l_flatten(reduce(a.graded_part(k)));
  Vec<Scalar> out(comp_slots_[size_t(k)].size());
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = flat[size_t(slots[size_t(comp_slots_[size_t(k)][i])])];
  return out;
}

Vec<Rat> IdealContext::e_coords_const(const LElement& a, int k) const {
  Vec<Scalar> s = e_coords(a, k);
  Vec<Rat> r(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_constant()) throw std::logic_error("non-constant E coordinates");
    r[i] = s[i].constant_value();
  }
  return r;
}

LElement IdealContext::e_from_coords(const Vec<Rat>& coords, int k) const {
  const auto& slots = degree_slots(k);
  Vec<Rat> full(size_t(kLDim), Rat(0));
  for (size_t i = 0; i < coords.size(); ++i)
    full[size_t(slots[size_t(comp_slots_[size_t(k)][i])])] = coords[i];
  return l_unflatten_const(full);
}

bool IdealContext::contains(const LElement& a) const { return reduce(a).is_zero(); }

EElement reduce_mod_ideal(const LElement& a) { return {IdealContext::get().reduce(a)}; }

EElement e_bracket(const EElement& a, const EElement& b) {
  return reduce_mod_ideal(l_bracket(a.rep, b.rep));
}

EElement mc_defect(const EElement& x) {
  if (!x.rep.homogeneous(1)) throw std::logic_error("mc_defect needs a grade-1 element");
  return reduce_mod_ideal(l_bracket(x.rep, x.rep));
}

EElement e_wedge_mono(int mask, const EElement& a) {
  return reduce_mod_ideal(wedge_mono(mask, a.rep));
}

EElement minkowski_element() {
  LElement x;
  for (int mu = 0; mu < 4; ++mu) x += LElement::term(1 << mu, CDer::lift(mu));
  return reduce_mod_ideal(x);
}

bool nondegenerate(const EElement& x) {
  Matrix<Scalar> frame(4, 4);
  for (int nu = 0; nu < 4; ++nu)
    for (int mu = 0; mu < 4; ++mu) frame.at(nu, mu) = x.rep.blocks[size_t(1 << nu)].vec[size_t(mu)];
  return inverse(frame).has_value();
}

}  // namespace gle
