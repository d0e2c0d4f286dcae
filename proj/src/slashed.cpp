#include "gle/slashed.hpp"

namespace gle {

int SlashedElement::parity() const {
  int p = -2;
  for (int m = 0; m < kBasisSize; ++m) {
    if (blocks[size_t(m)].is_zero()) continue;
    int q = mono_degree(m) & 1;
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? -1 : p;
}

SlashedElement SlashedElement::operator+(const SlashedElement& o) const {
  SlashedElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] + o.blocks[size_t(m)];
  return r;
}
SlashedElement SlashedElement::operator-(const SlashedElement& o) const {
  SlashedElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] - o.blocks[size_t(m)];
  return r;
}
SlashedElement SlashedElement::operator*(const Scalar& s) const {
  SlashedElement r;
  for (int m = 0; m < kBasisSize; ++m) r.blocks[size_t(m)] = blocks[size_t(m)] * s;
  return r;
}
SlashedElement& SlashedElement::operator+=(const SlashedElement& o) {
  for (int m = 0; m < kBasisSize; ++m) blocks[size_t(m)] += o.blocks[size_t(m)];
  return *this;
}

SlashedElement cl_mul_mono(int mask, const SlashedElement& a) {
  SlashedElement r;
  for (int m = 0; m < kBasisSize; ++m) {
    if (a.blocks[size_t(m)].is_zero()) continue;
    int sign = cl_blade_sign(mask, m);
    CDer d = a.blocks[size_t(m)];
    r.blocks[size_t(mask ^ m)] += (sign < 0 ? -d : d);
  }
  return r;
}

SlashedElement cl_mul(const MultiVector& w, const SlashedElement& a) {
  SlashedElement r;
  for (int m = 0; m < kBasisSize; ++m) {
    if (w.c[size_t(m)].is_zero()) continue;
    r += cl_mul_mono(m, a) * w.c[size_t(m)];
  }
  return r;
}

const std::vector<int>& filt_monos(int k) {
  static const auto table = [] {
    std::array<std::vector<int>, 5> t;
    for (int k2 = 0; k2 <= 4; ++k2)
      for (int m = 0; m < kBasisSize; ++m)
        if (mono_degree(m) <= k2 && (mono_degree(m) & 1) == (k2 & 1)) t[size_t(k2)].push_back(m);
    return t;
  }();
  return table[size_t(k)];
}

bool PElement::is_zero() const {
  for (auto& m : dC)
    if (!m.is_zero()) return false;
  for (auto& m : dW)
    if (!m.is_zero()) return false;
  return dOm.is_zero();
}
PElement PElement::operator-(const PElement& o) const {
  PElement r;
  for (int i = 0; i < 4; ++i) {
    r.dC[size_t(i)] = dC[size_t(i)] - o.dC[size_t(i)];
    r.dW[size_t(i)] = dW[size_t(i)] - o.dW[size_t(i)];
  }
  r.dOm = dOm - o.dOm;
  return r;
}
bool PElement::operator==(const PElement& o) const { return (*this - o).is_zero(); }

PElement f_morphism(const SlashedElement& a) {
  PElement p;
  for (int m = 0; m < kBasisSize; ++m) {
    const CDer& d = a.blocks[size_t(m)];
    if (d.is_zero()) continue;
    MultiVector mono = MultiVector::basis(m);
    // delta_Cinf on the coordinates: the vector field part
    for (int mu = 0; mu < 4; ++mu)
      if (!d.vec[size_t(mu)].is_zero()) p.dC[size_t(mu)] += mono * d.vec[size_t(mu)];
    // delta_W on the frame: the vertical matrix, image embedded W -> Cl
    Matrix<Scalar> vm = d.vertical_matrix();
    for (int nu = 0; nu < 4; ++nu)
      for (int i = 0; i < 4; ++i) {
        const Scalar& c = vm.at(i, nu);
        if (c.is_zero()) continue;
        p.dW[size_t(nu)] += clifford_mul(mono, MultiVector::basis(1 << i)) * c;
      }
    // delta_Omega on the volume: the trace
    Scalar tr = d.trace();
    if (!tr.is_zero()) p.dOm += mono * tr;
  }
  return p;
}

Vec<Rat> p_flatten_const(const PElement& p) {
  Vec<Rat> v(size_t(kPDim), Rat(0));
  auto put = [&](const MultiVector& m, int block) {
    for (int s = 0; s < kBasisSize; ++s) {
      if (m.c[size_t(s)].is_zero()) continue;
      if (!m.c[size_t(s)].is_constant()) throw std::logic_error("non-constant P coordinates");
      v[size_t(block * kBasisSize + s)] = m.c[size_t(s)].constant_value();
    }
  };
  for (int mu = 0; mu < 4; ++mu) put(p.dC[size_t(mu)], mu);
  for (int nu = 0; nu < 4; ++nu) put(p.dW[size_t(nu)], 4 + nu);
  put(p.dOm, 8);
  return v;
}

int p_rank(int k) {
  int cur = int(filt_monos(k).size());
  int next = k < 4 ? int(filt_monos(k + 1).size()) : int(filt_monos(3).size());
  return 5 * cur + 4 * next;
}

namespace {

SlashedElement slot_element(int slot) {
  int mask = slot / kNumGenerators, g = slot % kNumGenerators;
  return SlashedElement::term(mask, CDer::generator(g));
}

Vec<Rat> flatten_slashed(const SlashedElement& v) { return l_flatten_const(v.as_l()); }

}  // namespace

SlashedContext::SlashedContext() : basis_change_(kLDim, kLDim), basis_change_inv_(0, 0) {
  // f as a constant matrix, kPDim x kLDim.
  Matrix<Rat> fmat(kPDim, kLDim);
  for (int slot = 0; slot < kLDim; ++slot) {
    Vec<Rat> img = p_flatten_const(f_morphism(slot_element(slot)));
    for (int r = 0; r < kPDim; ++r) fmat.at(r, slot) = img[size_t(r)];
  }

  // Kernel and image rank per filtration step.
  for (int k = 0; k <= 4; ++k) {
    const auto& monos = filt_monos(k);
    std::vector<int> slots;
    for (int m : monos)
      for (int g = 0; g < kNumGenerators; ++g) slots.push_back(m * kNumGenerators + g);
    Matrix<Rat> sub(kPDim, int(slots.size()));
    for (int r = 0; r < kPDim; ++r)
      for (size_t c = 0; c < slots.size(); ++c) sub.at(r, int(c)) = fmat.at(r, slots[c]);
    f_image_rank_[size_t(k)] = rank(sub);
    for (auto& kv : kernel_basis(sub)) {
      Vec<Rat> full(size_t(kLDim), Rat(0));
      for (size_t c = 0; c < slots.size(); ++c) full[size_t(slots[c])] = kv[c];
      islash_basis_[size_t(k)].push_back(std::move(full));
    }
  }
  islash_total_ = kernel_basis(fmat);

  // Free generators: A is the lemma's explicit span; B searched inside the
  // level-2 kernel.
  for (int j = 0; j < 4; ++j) a_basis_[size_t(j)] = SlashedElement::term(0, CDer::lift(j));
  const int a_sigmas[5] = {kSigma0, kSigma1, kSigma2, kSigma3, kSigma23};
  for (int j = 0; j < 5; ++j)
    a_basis_[size_t(4 + j)] = SlashedElement::term(0, CDer::sigma(a_sigmas[j]));

  auto try_pair = [&](const Vec<Rat>& b1, const Vec<Rat>& b2) -> bool {
    Matrix<Rat> m(kLDim, kLDim);
    int col = 0;
    auto add_orbit = [&](const SlashedElement& gen) {
      for (int s = 0; s < kBasisSize; ++s) {
        Vec<Rat> v = flatten_slashed(cl_mul_mono(s, gen));
        for (int r = 0; r < kLDim; ++r) m.at(r, col) = v[size_t(r)];
        ++col;
      }
    };
    for (auto& a : a_basis_) add_orbit(a);
    SlashedElement e1 = SlashedElement::from_l(l_unflatten_const(b1));
    SlashedElement e2 = SlashedElement::from_l(l_unflatten_const(b2));
    add_orbit(e1);
    add_orbit(e2);
    auto inv = inverse(m);
    if (!inv) return false;
    b_basis_[0] = e1;
    b_basis_[1] = e2;
    basis_change_ = m;
    basis_change_inv_ = *inv;
    return true;
  };
  const auto& k2 = islash_basis_[2];
  bool found = false;
  for (size_t i = 0; i < k2.size() && !found; ++i)
    for (size_t j = i + 1; j < k2.size() && !found; ++j) found = try_pair(k2[i], k2[j]);
  if (!found) throw DecompositionFailed("no pair of level-2 kernel vectors frees the module");

  // Filtration-step bases of E-slash.
  for (int k = 0; k <= 4; ++k) {
    SpanBasis<Rat> span(144);
    for (int m : filt_monos(k))
      for (int g = 0; g < kNumGenerators; ++g) {
        SlashedElement e = slot_element(m * kNumGenerators + g);
        Vec<Rat> coords = e_coords(e);
        if (span.add(coords)) {
          eslash_level_[size_t(k)].reps.push_back(e);
          eslash_level_[size_t(k)].coords.push_back(coords);
        }
      }
  }
}

const SlashedContext& SlashedContext::get() {
  static const SlashedContext ctx;
  return ctx;
}

Vec<Rat> SlashedContext::full_coords(const SlashedElement& v) const {
  return basis_change_inv_.apply(flatten_slashed(v));
}

Vec<Scalar> SlashedContext::full_coords_scalar(const SlashedElement& v) const {
  Vec<Scalar> flat = l_flatten(v.as_l());
  Vec<Scalar> out(size_t(kLDim), Scalar(0));
  for (int i = 0; i < kLDim; ++i) {
    Scalar acc;
    for (int j = 0; j < kLDim; ++j) {
      const Rat& m = basis_change_inv_.at(i, j);
      if (sgn(m) == 0) continue;
      acc += flat[size_t(j)] * m;
    }
    out[size_t(i)] = acc;
  }
  return out;
}

Vec<Rat> SlashedContext::e_coords(const SlashedElement& v) const {
  Vec<Rat> full = full_coords(v);
  return Vec<Rat>(full.begin(), full.begin() + 144);
}

SlashedElement SlashedContext::from_e_coords(const Vec<Rat>& coords) const {
  SlashedElement out;
  for (int j = 0; j < 9; ++j) {
    MultiVector x;
    for (int s = 0; s < kBasisSize; ++s) x.c[size_t(s)] = Scalar(coords[size_t(j * kBasisSize + s)]);
    out += cl_mul(x, a_basis_[size_t(j)]);
  }
  return out;
}

Vec<Rat> SlashedContext::cl_mul_coords(const std::array<Rat, 4>& w, const Vec<Rat>& coords) const {
  Vec<Rat> out(size_t(144), Rat(0));
  for (int j = 0; j < 9; ++j)
    for (int s = 0; s < kBasisSize; ++s) {
      const Rat& c = coords[size_t(j * kBasisSize + s)];
      if (sgn(c) == 0) continue;
      for (int i = 0; i < 4; ++i) {
        if (sgn(w[size_t(i)]) == 0) continue;
        int sign = cl_blade_sign(1 << i, s);
        out[size_t(j * kBasisSize + ((1 << i) ^ s))] += w[size_t(i)] * c * sign;
      }
    }
  return out;
}

std::optional<Vec<Rat>> SlashedContext::level_coefficients(int k, const Vec<Rat>& ec) const {
  const auto& lvl = eslash_level_[size_t(k)];
  Matrix<Rat> m(144, int(lvl.coords.size()));
  for (size_t j = 0; j < lvl.coords.size(); ++j)
    for (int r = 0; r < 144; ++r) m.at(r, int(j)) = lvl.coords[j][size_t(r)];
  return solve(m, ec);
}

Vec<Rat> SlashedContext::project_level_to_e(int k, const Vec<Rat>& level_coeffs) const {
  const auto& lvl = eslash_level_[size_t(k)];
  SlashedElement rep;
  for (size_t j = 0; j < lvl.reps.size(); ++j) {
    const Rat& c = level_coeffs[j];
    if (sgn(c) == 0) continue;
    rep += lvl.reps[j] * Scalar(c);
  }
  // top exterior-degree part under the canonical module identification
  LElement top = rep.as_l().graded_part(k);
  return IdealContext::get().e_coords_const(top, k);
}

Vec<Rat> SlashedContext::project_to_e(int k, const SlashedElement& v) const {
  auto coeffs = level_coefficients(k, e_coords(v));
  if (!coeffs) throw std::logic_error("element not in the filtration step");
  return project_level_to_e(k, *coeffs);
}

SlashedElement SlashedContext::lift_from_e(int k, const Vec<Rat>& ec) const {
  LElement rep = IdealContext::get().e_from_coords(ec, k);
  return SlashedElement::from_l(rep);
}

AuxTable aux_surjectivity_table() {
  AuxTable t;
  auto so = so_w_basis();
  for (int k = 0; k <= 4; ++k) {
    const auto& monos = filt_monos(k);
    int kk = k < 4 ? k + 1 : 3;  // Cl^{<| 5} has the same monomials as Cl^{<| 3}
    t.left_dim[size_t(k)] = 6 * int(monos.size());
    t.right_dim[size_t(k)] = 4 * int(filt_monos(kk).size());
    Matrix<Rat> m(4 * kBasisSize, t.left_dim[size_t(k)]);
    int col = 0;
    for (int mono : monos)
      for (int g = 0; g < 6; ++g) {
        Matrix<Scalar> vm = so[size_t(g)].vertical_matrix();
        for (int nu = 0; nu < 4; ++nu)
          for (int i = 0; i < 4; ++i) {
            const Scalar& c = vm.at(i, nu);
            if (c.is_zero()) continue;
            MultiVector img =
                clifford_mul(MultiVector::basis(mono), MultiVector::basis(1 << i)) * c;
            for (int s = 0; s < kBasisSize; ++s)
              if (!img.c[size_t(s)].is_zero())
                m.at(nu * kBasisSize + s, col) += img.c[size_t(s)].constant_value();
          }
        ++col;
      }
    t.image_rank[size_t(k)] = rank(m);
  }
  return t;
}

std::vector<Vec<Rat>> gr_islash_basis(int k) {
  const auto& ctx = SlashedContext::get();
  SpanBasis<Rat> span(kLDim);
  std::vector<Vec<Rat>> out;
  for (auto& v : ctx.islash_basis(k)) {
    LElement top = l_unflatten_const(v).graded_part(k);
    Vec<Rat> flat = l_flatten_const(top);
    if (span.add(flat)) out.push_back(span.rows().back());
  }
  return out;
}

}  // namespace gle
