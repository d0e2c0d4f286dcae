#include "gle/mc_formal.hpp"

#include <algorithm>

namespace gle {

Vec<Rat> FiniteGLa::bracket(const Vec<Rat>& x, const Vec<Rat>& y) const {
  Vec<Rat> out(size_t(dim()), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[size_t(i)]) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (sgn(y[size_t(j)]) == 0) continue;
      Rat f = x[size_t(i)] * y[size_t(j)];
      for (auto& [t, v] : c[size_t(i)][size_t(j)]) out[size_t(t)] += f * v;
    }
  }
  return out;
}

void FiniteGLa::check_axioms() const {
  int n = dim();
  auto unit = [&](int i) {
    Vec<Rat> v(size_t(n), Rat(0));
    v[size_t(i)] = Rat(1);
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<Rat> ij = bracket(unit(i), unit(j));
      Vec<Rat> ji = bracket(unit(j), unit(i));
      int sign = (degree[size_t(i)] * degree[size_t(j)]) % 2 ? 1 : -1;
      for (int t = 0; t < n; ++t)
        if (!(ij[size_t(t)] == sign * ji[size_t(t)]))
          throw std::logic_error("graded antisymmetry fails");
      for (int t = 0; t < n; ++t)
        if (sgn(ij[size_t(t)]) != 0 &&
            degree[size_t(t)] != degree[size_t(i)] + degree[size_t(j)])
          throw std::logic_error("bracket not graded");
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int a = degree[size_t(i)], b = degree[size_t(j)], d = degree[size_t(k)];
        auto term = [&](int p, int q, int r) { return bracket(unit(p), bracket(unit(q), unit(r))); };
        Vec<Rat> sum(size_t(n), Rat(0));
        auto add = [&](const Vec<Rat>& v, int sign) {
          for (int t = 0; t < n; ++t) sum[size_t(t)] += Rat(sign) * v[size_t(t)];
        };
        add(term(i, j, k), 1);
        add(term(j, k, i), (a * (b + d)) % 2 ? -1 : 1);
        add(term(k, i, j), (d * (a + b)) % 2 ? -1 : 1);
        for (int t = 0; t < n; ++t)
          if (sgn(sum[size_t(t)]) != 0) throw std::logic_error("graded Jacobi fails");
      }
}

std::vector<int> FiniteGLa::slots_of_degree(int d) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (degree[size_t(i)] == d) out.push_back(i);
  return out;
}

SeriesElt SeriesElt::zero(int dim, int kmax) {
  SeriesElt s;
  s.kmax = kmax;
  s.coeff.assign(size_t(kmax + 1), Vec<Rat>(size_t(dim), Rat(0)));
  return s;
}
bool SeriesElt::layer_zero(int k) const {
  for (auto& x : coeff[size_t(k)])
    if (sgn(x) != 0) return false;
  return true;
}
int SeriesElt::order() const {
  for (int k = 0; k <= kmax; ++k)
    if (!layer_zero(k)) return k;
  return kmax + 1;
}
SeriesElt SeriesElt::operator+(const SeriesElt& o) const {
  SeriesElt r = *this;
  for (int k = 0; k <= kmax; ++k)
    for (size_t i = 0; i < r.coeff[size_t(k)].size(); ++i)
      r.coeff[size_t(k)][i] += o.coeff[size_t(k)][i];
  return r;
}
SeriesElt SeriesElt::operator-(const SeriesElt& o) const {
  SeriesElt r = *this;
  for (int k = 0; k <= kmax; ++k)
    for (size_t i = 0; i < r.coeff[size_t(k)].size(); ++i)
      r.coeff[size_t(k)][i] -= o.coeff[size_t(k)][i];
  return r;
}
SeriesElt SeriesElt::scaled(const Rat& f) const {
  SeriesElt r = *this;
  for (auto& layer : r.coeff)
    for (auto& x : layer) x *= f;
  return r;
}
SeriesElt SeriesElt::shift_down(int p) const {
  SeriesElt r = zero(int(coeff[0].size()), kmax);
  for (int k = 0; k + p <= kmax; ++k) r.coeff[size_t(k)] = coeff[size_t(k + p)];
  return r;
}

FreeSeriesGLa FreeSeriesGLa::plain(const FiniteGLa& g, int kmax) {
  FreeSeriesGLa p;
  p.base = g;
  p.kmax = kmax;
  int n = g.dim();
  p.table.assign(size_t(n), std::vector<std::vector<std::pair<int, SparseVec>>>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!g.c[size_t(i)][size_t(j)].empty())
        p.table[size_t(i)][size_t(j)].push_back({0, g.c[size_t(i)][size_t(j)]});
  return p;
}

SeriesElt FreeSeriesGLa::bracket(const SeriesElt& x, const SeriesElt& y) const {
  int n = base.dim();
  SeriesElt out = SeriesElt::zero(n, kmax);
  for (int a = 0; a <= kmax; ++a) {
    if (x.layer_zero(a)) continue;
    for (int b = 0; a + b <= kmax; ++b) {
      if (y.layer_zero(b)) continue;
      for (int i = 0; i < n; ++i) {
        const Rat& xi = x.coeff[size_t(a)][size_t(i)];
        if (sgn(xi) == 0) continue;
        for (int j = 0; j < n; ++j) {
          const Rat& yj = y.coeff[size_t(b)][size_t(j)];
          if (sgn(yj) == 0) continue;
          Rat f = xi * yj;
          for (auto& [pow, vec] : table[size_t(i)][size_t(j)]) {
            int layer = a + b + pow;
            if (layer > kmax) continue;
            for (auto& [t, v] : vec) out.coeff[size_t(layer)][size_t(t)] += f * v;
          }
        }
      }
    }
  }
  return out;
}

SeriesElt FreeSeriesGLa::embed(const Vec<Rat>& x) const {
  SeriesElt s = SeriesElt::zero(base.dim(), kmax);
  s.coeff[0] = x;
  return s;
}

bool FreeSeriesGLa::zero_layer_is_base() const {
  int n = base.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec zero_part;
      for (auto& [pow, vec] : table[size_t(i)][size_t(j)])
        if (pow == 0) zero_part = vec;
      if (!(zero_part == base.c[size_t(i)][size_t(j)])) return false;
    }
  return true;
}

FreeSeriesGLa rees_algebra(const FiniteGLa& g, const std::vector<int>& level, int kmax) {
  int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [t, v] : g.c[size_t(i)][size_t(j)]) {
        (void)v;
        if (level[size_t(t)] > level[size_t(i)] + level[size_t(j)])
          throw NotAFiltration("bracket escapes the filtration");
      }
  FreeSeriesGLa p;
  p.kmax = kmax;
  p.base = g;
  p.table.assign(size_t(n), std::vector<std::vector<std::pair<int, SparseVec>>>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<int, SparseVec> by_power;
      for (auto& [t, v] : g.c[size_t(i)][size_t(j)]) {
        int pow = level[size_t(i)] + level[size_t(j)] - level[size_t(t)];
        by_power[pow].push_back({t, v});
      }
      for (auto& [pow, vec] : by_power) p.table[size_t(i)][size_t(j)].push_back({pow, vec});
      // layer 0 of the Rees bracket is the associated graded gLa
      SparseVec gr;
      for (auto& [pow, vec] : by_power)
        if (pow == 0) gr = vec;
      p.base.c[size_t(i)][size_t(j)] = gr;
    }
  return p;
}

HomologyData homology(const FiniteGLa& g, const Vec<Rat>& x0) {
  int n = g.dim();
  Vec<Rat> sq = g.bracket(x0, x0);
  for (auto& v : sq)
    if (sgn(v) != 0) throw NotMC("[x0, x0] != 0");

  HomologyData out;
  int dmin = *std::min_element(g.degree.begin(), g.degree.end());
  int dmax = *std::max_element(g.degree.begin(), g.degree.end());
  std::map<int, std::vector<int>> slots;
  for (int d = dmin; d <= dmax; ++d) slots[d] = g.slots_of_degree(d);

  auto d_matrix = [&](int d) {
    const auto& src = slots[d];
    std::vector<int> tgt = slots.count(d + 1) ? slots[d + 1] : std::vector<int>{};
    Matrix<Rat> m(int(tgt.size()), int(src.size()));
    for (size_t j = 0; j < src.size(); ++j) {
      Vec<Rat> unit(size_t(n), Rat(0));
      unit[size_t(src[j])] = Rat(1);
      Vec<Rat> img = g.bracket(x0, unit);
      for (size_t i = 0; i < tgt.size(); ++i) m.at(int(i), int(j)) = img[size_t(tgt[i])];
    }
    return m;
  };
  for (int d = dmin; d <= dmax; ++d) out.d[d] = d_matrix(d);
  for (int d = dmin; d < dmax; ++d) {
    Matrix<Rat> dd = out.d[d + 1] * out.d[d];
    for (auto& v : dd.a)
      if (sgn(v) != 0) throw std::logic_error("d^2 != 0");
  }
  for (int d = dmin; d <= dmax; ++d) {
    int dim_d = int(slots[d].size());
    int rank_d = rank(out.d[d]);
    int rank_prev = (d > dmin) ? rank(out.d[d - 1]) : 0;
    out.h_dim[d] = dim_d - rank_d - rank_prev;
  }

  out.deg1_slots = slots.count(1) ? slots[1] : std::vector<int>{};
  out.deg2_slots = slots.count(2) ? slots[2] : std::vector<int>{};
  {
    Matrix<Rat> d1 = out.d.count(1) ? out.d[1] : Matrix<Rat>(0, int(out.deg1_slots.size()));
    auto ker = kernel_basis(d1);
    SpanBasis<Rat> span(int(out.deg1_slots.size()));
    if (out.d.count(0)) {
      const Matrix<Rat>& d0 = out.d[0];
      for (int j = 0; j < d0.cols; ++j) {
        Vec<Rat> col(size_t(d0.rows), Rat(0));
        for (int i = 0; i < d0.rows; ++i) col[size_t(i)] = d0.at(i, j);
        span.add(col);
      }
    }
    for (auto& v : ker) {
      if (span.add(v)) {
        Vec<Rat> full(size_t(n), Rat(0));
        for (size_t i = 0; i < out.deg1_slots.size(); ++i)
          full[size_t(out.deg1_slots[i])] = span.rows().back()[i];
        out.h1_reps.push_back(full);
      }
    }
  }
  {
    int n2 = int(out.deg2_slots.size());
    int n1 = int(out.deg1_slots.size());
    out.h2_to_1 = Matrix<Rat>(n1, n2);
    if (n2 > 0 && n1 > 0) {
      Matrix<Rat> d2 = out.d.count(2) ? out.d[2] : Matrix<Rat>(0, n2);
      auto ker2 = kernel_basis(d2);
      Matrix<Rat> basis(n2, n2);
      int col = 0;
      SpanBasis<Rat> span(n2);
      std::vector<bool> is_ker;
      for (auto& v : ker2)
        if (span.add(v)) {
          for (int i = 0; i < n2; ++i) basis.at(i, col) = v[size_t(i)];
          is_ker.push_back(true);
          ++col;
        }
      for (int j = 0; j < n2 && col < n2; ++j) {
        Vec<Rat> unit(size_t(n2), Rat(0));
        unit[size_t(j)] = Rat(1);
        if (span.add(unit)) {
          for (int i = 0; i < n2; ++i) basis.at(i, col) = unit[size_t(i)];
          is_ker.push_back(false);
          ++col;
        }
      }
      auto binv = inverse(basis);
      if (!binv) throw std::logic_error("degree-2 basis completion failed");
      const Matrix<Rat>& d1 = out.d.at(1);
      Matrix<Rat> pre(n1, n2);
      for (int j = 0; j < n2; ++j) {
        if (!is_ker[size_t(j)]) continue;
        Vec<Rat> target(size_t(n2), Rat(0));
        for (int i = 0; i < n2; ++i) target[size_t(i)] = basis.at(i, j);
        auto sol = solve(d1, target);
        if (!sol) {
          out.homotopy_valid = false;
          continue;
        }
        for (int i = 0; i < n1; ++i) pre.at(i, j) = (*sol)[size_t(i)];
      }
      if (out.homotopy_valid) out.h2_to_1 = pre * *binv;
    }
  }
  return out;
}

MCSolution mc_recursion(const FreeSeriesGLa& p, const Vec<Rat>& x0, const Vec<Rat>& xi_rep,
                        int K) {
  const FiniteGLa& a = p.base;
  HomologyData h = homology(a, x0);
  int n = a.dim();
  int n2 = int(h.deg2_slots.size());

  auto project2 = [&](const Vec<Rat>& full) {
    Vec<Rat> v(size_t(n2), Rat(0));
    for (int i = 0; i < n2; ++i) v[size_t(i)] = full[size_t(h.deg2_slots[size_t(i)])];
    return v;
  };
  auto embed1 = [&](const Vec<Rat>& v) {
    Vec<Rat> full(size_t(n), Rat(0));
    for (size_t i = 0; i < h.deg1_slots.size(); ++i)
      full[size_t(h.deg1_slots[i])] = v[i];
    return full;
  };

  MCSolution sol;
  sol.order = K;
  SeriesElt Xi = p.embed(x0);
  sol.c.push_back(Xi);
  sol.clauses_pass = true;

  for (int step = 0; step <= K; ++step) {
    SeriesElt e = p.bracket(Xi, Xi);
    if (e.order() < step + 1) throw AssertionFailed("A_" + std::to_string(step));
    SeriesElt shifted = e.shift_down(step + 1);
    Vec<Rat> pe = shifted.coeff[0];
    Vec<Rat> d_pe = a.bracket(x0, pe);
    for (auto& v : d_pe)
      if (sgn(v) != 0) throw AssertionFailed("B_" + std::to_string(step));
    // apply the homotopy; when H^2 != 0 globally, fall back to a per-step
    // solve and report a genuine obstruction when the class is nonzero
    Vec<Rat> hp;
    if (h.homotopy_valid) {
      hp = h.h2_to_1.apply(project2(pe));
    } else {
      auto sol_step = solve(h.d.at(1), project2(pe));
      if (!sol_step)
        throw Obstructed("obstruction met at order " + std::to_string(step + 1));
      hp = *sol_step;
    }
    Vec<Rat> c_next_layer = embed1(hp);
    for (auto& v : c_next_layer) v = -v / 2;
    if (step == 0)
      for (int i = 0; i < n; ++i) c_next_layer[size_t(i)] += xi_rep[size_t(i)];
    Vec<Rat> lhs = a.bracket(x0, c_next_layer);
    for (int i = 0; i < n; ++i) {
      Rat want = -pe[size_t(i)] / 2;
      if (!(lhs[size_t(i)] == want)) throw AssertionFailed("C_" + std::to_string(step));
    }
    SeriesElt c_elt = SeriesElt::zero(n, p.kmax);
    if (step + 1 <= p.kmax) c_elt.coeff[size_t(step + 1)] = c_next_layer;
    sol.c.push_back(c_elt);
    Xi = Xi + c_elt;
  }
  sol.xi_sum = Xi;
  return sol;
}

SeriesElt exp_ad(const FreeSeriesGLa& p, const SeriesElt& y, const SeriesElt& x) {
  if (y.order() < 1) throw std::logic_error("exp_ad needs a positive-order argument");
  SeriesElt out = x, term = x;
  Rat fact(1);
  for (int m = 1; m <= p.kmax; ++m) {
    term = p.bracket(y, term);
    fact *= Rat(m);
    if (term.order() > p.kmax) break;
    out = out + term.scaled(Rat(1) / fact);
  }
  return out;
}

const GravityFiber& gravity_fiber() {
  static const GravityFiber fiber = [] {
    const auto& ctx = IdealContext::get();
    GravityFiber f;
    std::vector<std::pair<int, int>> slot_index;
    for (int d = 0; d <= 4; ++d) {
      f.slot_of_degree_offset.push_back(int(slot_index.size()));
      for (int i = 0; i < ctx.e_rank(d); ++i) {
        f.gla.degree.push_back(d);
        slot_index.push_back({d, i});
      }
    }
    int n = int(slot_index.size());
    auto unit_elem = [&](int slot) {
      auto [d, i] = slot_index[size_t(slot)];
      Vec<Rat> coords(size_t(ctx.e_rank(d)), Rat(0));
      coords[size_t(i)] = Rat(1);
      return std::pair<int, EElement>{d, EElement{ctx.e_from_coords(coords, d)}};
    };
    f.gla.c.assign(size_t(n), std::vector<SparseVec>(size_t(n)));
    for (int i = 0; i < n; ++i) {
      auto [di, ei] = unit_elem(i);
      for (int j = 0; j < n; ++j) {
        auto [dj, ej] = unit_elem(j);
        if (di + dj > 4) continue;
        EElement br = e_bracket(ei, ej);
        if (br.is_zero()) continue;
        Vec<Rat> coords = ctx.e_coords_const(br.rep, di + dj);
        SparseVec sv;
        for (size_t t = 0; t < coords.size(); ++t)
          if (sgn(coords[t]) != 0)
            sv.push_back({f.slot_of_degree_offset[size_t(di + dj)] + int(t), coords[t]});
        f.gla.c[size_t(i)][size_t(j)] = std::move(sv);
      }
    }
    f.x_mink.assign(size_t(n), Rat(0));
    Vec<Rat> xm = ctx.e_coords_const(minkowski_element().rep, 1);
    for (size_t t = 0; t < xm.size(); ++t)
      f.x_mink[size_t(f.slot_of_degree_offset[1] + int(t))] = xm[t];
    return f;
  }();
  return fiber;
}

EndoExample endo_example() {
  const int dims[3] = {1, 3, 2};
  const int degs[3] = {-1, 0, 1};
  struct Unit {
    int from_block, from_idx, to_block, to_idx;
  };
  std::vector<Unit> units;
  EndoExample ex;
  for (int fb = 0; fb < 3; ++fb)
    for (int fi = 0; fi < dims[fb]; ++fi)
      for (int tb = 0; tb < 3; ++tb)
        for (int ti = 0; ti < dims[tb]; ++ti) {
          units.push_back({fb, fi, tb, ti});
          ex.gla.degree.push_back(degs[tb] - degs[fb]);
        }
  int n = int(units.size());
  auto compose = [&](const Unit& a, const Unit& b) -> std::optional<Unit> {
    if (a.from_block != b.to_block || a.from_idx != b.to_idx) return std::nullopt;
    return Unit{b.from_block, b.from_idx, a.to_block, a.to_idx};
  };
  auto index_of = [&](const Unit& u) {
    for (int i = 0; i < n; ++i)
      if (units[size_t(i)].from_block == u.from_block && units[size_t(i)].from_idx == u.from_idx &&
          units[size_t(i)].to_block == u.to_block && units[size_t(i)].to_idx == u.to_idx)
        return i;
    throw std::logic_error("unit not found");
  };
  ex.gla.c.assign(size_t(n), std::vector<SparseVec>(size_t(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::map<int, Rat> acc;
      if (auto comp = compose(units[size_t(i)], units[size_t(j)])) acc[index_of(*comp)] += Rat(1);
      int sign = (ex.gla.degree[size_t(i)] * ex.gla.degree[size_t(j)]) % 2 ? -1 : 1;
      if (auto comp = compose(units[size_t(j)], units[size_t(i)]))
        acc[index_of(*comp)] -= Rat(sign);
      SparseVec sv;
      for (auto& [t, v] : acc)
        if (sgn(v) != 0) sv.push_back({t, v});
      ex.gla.c[size_t(i)][size_t(j)] = std::move(sv);
    }
  ex.x0.assign(size_t(n), Rat(0));
  // a: V_{-1} -> V_0 hits the first slot; b: V_0 -> V_1 reads the second,
  // so b ∘ a = 0 with rank b = 1. The underlying complex has one-dimensional
  // homology in degrees 0 and 1, hence H^1(ad) = 1 and H^2(ad) = 0.
  ex.x0[size_t(index_of({0, 0, 1, 0}))] = Rat(1);
  ex.x0[size_t(index_of({1, 1, 2, 0}))] = Rat(1);
  return ex;
}

}  // namespace gle
