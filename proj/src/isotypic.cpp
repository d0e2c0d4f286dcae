#include "gle/isotypic.hpp"

#include <algorithm>
#include <map>

namespace gle {

namespace {

using GMat = Matrix<Gaussian>;

GMat to_gaussian(const Matrix<Rat>& m) {
  GMat g(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) g.a[i] = Gaussian(m.a[i]);
  return g;
}

// Candidate spins p with eigenvalue p(p+1).
const std::vector<Rat>& spin_candidates() {
  static const std::vector<Rat> ps = [] {
    std::vector<Rat> v;
    for (int twice = 0; twice <= 10; ++twice) {
      Rat p(twice, 2);
      p.canonicalize();
      v.push_back(p);
    }
    return v;
  }();
  return ps;
}

struct ComplexComponent {
  Rat p, q;
  std::vector<Vec<Gaussian>> basis;
};

void verify_lie_morphism(const std::array<Matrix<Rat>, 6>& rep) {
  // Index map: rep[0..2] = boosts sigma_1..3, rep[3..5] = rotations.
  const int sigma_of_rep[6] = {kSigma1, kSigma2, kSigma3, kSigma23, kSigma31, kSigma12};
  int rep_of_sigma[kNumSigma];
  std::fill(rep_of_sigma, rep_of_sigma + kNumSigma, -1);
  for (int r = 0; r < 6; ++r) rep_of_sigma[sigma_of_rep[r]] = r;
  const auto& c = sigma_structure_constants();
  int n = rep[0].rows;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Matrix<Rat> comm = rep[size_t(a)] * rep[size_t(b)] - rep[size_t(b)] * rep[size_t(a)];
      Matrix<Rat> want(n, n);
      for (int u = 0; u < kNumSigma; ++u) {
        const Rat& k = c[size_t(sigma_of_rep[a])][size_t(sigma_of_rep[b])][size_t(u)];
        if (sgn(k) == 0) continue;
        if (rep_of_sigma[u] < 0)
          throw NotARepresentation("commutator leaves the so(W) span");
        want = want + rep[size_t(rep_of_sigma[u])].scaled(k);
      }
      if (!(comm == want)) throw NotARepresentation("so(1,3) commutation relations fail");
    }
}

std::vector<ComplexComponent> complex_decompose(const std::array<Matrix<Rat>, 6>& rep,
                                                bool opposite) {
  int n = rep[0].rows;
  Gaussian i = Gaussian::i();
  if (opposite) i = -i;
  GMat A[3], B[3];
  Gaussian half(Rat(1, 2));
  for (int k = 0; k < 3; ++k) {
    GMat M = to_gaussian(rep[size_t(3 + k)]);  // rotation
    GMat N = to_gaussian(rep[size_t(k)]);      // boost
    A[k] = (M + N.scaled(i)).scaled(half);
    B[k] = (M - N.scaled(i)).scaled(half);
  }
  auto casimir = [&](GMat* X) {
    GMat c(n, n);
    for (int k = 0; k < 3; ++k) c = c + X[k] * X[k];
    return c.scaled(Gaussian(Rat(-1)));
  };
  GMat CA = casimir(A), CB = casimir(B);

  // Joint eigenspace extraction with rational eigenvalues p(p+1).
  std::vector<ComplexComponent> comps;
  int total = 0;
  for (const Rat& p : spin_candidates()) {
    Rat la = p * (p + 1);
    // kernel of CA - la cheaply first
    GMat Ma = CA;
    for (int d = 0; d < n; ++d) Ma.at(d, d) -= Gaussian(la);
    if (kernel_basis(Ma).empty()) continue;
    for (const Rat& q : spin_candidates()) {
      Rat lb = q * (q + 1);
      GMat stack(2 * n, n);
      for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
          stack.at(r, col) = CA.at(r, col) - (r == col ? Gaussian(la) : Gaussian(0));
          stack.at(n + r, col) = CB.at(r, col) - (r == col ? Gaussian(lb) : Gaussian(0));
        }
      auto ker = kernel_basis(stack);
      if (ker.empty()) continue;
      // Verify invariance under all six matrices.
      SpanBasis<Gaussian> span(n);
      for (auto& v : ker) span.add(v);
      for (int m = 0; m < 6; ++m) {
        GMat g = to_gaussian(rep[size_t(m)]);
        for (auto& v : ker)
          if (!span.contains(g.apply(v)))
            throw NotARepresentation("joint Casimir eigenspace not invariant");
      }
      comps.push_back({p, q, std::move(ker)});
      total += int(comps.back().basis.size());
    }
  }
  if (total != n)
    throw ComponentNotFound("Casimir eigenspaces do not exhaust the module (dim " +
                            std::to_string(total) + " of " + std::to_string(n) + ")");
  return comps;
}

std::vector<IsotypicComponent> realify(const std::vector<ComplexComponent>& comps, int n) {
  // Pair (p,q) with (q,p); p == q components are self-conjugate.
  std::vector<IsotypicComponent> out;
  std::vector<bool> used(comps.size(), false);
  for (size_t i = 0; i < comps.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<const ComplexComponent*> parts{&comps[i]};
    bool paired = false;
    if (!(comps[i].p == comps[i].q)) {
      for (size_t j = i + 1; j < comps.size(); ++j) {
        if (used[j]) continue;
        if (comps[j].p == comps[i].q && comps[j].q == comps[i].p) {
          used[j] = true;
          parts.push_back(&comps[j]);
          paired = true;
          break;
        }
      }
      if (!paired)
        throw ComponentNotFound("unpaired complex component; real form impossible");
    }
    // Real span of Re and Im parts of all complex basis vectors.
    SpanBasis<Rat> real_span(n);
    std::vector<Vec<Rat>> basis;
    for (auto* part : parts)
      for (auto& v : part->basis) {
        Vec<Rat> re(size_t(n), Rat(0)), im(size_t(n), Rat(0));
        for (int k = 0; k < n; ++k) {
          re[size_t(k)] = v[size_t(k)].re;
          im[size_t(k)] = v[size_t(k)].im;
        }
        if (real_span.add(re)) basis.push_back(real_span.rows().back());
        if (real_span.add(im)) basis.push_back(real_span.rows().back());
      }
    IsotypicComponent c;
    c.label = {std::max(comps[i].p, comps[i].q), std::min(comps[i].p, comps[i].q), paired};
    if (int(basis.size()) != c.label.real_dim())
      throw ComponentNotFound("real form dimension mismatch");
    c.basis = std::move(basis);
    out.push_back(std::move(c));
  }
  return out;
}

void attach_projectors(std::vector<IsotypicComponent>& comps, int n) {
  // Assemble the full change of basis; projector = B * indicator * B^{-1}.
  Matrix<Rat> B(n, n);
  int col = 0;
  std::vector<std::pair<int, int>> ranges;
  for (auto& c : comps) {
    int start = col;
    for (auto& v : c.basis) {
      for (int r = 0; r < n; ++r) B.at(r, col) = v[size_t(r)];
      ++col;
    }
    ranges.push_back({start, col});
  }
  auto Binv = inverse(B);
  if (!Binv) throw ComponentNotFound("isotypic bases do not assemble to a basis");
  for (size_t k = 0; k < comps.size(); ++k) {
    Matrix<Rat> ind(n, n);
    for (int c = ranges[k].first; c < ranges[k].second; ++c) ind.at(c, c) = Rat(1);
    comps[k].projector = B * ind * *Binv;
  }
}

std::vector<IsotypicComponent> decompose_impl(const std::array<Matrix<Rat>, 6>& rep,
                                              bool opposite) {
  verify_lie_morphism(rep);
  int n = rep[0].rows;
  auto comps = realify(complex_decompose(rep, opposite), n);
  // Canonical order: by (p, q) descending dimension then label.
  std::sort(comps.begin(), comps.end(), [](const IsotypicComponent& a, const IsotypicComponent& b) {
    if (!(a.label.p == b.label.p)) return a.label.p < b.label.p;
    return a.label.q < b.label.q;
  });
  attach_projectors(comps, n);
  return comps;
}

}  // namespace

std::vector<IsotypicComponent> isotypic_decompose(const std::array<Matrix<Rat>, 6>& rep) {
  return decompose_impl(rep, false);
}

std::vector<IsotypicComponent> isotypic_decompose_opposite(const std::array<Matrix<Rat>, 6>& rep) {
  return decompose_impl(rep, true);
}

}  // namespace gle
