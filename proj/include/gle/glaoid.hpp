#pragma once

#include <vector>

#include "gle/frames.hpp"
#include "gle/isotypic.hpp"

namespace gle {

/// Element of L = (∧W) ⊗ CDerEnd(W): one CDer block per theta-monomial,
/// functions absorbed into the blocks. Grade = exterior degree.
struct LElement {
  std::array<CDer, kBasisSize> blocks{};

  static LElement term(int mask, const CDer& d) {
    LElement e;
    e.blocks[size_t(mask)] = d;
    return e;
  }

  bool is_zero() const {
    for (auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }
  bool homogeneous(int k) const {
    for (int m = 0; m < kBasisSize; ++m)
      if (!blocks[size_t(m)].is_zero() && mono_degree(m) != k) return false;
    return true;
  }
  LElement graded_part(int k) const {
    LElement e;
    for (int m = 0; m < kBasisSize; ++m)
      if (mono_degree(m) == k) e.blocks[size_t(m)] = blocks[size_t(m)];
    return e;
  }

  LElement operator+(const LElement& o) const;
  LElement operator-(const LElement& o) const;
  LElement operator-() const;
  LElement operator*(const Scalar& s) const;
  LElement& operator+=(const LElement& o);
  bool operator==(const LElement& o) const { return blocks == o.blocks; }
};

/// Wedge multiplication by a frame monomial (the ∧W-module structure).
LElement wedge_mono(int mask, const LElement& a);
LElement wedge_ext(const ExtElement& w, const LElement& a);

/// Bracket of the base-changed gLaoid:
/// [b y, b' y'] = b b' [y,y'] + (b λ(y)(b')) y' - (λ(y')(b) b') y.
LElement l_bracket(const LElement& a, const LElement& b);

/// Anchor ρ(a) as a derivation of ∧W, evaluated on a target.
ExtElement anchor_on_scalar(const LElement& a, const Scalar& f);
ExtElement anchor_on_ext(const LElement& a, const ExtElement& w);
/// a annihilates C∞ and W (the anchor kernel condition).
bool in_anchor_kernel(const LElement& a);

// ---- flat coordinates ----------------------------------------------------
// Coordinate index of (monomial mask, generator t): mask*11 + t, Scalars.
constexpr int kLDim = kBasisSize * kNumGenerators;  // 176

Vec<Scalar> l_flatten(const LElement& a);
LElement l_unflatten(const Vec<Scalar>& v);
/// Constant elements only (throws if a coefficient is non-constant).
Vec<Rat> l_flatten_const(const LElement& a);
LElement l_unflatten_const(const Vec<Rat>& v);

/// Coordinate slots of the degree-k part, in canonical order.
const std::vector<int>& degree_slots(int k);
/// Monomial masks of exterior degree k, ascending.
const std::vector<int>& degree_monos(int k);

// ---- the ideal and the quotient -------------------------------------------

struct IdealBasis {
  std::vector<LElement> basis2, basis3, basis4;  // ranks 10, 16, 6
};

/// Degree-2 basis from the symmetric traceless matrices S of Eq. (mi2),
/// over the fixed rational basis of that 5-complex-dimensional space.
std::vector<LElement> ideal_basis_explicit();

/// The anchor kernel m^k inside degree k, over constant coefficients.
std::vector<Vec<Rat>> anchor_kernel_basis(int k);

/// Degree-2 ideal via the isotypic route: the (2,0) ⊕ (0,2) component of
/// the so(W)-action on m^2. Throws ComponentNotFound on failure.
std::vector<LElement> ideal_basis_isotypic();

/// Wedge-saturate the degree-2 basis into degrees 3 and 4.
IdealBasis ideal_saturate(const std::vector<LElement>& basis2);

/// Shared context: the ideal, its row reductions and the canonical
/// complement bases per degree. Built once, immutable afterwards.
class IdealContext {
 public:
  static const IdealContext& get();

  const IdealBasis& ideal() const { return ideal_; }
  const std::vector<LElement>& ideal_basis(int degree) const;
  /// Reduce an arbitrary element to the canonical complement of I.
  LElement reduce(const LElement& a) const;
  /// Non-pivot coordinate slots of degree k (the complement basis).
  const std::vector<int>& complement_slots(int k) const { return comp_slots_[size_t(k)]; }
  int e_rank(int k) const { return int(comp_slots_[size_t(k)].size()); }
  int l_rank(int k) const { return 11 * int(degree_monos(k).size()); }
  int i_rank(int k) const;

  /// Flatten the degree-k part of a reduced element on the complement basis.
  Vec<Scalar> e_coords(const LElement& a, int k) const;
  Vec<Rat> e_coords_const(const LElement& a, int k) const;
  LElement e_from_coords(const Vec<Rat>& coords, int k) const;

  bool contains(const LElement& a) const;  // membership in I

 private:
  IdealContext();
  IdealBasis ideal_;
  // Per degree 2..4: RREF rows over the degree's slots and their pivots.
  std::array<std::vector<Vec<Rat>>, 5> rref_rows_;
  std::array<std::vector<int>, 5> pivots_;            // pivot slot ids
  std::array<std::vector<int>, 5> comp_slots_;        // complement slot ids
};

/// An element of E = L/I in canonical reduced form.
struct EElement {
  LElement rep;  // reduced representative

  bool is_zero() const { return rep.is_zero(); }
  bool operator==(const EElement& o) const { return rep == o.rep; }
};

EElement reduce_mod_ideal(const LElement& a);
/// Bracket on E via representatives.
EElement e_bracket(const EElement& a, const EElement& b);
/// Maurer-Cartan defect reduce([x,x]) of a grade-1 element.
EElement mc_defect(const EElement& x);
/// Wedge multiplication on E.
EElement e_wedge_mono(int mask, const EElement& a);

/// The Minkowski element sum_mu theta_mu ⊗ lifted d_mu.
EElement minkowski_element();

/// Nondegeneracy: the frame block x|_C∞ is an invertible 4x4 over Scalars.
bool nondegenerate(const EElement& x);

}  // namespace gle
