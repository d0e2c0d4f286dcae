#pragma once

#include <vector>

#include "gle/glaoid.hpp"

namespace gle {

/// Element of the filtered Clifford module L-slash = Cl ⊗ CDerEnd(W):
/// same block storage as LElement, Clifford multiplication semantics.
struct SlashedElement {
  std::array<CDer, kBasisSize> blocks{};

  static SlashedElement term(int mask, const CDer& d) {
    SlashedElement e;
    e.blocks[size_t(mask)] = d;
    return e;
  }
  static SlashedElement from_l(const LElement& a) { return {a.blocks}; }
  LElement as_l() const { return {blocks}; }

  bool is_zero() const {
    for (auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }
  /// Smallest k with the element in the k-th filtration step.
  int filtration_level() const {
    int d = 0;
    for (int m = 0; m < kBasisSize; ++m)
      if (!blocks[size_t(m)].is_zero()) d = std::max(d, mono_degree(m));
    return d;
  }
  int parity() const;  // 0 even, 1 odd, -1 mixed

  SlashedElement operator+(const SlashedElement& o) const;
  SlashedElement operator-(const SlashedElement& o) const;
  SlashedElement operator*(const Scalar& s) const;
  SlashedElement& operator+=(const SlashedElement& o);
  bool operator==(const SlashedElement& o) const { return blocks == o.blocks; }
};

/// Clifford left multiplication by a basis blade.
SlashedElement cl_mul_mono(int mask, const SlashedElement& a);
SlashedElement cl_mul(const MultiVector& w, const SlashedElement& a);

/// Masks in the compatible filtration step: degree <= k, parity = k mod 2.
const std::vector<int>& filt_monos(int k);

/// Image of an element under the morphism f: values of the three Leibniz
/// components on the generators (coordinates, frame, volume).
struct PElement {
  std::array<MultiVector, 4> dC;   // values on x^0..x^3
  std::array<MultiVector, 4> dW;   // values on theta_0..theta_3
  MultiVector dOm;                 // value on the volume form (⊗ vol implicit)

  bool is_zero() const;
  PElement operator-(const PElement& o) const;
  bool operator==(const PElement& o) const;
};

PElement f_morphism(const SlashedElement& a);
constexpr int kPDim = 9 * kBasisSize;  // 144 constant coordinates
Vec<Rat> p_flatten_const(const PElement& p);
/// Free rank of the filtration step of P-slash: 5*#filt(k) + 4*#filt(k+1).
int p_rank(int k);

/// Everything derived from the morphism f at the constant fiber: the kernel
/// I-slash, the free decomposition Cl ⊗ (A ⊕ B), bases of the filtration
/// steps of E-slash, and the projections to E. Built once.
class SlashedContext {
 public:
  static const SlashedContext& get();

  // dimensions
  int l_rank(int k) const { return kNumGenerators * int(filt_monos(k).size()); }
  int i_rank(int k) const { return int(islash_basis_[size_t(k)].size()); }
  int e_rank(int k) const { return int(eslash_level_[size_t(k)].coords.size()); }
  int f_image_rank(int k) const { return f_image_rank_[size_t(k)]; }

  /// Basis of the kernel of f inside filtration step k (constant coords).
  const std::vector<Vec<Rat>>& islash_basis(int k) const { return islash_basis_[size_t(k)]; }
  /// Total kernel basis (32 vectors, flat L coordinates).
  const std::vector<Vec<Rat>>& islash_total() const { return islash_total_; }

  /// The free generators: A = lifts + sigma_0..sigma_3, sigma_23 (rank 9),
  /// B = two elements of the level-2 kernel.
  const std::array<SlashedElement, 9>& a_basis() const { return a_basis_; }
  const std::array<SlashedElement, 2>& b_basis() const { return b_basis_; }

  /// Coordinates of an element in the Cl ⊗ (A ⊕ B) basis: 144 A-coords
  /// followed by 32 B-coords. A-coordinate slot (j, S) = j*16 + S.
  Vec<Rat> full_coords(const SlashedElement& v) const;
  Vec<Scalar> full_coords_scalar(const SlashedElement& v) const;
  /// E-slash coordinates: the A-part (quotient by I-slash = Cl ⊗ B).
  Vec<Rat> e_coords(const SlashedElement& v) const;
  /// Reassemble the canonical Cl ⊗ A representative.
  SlashedElement from_e_coords(const Vec<Rat>& coords) const;

  /// Clifford left multiplication on E-slash coordinates.
  Vec<Rat> cl_mul_coords(const std::array<Rat, 4>& w, const Vec<Rat>& coords) const;

  /// Filtration-step data of E-slash.
  struct Level {
    std::vector<SlashedElement> reps;     // representatives in L-slash^{<| k}
    std::vector<Vec<Rat>> coords;         // their E-slash coordinates (independent)
  };
  const Level& eslash_level(int k) const { return eslash_level_[size_t(k)]; }

  /// Express an E-slash coordinate vector against the level basis; nullopt
  /// if it is not in the span.
  std::optional<Vec<Rat>> level_coefficients(int k, const Vec<Rat>& e_coords) const;

  /// Projection p^k: a level-k element (by coefficients against the level
  /// basis) to E^k coordinates of the glaoid quotient.
  Vec<Rat> project_level_to_e(int k, const Vec<Rat>& level_coeffs) const;
  /// Convenience: project an element known to lie in level k.
  Vec<Rat> project_to_e(int k, const SlashedElement& v) const;

  /// Lift of an E^k coordinate vector into level k (canonical monomial rep).
  SlashedElement lift_from_e(int k, const Vec<Rat>& e_coords_glaoid) const;

 private:
  SlashedContext();

  std::array<std::vector<Vec<Rat>>, 5> islash_basis_;
  std::vector<Vec<Rat>> islash_total_;
  std::array<int, 5> f_image_rank_{};
  std::array<SlashedElement, 9> a_basis_;
  std::array<SlashedElement, 2> b_basis_;
  Matrix<Rat> basis_change_;      // columns: theta_S * (A|B) generators
  Matrix<Rat> basis_change_inv_;
  std::array<Level, 5> eslash_level_;
};

/// Report of the auxiliary surjectivity table in the proof of the f-lemma:
/// Cl^{<| k} ⊗ so(W) -> Hom(W, Cl^{<| k+1}).
struct AuxTable {
  std::array<int, 5> left_dim, right_dim, image_rank;
};
AuxTable aux_surjectivity_table();

class DecompositionFailed : public std::runtime_error {
 public:
  explicit DecompositionFailed(const std::string& m) : std::runtime_error(m) {}
};

/// Span of the degree-k leading parts of the level-k kernel: the associated
/// graded of I-slash, as flat L coordinates.
std::vector<Vec<Rat>> gr_islash_basis(int k);

}  // namespace gle
