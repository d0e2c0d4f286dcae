#pragma once

#include "gle/cscalar.hpp"
#include "gle/frames.hpp"
#include "gle/glaoid.hpp"

namespace gle {

/// The frame of W_V ⊂ V ⊗ V-bar induced by a basis (v, w): elements are
/// Hermitian 2x2 matrices over the complexified scalars, theta_a the Pauli
/// matrices transported by the basis change.
struct SpinorFrame {
  std::array<Matrix<CScalar>, 4> theta;  // 2x2 matrices
  Matrix<Scalar> gram;                   // inner product from the canonical pairing
};

/// Canonical pairing S^2(V ⊗ V-bar) -> (wedge^2 V) ⊗ (wedge^2 V-bar),
/// normalized so the standard basis frame has Gram diag(-1,1,1,1).
CScalar spinor_pairing(const Matrix<CScalar>& a, const Matrix<CScalar>& b);

/// Frame from a basis change (v', w') = (v, w) G.
SpinorFrame spinor_to_frame(const Matrix<CScalar>& basis_change);

/// Module derivation of V (2x2 complex vertical part + vector field) to the
/// conformal derivation of W_V in the sigma coordinates. Throws if the
/// image leaves the conformal algebra, which cannot happen for C-linear D.
CDer derend_v_morphism(const Matrix<CScalar>& vertical, const std::array<Scalar, 4>& vecfield);

/// The seven sigma matrices of V whose images are the frame derivations of
/// the same name; index by SigmaIndex.
Matrix<CScalar> spin_sigma(int which);

/// The ideal computed as the kernel of the representation of
/// L_V = (wedge W_V) ⊗ DerEnd(V) on M_0 ⊕ M_1/N ⊕ M_2.
struct SpinorIdealReport {
  std::array<int, 5> image_rank{};  // per exterior degree
  int total_rank = 0;
  bool equals_ideal = false;        // span equality with the glaoid ideal, per degree
  bool n_invariant = false;         // N is preserved by all 12 generators
};
SpinorIdealReport ideal_via_representation();

}  // namespace gle
