#pragma once

#include "gle/glaoid.hpp"

namespace gle {

class NotExact : public std::runtime_error {
 public:
  explicit NotExact(const std::string& m) : std::runtime_error(m) {}
};

/// Transported data of a nondegenerate element: the frame map, its inverse,
/// the affine connection in the coordinate coframe, and the candidate
/// conformal metric eta_ab e^a e^b.
struct AffineData {
  Matrix<Scalar> frame;  // X[a][mu]: x|_Cinf sends dx^mu to sum_a X[a][mu] theta_a
  Matrix<Scalar> inv;    // Y[mu][a]: i(theta_a) = sum_mu Y[mu][a] dx^mu
  std::array<Matrix<Scalar>, 4> gamma;  // gamma[mu](nu, lam) = Gamma^nu_{mu lam}
  Matrix<Scalar> g;      // candidate metric, 4x4 symmetric
};

AffineData to_connection(const EElement& x);

/// Torsion tensor T^nu_{mu lam} = Gamma^nu_{mu lam} - Gamma^nu_{lam mu}.
std::array<Matrix<Scalar>, 4> torsion(const AffineData& c);
bool torsion_free(const AffineData& c);

/// The 1-form alpha with nabla g = alpha ⊗ g; nullopt if the conformal
/// compatibility fails (it cannot, for transported elements).
std::optional<std::array<Scalar, 4>> conformal_one_form(const AffineData& c);

/// The parallel representative psi * g with d log psi = -alpha, normalized
/// psi(0) = 1. Throws NotExact when alpha is not a rational log-derivative.
Matrix<Scalar> parallel_metric(const AffineData& c);

/// Ricci tensor of the connection (curvature on the cotangent module).
Matrix<Scalar> ricci(const AffineData& c);

// ---- tensor-calculus oracle ------------------------------------------------

/// Levi-Civita connection of a metric by the standard formula.
std::array<Matrix<Scalar>, 4> levi_civita(const Matrix<Scalar>& g);
Matrix<Scalar> ricci_of(const std::array<Matrix<Scalar>, 4>& gamma);

// ---- backgrounds -----------------------------------------------------------

/// Element with the given coframe (coframe[a][mu] dx^mu) whose transported
/// connection is the Levi-Civita connection of g; the vertical parts come
/// from the spin-connection decomposition over the sigma basis.
EElement element_from_metric_and_coframe(const Matrix<Scalar>& g, const Matrix<Scalar>& coframe);

/// pp-wave in Brinkmann coordinates: H(x1,x2) (dx0)^2 + 2 dx0 dx3 + (dx1)^2
/// + (dx2)^2 with the rational conformally orthonormal coframe
/// theta_0 = ((1-H)/2) dx0 - dx3, theta_3 = ((1+H)/2) dx0 + dx3.
Matrix<Scalar> ppwave_metric(const Poly& H);
EElement ppwave_element(const Poly& H);

/// Flat metric with the conformally rescaled coframe phi * dx^a.
EElement rescaled_minkowski_element(const Scalar& phi);

}  // namespace gle
