#pragma once

#include <array>
#include <optional>

#include "gle/clifford.hpp"
#include "gle/linalg.hpp"
#include "gle/scalar.hpp"

namespace gle {

/// Vertical generator indices for CDerEnd(W), after the four lifted
/// coordinate fields: sigma_0 (dilation), sigma_1..3 (boosts),
/// sigma_23, sigma_31, sigma_12 (rotations).
enum SigmaIndex { kSigma0 = 0, kSigma1, kSigma2, kSigma3, kSigma23, kSigma31, kSigma12 };
constexpr int kNumSigma = 7;
constexpr int kNumGenerators = 11;  // 4 lifts + 7 sigmas

extern const char* const kSigmaNames[kNumSigma];

/// 4x4 action matrix of sigma_s on the frame: sigma_s(theta_j) = sum_i M[i][j] theta_i.
const std::array<std::array<int, 4>, 4>& sigma_matrix(int s);

/// Section of W written on the frame theta_0..theta_3.
struct FrameVector {
  std::array<Scalar, 4> w{};

  static FrameVector basis(int i) {
    FrameVector v;
    v.w[size_t(i)] = Scalar(1);
    return v;
  }
  bool is_zero() const {
    for (auto& x : w)
      if (!x.is_zero()) return false;
    return true;
  }
  FrameVector operator+(const FrameVector& o) const {
    FrameVector r;
    for (int i = 0; i < 4; ++i) r.w[size_t(i)] = w[size_t(i)] + o.w[size_t(i)];
    return r;
  }
  FrameVector operator*(const Scalar& s) const {
    FrameVector r;
    for (int i = 0; i < 4; ++i) r.w[size_t(i)] = w[size_t(i)] * s;
    return r;
  }
  bool operator==(const FrameVector& o) const { return w == o.w; }

  /// Minkowski square w0^2 - w1^2 - w2^2 - w3^2.
  Scalar minkowski_square() const;
};

/// Membership test for the future cone W+ on a fixed rational sample grid
/// of the coordinate domain: w0 > 0 and w0^2 - |w|^2 > 0 at every sample.
bool in_future_cone(const FrameVector& v);

/// Conformal module derivation of W: a lifted vector field (annihilating the
/// frame) plus a vertical part over the sigma basis.
struct CDer {
  std::array<Scalar, 4> vec{};         // coefficients of the lifted d/dx^mu
  std::array<Scalar, kNumSigma> vert{};  // coefficients of sigma_0..sigma_12

  static CDer lift(int mu) {
    CDer d;
    d.vec[size_t(mu)] = Scalar(1);
    return d;
  }
  static CDer sigma(int s) {
    CDer d;
    d.vert[size_t(s)] = Scalar(1);
    return d;
  }
  static CDer generator(int t) { return t < 4 ? lift(t) : sigma(t - 4); }

  bool is_zero() const {
    for (auto& x : vec)
      if (!x.is_zero()) return false;
    for (auto& x : vert)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_vertical() const {
    for (auto& x : vec)
      if (!x.is_zero()) return false;
    return true;
  }

  CDer operator+(const CDer& o) const;
  CDer operator-(const CDer& o) const;
  CDer operator-() const;
  CDer operator*(const Scalar& s) const;
  CDer& operator+=(const CDer& o);
  bool operator==(const CDer& o) const { return vec == o.vec && vert == o.vert; }

  /// Action on functions: only the vector field part contributes.
  Scalar apply(const Scalar& f) const;
  /// Action on W.
  FrameVector apply(const FrameVector& v) const;
  /// Degree-zero derivation lambda(d) of the exterior algebra.
  ExtElement apply(const ExtElement& e) const;

  /// 4x4 matrix of the vertical part on the frame (entries Scalars).
  Matrix<Scalar> vertical_matrix() const;
  /// Trace of the vertical part (= 4 * sigma_0 coefficient).
  Scalar trace() const;
};

/// Lie bracket in CDerEnd(W); closed on this storage.
CDer bracket_cder(const CDer& a, const CDer& b);

/// Structure constants [sigma_s, sigma_t] = sum_u C[s][t][u] sigma_u,
/// computed once from the 4x4 matrices.
const std::array<std::array<std::array<Rat, kNumSigma>, kNumSigma>, kNumSigma>&
sigma_structure_constants();

/// Basis (sigma_1, sigma_2, sigma_3, sigma_23, sigma_31, sigma_12) of the
/// trace-free vertical derivations so(W).
std::array<CDer, 6> so_w_basis();

/// The scalar f with d<x,y> = <dx,y> + <x,dy> + f<x,y>; nullopt if the
/// conformal-derivation property fails.
std::optional<Scalar> conformal_factor(const CDer& d);

/// Decompose a constant 4x4 matrix over the 7 sigma matrices; nullopt if the
/// matrix is not conformal-orthogonal.
std::optional<std::array<Scalar, kNumSigma>> sigma_decompose(const Matrix<Scalar>& m);

}  // namespace gle
