#pragma once

#include "gle/slashed.hpp"

namespace gle {

class NotHermitian : public std::runtime_error {
 public:
  explicit NotHermitian(const std::string& m) : std::runtime_error(m) {}
};

class NotPositive : public std::runtime_error {
 public:
  NotPositive(const std::string& m, int minor) : std::runtime_error(m), witness_minor(minor) {}
  int witness_minor;
};

class SplittingFailed : public std::runtime_error {
 public:
  explicit SplittingFailed(const std::string& m) : std::runtime_error(m) {}
};

/// 2x2 complex matrix, the target of the hash map.
struct Mat2 {
  std::array<Gaussian, 4> m{};  // row major
  Gaussian& at(int r, int c) { return m[size_t(2 * r + c)]; }
  const Gaussian& at(int r, int c) const { return m[size_t(2 * r + c)]; }
  Mat2 conj_transpose() const {
    Mat2 t;
    t.at(0, 0) = at(0, 0).conj();
    t.at(0, 1) = at(1, 0).conj();
    t.at(1, 0) = at(0, 1).conj();
    t.at(1, 1) = at(1, 1).conj();
    return t;
  }
  bool operator==(const Mat2& o) const { return m == o.m; }
};

/// The hash map on basis blades: annihilates even degrees, sends theta_i to
/// the Pauli matrix sigma_i and the degree-3 blades to -i sigma as listed.
Mat2 hash_mono(int mask);
/// Linear extension to constant multivectors.
Mat2 hash_map(const MultiVector& x);

/// Hermitian 18x18 form on C^2 ⊗ A, slot (alpha, j) = 2*j + alpha.
struct HermForm {
  Matrix<Gaussian> h;
  HermForm() : h(18, 18) {}
  static HermForm identity();
  bool is_hermitian() const;
  /// positive definiteness by exact leading minors of the realified form
  bool is_positive_definite() const;
};

/// Odd symmetric bilinear form on E-slash in the Cl ⊗ A coordinates,
/// slot (j, S) = 16*j + S.
struct OddForm {
  Matrix<Rat> b;
  OddForm() : b(144, 144) {}

  bool is_symmetric() const;
  /// vanishes on (even,even) and (odd,odd)
  bool is_odd() const;
  /// matrix of b(-, w -) for a constant frame vector w
  Matrix<Rat> paired_with(const std::array<Rat, 4>& w) const;
  bool operator==(const OddForm& o) const { return b == o.b; }
};

/// b_h(x a, x' a') = Re( h(-⊗a, -⊗a')( <x^T x'>_# ) ).
OddForm build_b(const HermForm& h);

/// The linear map h -> b_h has rank 324 = 18^2; computed blockwise.
int bh_map_rank();

/// Clifford unitarity trick: b = b' ∘ Pi averages over the finite group.
OddForm average_project(const OddForm& b_raw);

/// Remark-init: lift a symmetric form on the even part to an odd form b'
/// with b'(x, y) = b''(x, theta_0 y).
OddForm lift_even_form(const Matrix<Rat>& b_even);
/// The even slots (j, S even) in order, 72 of them.
const std::vector<int>& even_slots();

/// A gauge: per degree the basis of E_G^k inside E-slash and inside E, and
/// the form B^k on E_G^k ⊗ E^{k+1}.
struct GaugeData {
  OddForm b;
  std::array<std::vector<Vec<Rat>>, 5> eslash_g;  // coords in E-slash (144)
  std::array<std::vector<Vec<Rat>>, 5> e_g;       // coords in E^k (glaoid complement)
  std::array<Matrix<Rat>, 5> Bk;                  // rank_k x dim E^{k+1}; Bk[4] empty

  int rank(int k) const { return int(eslash_g[size_t(k)].size()); }
};

/// Theorem sp: E_G^k = { x in level k | b(x, level k-1) = 0 }, projected.
/// Verifies the splitting at the sampled future-timelike vectors.
GaugeData build_gauge(const OddForm& b);

/// The five sampled rational vectors of W+ used by the verification suite.
const std::array<std::array<Rat, 4>, 5>& future_cone_samples();

/// The default gauge (h = identity), built once and cached.
const GaugeData& default_gauge();

}  // namespace gle
