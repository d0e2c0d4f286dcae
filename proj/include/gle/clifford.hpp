#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gle/cscalar.hpp"
#include "gle/linalg.hpp"
#include "gle/scalar.hpp"

namespace gle {

// Basis monomials of ∧W and Cl(W) are indexed by bitmasks over {0,1,2,3},
// bit i = theta_i present, factors in ascending order. The inner product is
// diag(-1,+1,+1,+1), so theta_0^2 = +1 and theta_i^2 = -1 in Cl.
constexpr int kBasisSize = 16;

inline int mono_degree(int mask) { return __builtin_popcount(unsigned(mask)); }

/// Sign of merging sorted blades: moves each generator of `right` into the
/// sorted position relative to `left`; zero overlap assumed by the caller.
int merge_sign(int left, int right);

/// theta_i^2 in Cl: +1 for i=0, -1 for i=1,2,3.
inline int metric_square(int i) { return i == 0 ? 1 : -1; }

/// Clifford product of basis blades: theta_S * theta_R = sign * theta_{S^R}.
/// Returns the sign; the result mask is S ^ R.
int cl_blade_sign(int s, int r);

/// (-1)^{k(k-1)/2}: sign of reversing a degree-k blade.
int reversal_sign(int k);

std::string mono_str(int mask);

/// Element of the exterior algebra ∧W over Scalar coefficients.
struct ExtElement {
  std::array<Scalar, kBasisSize> c{};

  static ExtElement basis(int mask) {
    ExtElement e;
    e.c[size_t(mask)] = Scalar(1);
    return e;
  }
  static ExtElement scalar(const Scalar& s) {
    ExtElement e;
    e.c[0] = s;
    return e;
  }

  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  // -1 for zero, else max degree with nonzero coefficient.
  int degree() const {
    int d = -1;
    for (int m = 0; m < kBasisSize; ++m)
      if (!c[size_t(m)].is_zero()) d = std::max(d, mono_degree(m));
    return d;
  }
  bool homogeneous(int k) const {
    for (int m = 0; m < kBasisSize; ++m)
      if (!c[size_t(m)].is_zero() && mono_degree(m) != k) return false;
    return true;
  }
  ExtElement graded_part(int k) const {
    ExtElement e;
    for (int m = 0; m < kBasisSize; ++m)
      if (mono_degree(m) == k) e.c[size_t(m)] = c[size_t(m)];
    return e;
  }

  ExtElement operator-() const;
  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement& operator+=(const ExtElement& o);
  ExtElement operator*(const Scalar& s) const;
  bool operator==(const ExtElement& o) const { return c == o.c; }

  std::string str() const;
};

ExtElement wedge(const ExtElement& a, const ExtElement& b);

/// Element of Cl(W) over Scalar coefficients, stored on the canonical
/// module basis theta_{i1}...theta_{ik} (the Z-grading of Lemma cis).
struct MultiVector {
  std::array<Scalar, kBasisSize> c{};

  static MultiVector basis(int mask) {
    MultiVector e;
    e.c[size_t(mask)] = Scalar(1);
    return e;
  }
  static MultiVector scalar(const Scalar& s) {
    MultiVector e;
    e.c[0] = s;
    return e;
  }
  static MultiVector vector(const std::array<Scalar, 4>& w) {
    MultiVector e;
    for (int i = 0; i < 4; ++i) e.c[size_t(1 << i)] = w[size_t(i)];
    return e;
  }

  bool is_zero() const {
    for (auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  /// Smallest k with the element in Cl^{<= k}.
  int filtration_level() const {
    int d = 0;
    for (int m = 0; m < kBasisSize; ++m)
      if (!c[size_t(m)].is_zero()) d = std::max(d, mono_degree(m));
    return d;
  }
  /// 0 = even, 1 = odd, -1 = mixed (or zero).
  int parity() const;
  MultiVector graded_part(int k) const {
    MultiVector e;
    for (int m = 0; m < kBasisSize; ++m)
      if (mono_degree(m) == k) e.c[size_t(m)] = c[size_t(m)];
    return e;
  }

  MultiVector operator-() const;
  MultiVector operator+(const MultiVector& o) const;
  MultiVector operator-(const MultiVector& o) const;
  MultiVector& operator+=(const MultiVector& o);
  MultiVector operator*(const Scalar& s) const;
  bool operator==(const MultiVector& o) const { return c == o.c; }

  std::string str() const;
};

MultiVector clifford_mul(const MultiVector& a, const MultiVector& b);

/// The unique anti-automorphism of Cl fixing W.
MultiVector transpose(const MultiVector& a);

/// Canonical module isomorphism Cl ≅ ∧W and its inverse (Lemma cis).
ExtElement cl_to_ext(const MultiVector& a);
MultiVector ext_to_cl(const ExtElement& a);

/// Exterior multiplication e_w and the contraction i_w defined by
/// i_w e_v + e_v i_w = -<v,w>; c_w = e_w + i_w intertwines the left
/// Clifford action under cl_to_ext.
ExtElement ext_mul(const std::array<Scalar, 4>& w, const ExtElement& a);
ExtElement contract(const std::array<Scalar, 4>& w, const ExtElement& a);
ExtElement clifford_action(const std::array<Scalar, 4>& w, const ExtElement& a);

/// Element of the finite Clifford group F = {±theta_S}; |F| = 32.
struct CliffordGroupElt {
  int sign;  // ±1
  int mask;  // generator word, sorted

  bool operator==(const CliffordGroupElt& o) const { return sign == o.sign && mask == o.mask; }
};

std::vector<CliffordGroupElt> clifford_group();
CliffordGroupElt cl_group_mul(const CliffordGroupElt& a, const CliffordGroupElt& b);
/// chi_i(f) defined by f theta_i = chi_i(f) theta_i f.
int character(int i, const CliffordGroupElt& f);

/// Element of S^2 Cl stored as a symmetric 16x16 coefficient tensor over
/// Gaussian rationals (constants suffice for the averaging element).
struct S2Cl {
  Matrix<Gaussian> t;

  S2Cl() : t(kBasisSize, kBasisSize) {}

  static S2Cl sym_pair(int s, int r, const Gaussian& w);  // w*(theta_S ⊗ theta_R + swap)/...

  bool is_symmetric() const;
  bool is_zero() const;
  /// 0 even, 1 odd, -1 mixed (total Z2-parity of contributing terms).
  int parity() const;

  S2Cl operator+(const S2Cl& o) const;
  S2Cl operator-(const S2Cl& o) const;
  S2Cl operator*(const S2Cl& o) const;  // componentwise algebra product
  S2Cl scaled(const Gaussian& g) const;
  bool operator==(const S2Cl& o) const { return t == o.t; }

  /// Multiply on the right by (x ⊗ 1) resp. (1 ⊗ x) for a degree-1 x.
  S2Cl mul_right_first(const std::array<Rat, 4>& x) const;
  S2Cl mul_right_second(const std::array<Rat, 4>& x) const;
};

/// pi = (1/|F|) sum_f chi_0(f) f ⊗ f for the group generated by
/// {±1, g_0..g_3}, where generators are given as degree-1 multivectors with
/// constant coefficients (defaults to the standard frame).
S2Cl invariant_average();
S2Cl invariant_average_for(const std::array<std::array<Rat, 4>, 4>& gens);

/// A Z2-graded Cl(1,3)-module presented by the action matrices of
/// theta_0..theta_3 and the grading involution; T is the even operator of
/// Theorem pf when supplied.
struct CliffordModule {
  int dim = 0;
  std::array<Matrix<Rat>, 4> gen;  // actions of theta_0..theta_3
  Matrix<Rat> grading;             // +1 on even, -1 on odd
  std::optional<Matrix<Rat>> T;
};

class NotAModule : public std::runtime_error {
 public:
  explicit NotAModule(const std::string& m) : std::runtime_error(m) {}
};

struct FreeModuleReport {
  bool free = false;
  int rank = 0;            // n with M ≅ Cl^n when free
  bool t_valid = false;    // supplied T is even, squares to 1, implements P
  bool t_exists = true;    // an even T with the required properties exists
  std::string detail;
};

/// Decides whether M ≅ Cl^n as an unfiltered Z2-graded module and verifies
/// the supplied T against Theorem pf. Constructive: exhibits a free basis
/// through the even-part route of the proof when the module is free.
FreeModuleReport check_free_module(const CliffordModule& m);

/// Cl itself as a module over itself, with T = conjugation by theta_0.
CliffordModule clifford_regular_module();
/// Direct sum of modules.
CliffordModule module_direct_sum(const CliffordModule& a, const CliffordModule& b);
/// The half-spinor summand Cl·(1+theta_0 theta_3)/2, graded but not free.
CliffordModule half_spinor_module();

}  // namespace gle
