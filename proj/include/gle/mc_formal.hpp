#pragma once

#include <map>

#include "gle/glaoid.hpp"

namespace gle {

class NotMC : public std::runtime_error {
 public:
  explicit NotMC(const std::string& m) : std::runtime_error(m) {}
};
class Obstructed : public std::runtime_error {
 public:
  explicit Obstructed(const std::string& m) : std::runtime_error(m) {}
};
class AssertionFailed : public std::runtime_error {
 public:
  explicit AssertionFailed(const std::string& m) : std::runtime_error(m) {}
};
class NotAFiltration : public std::runtime_error {
 public:
  explicit NotAFiltration(const std::string& m) : std::runtime_error(m) {}
};

using SparseVec = std::vector<std::pair<int, Rat>>;

/// Finite-dimensional graded Lie algebra over Q given by structure
/// constants on a homogeneous basis.
struct FiniteGLa {
  std::vector<int> degree;                         // degree of each basis slot
  std::vector<std::vector<SparseVec>> c;           // c[i][j] = [e_i, e_j]

  int dim() const { return int(degree.size()); }
  Vec<Rat> bracket(const Vec<Rat>& x, const Vec<Rat>& y) const;
  /// Graded antisymmetry and Jacobi on all basis triples, exact.
  void check_axioms() const;
  std::vector<int> slots_of_degree(int d) const;
};

/// Truncated power series with coefficients in the gLa's coordinate space.
struct SeriesElt {
  int kmax = 0;
  std::vector<Vec<Rat>> coeff;  // kmax+1 layers

  static SeriesElt zero(int dim, int kmax);
  bool layer_zero(int k) const;
  /// lowest power with a nonzero layer; kmax+1 when zero
  int order() const;
  SeriesElt operator+(const SeriesElt& o) const;
  SeriesElt operator-(const SeriesElt& o) const;
  SeriesElt scaled(const Rat& r) const;
  /// divide exactly by s^p (requires order >= p)
  SeriesElt shift_down(int p) const;
};

/// gLa free over R[[s]]: a finite gLa with a bracket that may insert powers
/// of s, truncated at kmax.
struct FreeSeriesGLa {
  FiniteGLa base;
  int kmax = 8;
  // bracket with insertions: entries (power, vector); power 0 recovers base.c
  std::vector<std::vector<std::vector<std::pair<int, SparseVec>>>> table;

  static FreeSeriesGLa plain(const FiniteGLa& g, int kmax);
  SeriesElt bracket(const SeriesElt& x, const SeriesElt& y) const;
  SeriesElt embed(const Vec<Rat>& x) const;  // the map i
  Vec<Rat> layer0(const SeriesElt& x) const { return x.coeff[0]; }  // the map p
  /// The induced bracket on p/sp agrees with the base gLa.
  bool zero_layer_is_base() const;
};

/// Rees algebra of a filtered gLa. The basis is assumed adapted to the
/// filtration: level[i] = min p with e_i in F_p; F_p g = g for p >= max.
FreeSeriesGLa rees_algebra(const FiniteGLa& g, const std::vector<int>& level, int kmax);

struct HomologyData {
  std::map<int, int> h_dim;                  // degree -> dim H^k
  std::map<int, Matrix<Rat>> d;              // degree -> matrix of [x0,-]
  std::vector<Vec<Rat>> h1_reps;             // representatives r: H^1 -> a^1
  // homotopy h: a^2 -> a^1 with d h = id on ker d ∩ a^2; valid iff H^2 = 0
  Matrix<Rat> h2_to_1;
  bool homotopy_valid = true;
  std::vector<int> deg1_slots, deg2_slots;
};

/// Homology of d = [x0,-]; verifies d^2 = 0 and that x0 is MC.
HomologyData homology(const FiniteGLa& g, const Vec<Rat>& x0);

struct MCSolution {
  std::vector<SeriesElt> c;   // c_0 .. c_K
  SeriesElt xi_sum;           // Xi_{<= K}
  int order = 0;
  bool clauses_pass = false;  // A_K, B_K, C_K at every step
};

/// The unobstructed recursion: c_{K+1} = -1/2 i h p(e_K / s^{K+1}),
/// starting from c_0 = i x0 and c_1 = -1/2 i h p(e_0/s) + i r xi.
MCSolution mc_recursion(const FreeSeriesGLa& p, const Vec<Rat>& x0, const Vec<Rat>& xi_rep, int K);

/// Truncated exp(ad y) for y with positive s-order.
SeriesElt exp_ad(const FreeSeriesGLa& p, const SeriesElt& y, const SeriesElt& x);

/// The constant-coefficient fiber of E as a 144-dimensional graded Lie
/// algebra (degrees 0..4), with the Minkowski element in coordinates.
struct GravityFiber {
  FiniteGLa gla;
  Vec<Rat> x_mink;
  std::vector<int> slot_of_degree_offset;  // degree -> first slot
};
const GravityFiber& gravity_fiber();

/// Synthetic unobstructed example: graded endomorphisms of a 3-graded space
/// with the two-step differential; H^2 = 0 by construction.
struct EndoExample {
  FiniteGLa gla;
  Vec<Rat> x0;
};
EndoExample endo_example();

}  // namespace gle
