#pragma once

#include <functional>

#include "gle/gauge.hpp"

namespace gle {

class Degenerate : public std::runtime_error {
 public:
  explicit Degenerate(const std::string& m) : std::runtime_error(m) {}
};
class CFLViolation : public std::runtime_error {
 public:
  explicit CFLViolation(const std::string& m) : std::runtime_error(m) {}
};
class PositivityLost : public std::runtime_error {
 public:
  explicit PositivityLost(const std::string& m) : std::runtime_error(m) {}
};

/// First-order symbol of the gauge-fixed operator L^k: exact matrices
/// A^mu = B^k(-, a(x^mu) -) on E_G^k plus the zeroth-order part C from the
/// bracket with x.
struct SymbolSystem {
  int degree = 0;
  int dim = 0;
  std::array<Matrix<Scalar>, 4> A;
  Matrix<Scalar> C;

  bool constant_coefficients() const;
  /// Constant matrices as rationals; throws if not constant.
  Matrix<Rat> a_const(int mu) const;
  Matrix<Rat> c_const() const;
  /// Dense double versions evaluated at a point.
  std::vector<double> a_double(int mu, const std::array<double, 4>& at) const;
};

/// The anchor image a(x^mu) = rho(x)(x^mu) in W.
FrameVector anchor_frame(const EElement& x, int mu);

SymbolSystem assemble_symbol(const GaugeData& g, const EElement& x, int k);

/// Def. of global hyperbolicity at the fixed coordinates: x applied to
/// t + sum n^i xi_i stays in the future cone for the 7 axis samples and the
/// 8 corner samples scaled to |n| <= 1.
bool check_global_hyperbolicity(const EElement& x);

// ---- grid solvers (double precision; the analysis above stays exact) -----

struct Grid1D {
  int ncomp = 0, n = 0;
  double dx = 0;
  std::vector<double> u;  // component-major: u[c*n + i]

  static Grid1D zero(int ncomp, int n, double length);
  double& at(int c, int i) { return u[size_t(c) * size_t(n) + size_t(i)]; }
  double at(int c, int i) const { return u[size_t(c) * size_t(n) + size_t(i)]; }
  double x(int i) const { return dx * i; }
};

using SourceFn = std::function<void(double t, double x, std::vector<double>& out)>;

struct LinearRun {
  Grid1D state;
  std::vector<double> energy;  // two-level leapfrog invariant per step
  double dt = 0;
  int steps = 0;
};

/// Leapfrog evolution of the 1+1 reduction of a constant-coefficient system:
/// A0 du/dt + A1 du/dx + C u = R on a periodic grid.
LinearRun evolve_linear_1d(const SymbolSystem& sys, const Grid1D& init, int steps, double cfl,
                           const SourceFn* source = nullptr, double dt_override = 0);

/// d-dimensional periodic leapfrog (dims in {1,2,3}); cells = n^dims.
struct GridND {
  int ncomp = 0, dims = 1, n = 0;
  double dx = 0;
  std::vector<double> u;  // u[c*cells + flat_index]
  static GridND zero(int ncomp, int dims, int n, double length);
  long cells() const {
    long c = 1;
    for (int d = 0; d < dims; ++d) c *= n;
    return c;
  }
};

struct LinearRunND {
  GridND state;
  std::vector<double> energy;
  double dt = 0;
};

LinearRunND evolve_linear_nd(const SymbolSystem& sys, const GridND& init, int steps, double cfl);

/// Quasilinear 1+1 system with pointwise coefficient callbacks; Heun time
/// stepping with frozen coefficients and local Lax-Friedrichs dissipation.
struct QuasiSystem {
  int ncomp = 1;
  // writes the ncomp x ncomp matrix row-major
  std::function<void(double t, double x, const double* u, double* a0)> A0;
  std::function<void(double t, double x, const double* u, double* a1)> A1;
  std::function<void(double t, double x, const double* u, double* out)> rhs;  // may be null
};

Grid1D evolve_quasilinear_1d(const QuasiSystem& sys, const Grid1D& init, double t_end, double cfl,
                             double a0_floor = 1e-8);

/// ODE specialization (no spatial dependence): A0(u) u' = b(u), Heun steps.
std::vector<double> evolve_quasilinear_ode(const QuasiSystem& sys, std::vector<double> u0,
                                           double t_end, double dt, double a0_floor = 1e-8);

// ---- contraction -----------------------------------------------------------

/// K at the symbol level, by two routes: the B-pairing route (the C matrix
/// of the symbol system) and the composition quotient ∘ bracket ∘ inclusion
/// through the splitting E^{k+1} = E_G^{k+1} ⊕ theta_0 E_G^k.
struct ContractionData {
  SymbolSystem sys;
  Matrix<Rat> k_composition;  // dim x dim, in the theta_0-transported basis
  Matrix<Rat> k_pairing;      // B^k(u_j, [x, u_i]) = the constant C
  bool routes_agree = false;
};

ContractionData contraction_operator(const GaugeData& g, const EElement& x, int k);

/// Solve the degree-k system K u = r from zero data by leapfrog; r is given
/// through its B-transported components R = B^k(-, r).
LinearRun discrete_homotopy(const SymbolSystem& sys, int n_cells, int steps, double cfl,
                            const SourceFn& r_components);

}  // namespace gle
