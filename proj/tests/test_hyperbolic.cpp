#include <cmath>

#include "doctest.h"
#include "gle/hyperbolic.hpp"
#include "gle/rng.hpp"

using namespace gle;

namespace {

SymbolSystem principal_part(SymbolSystem sys) {
  sys.C = Matrix<Scalar>(sys.dim, sys.dim);
  return sys;
}

}  // namespace

TEST_SUITE_BEGIN("hyperbolic");

TEST_CASE("symbol matrices at the Minkowski element") {
  const GaugeData& g = default_gauge();
  EElement x = minkowski_element();
  int dims[4] = {11, 33, 23, 5};
  for (int k = 0; k <= 3; ++k) {
    SymbolSystem s = assemble_symbol(g, x, k);
    CHECK(s.dim == dims[k]);
    CHECK(s.constant_coefficients());
    for (int mu = 0; mu < 4; ++mu) {
      Matrix<Rat> a = s.a_const(mu);
      CHECK(a == a.transposed());
    }
    CHECK(positive_definite(s.a_const(0)));
  }
}

TEST_CASE("scaled frame scales the symbol") {
  const GaugeData& g = default_gauge();
  EElement x = minkowski_element();
  LElement sc;
  for (int mu = 0; mu < 4; ++mu) sc += LElement::term(1 << mu, CDer::lift(mu) * Rat(2));
  EElement x2 = reduce_mod_ideal(sc);
  SymbolSystem s1 = assemble_symbol(g, x, 1);
  SymbolSystem s2 = assemble_symbol(g, x2, 1);
  for (int mu = 0; mu < 4; ++mu) {
    Matrix<Rat> a = s1.a_const(mu).scaled(Rat(2));
    CHECK(a == s2.a_const(mu));
  }
  CHECK(positive_definite(s2.a_const(0)));
}

TEST_CASE("degenerate frames are rejected") {
  const GaugeData& g = default_gauge();
  LElement bad = LElement::term(1, CDer::lift(0));  // rank-1 frame block
  CHECK_THROWS_AS(assemble_symbol(g, reduce_mod_ideal(bad), 1), Degenerate);
}

TEST_CASE("first-order property of L^k") {
  // L(f u) - f L(u) = B(-, a(f) u), exact, for random polynomial f.
  const GaugeData& g = default_gauge();
  const auto& ideal_ctx = IdealContext::get();
  EElement x = minkowski_element();
  Rng rng(61);
  int k = 1;
  for (int t = 0; t < 5; ++t) {
    Scalar f = rng.scalar(2, 2);
    int j = int(rng.below(size_t(g.rank(k))));
    EElement u{ideal_ctx.e_from_coords(g.e_g[size_t(k)][size_t(j)], k)};
    // [x, f u] - f [x, u] = rho(x)(f) ∧ u
    LElement lhs = l_bracket(x.rep, u.rep * f) - l_bracket(x.rep, u.rep) * f;
    LElement rhs = wedge_ext(anchor_on_scalar(x.rep, f), u.rep);
    CHECK(ideal_ctx.reduce(lhs - rhs).is_zero());
  }
}

TEST_CASE("global hyperbolicity examples") {
  EElement mink = minkowski_element();
  CHECK(check_global_hyperbolicity(mink));
  // rational rotation of the spatial frame stays in the cone
  LElement rot;
  rot += LElement::term(1 << 0, CDer::lift(0));
  rot += LElement::term(1 << 1, CDer::lift(1) * Rat(3, 5) + CDer::lift(2) * Rat(4, 5));
  rot += LElement::term(1 << 2, CDer::lift(1) * Rat(-4, 5) + CDer::lift(2) * Rat(3, 5));
  rot += LElement::term(1 << 3, CDer::lift(3));
  CHECK(check_global_hyperbolicity(reduce_mod_ideal(rot)));
  // swapping theta_0 and theta_1 puts the time direction on a spacelike leg
  LElement swap;
  swap += LElement::term(1 << 1, CDer::lift(0));
  swap += LElement::term(1 << 0, CDer::lift(1));
  swap += LElement::term(1 << 2, CDer::lift(2));
  swap += LElement::term(1 << 3, CDer::lift(3));
  CHECK(!check_global_hyperbolicity(reduce_mod_ideal(swap)));
}

TEST_CASE("zero data stays zero") {
  const GaugeData& g = default_gauge();
  SymbolSystem s = assemble_symbol(g, minkowski_element(), 1);
  Grid1D init = Grid1D::zero(s.dim, 64, 2 * M_PI);
  LinearRun run = evolve_linear_1d(s, init, 100, 0.4);
  for (double v : run.state.u) CHECK(v == 0.0);
}

TEST_CASE("leapfrog conserves the two-level energy (principal part, k=1)") {
  const GaugeData& g = default_gauge();
  SymbolSystem s = principal_part(assemble_symbol(g, minkowski_element(), 1));
  int n = 256;
  Grid1D init = Grid1D::zero(s.dim, n, 2 * M_PI);
  Rng rng(62);
  std::vector<double> dir(size_t(s.dim));
  for (auto& v : dir) v = rng.unit_double() - 0.5;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < s.dim; ++c) init.at(c, i) = std::sin(init.x(i)) * dir[size_t(c)];
  LinearRun run = evolve_linear_1d(s, init, 1000, 0.4);
  REQUIRE(run.energy.size() == 1000);
  double q0 = run.energy.front();
  REQUIRE(std::fabs(q0) > 1e-12);
  double drift = 0;
  for (double q : run.energy) drift = std::max(drift, std::fabs(q - q0) / std::fabs(q0));
  CHECK(drift <= 1e-10);
}

TEST_CASE("manufactured solution converges at second order (full operator)") {
  const GaugeData& g = default_gauge();
  SymbolSystem s = assemble_symbol(g, minkowski_element(), 1);
  std::array<double, 4> origin{0, 0, 0, 0};
  std::vector<double> a0 = s.a_double(0, origin), a1 = s.a_double(1, origin);
  std::vector<double> cm(size_t(s.dim) * size_t(s.dim));
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) cm[size_t(i * s.dim + j)] = s.C.at(i, j).eval_double(origin);
  Rng rng(63);
  std::vector<double> dir(size_t(s.dim));
  for (auto& v : dir) v = rng.unit_double() - 0.5;
  auto ustar = [&](double t, double x, int c) { return std::sin(x - t) * dir[size_t(c)]; };
  SourceFn source = [&](double t, double x, std::vector<double>& out) {
    double cp = std::cos(x - t), sp = std::sin(x - t);
    for (int r = 0; r < s.dim; ++r) {
      double v = 0;
      for (int c = 0; c < s.dim; ++c)
        v += (-a0[size_t(r * s.dim + c)] + a1[size_t(r * s.dim + c)]) * cp * dir[size_t(c)] +
             cm[size_t(r * s.dim + c)] * sp * dir[size_t(c)];
      out[size_t(r)] = v;
    }
  };
  auto run_error = [&](int n) {
    Grid1D init = Grid1D::zero(s.dim, n, 2 * M_PI);
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < s.dim; ++c) init.at(c, i) = ustar(0, init.x(i), c);
    // integrate to a fixed final time close to 1
    double lam_dt_probe = evolve_linear_1d(s, init, 1, 0.4).dt;
    int steps = int(std::ceil(1.0 / lam_dt_probe));
    LinearRun run = evolve_linear_1d(s, init, steps, 0.4, &source);
    double t_end = run.dt * (steps - 1) + run.dt;  // time of the last computed level
    t_end = run.dt * steps;
    double err2 = 0;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < s.dim; ++c) {
        double d = run.state.at(c, i) - ustar(t_end, run.state.x(i), c);
        err2 += d * d;
      }
    return std::sqrt(err2 * init.dx);
  };
  double e1 = run_error(64), e2 = run_error(128);
  double ratio = e1 / e2;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("contraction operator: exact symbol identity and homotopy") {
  const GaugeData& g = default_gauge();
  EElement x = minkowski_element();
  for (int k = 0; k <= 3; ++k) {
    ContractionData cd = contraction_operator(g, x, k);
    CHECK(cd.routes_agree);
  }
  // r = 0 gives u = 0 through the homotopy
  SymbolSystem s = assemble_symbol(g, x, 1);
  SourceFn zero = [&](double, double, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
  };
  LinearRun run = discrete_homotopy(s, 64, 50, 0.4, zero);
  for (double v : run.state.u) CHECK(v == 0.0);
}

TEST_CASE("discrete homotopy converges for a smooth source") {
  // Fabricate r from a known smooth profile, solve from matching data and
  // measure the error decay under grid doubling.
  const GaugeData& g = default_gauge();
  SymbolSystem s = assemble_symbol(g, minkowski_element(), 1);
  std::array<double, 4> origin{0, 0, 0, 0};
  std::vector<double> a0 = s.a_double(0, origin), a1 = s.a_double(1, origin);
  std::vector<double> cm(size_t(s.dim) * size_t(s.dim));
  for (int i = 0; i < s.dim; ++i)
    for (int j = 0; j < s.dim; ++j) cm[size_t(i * s.dim + j)] = s.C.at(i, j).eval_double(origin);
  Rng rng(64);
  std::vector<double> dir(size_t(s.dim));
  for (auto& v : dir) v = rng.unit_double() - 0.5;
  auto ustar = [&](double t, double x, int c) {
    return std::cos(2 * x) * std::sin(t) * dir[size_t(c)];
  };
  SourceFn source = [&](double t, double x, std::vector<double>& out) {
    double ut = std::cos(2 * x) * std::cos(t), ux = -2 * std::sin(2 * x) * std::sin(t),
           uv = std::cos(2 * x) * std::sin(t);
    for (int r = 0; r < s.dim; ++r) {
      double v = 0;
      for (int c = 0; c < s.dim; ++c)
        v += a0[size_t(r * s.dim + c)] * ut * dir[size_t(c)] +
             a1[size_t(r * s.dim + c)] * ux * dir[size_t(c)] +
             cm[size_t(r * s.dim + c)] * uv * dir[size_t(c)];
      out[size_t(r)] = v;
    }
  };
  // u*(0,x) = 0, matching the zero-initial-data homotopy convention
  auto run_error = [&](int n) {
    double dt_probe = discrete_homotopy(s, n, 1, 0.4, source).dt;
    int steps = int(std::ceil(1.0 / dt_probe));
    LinearRun run = discrete_homotopy(s, n, steps, 0.4, source);
    double t_end = run.dt * steps;
    double err2 = 0;
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < s.dim; ++c) {
        double d = run.state.at(c, i) - ustar(t_end, run.state.x(i), c);
        err2 += d * d;
      }
    return std::sqrt(err2 * (2 * M_PI / n));
  };
  double e1 = run_error(64), e2 = run_error(128);
  double ratio = e1 / e2;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("quasilinear Burgers matches characteristics before breaking") {
  QuasiSystem sys;
  sys.ncomp = 1;
  sys.A0 = [](double, double, const double*, double* a) { a[0] = 1.0; };
  sys.A1 = [](double, double, const double* u, double* a) { a[0] = u[0]; };
  sys.rhs = nullptr;
  double amp = 0.1;
  int n = 512;
  Grid1D init = Grid1D::zero(1, n, 2 * M_PI);
  for (int i = 0; i < n; ++i) init.at(0, i) = amp * std::sin(init.x(i));
  double t_end = 3.0;  // breaking time is 1/amp = 10
  Grid1D sol = evolve_quasilinear_1d(sys, init, t_end, 0.4);
  // characteristics oracle: u(x,t) = u0(xi), x = xi + u0(xi) t
  auto oracle = [&](double x) {
    double xi = x;
    for (int it = 0; it < 100; ++it) {
      double f = xi + amp * std::sin(xi) * t_end - x;
      double fp = 1 + amp * std::cos(xi) * t_end;
      xi -= f / fp;
    }
    return amp * std::sin(xi);
  };
  double err = 0;
  for (int i = 0; i < n; ++i) err = std::max(err, std::fabs(sol.at(0, i) - oracle(sol.x(i))));
  CHECK(err <= 1e-3);
}

TEST_CASE("quasilinear ODE case matches a high-order oracle") {
  // A0(u) u' = b(u) with A0 = 1 + u^2/4, b = -u; Heun at dt vs RK4 at dt/20.
  QuasiSystem sys;
  sys.ncomp = 1;
  sys.A0 = [](double, double, const double* u, double* a) { a[0] = 1.0 + 0.25 * u[0] * u[0]; };
  sys.A1 = [](double, double, const double*, double* a) { a[0] = 0.0; };
  sys.rhs = [](double, double, const double* u, double* b) { b[0] = -u[0]; };
  std::vector<double> u0{1.0};
  auto heun = evolve_quasilinear_ode(sys, u0, 1.0, 1e-3);
  // RK4 oracle on u' = -u / (1 + u^2/4)
  double u = 1.0, dt = 5e-5;
  auto f = [](double v) { return -v / (1.0 + 0.25 * v * v); };
  for (int i = 0; i < 20000; ++i) {
    double k1 = f(u), k2 = f(u + 0.5 * dt * k1), k3 = f(u + 0.5 * dt * k2), k4 = f(u + dt * k3);
    u += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  CHECK(std::fabs(heun[0] - u) < 1e-5);
  // zero data stays zero
  auto z = evolve_quasilinear_ode(sys, {0.0}, 1.0, 1e-3);
  CHECK(z[0] == 0.0);
}

TEST_CASE("positivity loss is detected") {
  QuasiSystem sys;
  sys.ncomp = 1;
  sys.A0 = [](double t, double, const double*, double* a) { a[0] = 1.0 - t; };
  sys.A1 = [](double, double, const double*, double* a) { a[0] = 0.0; };
  sys.rhs = [](double, double, const double*, double* b) { b[0] = 1.0; };
  CHECK_THROWS_AS(evolve_quasilinear_ode(sys, {0.0}, 2.0, 1e-2), PositivityLost);
}

TEST_CASE("2+1 reduction runs and conserves the principal energy") {
  const GaugeData& g = default_gauge();
  SymbolSystem s = principal_part(assemble_symbol(g, minkowski_element(), 2));
  GridND init = GridND::zero(s.dim, 2, 24, 2 * M_PI);
  Rng rng(65);
  long cells = init.cells();
  for (int c = 0; c < s.dim; ++c)
    for (long i = 0; i < cells; ++i) {
      double x = (i % init.n) * init.dx, y = ((i / init.n) % init.n) * init.dx;
      init.u[size_t(c) * size_t(cells) + size_t(i)] =
          std::sin(x + y) * (rng.unit_double() * 0 + (c % 3 == 0 ? 1.0 : 0.5));
    }
  LinearRunND run = evolve_linear_nd(s, init, 200, 0.3);
  double q0 = run.energy.front();
  REQUIRE(std::fabs(q0) > 1e-12);
  double drift = 0;
  for (double q : run.energy) drift = std::max(drift, std::fabs(q - q0) / std::fabs(q0));
  CHECK(drift <= 1e-9);
}

TEST_SUITE_END();
