#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gle/hyperbolic.hpp"
#include "gle/mc_formal.hpp"
#include "gle/report.hpp"
#include "gle/ricci.hpp"
#include "gle/rng.hpp"
#include "json.hpp"

using namespace gle;

namespace {

int write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 2;
  }
  out << content;
  return 0;
}

HermForm herm_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  HermForm h;
  for (auto& e : j.at("entries")) {
    int r = e.at(0).get<int>(), c = e.at(1).get<int>();
    Rat re(std::string(e.at(2).get<std::string>()));
    Rat im(std::string(e.at(3).get<std::string>()));
    re.canonicalize();
    im.canonicalize();
    h.h.at(r, c) = Gaussian(re, im);
    h.h.at(c, r) = Gaussian(re, -im);
  }
  return h;
}

HermForm random_positive_herm(uint64_t seed) {
  // M M^H + 1 is Hermitian positive definite
  Rng rng(seed);
  Matrix<Gaussian> m(18, 18);
  for (auto& x : m.a) x = Gaussian(rng.rat(2), rng.rat(2));
  HermForm h;
  for (int i = 0; i < 18; ++i)
    for (int j = 0; j < 18; ++j) {
      Gaussian acc(Rat(i == j ? 1 : 0));
      for (int k = 0; k < 18; ++k) acc += m.at(i, k) * m.at(j, k).conj();
      h.h.at(i, j) = acc;
    }
  return h;
}

int cmd_verify(uint64_t seed, const std::string& only, const std::string& report_path, int jobs,
               bool tamper) {
  SuiteConfig cfg;
  cfg.seed = seed;
  cfg.only = only;
  cfg.jobs = jobs;
  cfg.tamper_ideal = tamper;
  Report rep = run_suite(cfg);
  for (auto& c : rep.checks)
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  [" << c.reference << "] "
              << c.witness << "\n";
  int failures = 0;
  for (auto& c : rep.checks) failures += c.pass ? 0 : 1;
  std::cout << rep.checks.size() << " checks, " << failures << " failures\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "cannot write " << report_path << "\n";
      return 2;
    }
    out << rep.to_json(true);
  }
  return failures == 0 ? 0 : 1;
}

int cmd_evolve(int degree, int dims, int grid, double cfl, int steps, const std::string& report,
               const std::string& csv, bool principal, uint64_t seed) {
  const GaugeData& g = default_gauge();
  SymbolSystem sys = assemble_symbol(g, minkowski_element(), degree);
  if (principal) sys.C = Matrix<Scalar>(sys.dim, sys.dim);
  Rng rng(seed);
  std::vector<double> energy;
  double dt = 0;
  if (dims == 1) {
    Grid1D init = Grid1D::zero(sys.dim, grid, 2 * M_PI);
    for (int i = 0; i < grid; ++i)
      for (int c = 0; c < sys.dim; ++c)
        init.at(c, i) = std::sin(init.x(i)) * (rng.unit_double() - 0.5);
    LinearRun run = evolve_linear_1d(sys, init, steps, cfl);
    energy = run.energy;
    dt = run.dt;
  } else {
    GridND init = GridND::zero(sys.dim, dims, grid, 2 * M_PI);
    long cells = init.cells();
    for (int c = 0; c < sys.dim; ++c) {
      double amp = rng.unit_double() - 0.5;
      for (long i = 0; i < cells; ++i) {
        double x = double(i % grid) * init.dx;
        init.u[size_t(c) * size_t(cells) + size_t(i)] = amp * std::sin(x);
      }
    }
    LinearRunND run = evolve_linear_nd(sys, init, steps, cfl);
    energy = run.energy;
    dt = run.dt;
  }
  if (!csv.empty()) {
    std::ofstream out(csv);
    if (!out) {
      std::cerr << "cannot write " << csv << "\n";
      return 2;
    }
    out << "step,energy\n";
    for (size_t i = 0; i < energy.size(); ++i) out << i << "," << std::setprecision(17) << energy[i] << "\n";
  }
  double q0 = energy.empty() ? 0 : energy.front(), drift = 0;
  for (double q : energy)
    if (std::fabs(q0) > 0) drift = std::max(drift, std::fabs(q - q0) / std::fabs(q0));
  nlohmann::json j;
  j["degree"] = degree;
  j["dims"] = dims;
  j["grid"] = grid;
  j["steps"] = steps;
  j["cfl"] = cfl;
  j["dt"] = dt;
  j["system_size"] = sys.dim;
  j["principal_part_only"] = principal;
  j["relative_energy_drift"] = drift;
  return write_or_print(report, j.dump(2));
}

int cmd_mc(int order, const std::string& example, const std::string& report) {
  nlohmann::json j;
  j["example"] = example;
  j["order"] = order;
  auto emit = [&](const FreeSeriesGLa& p, const Vec<Rat>& x0, const Vec<Rat>& xi) {
    MCSolution sol = mc_recursion(p, x0, xi, order);
    nlohmann::json cs = nlohmann::json::array();
    for (size_t k = 0; k < sol.c.size(); ++k) {
      nlohmann::json layer = nlohmann::json::array();
      int lk = std::min<int>(int(k), p.kmax);
      for (auto& v : sol.c[k].coeff[size_t(lk)]) layer.push_back(v.get_str());
      cs.push_back(layer);
    }
    j["c"] = cs;
    SeriesElt e = p.bracket(sol.xi_sum, sol.xi_sum);
    j["residual_order"] = e.order();
    j["clauses"] = sol.clauses_pass;
  };
  if (example == "abelian") {
    FiniteGLa g;
    for (int i = 0; i < 3; ++i) g.degree.push_back(1);
    g.c.assign(3, std::vector<SparseVec>(3));
    FreeSeriesGLa p = FreeSeriesGLa::plain(g, std::max(order + 2, 8));
    Vec<Rat> x0(3, Rat(0)), xi(3, Rat(0));
    xi[0] = Rat(1);
    emit(p, x0, xi);
  } else if (example == "endo") {
    EndoExample ex = endo_example();
    FreeSeriesGLa p = FreeSeriesGLa::plain(ex.gla, std::max(order + 2, 8));
    HomologyData h = homology(ex.gla, ex.x0);
    emit(p, ex.x0, h.h1_reps.at(0));
  } else if (example == "gravity-fiber") {
    const GravityFiber& f = gravity_fiber();
    FreeSeriesGLa p = FreeSeriesGLa::plain(f.gla, std::max(order + 2, 8));
    HomologyData h = homology(f.gla, f.x_mink);
    emit(p, f.x_mink, h.h1_reps.at(0));
  } else if (example == "rees") {
    FiniteGLa g;
    g.degree = {1, 1, 2};
    g.c.assign(3, std::vector<SparseVec>(3));
    g.c[0][1] = {{2, Rat(1)}};
    g.c[1][0] = {{2, Rat(1)}};
    FreeSeriesGLa rees = rees_algebra(g, {1, 1, 0}, std::max(order + 2, 8));
    Vec<Rat> x0(3, Rat(0)), xi(3, Rat(0));
    xi[0] = Rat(1);
    emit(rees, x0, xi);
  } else {
    std::cerr << "unknown example " << example << "\n";
    return 2;
  }
  return write_or_print(report, j.dump(2));
}

int cmd_ricci(const std::string& background, const std::string& hpoly, const std::string& report) {
  nlohmann::json j;
  EElement x;
  if (background == "minkowski") {
    x = minkowski_element();
  } else if (background == "ppwave") {
    Poly H = Poly::parse(hpoly);
    x = ppwave_element(H);
    j["H"] = hpoly;
  } else {
    std::cerr << "unknown background " << background << "\n";
    return 2;
  }
  j["background"] = background;
  j["nondegenerate"] = nondegenerate(x);
  j["mc_defect_zero"] = mc_defect(x).is_zero();
  AffineData c = to_connection(x);
  auto t = torsion(c);
  nlohmann::json tj = nlohmann::json::array();
  bool tz = true;
  for (int nu = 0; nu < 4; ++nu)
    for (int mu = 0; mu < 4; ++mu)
      for (int lam = 0; lam < 4; ++lam)
        if (!t[size_t(nu)].at(mu, lam).is_zero()) {
          tz = false;
          tj.push_back({nu, mu, lam, t[size_t(nu)].at(mu, lam).str()});
        }
  j["torsion_zero"] = tz;
  j["torsion_nonzero_components"] = tj;
  Matrix<Scalar> ric = ricci(c);
  nlohmann::json rj = nlohmann::json::array();
  bool rz = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (!ric.at(a, b).is_zero()) {
        rz = false;
        rj.push_back({a, b, ric.at(a, b).str()});
      }
  j["ricci_zero"] = rz;
  j["ricci_nonzero_components"] = rj;
  return write_or_print(report, j.dump(2));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification kernel for the graded Lie algebra of general relativity"};
  app.require_subcommand(1);

  uint64_t seed = 20240817;
  std::string report_path, only;
  int jobs = 0;
  bool tamper = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--seed", seed, "seed for the sampled identities");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--only", only, "glob over check names");
  verify->add_option("--jobs", jobs, "worker pool size (0 = hardware)");
  verify->add_flag("--tamper-ideal", tamper, "self-test: flip one sign in the ideal basis");

  auto* ranks = app.add_subcommand("ranks", "emit the rank tables as JSON");
  std::string ranks_report;
  ranks->add_option("--report", ranks_report, "write here instead of stdout");

  auto* gauge = app.add_subcommand("gauge", "build a gauge and emit it as JSON");
  std::string gauge_h = "identity", gauge_h_file, gauge_report;
  uint64_t gauge_seed = 0;
  gauge->add_option("--h", gauge_h, "identity (default)");
  gauge->add_option("--h-file", gauge_h_file, "JSON file with Hermitian entries");
  gauge->add_option("--random-seed", gauge_seed, "random positive-definite h");
  gauge->add_option("--report", gauge_report, "write here instead of stdout");

  auto* evolve = app.add_subcommand("evolve", "run the toy linear evolution");
  int degree = 1, dims = 1, grid = 256, steps = 1000;
  double cfl = 0.4;
  std::string evolve_report, energy_csv;
  bool principal = false;
  evolve->add_option("--degree", degree, "gauge degree k (0..3)")->check(CLI::Range(0, 3));
  evolve->add_option("--dims", dims, "spatial dimensions")->check(CLI::Range(1, 3));
  evolve->add_option("--grid", grid, "cells per dimension");
  evolve->add_option("--cfl", cfl, "CFL number");
  evolve->add_option("--steps", steps, "time steps");
  evolve->add_option("--report", evolve_report, "write the JSON summary here");
  evolve->add_option("--energy-csv", energy_csv, "write the energy trace here");
  evolve->add_flag("--principal", principal, "drop the zeroth-order term");
  evolve->add_option("--seed", seed, "seed for the initial data");

  auto* mc = app.add_subcommand("mc", "formal Maurer-Cartan recursion");
  int order = 6;
  std::string example = "endo", mc_report;
  mc->add_option("--order", order, "truncation order K")->check(CLI::Range(1, 12));
  mc->add_option("--example", example, "abelian | endo | gravity-fiber | rees");
  mc->add_option("--report", mc_report, "write here instead of stdout");

  auto* ricci_cmd = app.add_subcommand("ricci", "curvature of an explicit background");
  std::string background = "minkowski", hpoly = "x1^2 - x2^2", ricci_report;
  ricci_cmd->add_option("--background", background, "minkowski | ppwave");
  ricci_cmd->add_option("--H", hpoly, "wave profile polynomial in x1, x2");
  ricci_cmd->add_option("--report", ricci_report, "write here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(seed, only, report_path, jobs, tamper);
    if (ranks->parsed()) return write_or_print(ranks_report, ranks_json());
    if (gauge->parsed()) {
      HermForm h;
      if (!gauge_h_file.empty()) h = herm_from_json(gauge_h_file);
      else if (gauge_seed != 0) h = random_positive_herm(gauge_seed);
      else if (gauge_h == "identity") h = HermForm::identity();
      else {
        std::cerr << "unknown --h value " << gauge_h << "\n";
        return 2;
      }
      GaugeData g = build_gauge(build_b(h));
      return write_or_print(gauge_report, gauge_json(g));
    }
    if (evolve->parsed())
      return cmd_evolve(degree, dims, grid, cfl, steps, evolve_report, energy_csv, principal, seed);
    if (mc->parsed()) return cmd_mc(order, example, mc_report);
    if (ricci_cmd->parsed()) return cmd_ricci(background, hpoly, ricci_report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
