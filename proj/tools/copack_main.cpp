// copack: exact copositivity testing, stability numbers through copositive
// thresholds, completely positive dual values, and kissing-number bounds.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "copack/copositivity.hpp"
#include "copack/cpdual.hpp"
#include "copack/errors.hpp"
#include "copack/graphs.hpp"
#include "copack/kissing.hpp"
#include "copack/version.hpp"
#include "report_io.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitSizeCap = 4;
constexpr int kExitInfeasible = 5;

copack::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw copack::ParseError("cannot open graph file '" + path + "'", 0);
  return copack::Graph::from_dimacs(in);
}

std::vector<double> load_weights(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw copack::ParseError("cannot open weights file '" + path + "'", 0);
  return copack::weights_from_stream(in, n);
}

copack::Symmat load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw copack::ParseError("cannot open matrix file '" + path + "'", 0);
  std::vector<double> values;
  double v;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw copack::ParseError("matrix file '" + path + "' has a non-numeric token", 0);
  const auto count = values.size();
  const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(count))));
  if (count == 0 || static_cast<size_t>(n) * n != count)
    throw copack::ParseError("matrix file '" + path + "' does not hold a square matrix", 0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = values[static_cast<size_t>(i) * n + j];
  try {
    return copack::Symmat::from_rows(rows, 1e-12);
  } catch (const std::invalid_argument& e) {
    throw copack::ParseError(std::string("matrix file '") + path + "': " + e.what(), 0);
  }
}

struct StabOptions {
  std::string graph_path;
  std::string weights_path;
  double tol = 1e-3;
};

int run_stab(const StabOptions& opt) {
  const copack::Graph g = load_graph(opt.graph_path);
  std::cout << "graph: " << opt.graph_path << " (n=" << g.n() << ", m=" << g.m() << ")\n";
  if (opt.weights_path.empty()) {
    const int a = copack::alpha(g);
    const double threshold = copack::dkp_threshold(g, opt.tol);
    const double dual = copack::dual_optimum(g);
    std::cout << "alpha = " << a << "\n";
    std::cout << "dkp_threshold = " << copack::report::format_double(threshold) << "\n";
    std::cout << "dual_optimum = " << copack::report::format_double(dual) << "\n";
    std::cout << "duality_gap = " << copack::report::format_double(std::abs(threshold - dual))
              << "\n";
  } else {
    const auto w = load_weights(opt.weights_path, g.n());
    const double aw = copack::alpha_weighted(g, w);
    const double threshold = copack::weighted_dkp_threshold(g, w, opt.tol);
    std::cout << "alpha_weighted = " << copack::report::format_double(aw) << "\n";
    std::cout << "weighted_dkp_threshold = " << copack::report::format_double(threshold) << "\n";
    std::cout << "duality_gap = " << copack::report::format_double(std::abs(threshold - aw))
              << "\n";
  }
  return 0;
}

struct CopositiveOptions {
  std::string matrix_path;
  std::string mode;
  int resolution = 50;
};

int run_copositive(const CopositiveOptions& opt) {
  const copack::Symmat k = load_matrix(opt.matrix_path);
  std::cout << "matrix: " << opt.matrix_path << " (n=" << k.size() << ")\n";

  copack::CopResult res = opt.mode == "exact" ? copack::is_copositive_exact(k)
                                              : copack::refute_copositive_grid(k, opt.resolution);
  const bool copositive = res.verdict == copack::CopVerdict::Copositive;
  std::cout << "verdict = " << (copositive ? "Copositive" : "NotCopositive")
            << (res.heuristic ? " (heuristic: grid search found no violation)" : "") << "\n";

  const auto eig = copack::eig_sym(k);
  const double min_eig = eig.eigenvalues.front();
  if (min_eig < -1e-10)
    std::cout << "note: not positive semidefinite (min eigenvalue "
              << copack::report::format_double(min_eig) << ")\n";
  bool nonneg = true;
  for (int i = 0; i < k.size() && nonneg; ++i)
    for (int j = i; j < k.size(); ++j)
      if (k(i, j) < 0) {
        nonneg = false;
        break;
      }
  if (!nonneg) std::cout << "note: not entrywise nonnegative\n";

  if (res.witness) {
    std::cout << "witness =";
    for (double v : *res.witness) std::cout << ' ' << copack::report::format_double(v);
    std::cout << "\n";
    std::cout << "witness_value = " << copack::report::format_double(res.witness_value) << "\n";
  }
  if (res.certificate) {
    std::cout << "certificate: submatrices_tested = " << res.certificate->submatrices_tested
              << ", min_eigenvalue = "
              << copack::report::format_double(res.certificate->min_eigenvalue)
              << ", borderline = " << res.certificate->borderline.size() << "\n";
  }
  return 0;
}

struct KissingOptions {
  int dim = 0;
  int degree = 0;
  std::string mode;
  int grid = 2000;
  int max_iters = 50;
  int restarts = 32;
  int nmax = 0;
  uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
};

int run_kissing(const KissingOptions& opt) {
  copack::KissingInstance inst;
  inst.dim = opt.dim;
  inst.degree = opt.degree;
  inst.grid_size = opt.grid;
  inst.max_iters = opt.max_iters;
  inst.restarts = opt.restarts;
  inst.n_max = opt.nmax;
  inst.seed = opt.seed;
  inst.mode = opt.mode == "delsarte" ? copack::BoundMode::Delsarte : copack::BoundMode::Copositive;
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const copack::BoundReport report = inst.mode == copack::BoundMode::Delsarte
                                         ? copack::delsarte_bound(inst)
                                         : copack::copositive_bound(inst);

  std::cout << copack::report::kissing_summary(report) << "\n";

  std::string payload;
  if (opt.format == "json")
    payload = copack::report::kissing_json(report);
  else if (opt.format == "csv")
    payload = copack::report::kissing_csv(report);
  else
    payload = copack::report::kissing_text(report);

  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to '" << opt.out_path << "'\n";
      return 1;
    }
    out << payload;
  } else {
    std::cout << payload;
  }
  return report.status == copack::BoundStatus::Infeasible ? kExitInfeasible : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"copositive packing toolkit"};
  app.set_version_flag("--version", copack::kToolVersion);
  app.require_subcommand(1);

  StabOptions stab;
  auto* stab_cmd = app.add_subcommand(
      "stab", "stability number, copositive threshold, and dual optimum of a graph");
  stab_cmd->add_option("--graph", stab.graph_path, "graph file (DIMACS-like)")->required();
  stab_cmd->add_option("--weights", stab.weights_path, "per-vertex weights file");
  stab_cmd->add_option("--tol", stab.tol, "bisection width")->default_val(1e-3);

  CopositiveOptions cop;
  auto* cop_cmd = app.add_subcommand("copositive", "copositivity verdict for a symmetric matrix");
  cop_cmd->add_option("--matrix", cop.matrix_path, "whitespace-separated square matrix file")
      ->required();
  cop_cmd->add_option("--mode", cop.mode, "exact | grid")
      ->required()
      ->check(CLI::IsMember({"exact", "grid"}));
  cop_cmd->add_option("--resolution", cop.resolution, "simplex grid denominator")->default_val(50);

  KissingOptions kiss;
  auto* kiss_cmd = app.add_subcommand("kissing", "kissing number bound on S^{dim-1}");
  kiss_cmd->add_option("--dim", kiss.dim, "ambient dimension")->required();
  kiss_cmd->add_option("--degree", kiss.degree, "polynomial degree")->required();
  kiss_cmd->add_option("--mode", kiss.mode, "delsarte | copositive")
      ->required()
      ->check(CLI::IsMember({"delsarte", "copositive"}));
  kiss_cmd->add_option("--grid", kiss.grid, "grid nodes on [-1, 1/2]")->default_val(2000);
  kiss_cmd->add_option("--max-iters", kiss.max_iters, "cutting-plane iterations")->default_val(50);
  kiss_cmd->add_option("--restarts", kiss.restarts, "separation restarts")->default_val(32);
  kiss_cmd->add_option("--nmax", kiss.nmax, "largest configuration size (default 4*dim)");
  kiss_cmd->add_option("--seed", kiss.seed, "random seed")->default_val(0);
  kiss_cmd->add_option("--out", kiss.out_path, "report output path");
  kiss_cmd->add_option("--format", kiss.format, "json | csv | text")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (stab_cmd->parsed()) return run_stab(stab);
    if (cop_cmd->parsed()) return run_copositive(cop);
    if (kiss_cmd->parsed()) return run_kissing(kiss);
  } catch (const copack::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const copack::SizeCapError& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
