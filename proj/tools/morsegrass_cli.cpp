#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morsegrass/cli.hpp"

namespace cli = morsegrass::cli;

int main(int argc, char** argv) {
  CLI::App app{"Morse theory on complex Grassmannians: cells, flows, homology and Schubert calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::GlobalOptions opts;
  opts.tol = cli::default_tolerance();
  app.add_flag("--json", opts.json, "Emit JSON instead of text");
  app.add_option("--tol", opts.tol, "Numerical tolerance (default 1e-9, or MORSEGRASS_TOL)")->check(CLI::PositiveNumber);
  app.add_flag("--parallel", opts.parallel, "Allow concurrent enumeration where supported");

  int k = 0, n = 0;
  std::function<cli::CommandResult()> run;

  auto* cells = app.add_subcommand("cells", "List Schubert cells of Gr(k,n)");
  cells->add_option("k", k)->required();
  cells->add_option("n", n)->required();
  cells->callback([&] { run = [&] { return cli::cmd_cells(k, n); }; });

  std::string method = "all";
  auto* poincare = app.add_subcommand("poincare", "Poincare polynomial of Gr(k,n)");
  poincare->add_option("k", k)->required();
  poincare->add_option("n", n)->required();
  poincare->add_option("method", method, "cells, recurrence, closed or all")->check(CLI::IsMember({"cells", "recurrence", "closed", "all"}));
  poincare->callback([&] { run = [&] { return cli::cmd_poincare(k, n, method); }; });

  std::string matrix_path, spectrum;
  double t = 0.0;
  auto* flow = app.add_subcommand("flow", "Evolve a plane under the gradient flow");
  flow->add_option("matrix", matrix_path, "JSON matrix file, columns span the plane")->required();
  flow->add_option("spectrum", spectrum, "Eigenvalues a_1 >= ... >= a_n >= 0, e.g. 3,2,1,0")->required();
  flow->add_option("t", t, "Flow time")->required();
  flow->callback([&] { run = [&] { return cli::cmd_flow(matrix_path, spectrum, t, opts); }; });

  std::string direction = "down";
  bool morse_bott = false;
  auto* limit = app.add_subcommand("limit", "Critical point reached by the flow");
  limit->add_option("matrix", matrix_path)->required();
  limit->add_option("spectrum", spectrum)->required();
  limit->add_option("direction", direction, "down (t -> +inf) or up (t -> -inf)")->check(CLI::IsMember({"down", "up"}));
  limit->add_flag("--morse-bott", morse_bott, "Allow repeated eigenvalues and report the critical manifold");
  limit->callback([&] { run = [&] { return cli::cmd_limit(matrix_path, spectrum, direction, morse_bott, opts); }; });

  std::string source, mode = "int";
  std::vector<std::string> params;
  auto* witten = app.add_subcommand("witten", "Homology of a Witten complex");
  witten->add_option("source", source, "builtin:rp N, builtin:circle M, builtin:torus, builtin:grassmannian K N, or a file")->required();
  witten->add_option("params", params, "Parameters of a builtin");
  witten->add_option("--mode", mode, "int or mod2")->check(CLI::IsMember({"int", "mod2"}));
  witten->callback([&] { run = [&] { return cli::cmd_witten(source, params, mode); }; });

  std::vector<std::string> symbols;
  auto* cup = app.add_subcommand("cup", "Cup product of Schubert classes");
  cup->add_option("k", k)->required();
  cup->add_option("n", n)->required();
  cup->add_option("symbols", symbols, "Schubert symbols such as (2,4)")->required();
  cup->callback([&] { run = [&] { return cli::cmd_cup(k, n, symbols); }; });

  std::optional<std::string> symbol;
  auto* polytope = app.add_subcommand("polytope", "Moment polytope and its f-vector");
  polytope->add_option("k", k)->required();
  polytope->add_option("n", n)->required();
  std::optional<std::string> plot_path;
  polytope->add_option("symbol", symbol, "Restrict to the Schubert variety of this symbol");
  polytope->add_option("--plot", plot_path, "Write vertex coordinates projected to R^3 (n = 4 only)");
  polytope->callback([&] { run = [&] { return cli::cmd_polytope(k, n, symbol, opts, plot_path); }; });

  std::string graph_path;
  std::optional<std::string> labels_path;
  auto* moduli = app.add_subcommand("moduli-dim", "Expected dimension of a flow-graph moduli space");
  moduli->add_option("graph", graph_path, "Graph JSON file")->required();
  moduli->add_option("--labels", labels_path, "Labels JSON file, if not inside the graph file");
  moduli->callback([&] { run = [&] { return cli::cmd_moduli_dim(graph_path, labels_path); }; });

  std::string blocks;
  auto* mb = app.add_subcommand("mb", "Critical manifolds for a spectrum with repeated eigenvalues");
  mb->add_option("k", k)->required();
  mb->add_option("blocks", blocks, "Eigenvalue multiplicities from the top, e.g. 2,3,2")->required();
  mb->callback([&] { run = [&] { return cli::cmd_mb(k, blocks); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!run) return 2;
  const cli::CommandResult result = run();
  std::cout << result.render(opts.json);
  if (!result.ok) std::cerr << "error (" << morsegrass::error_code_name(result.code) << "): " << result.diagnostics << '\n';
  return result.exit_code();
}
