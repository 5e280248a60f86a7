#include <iostream>

#include <CLI11.hpp>

#include "zonospline/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"simplex-spline spaces from fine zonotopal tilings"};
  app.require_subcommand(1);

  namespace cli = zonospline::cli;

  cli::BuildArgs build;
  auto* cmd_build = app.add_subcommand(
      "build", "construct a tiling and write the tiling document");
  cmd_build->add_option("config", build.config_path, "config JSON")->required();
  auto* hf = cmd_build->add_option("--height-file", build.height_file,
                                   "JSON document with a 'heights' array");
  cmd_build->add_option("--seed", build.seed, "seed for random generic heights")
      ->excludes(hf);
  cmd_build->add_option("--max-degree", build.max_degree,
                        "highest spline order to build (default: full)");
  cmd_build->add_option("--mode", build.mode, "incremental|brute")
      ->check(CLI::IsMember({"incremental", "brute"}));
  cmd_build->add_option("-o,--out", build.out_path, "output path")->required();

  cli::VerifyArgs verify;
  auto* cmd_verify =
      app.add_subcommand("verify", "run the structural verifiers");
  cmd_verify->add_option("tiling", verify.tiling_path, "tiling JSON")->required();
  cmd_verify->add_option("--samples", verify.samples, "sample count");

  cli::EvalArgs eval;
  auto* cmd_eval = app.add_subcommand(
      "eval", "values of the order-k basis splines supported on a point");
  cmd_eval->add_option("tiling", eval.tiling_path, "tiling JSON")->required();
  cmd_eval->add_option("--degree", eval.degree, "spline order k")->required();
  cmd_eval->add_option("--point", eval.point, "comma-separated coordinates")
      ->required();
  cmd_eval->add_option("--mode", eval.mode, "direct|graph")
      ->check(CLI::IsMember({"direct", "graph"}));

  cli::ReproduceArgs repro;
  auto* cmd_repro = app.add_subcommand(
      "reproduce", "max |sum - q| over sampled points of ch_k(A)");
  cmd_repro->add_option("tiling", repro.tiling_path, "tiling JSON")->required();
  cmd_repro->add_option("--degree", repro.degree, "spline order k")->required();
  cmd_repro->add_option("--poly", repro.poly, "e.g. 'x0^2 + 2*x1'")->required();
  cmd_repro->add_option("--samples", repro.samples, "sample count");
  cmd_repro->add_option("--seed", repro.seed, "sampling seed");

  cli::ExportDotArgs dot;
  auto* cmd_dot = app.add_subcommand("export-dot", "emit graphs as DOT");
  cmd_dot->add_option("tiling", dot.tiling_path, "tiling JSON")->required();
  cmd_dot->add_option("--orient", dot.orient,
                      "orient the adjacency graph by this point");
  cmd_dot->add_option("--eval-graph", dot.eval_graph,
                      "emit the evaluation graph for this order instead");

  cli::PlotArgs plot;
  auto* cmd_plot =
      app.add_subcommand("plot", "CSV of spline values on a grid (d <= 2)");
  cmd_plot->add_option("tiling", plot.tiling_path, "tiling JSON")->required();
  cmd_plot->add_option("--degree", plot.degree, "spline order k")->required();
  cmd_plot->add_option("--grid", plot.grid, "points per axis, e.g. '50' or '40,40'")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_build->parsed()) return cli::cmd_build(build, std::cout, std::cerr);
  if (cmd_verify->parsed()) return cli::cmd_verify(verify, std::cout, std::cerr);
  if (cmd_eval->parsed()) return cli::cmd_eval(eval, std::cout, std::cerr);
  if (cmd_repro->parsed()) return cli::cmd_reproduce(repro, std::cout, std::cerr);
  if (cmd_dot->parsed()) return cli::cmd_export_dot(dot, std::cout, std::cerr);
  if (cmd_plot->parsed()) return cli::cmd_plot(plot, std::cout, std::cerr);
  return 1;
}
