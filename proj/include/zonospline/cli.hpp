#ifndef ZONOSPLINE_CLI_HPP
#define ZONOSPLINE_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "zonospline/point_config.hpp"

namespace zonospline::cli {

struct BuildArgs {
  std::string config_path;
  std::optional<std::string> height_file;
  std::optional<std::uint64_t> seed;
  int max_degree = -1;  // -1: full order
  std::string mode = "incremental";
  std::string out_path;
};
int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
  std::string tiling_path;
  int samples = 100;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

struct EvalArgs {
  std::string tiling_path;
  int degree = 0;
  std::string point;  // comma-separated exact coordinates
  std::string mode = "direct";
};
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

struct ReproduceArgs {
  std::string tiling_path;
  int degree = 0;
  std::string poly;
  int samples = 100;
  std::uint64_t seed = 7;
};
int cmd_reproduce(const ReproduceArgs& args, std::ostream& out,
                  std::ostream& err);

struct ExportDotArgs {
  std::string tiling_path;
  std::optional<std::string> orient;  // query point
  std::optional<int> eval_graph;      // degree
};
int cmd_export_dot(const ExportDotArgs& args, std::ostream& out,
                   std::ostream& err);

struct PlotArgs {
  std::string tiling_path;
  int degree = 0;
  std::string grid;  // "count" or "count,count" over the bounding box
};
int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err);

Point parse_point(const std::string& text, int dim);

}  // namespace zonospline::cli

#endif
