#include "zonospline/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "zonospline/construction.hpp"
#include "zonospline/dot.hpp"
#include "zonospline/eval_graph.hpp"
#include "zonospline/hull.hpp"
#include "zonospline/io.hpp"
#include "zonospline/polynomial.hpp"
#include "zonospline/query.hpp"
#include "zonospline/spline.hpp"

namespace zonospline::cli {

Point parse_point(const std::string& text, int dim) {
  Point x;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) x.push_back(parse_rational(part));
  if (static_cast<int>(x.size()) != dim)
    throw std::invalid_argument("point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(dim));
  return x;
}

int cmd_build(const BuildArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ConfigDocument doc = load_config(args.config_path);
    HeightFunction h;
    if (args.height_file) {
      h = load_heights(*args.height_file);
    } else if (doc.heights) {
      h = *doc.heights;
    } else {
      std::uint64_t seed = args.seed ? *args.seed : doc.seed.value_or(0);
      h = random_generic_height(doc.config, seed);
    }
    if (h.size() != doc.config.size())
      throw DocumentError("height count does not match point count");
    if (auto bad = find_non_generic_subset(doc.config, h)) {
      std::string subset;
      for (int i : *bad) subset += (subset.empty() ? "" : ",") + std::to_string(i);
      err << "error: height function is not generic; offending (d+2)-subset: {"
          << subset << "}\n";
      return 1;
    }

    int full = doc.config.size() - doc.config.dim - 1;
    int k_max = args.max_degree < 0 ? full : args.max_degree;
    ZonotopalTiling tiling;
    if (args.mode == "brute") {
      tiling = brute_force_regular_tiling(doc.config, h);
      if (k_max < full) {
        tiling.tiles.erase(
            std::remove_if(tiling.tiles.begin(), tiling.tiles.end(),
                           [&](const Tile& t) { return t.order() > k_max; }),
            tiling.tiles.end());
        tiling.max_order = k_max;
      }
    } else if (args.mode == "incremental") {
      tiling = incremental_build(doc.config, h, k_max);
    } else {
      throw std::invalid_argument("mode must be 'incremental' or 'brute'");
    }

    save_tiling(tiling, args.out_path);
    std::map<int, int> per_order;
    for (const Tile& t : tiling.tiles) ++per_order[t.order()];
    out << "built " << tiling.tiles.size() << " tiles over "
        << doc.config.size() << " points (d=" << doc.config.dim << ")\n";
    for (const auto& [k, count] : per_order)
      out << "  order " << k << ": " << count << " tiles\n";
    out << "wrote " << args.out_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ZonotopalTiling tiling = load_tiling(args.tiling_path);
    VerifyOptions opts;
    opts.cover_samples = args.samples;
    VerifyReport report = verify_tiling(tiling, opts);
    out << report.summary();
    out << (report.pass() ? "PASS\n" : "FAIL\n");
    return report.pass() ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ZonotopalTiling tiling = load_tiling(args.tiling_path);
    if (args.degree > tiling.max_order)
      throw std::invalid_argument("tiling was not built up to this degree");
    Point x = parse_point(args.point, tiling.config.dim);

    std::vector<std::pair<std::string, double>> table;
    EvalDiagnostics diag;
    if (args.mode == "direct") {
      HullOracle oracle(tiling.config, x);
      for (const Tile* t : tiling.tiles_of_order(args.degree)) {
        if (!oracle.in_hull(t->knots())) continue;
        SplineEvalOptions opts;
        opts.diag = &diag;
        table.emplace_back(tile_label(*t),
                           eval_spline(tiling.config, t->knots(), x, opts));
      }
    } else if (args.mode == "graph") {
      EvalGraph graph = build_eval_graph(tiling, args.degree);
      std::vector<double> values = eval_graph_run(graph, tiling.config, x, &diag);
      HullOracle oracle(tiling.config, x);
      for (int id : graph.basis_nodes) {
        const auto& node = graph.nodes[static_cast<size_t>(id)];
        if (node.order() != args.degree) continue;
        if (!oracle.in_hull(node.knots())) continue;
        Tile t{node.shift, node.basis, node.swapped, node.det};
        table.emplace_back(tile_label(t), values[static_cast<size_t>(id)]);
      }
    } else {
      throw std::invalid_argument("mode must be 'direct' or 'graph'");
    }
    if (diag.non_generic_hits > 0)
      err << "warning: query point lies on a knot hypersurface; values follow "
             "the directional-limit convention\n";
    std::sort(table.begin(), table.end());
    out << std::setprecision(17);
    for (const auto& [label, value] : table)
      out << label << " " << value << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_reproduce(const ReproduceArgs& args, std::ostream& out,
                  std::ostream& err) {
  try {
    ZonotopalTiling tiling = load_tiling(args.tiling_path);
    const PointConfig& config = tiling.config;
    Polynomial poly = Polynomial::parse(args.poly, config.dim);
    if (poly.total_degree() > args.degree)
      throw std::invalid_argument("polynomial degree exceeds --degree");
    if (args.degree > tiling.max_order)
      throw std::invalid_argument("tiling was not built up to this degree");

    std::mt19937_64 rng(args.seed);
    std::uniform_int_distribution<int> dist(0, 1 << 12);
    Point lo = config.point(0), hi = lo;
    for (const Point& p : config.points)
      for (int j = 0; j < config.dim; ++j) {
        if (p[static_cast<size_t>(j)] < lo[static_cast<size_t>(j)])
          lo[static_cast<size_t>(j)] = p[static_cast<size_t>(j)];
        if (p[static_cast<size_t>(j)] > hi[static_cast<size_t>(j)])
          hi[static_cast<size_t>(j)] = p[static_cast<size_t>(j)];
      }

    double max_err = 0.0;
    int found = 0, attempts = 0;
    while (found < args.samples && attempts < args.samples * 500) {
      ++attempts;
      if (attempts == 2000 && found == 0) break;  // ch_k(A) looks empty
      Point x(static_cast<size_t>(config.dim));
      for (int j = 0; j < config.dim; ++j) {
        Rational u(dist(rng), 1 << 12);
        x[static_cast<size_t>(j)] = lo[static_cast<size_t>(j)] +
            (hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)]) * u;
      }
      if (!is_generic_point(config, x)) continue;
      if (!chk_membership(config, args.degree, x)) continue;
      ++found;
      double got = reproduce(tiling, args.degree, poly, x);
      double want = poly.eval(x);
      max_err = std::max(max_err, std::abs(got - want));
    }
    if (found == 0) {
      out << "ch_k(A) appears empty: no sample points found\n";
      return 0;
    }
    out << std::setprecision(17);
    out << "samples " << found << " max_abs_error " << max_err << "\n";
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_export_dot(const ExportDotArgs& args, std::ostream& out,
                   std::ostream& err) {
  try {
    ZonotopalTiling tiling = load_tiling(args.tiling_path);
    if (args.eval_graph) {
      EvalGraph graph = build_eval_graph(tiling, *args.eval_graph);
      out << eval_graph_to_dot(graph);
      return 0;
    }
    AdjacencyGraph graph = build_adjacency(tiling);
    std::optional<Point> at;
    if (args.orient) at = parse_point(*args.orient, tiling.config.dim);
    out << adjacency_to_dot(tiling, graph, at);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_plot(const PlotArgs& args, std::ostream& out, std::ostream& err) {
  try {
    ZonotopalTiling tiling = load_tiling(args.tiling_path);
    const PointConfig& config = tiling.config;
    if (config.dim != 1 && config.dim != 2)
      throw std::invalid_argument("plotting supports d in {1,2} only");
    if (args.degree > tiling.max_order)
      throw std::invalid_argument("tiling was not built up to this degree");

    std::vector<int> counts;
    {
      std::stringstream ss(args.grid);
      std::string part;
      while (std::getline(ss, part, ','))
        counts.push_back(std::stoi(part));
    }
    if (static_cast<int>(counts.size()) != config.dim)
      throw std::invalid_argument("grid spec needs one count per dimension");

    Point lo = config.point(0), hi = lo;
    for (const Point& p : config.points)
      for (int j = 0; j < config.dim; ++j) {
        if (p[static_cast<size_t>(j)] < lo[static_cast<size_t>(j)])
          lo[static_cast<size_t>(j)] = p[static_cast<size_t>(j)];
        if (p[static_cast<size_t>(j)] > hi[static_cast<size_t>(j)])
          hi[static_cast<size_t>(j)] = p[static_cast<size_t>(j)];
      }

    out << (config.dim == 1 ? "x0,tile,value\n" : "x0,x1,tile,value\n");
    out << std::setprecision(17);
    auto tiles = tiling.tiles_of_order(args.degree);
    std::vector<Point> grid;
    auto axis_points = [&](int j) {
      std::vector<Rational> pts;
      int c = counts[static_cast<size_t>(j)];
      for (int i = 0; i < c; ++i) {
        Rational u = c == 1 ? Rational(0) : Rational(i, c - 1);
        pts.push_back(lo[static_cast<size_t>(j)] +
                      (hi[static_cast<size_t>(j)] - lo[static_cast<size_t>(j)]) * u);
      }
      return pts;
    };
    if (config.dim == 1) {
      for (const Rational& x0 : axis_points(0)) grid.push_back({x0});
    } else {
      for (const Rational& x0 : axis_points(0))
        for (const Rational& x1 : axis_points(1)) grid.push_back({x0, x1});
    }
    for (const Point& x : grid)
      for (const Tile* t : tiles) {
        double v = eval_spline(config, t->knots(), x);
        out << to_double(x[0]);
        if (config.dim == 2) out << "," << to_double(x[1]);
        out << "," << tile_label(*t) << "," << v << "\n";
      }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace zonospline::cli
