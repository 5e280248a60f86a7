#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles/bspline1d.hpp"
#include "oracles/test_util.hpp"
#include "zonospline/construction.hpp"
#include "zonospline/detail/subsets.hpp"
#include "zonospline/eval_graph.hpp"
#include "zonospline/query.hpp"
#include "zonospline/spline.hpp"

using namespace zonospline;

namespace {

ZonotopalTiling example3() {
  auto config = make_config_str(1, {{"0"}, {"1"}, {"2"}});
  HeightFunction h{{Rational(0), Rational(1), Rational(4)}};
  return brute_force_regular_tiling(config, h);
}

void check_against_direct(const ZonotopalTiling& tiling, const EvalGraph& graph,
                          const Point& x) {
  auto values = eval_graph_run(graph, tiling.config, x);
  for (int id : graph.basis_nodes) {
    const auto& node = graph.nodes[static_cast<size_t>(id)];
    double direct = eval_spline(tiling.config, node.knots(), x);
    CAPTURE(id);
    CHECK(oracles::rel_close(values[static_cast<size_t>(id)], direct, 1e-9));
  }
}

}  // namespace

TEST_CASE("evaluation graph of the running example") {
  auto tiling = example3();
  auto graph = build_eval_graph(tiling, 1);

  // nodes: the order-1 root plus both order-0 intervals (also basis tiles)
  REQUIRE(graph.nodes.size() == 3);
  int root = graph.find({1}, {0, 2});
  REQUIRE(root >= 0);
  const auto& node = graph.nodes[static_cast<size_t>(root)];
  REQUIRE(node.res.size() == 2);
  // both sub-splines come from the order-0 tiles as direct copies
  std::set<std::pair<std::vector<int>, std::vector<int>>> targets;
  for (const auto& r : node.res) {
    CHECK(r.rule == EvalGraph::Rule::Copy);
    const auto& t = graph.nodes[static_cast<size_t>(r.target)];
    targets.insert({t.shift, t.basis});
  }
  CHECK(targets.count({{}, {0, 1}}));
  CHECK(targets.count({{}, {1, 2}}));

  SUBCASE("worked values at x = 1/2") {
    auto values = eval_graph_run(graph, tiling.config, oracles::to_point({"1/2"}));
    CHECK(values[static_cast<size_t>(root)] ==
          doctest::Approx(0.5).epsilon(1e-12));
    int left = graph.find({}, {0, 1});
    REQUIRE(left >= 0);
    CHECK(values[static_cast<size_t>(left)] == 1.0);
  }
  SUBCASE("outside the hull everything vanishes") {
    auto values = eval_graph_run(graph, tiling.config, oracles::to_point({"4"}));
    for (double v : values) CHECK(v == 0.0);
  }
  SUBCASE("agreement sweep") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i)
      check_against_direct(tiling, graph,
                           oracles::random_generic_box_point(rng, tiling.config, 0.2));
  }
}

TEST_CASE("order-0 graphs carry no auxiliaries") {
  auto tiling = example3();
  auto graph = build_eval_graph(tiling, 0);
  CHECK(graph.nodes.size() == 2);
  for (const auto& n : graph.nodes) {
    CHECK(n.is_basis);
    CHECK(n.order() == 0);
  }
}

TEST_CASE("mutual insertion pair on a repeated-knot line") {
  // points 0,1,1,2: the two maximal tiles are top-facet neighbours and
  // resolve each other's missing sub-spline through knot insertion
  auto config = make_config_str(1, {{"0"}, {"1"}, {"1"}, {"2"}});
  HeightFunction h{{Rational(0), Rational(2), Rational(0), Rational(1)}};
  REQUIRE(validate_generic_height(config, h));
  auto tiling = brute_force_regular_tiling(config, h);

  REQUIRE(tiling.find_tile({2, 3}, {0, 1}) >= 0);
  REQUIRE(tiling.find_tile({0, 2}, {1, 3}) >= 0);

  auto graph = build_eval_graph(tiling, 2);
  int t = graph.find({2, 3}, {0, 1});
  int u = graph.find({0, 2}, {1, 3});
  REQUIRE(t >= 0);
  REQUIRE(u >= 0);
  // direction 0 of T (drop knot 0) resolves through U and vice versa
  bool t_inserts_u = false, u_inserts_t = false;
  for (const auto& r : graph.nodes[static_cast<size_t>(t)].res)
    if (r.rule == EvalGraph::Rule::Insert && r.target == u) t_inserts_u = true;
  for (const auto& r : graph.nodes[static_cast<size_t>(u)].res)
    if (r.rule == EvalGraph::Rule::Insert && r.target == t) u_inserts_t = true;
  CHECK(t_inserts_u);
  CHECK(u_inserts_t);

  // values still come out right on both sides of the shared hyperplane
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i)
    check_against_direct(tiling, graph,
                         oracles::random_generic_box_point(rng, config, 0.1));
}

TEST_CASE("agreement sweeps over random regular tilings") {
  std::mt19937_64 rng(1234);
  for (int d = 1; d <= 2; ++d)
    for (int rep = 0; rep < 3; ++rep) {
      auto config = oracles::random_config(rng, d, d + 4);
      auto h = random_generic_height(config, rng());
      auto tiling = brute_force_regular_tiling(config, h);
      for (int k = 0; k <= tiling.max_order; ++k) {
        auto graph = build_eval_graph(tiling, k);
        // every basis spline of order <= k is a node
        size_t expected = 0;
        for (const Tile& t : tiling.tiles)
          if (t.order() <= k) ++expected;
        CHECK(graph.basis_nodes.size() == expected);
        for (int id : graph.basis_nodes)
          CHECK(graph.nodes[static_cast<size_t>(id)].is_basis);
        for (int i = 0; i < 10; ++i)
          check_against_direct(
              tiling, graph, oracles::random_generic_box_point(rng, config, 0.1));
      }
    }
}

TEST_CASE("repeated two-site configuration reduces to de Casteljau") {
  const int k = 3;
  std::vector<std::vector<std::string>> pts;
  for (int i = 0; i <= k; ++i) pts.push_back({"0"});
  for (int i = 0; i <= k; ++i) pts.push_back({"1"});
  auto config = make_config_str(1, pts);
  // parabolic heights with an index tie-break
  HeightFunction h;
  for (int i = 0; i < config.size(); ++i) {
    Rational t = config.point(i)[0];
    h.values.push_back(t * t + Rational(i + 1, 1 << 12));
  }
  REQUIRE(validate_generic_height(config, h));
  auto tiling = brute_force_regular_tiling(config, h);
  auto graph = build_eval_graph(tiling, k);

  // the dependency structure collapses to the de Casteljau triangle on the
  // two knot values: one distinct function per (level, ones-count)
  std::map<int, std::set<std::pair<int, int>>> level_functions;
  for (const auto& n : graph.nodes) {
    int zeros = 0, ones = 0;
    for (int i : n.knots())
      (config.point(i)[0] == 0 ? zeros : ones) += 1;
    level_functions[n.order()].insert({zeros, ones});
  }
  for (int r = 0; r <= k; ++r) {
    CAPTURE(r);
    CHECK(static_cast<int>(level_functions[r].size()) == r + 1);
  }

  // and the top level carries the scaled Bernstein basis
  std::mt19937_64 rng(7);
  auto values_at = [&](const Point& x) {
    return eval_graph_run(graph, config, x);
  };
  for (int i = 0; i < 40; ++i) {
    Point x = oracles::random_generic_box_point(rng, config, 0.0);
    auto values = values_at(x);
    double xd = to_double(x[0]);
    for (int id : graph.basis_nodes) {
      const auto& n = graph.nodes[static_cast<size_t>(id)];
      if (n.order() != k) continue;
      int ones = 0;
      for (int idx : n.knots())
        if (config.point(idx)[0] == 1) ++ones;
      double want = (k + 1) * oracles::bernstein(k, ones - 1, xd);
      CHECK(oracles::rel_close(values[static_cast<size_t>(id)], want, 1e-9));
    }
  }
}

TEST_CASE("sign-built reduced tilings equal the induced tilings") {
  // the evaluation graph derives each node's neighbourhood from lifted signs
  // over the reduced knot set; that must coincide with restricting the
  // global tiling
  std::mt19937_64 rng(271);
  for (int rep = 0; rep < 6; ++rep) {
    int d = 1 + static_cast<int>(rng() % 2);
    auto config = oracles::random_config(rng, d, d + 4);
    auto h = random_generic_height(config, rng());
    auto full = brute_force_regular_tiling(config, h);
    for (const Tile& t : full.tiles) {
      std::vector<int> X = t.knots();
      std::vector<int> Q;
      for (int i = 0; i < config.size(); ++i)
        if (!std::binary_search(X.begin(), X.end(), i)) Q.push_back(i);
      auto induced = induced_tiling(full, Q);

      // reduced tiling rebuilt from scratch by sign tests over X
      PredicateCache cache(config, h);
      std::set<std::pair<std::vector<int>, std::vector<int>>> by_signs;
      detail::for_each_subset_of(X, d + 1, [&](const std::vector<int>& B) {
        if (!cache.basis(B)) return;
        std::vector<int> shift;
        for (int i : X) {
          if (std::binary_search(B.begin(), B.end(), i)) continue;
          if (cache.lifted_sign(B, i) > 0) shift.push_back(i);
        }
        by_signs.insert({shift, B});
      });
      std::set<std::pair<std::vector<int>, std::vector<int>>> by_restriction;
      for (const Tile& r : induced.tiles) by_restriction.insert({r.shift, r.basis});
      CHECK(by_signs == by_restriction);
    }
  }
}

TEST_CASE("graph evaluation on a deliberately degenerate plane config") {
  // repeated interior point plus collinear boundary points
  auto config = make_config_str(2, {{"0", "0"},
                                    {"2", "0"},
                                    {"1", "0"},
                                    {"0", "2"},
                                    {"1", "1"},
                                    {"1", "1"},
                                    {"2", "2"}});
  auto h = random_generic_height(config, 77);
  auto tiling = brute_force_regular_tiling(config, h);
  REQUIRE(verify_tiling(tiling, {30, 5, true}).pass());
  std::mt19937_64 rng(9);
  for (int k = 0; k <= tiling.max_order; ++k) {
    auto graph = build_eval_graph(tiling, k);
    for (int i = 0; i < 8; ++i)
      check_against_direct(tiling, graph,
                           oracles::random_generic_box_point(rng, config, 0.1));
  }
}

TEST_CASE("three-dimensional evaluation graphs agree with direct evaluation") {
  // d >= 3 is where plain adjacency-graph recurrences break down and the
  // induced-tiling auxiliaries become necessary
  std::mt19937_64 rng(4242);
  for (int rep = 0; rep < 3; ++rep) {
    auto config = oracles::random_config(rng, 3, 7);
    auto h = random_generic_height(config, rng());
    auto tiling = brute_force_regular_tiling(config, h);
    for (int k = 0; k <= tiling.max_order; ++k) {
      auto graph = build_eval_graph(tiling, k);
      for (int i = 0; i < 8; ++i)
        check_against_direct(tiling, graph,
                             oracles::random_generic_box_point(rng, config, 0.1));
    }
  }
}
