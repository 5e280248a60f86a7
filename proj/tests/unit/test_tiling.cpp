#include <doctest.h>

#include <random>
#include <set>

#include "oracles/test_util.hpp"
#include "zonospline/construction.hpp"
#include "zonospline/tiling.hpp"

using namespace zonospline;

namespace {

// the running example: points 0, 1, 2 with the parabolic-ish lift
ZonotopalTiling example3() {
  auto config = make_config_str(1, {{"0"}, {"1"}, {"2"}});
  HeightFunction h{{Rational(0), Rational(1), Rational(4)}};
  return brute_force_regular_tiling(config, h);
}

}  // namespace

TEST_CASE("facets of a tile") {
  Tile t;
  t.shift = {};
  t.basis = {0, 1};
  auto fs = facets_of(t);
  REQUIRE(fs.size() == 4);
  std::set<Facet> set(fs.begin(), fs.end());
  CHECK(set.size() == 4);  // all distinct
  CHECK(set.count(Facet{{}, {0}}));
  CHECK(set.count(Facet{{}, {1}}));
  CHECK(set.count(Facet{{1}, {0}}));
  CHECK(set.count(Facet{{0}, {1}}));

  Tile t2;
  t2.shift = {3};
  t2.basis = {0, 1, 2};
  auto fs2 = facets_of(t2);
  CHECK(fs2.size() == 6);
  std::set<Facet> set2(fs2.begin(), fs2.end());
  CHECK(set2.count(Facet{{3}, {0, 1}}));
  CHECK(set2.count(Facet{{2, 3}, {0, 1}}));
}

TEST_CASE("shared facets follow the four-case rule") {
  Tile t01{{}, {0, 1}, false, Rational(1)};
  Tile t12{{}, {1, 2}, false, Rational(1)};
  Tile t02{{1}, {0, 2}, false, Rational(2)};

  auto f = shared_facet(t01, t12);
  REQUIRE(f);
  CHECK(*f == Facet{{}, {1}});

  auto g = shared_facet(t01, t02);
  REQUIRE(g);
  CHECK(*g == Facet{{1}, {0}});

  // disjoint bases share nothing
  Tile far{{}, {2, 3}, false, Rational(1)};
  CHECK(!shared_facet(t01, far));

  // same basis, shift sets too far apart
  Tile a{{4, 5}, {0, 1}, false, Rational(1)};
  Tile b{{6, 7}, {0, 1}, false, Rational(1)};
  CHECK(!shared_facet(a, b));
}

TEST_CASE("adjacency graph of the 3-point example") {
  auto tiling = example3();
  REQUIRE(tiling.tiles.size() == 3);
  auto graph = build_adjacency(tiling);
  // all three pairs share a facet: the order-1 tile touches both intervals
  CHECK(graph.edges.size() == 3);
  std::multiset<size_t> degrees;
  for (const auto& inc : graph.incident) degrees.insert(inc.size());
  CHECK(degrees == std::multiset<size_t>{2, 2, 2});
}

TEST_CASE("single-tile tiling has no edges") {
  auto config = make_config_str(1, {{"0"}, {"1"}});
  HeightFunction h{{Rational(1), Rational(2)}};
  auto tiling = brute_force_regular_tiling(config, h);
  REQUIRE(tiling.tiles.size() == 1);
  CHECK(build_adjacency(tiling).edges.empty());
}

TEST_CASE("four distinct 1D points: six tiles, connected graph") {
  auto config = make_config_str(1, {{"0"}, {"1"}, {"2"}, {"3"}});
  HeightFunction h{{Rational(0), Rational(1), Rational(4), Rational(9)}};
  auto tiling = brute_force_regular_tiling(config, h);
  CHECK(tiling.tiles.size() == 6);
  auto graph = build_adjacency(tiling);
  // connectivity by union-find-ish BFS
  std::vector<char> seen(tiling.tiles.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int e : graph.incident[static_cast<size_t>(t)]) {
      const auto& edge = graph.edges[static_cast<size_t>(e)];
      int v = edge.t0 == t ? edge.t1 : edge.t0;
      if (!seen[static_cast<size_t>(v)]) {
        seen[static_cast<size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), 1) ==
        static_cast<long>(tiling.tiles.size()));
}

TEST_CASE("induced tilings") {
  auto tiling = example3();
  SUBCASE("empty Q is the identity") {
    auto same = induced_tiling(tiling, {});
    CHECK(same.tiles.size() == tiling.tiles.size());
    for (size_t i = 0; i < same.tiles.size(); ++i)
      CHECK(same.tiles[i] == tiling.tiles[i]);
  }
  SUBCASE("dropping the middle point leaves one interval") {
    auto reduced = induced_tiling(tiling, {1});
    REQUIRE(reduced.tiles.size() == 1);
    CHECK(reduced.tiles[0].shift.empty());
    CHECK(reduced.tiles[0].basis == std::vector<int>{0, 2});
    CHECK(verify_tiling(reduced).pass());
  }
  SUBCASE("reducing to a single basis") {
    auto reduced = induced_tiling(tiling, {1});  // [n] minus basis {0,2}
    CHECK(reduced.tiles.size() == 1);
  }
  SUBCASE("composition equals the union") {
    std::mt19937_64 rng(8);
    auto config = oracles::random_config(rng, 2, 7);
    auto h = random_generic_height(config, 11);
    auto full = brute_force_regular_tiling(config, h);
    auto ab = induced_tiling(induced_tiling(full, {2}), {5});
    auto both = induced_tiling(full, {2, 5});
    REQUIRE(ab.tiles.size() == both.tiles.size());
    for (size_t i = 0; i < ab.tiles.size(); ++i)
      CHECK(ab.tiles[i] == both.tiles[i]);
    CHECK(verify_tiling(both).pass());
  }
}

TEST_CASE("facet classification") {
  auto tiling = example3();
  auto graph = build_adjacency(tiling);
  // canonical order: (emptyset,{0,1}), (emptyset,{1,2}), ({1},{0,2})
  REQUIRE(tiling.tiles[0].basis == std::vector<int>{0, 1});
  REQUIRE(tiling.tiles[1].basis == std::vector<int>{1, 2});
  REQUIRE(tiling.tiles[2].basis == std::vector<int>{0, 2});

  SUBCASE("interior facet between the order-0 intervals: separated") {
    auto cls = classify_facet(tiling, graph, 0, Facet{{}, {1}});
    auto* shared = std::get_if<FacetShared>(&cls);
    REQUIRE(shared);
    CHECK(shared->other == 1);
    CHECK(shared->separated);  // same order on both sides
  }
  SUBCASE("facet shared across orders: not separated") {
    auto cls = classify_facet(tiling, graph, 0, Facet{{1}, {0}});
    auto* shared = std::get_if<FacetShared>(&cls);
    REQUIRE(shared);
    CHECK(shared->other == 2);
    CHECK(!shared->separated);
  }
  SUBCASE("facet between the order-1 tile and the right interval") {
    auto cls = classify_facet(tiling, graph, 2, Facet{{1}, {2}});
    auto* shared = std::get_if<FacetShared>(&cls);
    REQUIRE(shared);
    CHECK(shared->other == 1);
    CHECK(!shared->separated);
  }
  SUBCASE("top facets of the order-1 tile are boundary") {
    for (auto facet : {Facet{{0, 1}, {2}}, Facet{{1, 2}, {0}}}) {
      auto cls = classify_facet(tiling, graph, 2, facet);
      CHECK(std::get_if<FacetBoundary>(&cls));
    }
  }
  SUBCASE("facet of a different tile throws") {
    CHECK_THROWS_AS(classify_facet(tiling, graph, 0, Facet{{}, {2}}),
                    std::invalid_argument);
  }
}

TEST_CASE("verifier accepts fresh tilings and rejects corruption") {
  auto config = make_config_str(1, {{"0"}, {"1"}, {"2"}, {"3"}});
  HeightFunction h = random_generic_height(config, 5);
  auto tiling = brute_force_regular_tiling(config, h);
  VerifyOptions opts;
  opts.cover_samples = 40;

  auto report = verify_tiling(tiling, opts);
  CHECK(report.pass());
  CHECK(report.expected_tiles == 6);

  SUBCASE("deleting a tile breaks the count") {
    auto broken = tiling;
    broken.tiles.pop_back();
    auto r = verify_tiling(broken, opts);
    CHECK(!r.pass());
    CHECK(!r.count_ok);
  }
  SUBCASE("forging a shift set trips the lifted-sign audit") {
    auto broken = tiling;
    for (Tile& t : broken.tiles)
      if (t.order() == 1) {
        t.shift[0] = t.shift[0] == 0 ? 3 : 0;
        break;
      }
    auto r = verify_tiling(broken, opts);
    CHECK(!r.shifts_ok);
  }
  SUBCASE("volumes: two unit intervals on the 3-point example") {
    auto small = example3();
    auto r = verify_tiling(small, opts);
    CHECK(r.volume_tiles == Rational(2));
    CHECK(r.volume_oracle == Rational(2));
  }
}

TEST_CASE("induced tilings require a complete input") {
  auto config = make_config_str(1, {{"0"}, {"1"}, {"2"}});
  HeightFunction h{{Rational(0), Rational(1), Rational(4)}};
  auto partial = incremental_build(config, h, 0);
  CHECK_THROWS_AS(induced_tiling(partial, {1}), std::invalid_argument);
}

TEST_CASE("partial builds verify, including truncation facets") {
  auto config = make_config_str(1, {{"0"}, {"0"}, {"1"}, {"2"}, {"3"}, {"3"}});
  auto h = random_generic_height(config, 21);
  for (int k_max = 0; k_max <= 2; ++k_max) {
    auto partial = incremental_build(config, h, k_max);
    CAPTURE(k_max);
    auto report = verify_tiling(partial, {30, 4, true});
    CHECK(report.pass());
  }
  // genuine corruption in a partial build is still caught
  auto partial = incremental_build(config, h, 1);
  partial.tiles.pop_back();
  CHECK(!verify_tiling(partial, {30, 4, true}).pass());
}
