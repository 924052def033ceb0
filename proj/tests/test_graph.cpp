#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "gammapath/blocks.hpp"
#include "gammapath/error.hpp"
#include "gammapath/fans.hpp"
#include "gammapath/oracles.hpp"
#include "gammapath/paths.hpp"
#include "gammapath/random_instances.hpp"
#include "gammapath/shifting.hpp"
#include "helpers.hpp"

using namespace gammapath;
using namespace testing_support;

TEST_CASE("construction rejects loops, unknown terminals and missing orientations") {
  const auto z2 = zmod(2);
  CHECK_THROWS_AS(make_graph(z2, Model::kUndirected, 2, {}, {{0, 0, c(1)}}), InvalidArgument);
  CHECK_THROWS_AS(make_graph(z2, Model::kUndirected, 2, {5}, {{0, 1, c(1)}}), InvalidArgument);
  CHECK_THROWS_AS(make_graph(std::make_shared<const Group>(symmetric_group(3)), Model::kUndirected, 2, {}, {}),
                  InvalidArgument);
  // Parallel edges are kept.
  const auto g = make_graph(z2, Model::kUndirected, 2, {0, 1}, {{0, 1, c(1)}, {0, 1, c(0)}});
  CHECK(g.num_edges() == 2);
}

TEST_CASE("walk weights in both models") {
  const auto z5 = zmod(5);
  const auto d = make_graph(z5, Model::kDirected, 2, {}, {{0, 1, c(2), 0}});
  CHECK(walk_weight(d, Walk{{0, 1}, {0}}) == c(2));
  CHECK(walk_weight(d, Walk{{1, 0}, {0}}) == c(3));
  CHECK(walk_weight(d, Walk{{1}, {}}) == c(0));
  CHECK_THROWS_AS(walk_weight(d, Walk{{0, 0}, {0}}), InvalidArgument);

  const auto z2 = zmod(2);
  const auto tri = make_graph(z2, Model::kUndirected, 3, {}, {{0, 1, c(1)}, {1, 2, c(1)}, {2, 0, c(0)}});
  CHECK(walk_weight(tri, Walk{{0, 1, 2, 0}, {0, 1, 2}}) == c(0));

  // Nonabelian accumulation is left to right.
  const auto s3 = std::make_shared<const Group>(symmetric_group(3));
  const Elem a = Elem::from_index(1);
  const Elem b = Elem::from_index(3);
  REQUIRE(s3->add(a, b) != s3->add(b, a));
  const auto p = make_graph(s3, Model::kDirected, 3, {}, {{0, 1, a, 0}, {1, 2, b, 1}});
  CHECK(walk_weight(p, Walk{{0, 1, 2}, {0, 1}}) == s3->add(a, b));
  CHECK(walk_weight(p, Walk{{2, 1, 0}, {1, 0}}) == s3->add(s3->neg(b), s3->neg(a)));
}

TEST_CASE("enumerate_a_paths examples") {
  const auto z2 = zmod(2);
  const Limits lim;
  const auto path = make_graph(z2, Model::kUndirected, 3, {0, 2}, {{0, 1, c(1)}, {1, 2, c(1)}});
  const auto zero = enumerate_a_paths(path, PathFilter::with_weight(c(0)), lim);
  REQUIRE(zero.paths.size() == 1);
  CHECK(zero.paths[0].weight == c(0));
  CHECK(enumerate_a_paths(path, PathFilter::nonzero(), lim).paths.empty());

  // K4 on a=0, b=1, x=2, y=3 with A = {a, b}.
  std::vector<E> k4;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, c(0)});
  }
  const auto g = make_graph(z2, Model::kUndirected, 4, {0, 1}, k4);
  const auto all = enumerate_a_paths(g, PathFilter::all(), lim);
  CHECK(all.paths.size() == 5);
  for (const auto& w : all.paths) CHECK(is_a_path(g, w));
  // Lexicographic order by vertex sequence.
  for (std::size_t i = 1; i < all.paths.size(); ++i) CHECK(all.paths[i - 1].walk.vertices < all.paths[i].walk.vertices);
}

TEST_CASE("enumeration reports truncation") {
  const auto z2 = zmod(2);
  const auto path = make_graph(z2, Model::kUndirected, 4, {0, 3}, {{0, 1, c(1)}, {1, 2, c(1)}, {2, 3, c(1)}});
  Limits lim;
  lim.max_path_length = 2;
  CHECK_THROWS_AS(enumerate_a_paths(path, PathFilter::all(), lim), LimitExceeded);
  CHECK_FALSE(enumerate_a_paths(path, PathFilter::all(), lim, false).exhaustive);
}

TEST_CASE("enumeration matches the plain recursive oracle on random graphs") {
  const Limits lim;
  for (std::uint64_t i = 0; i < 60; ++i) {
    InstanceRng rng(instance_seed(11, 0, i));
    const auto group = zmod(i % 2 ? 3 : 4);
    const auto g = random_graph(rng, group, i % 3 ? Model::kUndirected : Model::kDirected, {3, 9, 0, 6, 2, 4});
    std::set<std::vector<int>> lib;
    for (const auto& w : enumerate_a_paths(g, PathFilter::all(), lim).paths) {
      auto v = w.walk.vertices;
      if (v.front() > v.back()) std::reverse(v.begin(), v.end());
      lib.insert(v);
    }
    std::set<std::vector<int>> naive;
    for (const Walk& w : oracle::all_a_paths(g)) naive.insert(w.vertices);
    CHECK(lib == naive);
  }
}

TEST_CASE("shift examples and invariants") {
  const auto z2 = zmod(2);
  const auto tri = make_graph(z2, Model::kUndirected, 3, {}, {{0, 1, c(1)}, {1, 2, c(0)}, {2, 0, c(0)}});
  const Walk cycle{{0, 1, 2, 0}, {0, 1, 2}};
  CHECK(shift(tri, 0, c(0)).edges()[0].label == c(1));
  const auto shifted = shift(tri, 2, c(1));
  for (const Edge& e : shifted.edges()) CHECK(e.label == c(1));
  CHECK(walk_weight(shifted, cycle) == walk_weight(tri, cycle));

  const auto z4 = zmod(4);
  const auto p = make_graph(z4, Model::kUndirected, 3, {}, {{0, 1, c(1)}, {1, 2, c(3)}});
  const auto twice = shift(shift(p, 1, c(2)), 1, c(2));
  for (int e = 0; e < 2; ++e) CHECK(twice.edge(e).label == p.edge(e).label);
  CHECK_THROWS_AS(shift(p, 1, c(1)), InvalidArgument);
}

TEST_CASE("shifting preserves cycles and paths away from the shifted vertex") {
  const Limits lim;
  for (std::uint64_t i = 0; i < 40; ++i) {
    InstanceRng rng(instance_seed(12, 0, i));
    const auto group = i % 2 ? zmod(4) : std::make_shared<const Group>(Group::cyclic_product({2, 2}));
    const auto g = random_graph(rng, group, Model::kUndirected, {3, 9, 0, 6, 2, 4});
    const int v = static_cast<int>(rng.between(0, g.num_vertices() - 1));
    const auto halves = group->elements_of_order_at_most_2();
    const Elem s = halves[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(halves.size()) - 1))];
    const auto h = shift(g, v, s);
    for (const Walk& cyc : enumerate_simple_cycles(g, lim.cycle_cap)) CHECK(walk_weight(g, cyc) == walk_weight(h, cyc));
    for (const Walk& w : oracle::all_a_paths(g)) {
      if (w.front() == v || w.back() == v) continue;
      CHECK(walk_weight(g, w) == walk_weight(h, w));
    }
    CHECK(is_gamma_bipartite(g, lim.cycle_cap) == is_gamma_bipartite(h, lim.cycle_cap));
  }
}

TEST_CASE("gamma-bipartite examples") {
  const auto z2 = zmod(2);
  CHECK(is_gamma_bipartite(make_graph(z2, Model::kUndirected, 3, {}, {{0, 1, c(1)}, {1, 2, c(1)}, {2, 0, c(0)}}), 100));
  CHECK_FALSE(is_gamma_bipartite(make_graph(z2, Model::kUndirected, 3, {}, {{0, 1, c(1)}, {1, 2, c(0)}, {2, 0, c(0)}}), 100));
  CHECK(is_gamma_bipartite(make_graph(z2, Model::kUndirected, 4, {}, {{0, 1, c(1)}, {1, 2, c(1)}, {1, 3, c(0)}}), 100));
  // Z/4 label 1 on a 4-cycle sums to 0 though no order-2 potential exists.
  const auto z4 = zmod(4);
  const auto sq = make_graph(z4, Model::kUndirected, 4, {}, {{0, 1, c(1)}, {1, 2, c(1)}, {2, 3, c(1)}, {3, 0, c(1)}});
  CHECK_FALSE(order_two_potential(sq).has_value());
  CHECK(is_gamma_bipartite(sq, 100));
}

TEST_CASE("simple cycle count of K5") {
  std::vector<E> k5;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) k5.push_back({u, v, c(0)});
  }
  const auto g = make_graph(zmod(2), Model::kUndirected, 5, {}, k5);
  // 10 triangles + 15 four-cycles + 12 five-cycles.
  CHECK(enumerate_simple_cycles(g, 1000).size() == 37);
  CHECK_THROWS_AS(enumerate_simple_cycles(g, 20), LimitExceeded);
}

TEST_CASE("normalization examples") {
  const auto z2 = zmod(2);
  const Limits lim;
  auto k4 = [&](std::vector<int> phi) {
    std::vector<E> es;
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) es.push_back({u, v, c((phi[u] + phi[v]) % 2)});
    }
    return make_graph(z2, Model::kUndirected, 4, {}, es);
  };
  CHECK(normalize_to_zero(k4({0, 0, 0, 0}), lim).shifts.empty());
  const auto n = normalize_to_zero(k4({1, 0, 0, 0}), lim);
  REQUIRE(n.shifts.size() == 1);
  CHECK(n.shifts[0].vertex == 0);
  for (const Edge& e : n.graph.edges()) CHECK(e.label == c(0));

  std::vector<E> ones;
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) ones.push_back({u, v, c(1)});
  }
  CHECK_THROWS_AS(normalize_to_zero(make_graph(z2, Model::kUndirected, 4, {}, ones), lim), PreconditionFailed);
  const auto cycle = make_graph(z2, Model::kUndirected, 4, {}, {{0, 1, c(0)}, {1, 2, c(0)}, {2, 3, c(0)}, {3, 0, c(0)}});
  CHECK_THROWS_AS(normalize_to_zero(cycle, lim), PreconditionFailed);
}

TEST_CASE("three fans to a nonzero cycle") {
  // Triangle 3-4-5 of weight 1 over Z/3, fans 0-3, 1-4, 2-5 of weight 0.
  const auto z3 = zmod(3);
  const auto g = make_graph(z3, Model::kUndirected, 6, {0, 1, 2},
                            {{3, 4, c(1)}, {4, 5, c(0)}, {5, 3, c(0)}, {0, 3, c(0)}, {1, 4, c(0)}, {2, 5, c(0)}});
  const Walk cyc{{3, 4, 5, 3}, {0, 1, 2}};
  const std::array<Walk, 3> fans{Walk{{0, 3}, {3}}, Walk{{1, 4}, {4}}, Walk{{2, 5}, {5}}};
  const PathWitness w = nonzero_a_path_from_fans(g, cyc, fans);
  CHECK(is_a_path(g, w));
  CHECK_FALSE(z3->is_zero(walk_weight(g, w.walk)));

  // Over Z/2 with every cycle arc labelled 1.
  const auto z2 = zmod(2);
  const auto h = make_graph(z2, Model::kUndirected, 6, {0, 1, 2},
                            {{3, 4, c(1)}, {4, 5, c(1)}, {5, 3, c(1)}, {0, 3, c(0)}, {1, 4, c(0)}, {2, 5, c(0)}});
  const PathWitness v = nonzero_a_path_from_fans(h, cyc, fans);
  CHECK(is_a_path(h, v));
  CHECK(walk_weight(h, v.walk) == c(1));

  // Precondition: fans must be disjoint.
  const std::array<Walk, 3> bad{Walk{{0, 3}, {3}}, Walk{{0, 3}, {3}}, Walk{{2, 5}, {5}}};
  CHECK_THROWS_AS(nonzero_a_path_from_fans(g, cyc, bad), InvalidArgument);
}

TEST_CASE("three fans on random instances") {
  // A random nonzero cycle with three pendant fans.
  for (std::uint64_t i = 0; i < 50; ++i) {
    InstanceRng rng(instance_seed(13, 0, i));
    const auto group = zmod(rng.between(2, 7));
    const int m = static_cast<int>(rng.between(3, 7));
    std::vector<E> es;
    for (int j = 0; j < m; ++j) es.push_back({3 + j, 3 + (j + 1) % m, random_element(rng, *group)});
    Walk cyc;
    for (int j = 0; j <= m; ++j) cyc.vertices.push_back(3 + j % m);
    for (int j = 0; j < m; ++j) cyc.edges.push_back(j);
    std::vector<int> spots(static_cast<std::size_t>(m));
    std::iota(spots.begin(), spots.end(), 0);
    std::shuffle(spots.begin(), spots.end(), rng.engine());
    std::array<Walk, 3> fans;
    for (int f = 0; f < 3; ++f) {
      es.push_back({f, 3 + spots[f], random_element(rng, *group)});
      fans[f] = Walk{{f, 3 + spots[f]}, {m + f}};
    }
    const auto g = make_graph(group, Model::kUndirected, m + 3, {0, 1, 2}, es);
    if (group->is_zero(walk_weight(g, cyc))) continue;
    const PathWitness w = nonzero_a_path_from_fans(g, cyc, fans);
    CHECK(is_a_path(g, w));
    CHECK_FALSE(group->is_zero(w.weight));
  }
}
