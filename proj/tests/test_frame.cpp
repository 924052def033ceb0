#include <set>

#include "doctest.h"
#include "gammapath/error.hpp"
#include "gammapath/frame.hpp"
#include "gammapath/oracles.hpp"
#include "gammapath/packing.hpp"
#include "gammapath/random_instances.hpp"
#include "helpers.hpp"

using namespace gammapath;
using namespace testing_support;

namespace {

ATree whole(const LabelledGraph& g) {
  ATree t;
  for (int e = 0; e < g.num_edges(); ++e) t.edges.push_back(e);
  return t;
}

void check_disjoint_zero_paths(const LabelledGraph& g, const std::vector<PathWitness>& paths) {
  std::set<int> used;
  for (const PathWitness& w : paths) {
    CHECK(is_a_path(g, w));
    CHECK(g.group().is_zero(walk_weight(g, w.walk)));
    for (int v : w.walk.vertices) CHECK(used.insert(v).second);
  }
}

}  // namespace

TEST_CASE("tree capacity by direct search") {
  for (std::size_t order = 1; order <= 7; ++order) {
    for (std::size_t leaves = 0; leaves <= 60; ++leaves) {
      int k = 0;
      while (leaves >= (2 * static_cast<std::size_t>(k + 1) - 1) * order + 1) ++k;
      CHECK(tree_capacity(leaves, order) == k);
    }
  }
}

TEST_CASE("base case on stars") {
  const auto z2 = zmod(2);
  const auto s = make_graph(z2, Model::kDirected, 4, {1, 2, 3}, {{0, 1, c(1), 0}, {0, 2, c(1), 0}, {0, 3, c(0), 0}});
  const PathWitness w = base_zero_path(s, whole(s), 0);
  CHECK(w.walk.vertices == std::vector<int>{1, 0, 2});
  CHECK(walk_weight(s, w.walk) == c(0));

  const auto z3 = zmod(3);
  // Two adjacent centres with two leaves each; only leaves 3 and 5 agree.
  const auto t = make_graph(z3, Model::kDirected, 6, {2, 3, 4, 5},
                            {{0, 1, c(0), 0}, {0, 2, c(0), 0}, {0, 3, c(1), 0}, {1, 4, c(2), 1}, {1, 5, c(1), 1}});
  const PathWitness v = base_zero_path(t, whole(t));
  CHECK(v.walk.vertices == std::vector<int>{3, 0, 1, 5});
  CHECK(z3->is_zero(v.weight));

  // All-zero labels: any pair is zero.
  const auto zero = make_graph(z2, Model::kDirected, 4, {1, 2, 3}, {{0, 1, c(0), 0}, {0, 2, c(0), 2}, {0, 3, c(0), 3}});
  CHECK(z2->is_zero(base_zero_path(zero, whole(zero)).weight));

  // Too few leaves for Z/3.
  const auto small = make_graph(z3, Model::kDirected, 4, {1, 2, 3}, {{0, 1, c(0), 0}, {0, 2, c(1), 0}, {0, 3, c(2), 0}});
  CHECK_THROWS_AS(base_zero_path(small, whole(small)), InvalidArgument);
}

TEST_CASE("base case over S3 cancels on the left") {
  const auto s3 = std::make_shared<const Group>(symmetric_group(3));
  // Spine 0-1-2-3-4 with pendant leaves; 7 leaves >= |S3| + 1.
  std::vector<E> es{{0, 1, Elem::from_index(1), 0}, {1, 2, Elem::from_index(2), 2},
                    {2, 3, Elem::from_index(4), 2}, {3, 4, Elem::from_index(3), 3}};
  int leaf = 5;
  std::vector<VertexId> a;
  const std::vector<int> spine_slots{2, 1, 1, 1, 2};
  for (int s = 0; s < 5; ++s) {
    for (int j = 0; j < spine_slots[static_cast<std::size_t>(s)]; ++j) {
      es.push_back({s, leaf, Elem::from_index(static_cast<std::size_t>((leaf * 5) % 6)), leaf % 2 ? s : leaf});
      a.push_back(leaf++);
    }
  }
  const auto g = make_graph(s3, Model::kDirected, leaf, a, es);
  CHECK(a_tree_violation(g, whole(g)).empty());
  for (int v = 0; v < 5; ++v) {
    const PathWitness w = base_zero_path(g, whole(g), v);
    CHECK(is_a_path(g, w));
    CHECK(s3->is_zero(walk_weight(g, w.walk)));
  }
}

TEST_CASE("extract two zero paths from a seven-leaf caterpillar over Z/2") {
  const auto z2 = zmod(2);
  for (std::uint64_t i = 0; i < 30; ++i) {
    InstanceRng rng(instance_seed(41, 0, i));
    std::vector<E> es;
    for (int s = 0; s < 4; ++s) es.push_back({s, s + 1, random_element(rng, *z2), rng.coin(0.5) ? s : s + 1});
    const std::vector<int> slots{2, 1, 1, 1, 2};
    int leaf = 5;
    std::vector<VertexId> a;
    for (int s = 0; s < 5; ++s) {
      for (int j = 0; j < slots[static_cast<std::size_t>(s)]; ++j) {
        es.push_back({s, leaf, random_element(rng, *z2), rng.coin(0.5) ? s : leaf});
        a.push_back(leaf++);
      }
    }
    const auto g = make_graph(z2, Model::kDirected, leaf, a, es);
    REQUIRE(a_tree_violation(g, whole(g)).empty());
    const auto one = extract_zero_paths(g, whole(g), 1);
    REQUIRE(one.size() == 1);
    check_disjoint_zero_paths(g, one);
    const auto paths = extract_zero_paths(g, whole(g), 2);
    REQUIRE(paths.size() == 2);
    check_disjoint_zero_paths(g, paths);
    CHECK_THROWS_AS(extract_zero_paths(g, whole(g), 3), InvalidArgument);
  }
}

TEST_CASE("A-tree validation") {
  const auto z2 = zmod(2);
  // Leaf 3 is not in A.
  const auto g = make_graph(z2, Model::kDirected, 4, {1, 2}, {{0, 1, c(0)}, {0, 2, c(0)}, {0, 3, c(0)}});
  CHECK_FALSE(a_tree_violation(g, whole(g)).empty());
  const auto cyc = make_graph(z2, Model::kDirected, 3, {}, {{0, 1, c(0)}, {1, 2, c(0)}, {2, 0, c(0)}});
  CHECK_FALSE(a_tree_violation(cyc, whole(cyc)).empty());
}

TEST_CASE("frame on small graphs") {
  const Limits lim;
  const auto z3 = zmod(3);
  const auto none = make_graph(z3, Model::kDirected, 3, {0, 2}, {{0, 1, c(1)}, {1, 2, c(0)}});
  const FrameResult r = frame_pack_or_cover(none, 1, lim, FrameOptions{true});
  REQUIRE(std::holds_alternative<Cover>(r.outcome));
  CHECK(std::get<Cover>(r.outcome).vertices.empty());
  CHECK(r.empty_cover_degenerate);
  CHECK(r.forest.empty());

  const auto some = make_graph(z3, Model::kDirected, 3, {0, 2}, {{0, 1, c(1), 0}, {1, 2, c(1), 2}});
  const FrameResult s = frame_pack_or_cover(some, 1, lim, FrameOptions{true});
  REQUIRE(std::holds_alternative<Packing>(s.outcome));
  CHECK(std::get<Packing>(s.outcome).paths.size() == 1);

  CHECK_THROWS_AS(frame_pack_or_cover(make_graph(z3, Model::kUndirected, 2, {}, {}), 1, lim), InvalidArgument);
  const auto zgraph = make_graph(std::make_shared<const Group>(Group::integers()), Model::kDirected, 2, {}, {});
  CHECK_THROWS_AS(frame_pack_or_cover(zgraph, 1, lim), InvalidArgument);
  CHECK_THROWS_AS(frame_pack_or_cover(some, 0, lim), InvalidArgument);
}

TEST_CASE("frame outputs validate on random directed graphs") {
  const Limits lim;
  const std::vector<std::shared_ptr<const Group>> groups{zmod(2), zmod(3), std::make_shared<const Group>(symmetric_group(3))};
  for (std::uint64_t i = 0; i < 120; ++i) {
    InstanceRng rng(instance_seed(42, 0, i));
    const auto& group = groups[i % groups.size()];
    const auto g = random_graph(rng, group, Model::kDirected, {3, 12, 1, 12, 2, 7});
    const int k = static_cast<int>(rng.between(1, 3));
    const FrameResult r = frame_pack_or_cover(g, k, lim, FrameOptions{true});
    for (const ForestComponent& fc : r.forest) {
      CHECK(a_tree_violation(g, fc.tree).empty());
      CHECK(is_a_path(g, fc.witness));
      CHECK(group->is_zero(fc.witness.weight));
    }
    if (const auto* p = std::get_if<Packing>(&r.outcome)) {
      CHECK(p->paths.size() == static_cast<std::size_t>(k));
      check_disjoint_zero_paths(g, p->paths);
    } else {
      const auto& x = std::get<Cover>(r.outcome).vertices;
      CHECK((x.size() < r.cover_bound || (k == 1 && x.empty())));
      std::vector<char> blocked(static_cast<std::size_t>(g.num_vertices()), 0);
      for (int v : x) blocked[static_cast<std::size_t>(v)] = 1;
      for (const Walk& w : oracle::all_a_paths(g, &blocked)) CHECK_FALSE(group->is_zero(walk_weight(g, w)));
      // X is exactly the degree-1 and degree-3 vertices of the forest.
      std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
      for (const ForestComponent& fc : r.forest) {
        for (int e : fc.tree.edges) {
          ++deg[static_cast<std::size_t>(g.edge(e).u)];
          ++deg[static_cast<std::size_t>(g.edge(e).v)];
        }
      }
      std::vector<int> expect;
      for (int v = 0; v < g.num_vertices(); ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1 || deg[static_cast<std::size_t>(v)] == 3) expect.push_back(v);
      }
      CHECK(x == expect);
    }
  }
}
