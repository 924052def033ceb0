#include "doctest.h"
#include "gammapath/cycle_chain.hpp"
#include "gammapath/error.hpp"
#include "helpers.hpp"

using namespace gammapath;
using namespace testing_support;

namespace {

// Core a=0 .. b=2l+1 along x_1..x_2l, detour i via y_i = 2l+2+i spanning
// x_{2i+1}..x_{2i+2}. Core labels and detour labels are given.
struct Ladder {
  LabelledGraph graph;
  CycleChain chain;
};

Ladder ladder(std::shared_ptr<const Group> group, const std::vector<Elem>& core_labels,
              const std::vector<std::pair<Elem, Elem>>& detour_labels) {
  const int l = static_cast<int>(detour_labels.size());
  const int b = 2 * l + 1;
  REQUIRE(core_labels.size() == static_cast<std::size_t>(b));
  std::vector<E> es;
  for (int v = 0; v < b; ++v) es.push_back({v, v + 1, core_labels[static_cast<std::size_t>(v)]});
  for (int i = 0; i < l; ++i) {
    es.push_back({1 + 2 * i, b + 1 + i, detour_labels[static_cast<std::size_t>(i)].first});
    es.push_back({b + 1 + i, 2 + 2 * i, detour_labels[static_cast<std::size_t>(i)].second});
  }
  auto g = make_graph(group, Model::kUndirected, b + 1 + l, {0, b}, es);
  Walk core;
  for (int v = 0; v <= b; ++v) core.vertices.push_back(v);
  for (int e = 0; e < b; ++e) core.edges.push_back(e);
  std::vector<Walk> detours;
  for (int i = 0; i < l; ++i) detours.push_back(Walk{{1 + 2 * i, b + 1 + i, 2 + 2 * i}, {b + 2 * i, b + 2 * i + 1}});
  CycleChain chain = make_cycle_chain(g, core, detours);
  return {std::move(g), std::move(chain)};
}

AbstractChain abstract(const Group& g, std::int64_t core, const std::vector<std::int64_t>& deltas) {
  AbstractChain ch{g.element_at(static_cast<std::size_t>(core)), {}};
  for (auto d : deltas) ch.deltas.push_back(g.element_at(static_cast<std::size_t>(d)));
  return ch;
}

}  // namespace

TEST_CASE("chain construction and deltas") {
  const auto z5 = zmod(5);
  const Ladder l = ladder(z5, {c(1), c(0), c(2), c(0), c(0)}, {{c(3), c(1)}, {c(0), c(4)}});
  CHECK(l.chain.length() == 2);
  CHECK(l.chain.core.weight == c(3));
  // alpha_i = gamma(Q_i) - gamma(P_i): detour 0 spans core edge 1 (label 0), detour 1 spans core edge 3 (label 0).
  CHECK(l.chain.deltas == std::vector<Elem>{c(4), c(4)});
  CHECK(l.chain.is_nonzero(*z5));
  CHECK(l.chain.intervals == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {3, 4}});
}

TEST_CASE("chain validation") {
  const auto z3 = zmod(3);
  const Ladder l = ladder(z3, {c(0), c(0), c(0)}, {{c(1), c(0)}});
  // A detour touching A is rejected.
  const auto g = make_graph(z3, Model::kUndirected, 5, {0, 3},
                            {{0, 1, c(0)}, {1, 2, c(0)}, {2, 3, c(0)}, {0, 4, c(0)}, {4, 2, c(0)}});
  Walk core{{0, 1, 2, 3}, {0, 1, 2}};
  CHECK_THROWS_AS(make_cycle_chain(g, core, {Walk{{0, 4, 2}, {3, 4}}}), InvalidArgument);
  // Overlapping intervals are rejected.
  const auto h = make_graph(z3, Model::kUndirected, 6, {0, 3},
                            {{0, 1, c(0)}, {1, 2, c(0)}, {2, 3, c(0)}, {1, 4, c(0)}, {4, 2, c(0)}, {2, 5, c(0)}, {5, 1, c(0)}});
  CHECK_THROWS_AS(make_cycle_chain(h, core, {Walk{{1, 4, 2}, {3, 4}}, Walk{{2, 5, 1}, {5, 6}}}), InvalidArgument);
  // A non-A-path core is rejected.
  CHECK_THROWS_AS(make_cycle_chain(h, Walk{{1, 2}, {1}}, {}), InvalidArgument);
  CHECK(l.chain.length() == 1);
}

TEST_CASE("reroute examples") {
  const Group z3 = Group::cyclic(3);
  const auto ch = abstract(z3, 1, {1, 1});
  CHECK(reroute_subset(z3, ch, c(1)) == std::vector<std::size_t>{});
  CHECK(reroute_subset(z3, ch, c(0)) == std::vector<std::size_t>{0, 1});
  CHECK(reroute_subset(z3, ch, c(2)) == std::vector<std::size_t>{0});

  const Group z5 = Group::cyclic(5);
  const auto five = abstract(z5, 1, {1, 1, 1, 1});
  CHECK(zero_subset_from_chain(z5, five).size() == 4);
  for (std::int64_t core = 0; core < 3; ++core) {
    for (std::int64_t a1 = 1; a1 < 3; ++a1) {
      for (std::int64_t a2 = 1; a2 < 3; ++a2) {
        const auto s = zero_subset_from_chain(z3, abstract(z3, core, {a1, a2}));
        std::int64_t sum = core;
        for (std::size_t i : s) sum += i == 0 ? a1 : a2;
        CHECK(sum % 3 == 0);
        if (core == 0) CHECK(s.empty());
      }
    }
  }
  CHECK_THROWS(zero_subset_from_chain(z5, abstract(z5, 1, {1, 1, 1})));
}

TEST_CASE("a coset traps every reroute") {
  const Group z4 = Group::cyclic(4);
  for (std::size_t len = 0; len <= 6; ++len) {
    const auto ch = abstract(z4, 1, std::vector<std::int64_t>(len, 2));
    for (const Elem& e : reachable_weights(z4, ch)) CHECK((e == c(1) || e == c(3)));
    CHECK_FALSE(reroute_subset(z4, ch, c(0)).has_value());
  }
}

TEST_CASE("concrete rerouting produces valid A-paths of the target weight") {
  const auto z5 = zmod(5);
  const Ladder l = ladder(z5, {c(1), c(0), c(0), c(0), c(0), c(0), c(0), c(0), c(0)},
                          {{c(1), c(0)}, {c(2), c(0)}, {c(3), c(0)}, {c(1), c(0)}});
  for (const Elem& t : z5->elements()) {
    const auto w = reroute_to_weight(l.graph, l.chain, t);
    REQUIRE(w.has_value());
    CHECK(is_a_path(l.graph, *w));
    CHECK(walk_weight(l.graph, w->walk) == t);
  }
  const PathWitness z = zero_a_path_from_chain(l.graph, l.chain);
  CHECK(z5->is_zero(z.weight));
  const auto same = reroute_to_weight(l.graph, l.chain, l.chain.core.weight);
  REQUIRE(same.has_value());
  CHECK(same->walk == l.chain.core.walk);
}

TEST_CASE("sharpness ladders") {
  for (std::int64_t p : {3, 5, 7}) {
    const SharpnessWitness sw = sharpness_witness(p);
    CHECK(sw.chain.length() == static_cast<std::size_t>(p - 2));
    const auto reach = reachable_weights(sw.graph.group(), sw.chain.abstract());
    CHECK(reach.size() == static_cast<std::size_t>(p - 1));
    CHECK_FALSE(reach.contains(sw.graph.group().zero()));
    CHECK_FALSE(reroute_to_weight(sw.graph, sw.chain, sw.graph.group().zero()).has_value());
  }
  CHECK_THROWS_AS(sharpness_witness(4), InvalidArgument);
}
