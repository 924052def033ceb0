#include <algorithm>

#include "doctest.h"
#include "gammapath/error.hpp"
#include "gammapath/gadgets.hpp"
#include "gammapath/json_io.hpp"
#include "gammapath/oracles.hpp"
#include "helpers.hpp"

using namespace gammapath;
using namespace testing_support;

namespace {

const Edge& edge_between(const LabelledGraph& g, VertexId a, VertexId b) {
  const int u = g.vertex_index(a);
  const int v = g.vertex_index(b);
  for (const Incidence& inc : g.incident(u)) {
    if (inc.neighbor == v) return g.edge(inc.edge);
  }
  FAIL("no such edge");
  return g.edge(0);
}

// Weight-ell members as vertex sets.
std::vector<std::vector<int>> family(const LabelledGraph& g, const Elem& ell) {
  std::vector<std::vector<int>> out;
  for (const Walk& w : oracle::all_a_paths(g)) {
    if (walk_weight(g, w) != ell) continue;
    auto v = w.vertices;
    std::sort(v.begin(), v.end());
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("greedy g-sequence") {
  CHECK(gamma_sequence(3, 0) == std::vector<BigInt>{1, 2, 3});
  const auto seq = gamma_sequence(6, 5);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CHECK(seq[k] > 0);
    for (std::size_t j = 0; j < k; ++j) {
      const BigInt x = seq[j];
      for (const BigInt& bad : std::initializer_list<BigInt>{x, 5 - x, x + 5, x - 5, x + 10, x - 10}) CHECK(seq[k] != bad);
    }
  }
}

TEST_CASE("gamma_n structure") {
  const GridGadget gg = build_gamma_n(2, 0, Model::kUndirected);
  const LabelledGraph& g = gg.graph;
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 4 + 2 + 2);
  CHECK(g.terminals().size() == 4);
  const Group& z = g.group();
  for (int i = 1; i <= 2; ++i) {
    CHECK(g.degree(g.vertex_index(u_vertex(2, i))) == 1);
    CHECK(edge_between(g, u_vertex(2, i), grid_vertex(2, 1, i)).label == z.neg(gg.g_seq[static_cast<std::size_t>(i - 1)]));
    CHECK(edge_between(g, grid_vertex(2, 2, i), w_vertex(2, i)).label == gg.g_seq[static_cast<std::size_t>(2 - i)]);
  }

  const GridGadget d = build_gamma_n(3, 4, Model::kDirected);
  for (int i = 1; i <= 3; ++i) {
    const Edge& ue = edge_between(d.graph, u_vertex(3, i), grid_vertex(3, 1, i));
    CHECK(d.graph.vertex_id(ue.tail) == u_vertex(3, i));
    const Edge& we = edge_between(d.graph, grid_vertex(3, 3, i), w_vertex(3, i));
    CHECK(d.graph.vertex_id(we.tail) == grid_vertex(3, 3, i));
  }
  // Every route from u_i to w_{n+1-i} weighs ell.
  for (const Walk& w : oracle::all_a_paths(d.graph)) {
    const VertexId s = d.graph.vertex_id(w.front());
    const VertexId t = d.graph.vertex_id(w.back());
    for (int i = 1; i <= 3; ++i) {
      if (s == u_vertex(3, i) && t == w_vertex(3, 4 - i)) CHECK(walk_weight(d.graph, w) == d.ell);
    }
  }
}

TEST_CASE("gamma prime labels") {
  const auto z8 = zmod(8);
  const GridGadget gg = build_gamma_prime(3, z8, c(1), c(4));
  const LabelledGraph& g = gg.graph;
  for (int i = 1; i <= 3; ++i) {
    CHECK(edge_between(g, u_vertex(3, i), grid_vertex(3, 1, i)).label == c(1));
    CHECK(edge_between(g, grid_vertex(3, 3, i), w_vertex(3, i)).label == c(3));
  }
  CHECK(edge_between(g, grid_vertex(3, 1, 1), grid_vertex(3, 1, 2)).label == c(4));
  CHECK(edge_between(g, grid_vertex(3, 1, 2), grid_vertex(3, 1, 3)).label == c(4));
  CHECK(edge_between(g, grid_vertex(3, 2, 1), grid_vertex(3, 2, 2)).label == c(0));
  CHECK_THROWS_AS(build_gamma_prime(3, z8, c(1), c(1)), InvalidArgument);
  CHECK_THROWS_AS(build_gamma_prime(3, z8, c(4), c(2)), InvalidArgument);
}

TEST_CASE("gamma double prime labels") {
  const auto z4 = zmod(4);
  const GridGadget gg = build_gamma_doubleprime(3, z4, c(1), c(2));
  const LabelledGraph& g = gg.graph;
  std::size_t nonzero = 0;
  for (const Edge& e : g.edges()) {
    if (!z4->is_zero(e.label)) ++nonzero;
  }
  CHECK(nonzero == 3 + 2);
  CHECK(edge_between(g, u_vertex(3, 2), grid_vertex(3, 1, 2)).label == c(3));
  CHECK(edge_between(g, grid_vertex(3, 1, 2), grid_vertex(3, 1, 3)).label == c(2));
  CHECK(edge_between(g, grid_vertex(3, 3, 2), w_vertex(3, 2)).label == c(0));
  CHECK_THROWS_AS(build_gamma_doubleprime(3, z4, c(2), c(2)), InvalidArgument);
  CHECK_THROWS_AS(build_gamma_doubleprime(3, z4, c(1), c(0)), InvalidArgument);
}

TEST_CASE("gadget JSON is deterministic") {
  const auto z4 = zmod(4);
  const auto a = json_io::graph_to_json(build_gamma_doubleprime(3, z4, c(1), c(2)).graph).dump();
  const auto b = json_io::graph_to_json(build_gamma_doubleprime(3, z4, c(1), c(2)).graph).dump();
  CHECK(a == b);
  CHECK(json_io::graph_to_json(build_gamma_n(3, 2, Model::kDirected).graph).dump() ==
        json_io::graph_to_json(build_gamma_n(3, 2, Model::kDirected).graph).dump());
}

TEST_CASE("verify_gadget agrees with subset oracles") {
  const auto z4 = zmod(4);
  const auto z8 = zmod(8);
  const Limits lim;
  const std::vector<GridGadget> gadgets{build_gamma_n(2, 0, Model::kUndirected), build_gamma_n(2, 0, Model::kDirected),
                                        build_gamma_n(3, 1, Model::kUndirected), build_gamma_doubleprime(2, z4, c(1), c(2)),
                                        build_gamma_doubleprime(3, z4, c(1), c(2)), build_gamma_prime(2, z8, c(1), c(4))};
  for (const GridGadget& gg : gadgets) {
    const GadgetReport rep = verify_gadget(gg, lim);
    const auto fam = family(gg.graph, gg.ell);
    CHECK(rep.family_size == fam.size());
    if (fam.size() <= 22) {
      CHECK(rep.nu == oracle::max_disjoint_by_subsets(fam));
    }
    CHECK(rep.tau == oracle::min_hitting_by_subsets(fam, gg.graph.num_vertices()));
    const auto it = std::find_if(rep.checks.begin(), rep.checks.end(), [](const GadgetCheck& ch) {
      return ch.name.rfind("endpoints", 0) == 0;
    });
    REQUIRE(it != rep.checks.end());
    CHECK(it->passed);
  }
  const GadgetReport r2 = verify_gadget(gadgets[0], lim);
  CHECK(r2.nu == 1);
  CHECK(r2.tau == 2);
}
