#include "doctest.h"
#include "gammapath/cycle_chain.hpp"
#include "gammapath/error.hpp"
#include "gammapath/json_io.hpp"
#include "gammapath/random_instances.hpp"
#include "helpers.hpp"

using namespace gammapath;
using namespace testing_support;
using nlohmann::json;

TEST_CASE("group and element round trips") {
  for (const char* text : {R"({"type":"cyclic_product","orders":[2,4]})", R"({"type":"integers"})"}) {
    const auto g = json_io::group_from_json(json::parse(text));
    CHECK(json_io::group_to_json(*g) == json::parse(text));
  }
  const auto s3 = std::make_shared<const Group>(symmetric_group(3));
  const auto back = json_io::group_from_json(json_io::group_to_json(*s3));
  CHECK(*back == *s3);

  const Group z24 = Group::cyclic_product({2, 4});
  CHECK(json_io::elem_from_json(z24, json::parse("[1,3]")) == c2(1, 3));
  CHECK(json_io::elem_to_json(z24, c2(1, 3)) == json::parse("[1,3]"));
  const Group z4 = Group::cyclic(4);
  CHECK(json_io::elem_from_json(z4, json(6)) == c(2));
  CHECK(json_io::elem_from_text(z4, "2") == c(2));
  CHECK(json_io::elem_from_text(z24, "1,2") == c2(1, 2));
  CHECK(json_io::elem_from_text(z24, "[0,3]") == c2(0, 3));
  const Group z = Group::integers();
  CHECK(json_io::elem_from_text(z, "-123456789012345678901234567890") ==
        Elem::from_integer(BigInt("-123456789012345678901234567890")));
  CHECK(json_io::elem_to_json(z, Elem::from_integer(7)) == json("7"));
  CHECK_THROWS_AS(json_io::elem_from_json(z24, json::parse("[1]")), InvalidArgument);
  CHECK_THROWS_AS(json_io::group_from_json(json::parse(R"({"type":"free"})")), InvalidArgument);
  CHECK_THROWS_AS(json_io::group_from_json(json::parse(R"({"orders":[2]})")), InvalidArgument);
}

TEST_CASE("graph round trips are byte-exact") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    InstanceRng rng(instance_seed(51, 0, i));
    const auto group = i % 2 ? zmod(6) : std::make_shared<const Group>(symmetric_group(3));
    const auto g = random_graph(rng, group, i % 2 && i % 3 ? Model::kUndirected : Model::kDirected, {});
    const json j = json_io::graph_to_json(g);
    const LabelledGraph h = json_io::graph_from_json(j);
    CHECK(json_io::graph_to_json(h).dump() == j.dump());
  }
}

TEST_CASE("graph JSON validation") {
  const auto bad_tail = json::parse(R"({"group":{"type":"cyclic_product","orders":[3]},"model":"directed",
    "vertices":[0,1],"A":[0],"edges":[{"id":0,"u":0,"v":1,"label":[1]}]})");
  CHECK_THROWS_AS(json_io::graph_from_json(bad_tail), InvalidArgument);
  const auto loop = json::parse(R"({"group":{"type":"cyclic_product","orders":[3]},"model":"undirected",
    "vertices":[0,1],"A":[0],"edges":[{"id":0,"u":1,"v":1,"label":[1]}]})");
  CHECK_THROWS_AS(json_io::graph_from_json(loop), InvalidArgument);
  const auto ok = json::parse(R"({"group":{"type":"cyclic_product","orders":[3]},"model":"undirected",
    "vertices":[10,20,30],"A":[10,30],"edges":[{"id":5,"u":10,"v":20,"label":1},{"id":7,"u":20,"v":30,"label":[2]}]})");
  const LabelledGraph g = json_io::graph_from_json(ok);
  CHECK(g.vertex_id(2) == 30);
  CHECK(g.edge(1).id == 7);
}

TEST_CASE("witness and family text") {
  const auto z3 = zmod(3);
  const auto g = make_graph(z3, Model::kUndirected, 3, {0, 2}, {{0, 1, c(1)}, {1, 2, c(1)}});
  const PathWitness w = make_witness(g, Walk{{0, 1, 2}, {0, 1}});
  const json j = json_io::witness_to_json(g, w);
  CHECK(j["weight"] == json::parse("[2]"));
  const PathWitness back = json_io::witness_from_json(g, j);
  CHECK(back.walk == w.walk);
  json tampered = j;
  tampered["weight"] = json::parse("[0]");
  CHECK_THROWS_AS(json_io::witness_from_json(g, tampered), InvalidArgument);

  CHECK(json_io::family_from_text(g, "nonzero").kind == FamilyKind::kNonzero);
  CHECK(json_io::family_from_text(g, "odd").kind == FamilyKind::kOdd);
  const auto wt = json_io::family_from_text(g, "weight:2");
  CHECK(wt.kind == FamilyKind::kWeight);
  CHECK(wt.weight == c(2));
  const auto aba = json_io::family_from_text(g, "aba:1,2");
  CHECK(aba.b == std::vector<int>{1, 2});
  CHECK_THROWS_AS(json_io::family_from_text(g, "even"), InvalidArgument);
  CHECK_THROWS_AS(json_io::family_from_text(g, "aba:9"), InvalidArgument);
}

TEST_CASE("chain JSON round trip") {
  const SharpnessWitness sw = sharpness_witness(5);
  const json j = json_io::chain_to_json(sw.graph, sw.chain);
  const LabelledGraph g = json_io::graph_from_json(j["graph"]);
  const CycleChain back = json_io::chain_from_json(g, j);
  CHECK(back.deltas == sw.chain.deltas);
  CHECK(back.core.walk == sw.chain.core.walk);
  const AbstractChain ab = sw.chain.abstract();
  const AbstractChain ab2 = json_io::abstract_chain_from_json(g.group(), json_io::abstract_chain_to_json(g.group(), ab));
  CHECK(ab2.deltas == ab.deltas);
  CHECK(ab2.core_weight == ab.core_weight);
}
