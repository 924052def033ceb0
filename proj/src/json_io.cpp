#include "gammapath/json_io.hpp"

#include <sstream>

#include "gammapath/error.hpp"

namespace gammapath::json_io {
namespace {

std::int64_t reduce(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

}  // namespace

json group_to_json(const Group& group) {
  switch (group.kind()) {
    case GroupKind::kCyclicProduct:
      return {{"type", "cyclic_product"}, {"orders", group.factor_orders()}};
    case GroupKind::kCayleyTable:
      return {{"type", "cayley"}, {"identity", group.identity_index()}, {"table", group.table()}};
    case GroupKind::kIntegers:
      return {{"type", "integers"}};
  }
  throw InvalidArgument("unknown group kind");
}

std::shared_ptr<const Group> group_from_json(const json& j) {
  try {
    const std::string type = field(j, "type").get<std::string>();
    if (type == "cyclic_product") {
      return std::make_shared<const Group>(Group::cyclic_product(field(j, "orders").get<std::vector<std::int64_t>>()));
    }
    if (type == "cayley") {
      return std::make_shared<const Group>(
          Group::cayley(field(j, "table").get<CayleyTable>(), field(j, "identity").get<std::size_t>()));
    }
    if (type == "integers") return std::make_shared<const Group>(Group::integers());
    throw InvalidArgument("unknown group type \"" + type + "\"");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed group: ") + e.what());
  }
}

json elem_to_json(const Group& group, const Elem& g) {
  group.require(g);
  switch (group.kind()) {
    case GroupKind::kCyclicProduct:
      return json(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
    case GroupKind::kCayleyTable:
      return g.index();
    case GroupKind::kIntegers:
      return g.integer().str();
  }
  throw InvalidArgument("unknown group kind");
}

Elem elem_from_json(const Group& group, const json& j) {
  try {
    switch (group.kind()) {
      case GroupKind::kCyclicProduct: {
        const auto& orders = group.factor_orders();
        Coords c;
        if (j.is_number_integer() && orders.size() == 1) {
          c.push_back(reduce(j.get<std::int64_t>(), orders[0]));
        } else if (j.is_array() && j.size() == orders.size()) {
          for (std::size_t i = 0; i < orders.size(); ++i) c.push_back(reduce(j[i].get<std::int64_t>(), orders[i]));
        } else {
          throw InvalidArgument("element must be a coordinate array of length " + std::to_string(orders.size()));
        }
        return Elem::from_coords(std::move(c));
      }
      case GroupKind::kCayleyTable: {
        const Elem g = Elem::from_index(j.get<std::size_t>());
        group.require(g);
        return g;
      }
      case GroupKind::kIntegers:
        if (j.is_number_integer()) return Elem::from_integer(BigInt(j.get<std::int64_t>()));
        return Elem::from_integer(BigInt(j.get<std::string>()));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed element: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw InvalidArgument(std::string("malformed element: ") + e.what());
  }
  throw InvalidArgument("unknown group kind");
}

Elem elem_from_text(const Group& group, const std::string& text) {
  if (group.kind() == GroupKind::kIntegers) {
    // Keep integer text as a string so arbitrary precision survives parsing.
    json j = json::parse(text, nullptr, false);
    if (j.is_string()) return elem_from_json(group, j);
    return elem_from_json(group, json(text));
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    json arr = json::array();
    for (const auto& part : split(text, ',')) {
      try {
        arr.push_back(std::stoll(part));
      } catch (const std::exception&) {
        throw InvalidArgument("cannot parse element \"" + text + "\"");
      }
    }
    j = arr;
  }
  return elem_from_json(group, j);
}

json graph_to_json(const LabelledGraph& g) {
  json edges = json::array();
  for (const EdgeSpec& e : g.edge_specs()) {
    json je{{"id", e.id}, {"u", e.u}, {"v", e.v}, {"label", elem_to_json(g.group(), e.label)}};
    if (e.tail) je["tail"] = *e.tail;
    edges.push_back(std::move(je));
  }
  return {{"group", group_to_json(g.group())},
          {"model", g.directed() ? "directed" : "undirected"},
          {"vertices", g.vertex_ids()},
          {"A", vertex_ids(g, g.terminals())},
          {"edges", std::move(edges)}};
}

LabelledGraph graph_from_json(const json& j) {
  try {
    auto group = group_from_json(field(j, "group"));
    const std::string model_text = field(j, "model").get<std::string>();
    Model model;
    if (model_text == "directed") {
      model = Model::kDirected;
    } else if (model_text == "undirected") {
      model = Model::kUndirected;
    } else {
      throw InvalidArgument("model must be \"directed\" or \"undirected\"");
    }
    std::vector<EdgeSpec> edges;
    for (const json& je : field(j, "edges")) {
      EdgeSpec e;
      e.id = field(je, "id").get<EdgeId>();
      e.u = field(je, "u").get<VertexId>();
      e.v = field(je, "v").get<VertexId>();
      e.label = elem_from_json(*group, field(je, "label"));
      if (je.contains("tail") && !je.at("tail").is_null()) e.tail = je.at("tail").get<VertexId>();
      edges.push_back(std::move(e));
    }
    return LabelledGraph(group, model, field(j, "vertices").get<std::vector<VertexId>>(),
                         field(j, "A").get<std::vector<VertexId>>(), std::move(edges));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed graph: ") + e.what());
  }
}

json vertex_ids(const LabelledGraph& g, const std::vector<int>& vertices) {
  json out = json::array();
  for (int v : vertices) out.push_back(g.vertex_id(v));
  return out;
}

std::vector<int> vertex_indices(const LabelledGraph& g, const json& ids) {
  std::vector<int> out;
  for (const json& id : ids) out.push_back(g.vertex_index(id.get<VertexId>()));
  return out;
}

json walk_to_json(const LabelledGraph& g, const Walk& w) {
  json edges = json::array();
  for (int e : w.edges) edges.push_back(g.edge(e).id);
  return {{"vertices", vertex_ids(g, w.vertices)}, {"edges", std::move(edges)}};
}

Walk walk_from_json(const LabelledGraph& g, const json& j) {
  try {
    Walk w;
    w.vertices = vertex_indices(g, field(j, "vertices"));
    for (const json& e : field(j, "edges")) w.edges.push_back(g.edge_index(e.get<EdgeId>()));
    return w;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed walk: ") + e.what());
  }
}

json witness_to_json(const LabelledGraph& g, const PathWitness& w) {
  // Weights are recomputed in the host labelling; Odd-family witnesses carry
  // a parity instead, which the edge count already shows.
  json out = walk_to_json(g, w.walk);
  out["weight"] = elem_to_json(g.group(), walk_weight(g, w.walk));
  return out;
}

PathWitness witness_from_json(const LabelledGraph& g, const json& j) {
  PathWitness w = make_witness(g, walk_from_json(g, j));
  if (j.contains("weight") && elem_from_json(g.group(), j.at("weight")) != w.weight) {
    throw InvalidArgument("stored weight differs from the walk weight");
  }
  return w;
}

PathFamilySpec family_from_text(const LabelledGraph& g, const std::string& text) {
  if (text == "nonzero") return PathFamilySpec::nonzero();
  if (text == "odd") return PathFamilySpec::odd();
  if (text.rfind("weight:", 0) == 0) return PathFamilySpec::of_weight(elem_from_text(g.group(), text.substr(7)));
  if (text.rfind("aba:", 0) == 0) {
    std::vector<int> b;
    for (const auto& part : split(text.substr(4), ',')) {
      try {
        b.push_back(g.vertex_index(std::stoll(part)));
      } catch (const std::invalid_argument&) {
        throw InvalidArgument("bad vertex id \"" + part + "\" in family");
      }
    }
    return PathFamilySpec::aba(std::move(b));
  }
  throw InvalidArgument("family must be weight:<elem>, nonzero, odd or aba:<ids>");
}

json family_to_json(const LabelledGraph& g, const PathFamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kWeight:
      return {{"kind", "weight"}, {"weight", elem_to_json(g.group(), spec.weight)}};
    case FamilyKind::kNonzero:
      return {{"kind", "nonzero"}};
    case FamilyKind::kOdd:
      return {{"kind", "odd"}};
    case FamilyKind::kABA:
      return {{"kind", "aba"}, {"B", vertex_ids(g, spec.b)}};
  }
  return {};
}

json pack_or_cover_to_json(const LabelledGraph& g, const PackOrCover& pc) {
  if (const auto* p = std::get_if<Packing>(&pc)) {
    json paths = json::array();
    for (const auto& w : p->paths) paths.push_back(witness_to_json(g, w));
    return {{"kind", "packing"}, {"size", p->paths.size()}, {"paths", std::move(paths)}};
  }
  const Cover& c = std::get<Cover>(pc);
  return {{"kind", "cover"}, {"size", c.vertices.size()}, {"vertices", vertex_ids(g, c.vertices)}};
}

json frame_result_to_json(const LabelledGraph& g, const FrameResult& r) {
  json forest = json::array();
  for (const ForestComponent& c : r.forest) {
    json edges = json::array();
    for (int e : c.tree.edges) edges.push_back(g.edge(e).id);
    forest.push_back({{"edges", std::move(edges)},
                      {"leaves", vertex_ids(g, c.shape.leaves)},
                      {"capacity", c.capacity},
                      {"witness", witness_to_json(g, c.witness)}});
  }
  json audit = json::array();
  for (std::size_t i = 0; i < r.audit.size(); ++i) {
    const AuditStep& s = r.audit[i];
    json step{{"step", i}, {"kind", to_string(s.kind)}, {"component", s.component}, {"path", walk_to_json(g, s.path)}};
    if (s.attach_vertex >= 0) step["attach"] = g.vertex_id(s.attach_vertex);
    audit.push_back(std::move(step));
  }
  return {{"outcome", pack_or_cover_to_json(g, r.outcome)},
          {"X", vertex_ids(g, r.x)},
          {"cover_bound", r.cover_bound},
          {"empty_cover_degenerate", r.empty_cover_degenerate},
          {"forest", std::move(forest)},
          {"audit", std::move(audit)}};
}

json duality_to_json(const LabelledGraph& g, const DualityReport& r) {
  return {{"nu", r.nu},
          {"tau", r.tau},
          {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
          {"bound_applies", r.bound_applies},
          {"bound_holds", r.bound_holds},
          {"packing", pack_or_cover_to_json(g, r.packing)},
          {"cover", pack_or_cover_to_json(g, r.cover)}};
}

json chain_to_json(const LabelledGraph& g, const CycleChain& c) {
  json detours = json::array();
  for (const Walk& d : c.detours) detours.push_back(walk_to_json(g, d));
  json deltas = json::array();
  for (const Elem& d : c.deltas) deltas.push_back(elem_to_json(g.group(), d));
  json intervals = json::array();
  for (auto [s, e] : c.intervals) intervals.push_back({g.vertex_id(c.core.walk.vertices[s]), g.vertex_id(c.core.walk.vertices[e])});
  return {{"graph", graph_to_json(g)},
          {"core", witness_to_json(g, c.core)},
          {"detours", std::move(detours)},
          {"deltas", std::move(deltas)},
          {"intervals", std::move(intervals)}};
}

CycleChain chain_from_json(const LabelledGraph& g, const json& j) {
  const Walk core = walk_from_json(g, field(j, "core"));
  std::vector<Walk> detours;
  for (const json& d : field(j, "detours")) detours.push_back(walk_from_json(g, d));
  return make_cycle_chain(g, core, std::move(detours));
}

json abstract_chain_to_json(const Group& group, const AbstractChain& c) {
  json deltas = json::array();
  for (const Elem& d : c.deltas) deltas.push_back(elem_to_json(group, d));
  return {{"group", group_to_json(group)}, {"core_weight", elem_to_json(group, c.core_weight)}, {"deltas", std::move(deltas)}};
}

AbstractChain abstract_chain_from_json(const Group& group, const json& j) {
  AbstractChain c;
  c.core_weight = elem_from_json(group, field(j, "core_weight"));
  for (const json& d : field(j, "deltas")) c.deltas.push_back(elem_from_json(group, d));
  return c;
}

json normalization_to_json(const LabelledGraph& g, const Normalization& n) {
  json shifts = json::array();
  for (const ShiftStep& s : n.shifts) shifts.push_back({{"vertex", g.vertex_id(s.vertex)}, {"value", elem_to_json(g.group(), s.value)}});
  return {{"shifts", std::move(shifts)}, {"graph", graph_to_json(n.graph)}};
}

json three_blocks_to_json(const LabelledGraph& g, const std::vector<ThreeBlock>& blocks) {
  json out = json::array();
  for (const ThreeBlock& b : blocks) {
    json bridges = json::array();
    for (const Bridge& br : b.bridges) {
      json edges = json::array();
      for (int e : br.edges) edges.push_back(g.edge(e).id);
      bridges.push_back({{"interior", vertex_ids(g, br.interior)},
                         {"attachments", vertex_ids(g, br.attachments)},
                         {"edges", std::move(edges)}});
    }
    out.push_back({{"B", vertex_ids(g, b.vertices)}, {"block", graph_to_json(b.block)}, {"bridges", std::move(bridges)}});
  }
  return out;
}

json gadget_report_to_json(const GadgetReport& r) {
  json checks = json::array();
  for (const GadgetCheck& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"family_size", r.family_size}, {"nu", r.nu}, {"tau", r.tau}, {"checks", std::move(checks)}, {"passed", r.all_passed()}};
}

}  // namespace gammapath::json_io
