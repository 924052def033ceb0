#include "gammapath/graph.hpp"

#include <algorithm>
#include <set>

#include "gammapath/error.hpp"

namespace gammapath {

LabelledGraph::LabelledGraph(std::shared_ptr<const Group> group, Model model,
                             std::vector<VertexId> vertices, std::vector<VertexId> terminals,
                             std::vector<EdgeSpec> edges)
    : group_(std::move(group)), model_(model), ids_(std::move(vertices)) {
  if (!group_) throw InvalidArgument("graph requires a group");
  if (model_ == Model::kUndirected && !group_->is_abelian()) {
    throw InvalidArgument("the undirected model requires an abelian group");
  }
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw InvalidArgument("duplicate vertex id");
  }
  for (std::size_t i = 0; i < ids_.size(); ++i) index_of_[ids_[i]] = static_cast<int>(i);

  terminal_mask_.assign(ids_.size(), 0);
  for (VertexId a : terminals) terminal_mask_[static_cast<std::size_t>(vertex_index(a))] = 1;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (terminal_mask_[i]) terminals_.push_back(static_cast<int>(i));
  }

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  adjacency_.assign(ids_.size(), {});
  for (auto& spec : edges) {
    if (edge_index_of_.contains(spec.id)) throw InvalidArgument("duplicate edge id");
    Edge e;
    e.id = spec.id;
    e.u = vertex_index(spec.u);
    e.v = vertex_index(spec.v);
    if (e.u == e.v) throw InvalidArgument("loops are not permitted");
    group_->require(spec.label);
    e.label = std::move(spec.label);
    if (model_ == Model::kDirected) {
      if (!spec.tail) throw InvalidArgument("directed edges require a tail");
      const int t = vertex_index(*spec.tail);
      if (t != e.u && t != e.v) throw InvalidArgument("edge tail must be an endpoint");
      e.tail = t;
    } else if (spec.tail) {
      throw InvalidArgument("undirected edges carry no orientation");
    }
    const int idx = static_cast<int>(edges_.size());
    edge_index_of_[e.id] = idx;
    adjacency_[static_cast<std::size_t>(e.u)].push_back({idx, e.v});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({idx, e.u});
    edges_.push_back(std::move(e));
  }
  for (auto& inc : adjacency_) {
    std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
    });
  }
}

std::optional<int> LabelledGraph::find_vertex(VertexId id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) return std::nullopt;
  return it->second;
}

int LabelledGraph::vertex_index(VertexId id) const {
  auto it = index_of_.find(id);
  if (it == index_of_.end()) throw InvalidArgument("unknown vertex id " + std::to_string(id));
  return it->second;
}

int LabelledGraph::edge_index(EdgeId id) const {
  auto it = edge_index_of_.find(id);
  if (it == edge_index_of_.end()) throw InvalidArgument("unknown edge id " + std::to_string(id));
  return it->second;
}

std::vector<EdgeSpec> LabelledGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) {
    EdgeSpec s{e.id, vertex_id(e.u), vertex_id(e.v), e.label, std::nullopt};
    if (e.tail >= 0) s.tail = vertex_id(e.tail);
    out.push_back(std::move(s));
  }
  return out;
}

LabelledGraph LabelledGraph::with_labels(std::vector<Elem> labels) const {
  return relabelled(group_, model_, std::move(labels));
}

LabelledGraph LabelledGraph::with_terminals(const std::vector<int>& terminals) const {
  std::vector<VertexId> a;
  for (int v : terminals) a.push_back(vertex_id(v));
  return LabelledGraph(group_, model_, ids_, std::move(a), edge_specs());
}

LabelledGraph LabelledGraph::relabelled(std::shared_ptr<const Group> group, Model model,
                                        std::vector<Elem> labels) const {
  if (labels.size() != edges_.size()) throw InvalidArgument("one label per edge required");
  auto specs = edge_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    specs[i].label = std::move(labels[i]);
    if (model == Model::kUndirected) {
      specs[i].tail.reset();
    } else if (!specs[i].tail) {
      specs[i].tail = specs[i].u;
    }
  }
  std::vector<VertexId> a;
  for (int v : terminals_) a.push_back(vertex_id(v));
  return LabelledGraph(std::move(group), model, ids_, std::move(a), std::move(specs));
}

Elem traversal_label(const LabelledGraph& g, int e, int from) {
  const Edge& edge = g.edge(e);
  if (!g.directed() || edge.tail == from) return edge.label;
  return g.group().neg(edge.label);
}

Elem walk_weight(const LabelledGraph& g, const Walk& walk) {
  if (walk.vertices.empty() || walk.vertices.size() != walk.edges.size() + 1) {
    throw InvalidArgument("walk must alternate vertices and edges");
  }
  Elem w = g.group().zero();
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const int e = walk.edges[i];
    if (e < 0 || e >= g.num_edges()) throw InvalidArgument("walk uses an unknown edge");
    const Edge& edge = g.edge(e);
    const int x = walk.vertices[i];
    const int y = walk.vertices[i + 1];
    if (!((edge.u == x && edge.v == y) || (edge.u == y && edge.v == x))) {
      throw InvalidArgument("walk edge is not incident with consecutive vertices");
    }
    w = g.group().add(w, traversal_label(g, e, x));
  }
  return w;
}

Walk reversed(const Walk& walk) {
  Walk r{{walk.vertices.rbegin(), walk.vertices.rend()}, {walk.edges.rbegin(), walk.edges.rend()}};
  return r;
}

bool is_simple(const Walk& walk) {
  std::set<int> seen(walk.vertices.begin(), walk.vertices.end());
  return seen.size() == walk.vertices.size();
}

PathWitness make_witness(const LabelledGraph& g, Walk walk) {
  Elem w = walk_weight(g, walk);
  return PathWitness{std::move(walk), std::move(w)};
}

std::string a_path_violation(const LabelledGraph& g, const PathWitness& w) {
  const Walk& walk = w.walk;
  Elem weight;
  try {
    weight = walk_weight(g, walk);
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  if (walk.length() == 0) return "A-path must be nontrivial";
  if (!is_simple(walk)) return "path repeats a vertex";
  if (!g.is_terminal(walk.front()) || !g.is_terminal(walk.back())) {
    return "A-path endpoints must lie in A";
  }
  for (std::size_t i = 1; i + 1 < walk.vertices.size(); ++i) {
    if (g.is_terminal(walk.vertices[i])) return "A-path has an internal vertex in A";
  }
  if (weight != w.weight) return "stored weight differs from the walk weight";
  return {};
}

bool is_a_path(const LabelledGraph& g, const PathWitness& w) { return a_path_violation(g, w).empty(); }

void validate_a_path(const LabelledGraph& g, const PathWitness& w) {
  const std::string why = a_path_violation(g, w);
  if (!why.empty()) throw InvalidArgument("invalid A-path: " + why);
}

std::vector<VertexId> vertex_id_sequence(const LabelledGraph& g, const Walk& walk) {
  std::vector<VertexId> out;
  out.reserve(walk.vertices.size());
  for (int v : walk.vertices) out.push_back(g.vertex_id(v));
  return out;
}

}  // namespace gammapath
