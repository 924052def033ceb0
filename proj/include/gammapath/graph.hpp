#ifndef GAMMAPATH_GRAPH_HPP_
#define GAMMAPATH_GRAPH_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gammapath/group.hpp"

namespace gammapath {

enum class Model { kDirected, kUndirected };

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

// Caller-facing edge description, in terms of external vertex ids.
struct EdgeSpec {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;
  Elem label;
  std::optional<VertexId> tail;  // directed model only
};

// Internal edge: endpoints are dense vertex indices.
struct Edge {
  EdgeId id = 0;
  int u = 0;
  int v = 0;
  Elem label;
  int tail = -1;  // directed model: u or v

  int other(int x) const { return x == u ? v : u; }
};

struct Incidence {
  int edge;
  int neighbor;
};

// A multigraph with a group label on each edge and a terminal set A.
//
// Vertices are addressed internally by dense indices 0..n-1 assigned in
// increasing order of their external ids, so index order and id order agree.
// Edges are stored in increasing id order. Incidence lists are sorted by
// (neighbour, edge) which makes every depth-first enumeration below emit
// paths in lexicographic order of their vertex sequences.
class LabelledGraph {
 public:
  LabelledGraph(std::shared_ptr<const Group> group, Model model, std::vector<VertexId> vertices,
                std::vector<VertexId> terminals, std::vector<EdgeSpec> edges);

  const Group& group() const noexcept { return *group_; }
  const std::shared_ptr<const Group>& group_ptr() const noexcept { return group_; }
  Model model() const noexcept { return model_; }
  bool directed() const noexcept { return model_ == Model::kDirected; }

  int num_vertices() const noexcept { return static_cast<int>(ids_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  VertexId vertex_id(int v) const { return ids_.at(static_cast<std::size_t>(v)); }
  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }
  std::optional<int> find_vertex(VertexId id) const;
  int vertex_index(VertexId id) const;
  int edge_index(EdgeId id) const;

  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incident(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  bool is_terminal(int v) const { return terminal_mask_.at(static_cast<std::size_t>(v)) != 0; }
  const std::vector<int>& terminals() const noexcept { return terminals_; }
  const std::vector<char>& terminal_mask() const noexcept { return terminal_mask_; }

  std::vector<EdgeSpec> edge_specs() const;

  // Same structure, new labels (one per edge, in edge index order).
  LabelledGraph with_labels(std::vector<Elem> labels) const;
  // Same structure and labels, new terminal set (internal indices).
  LabelledGraph with_terminals(const std::vector<int>& terminals) const;
  // Same structure over a different group and model; tails are kept for the
  // directed model and dropped for the undirected one.
  LabelledGraph relabelled(std::shared_ptr<const Group> group, Model model,
                           std::vector<Elem> labels) const;

 private:
  std::shared_ptr<const Group> group_;
  Model model_;
  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, int> index_of_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, int> edge_index_of_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<int> terminals_;
  std::vector<char> terminal_mask_;
};

// Alternating vertex/edge sequence; vertices.size() == edges.size() + 1.
struct Walk {
  std::vector<int> vertices;
  std::vector<int> edges;

  std::size_t length() const noexcept { return edges.size(); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  friend bool operator==(const Walk&, const Walk&) = default;
};

struct PathWitness {
  Walk walk;
  Elem weight;
};

// Signed contribution of traversing edge e starting at vertex from:
// label for the undirected model; +label toward the head, −label toward
// the tail in the directed model.
Elem traversal_label(const LabelledGraph& g, int e, int from);

// Weight of a walk, accumulated left to right (correct for nonabelian
// groups in the directed model). Throws InvalidArgument on a broken walk.
Elem walk_weight(const LabelledGraph& g, const Walk& walk);

Walk reversed(const Walk& walk);
bool is_simple(const Walk& walk);

// Builds a witness, computing its weight.
PathWitness make_witness(const LabelledGraph& g, Walk walk);

// Checks that the witness is a nontrivial simple path meeting A exactly in
// its endpoints and that its stored weight equals walk_weight. Returns an
// empty string when valid, else the first violated condition.
std::string a_path_violation(const LabelledGraph& g, const PathWitness& w);
bool is_a_path(const LabelledGraph& g, const PathWitness& w);
void validate_a_path(const LabelledGraph& g, const PathWitness& w);

// External vertex ids of a walk.
std::vector<VertexId> vertex_id_sequence(const LabelledGraph& g, const Walk& walk);

}  // namespace gammapath

#endif  // GAMMAPATH_GRAPH_HPP_
