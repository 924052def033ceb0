#include "gammapath/frame.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gammapath/error.hpp"
#include "gammapath/paths.hpp"

namespace gammapath {
namespace {

using Adjacency = std::vector<std::vector<Incidence>>;

Adjacency tree_adjacency(const LabelledGraph& g, const ATree& t) {
  Adjacency adj(static_cast<std::size_t>(g.num_vertices()));
  for (int e : t.edges) {
    const Edge& edge = g.edge(e);
    adj[static_cast<std::size_t>(edge.u)].push_back({e, edge.v});
    adj[static_cast<std::size_t>(edge.v)].push_back({e, edge.u});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
      return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
    });
  }
  return adj;
}

std::vector<int> bfs_distances(const Adjacency& adj, int root, int skip = -1) {
  std::vector<int> dist(adj.size(), -1);
  dist[static_cast<std::size_t>(root)] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : adj[static_cast<std::size_t>(x)]) {
      const int y = inc.neighbor;
      if (y == skip || dist[static_cast<std::size_t>(y)] >= 0) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

void require_frame_setting(const LabelledGraph& g) {
  if (!g.directed()) throw InvalidArgument("A-tree extraction uses the directed model");
  if (!g.group().is_finite()) throw InvalidArgument("A-tree extraction needs a finite group");
}

void require_a_tree(const LabelledGraph& g, const ATree& t) {
  const std::string why = a_tree_violation(g, t, true);
  if (!why.empty()) throw InvalidArgument("not a subcubic A-tree: " + why);
}

}  // namespace

std::string to_string(AuditKind kind) {
  return kind == AuditKind::kNewComponent ? "new_component" : "attach";
}

TreeShape tree_shape(const LabelledGraph& g, const ATree& t) {
  TreeShape s;
  s.degree.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int e : t.edges) {
    ++s.degree[static_cast<std::size_t>(g.edge(e).u)];
    ++s.degree[static_cast<std::size_t>(g.edge(e).v)];
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = s.degree[static_cast<std::size_t>(v)];
    if (d > 0) s.vertices.push_back(v);
    if (d == 1) s.leaves.push_back(v);
  }
  return s;
}

std::string a_tree_violation(const LabelledGraph& g, const ATree& t, bool subcubic) {
  if (t.edges.empty()) return "tree has no edges";
  std::set<int> distinct;
  for (int e : t.edges) {
    if (e < 0 || e >= g.num_edges()) return "edge index out of range";
    if (!distinct.insert(e).second) return "edge listed twice";
  }
  const TreeShape s = tree_shape(g, t);
  if (s.vertices.size() != t.edges.size() + 1) return "edge count does not match a tree";
  const auto dist = bfs_distances(tree_adjacency(g, t), s.vertices.front());
  for (int v : s.vertices) {
    if (dist[static_cast<std::size_t>(v)] < 0) return "edges are not connected";
    const int d = s.degree[static_cast<std::size_t>(v)];
    if (subcubic && d > 3) return "vertex " + std::to_string(g.vertex_id(v)) + " has degree above 3";
    if ((d == 1) != g.is_terminal(v)) {
      return "vertex " + std::to_string(g.vertex_id(v)) +
             (d == 1 ? " is a leaf outside A" : " lies in A but is not a leaf");
    }
  }
  return {};
}

Walk tree_path(const LabelledGraph& g, const ATree& t, int from, int to) {
  const Adjacency adj = tree_adjacency(g, t);
  std::vector<int> parent_edge(adj.size(), -1);
  std::vector<int> parent(adj.size(), -1);
  std::vector<char> seen(adj.size(), 0);
  seen[static_cast<std::size_t>(from)] = 1;
  std::deque<int> queue{from};
  while (!queue.empty() && !seen[static_cast<std::size_t>(to)]) {
    const int x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : adj[static_cast<std::size_t>(x)]) {
      if (seen[static_cast<std::size_t>(inc.neighbor)]) continue;
      seen[static_cast<std::size_t>(inc.neighbor)] = 1;
      parent[static_cast<std::size_t>(inc.neighbor)] = x;
      parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
      queue.push_back(inc.neighbor);
    }
  }
  if (!seen[static_cast<std::size_t>(to)]) throw InvalidArgument("vertices are not joined in the tree");
  Walk w;
  for (int x = to; x != from; x = parent[static_cast<std::size_t>(x)]) {
    w.vertices.push_back(x);
    w.edges.push_back(parent_edge[static_cast<std::size_t>(x)]);
  }
  w.vertices.push_back(from);
  return reversed(w);
}

int tree_capacity(std::size_t leaves, std::size_t group_order) {
  int c = 0;
  while (leaves >= (2 * static_cast<std::size_t>(c + 1) - 1) * group_order + 1) ++c;
  return c;
}

PathWitness base_zero_path(const LabelledGraph& g, const ATree& t, std::optional<int> v) {
  require_frame_setting(g);
  require_a_tree(g, t);
  const TreeShape s = tree_shape(g, t);
  const std::size_t m = g.group().order() + 1;
  if (s.leaves.size() < m) throw InvalidArgument("tree needs at least |Γ|+1 leaves");
  if (!v) {
    for (int x : s.vertices) {
      if (s.degree[static_cast<std::size_t>(x)] >= 2) {
        v = x;
        break;
      }
    }
    if (!v) v = s.vertices.front();
  }
  if (*v < 0 || *v >= g.num_vertices() || s.degree[static_cast<std::size_t>(*v)] == 0) {
    throw InvalidArgument("branch vertex must lie in the tree");
  }
  std::vector<Elem> weight;
  for (std::size_t i = 0; i < m; ++i) weight.push_back(walk_weight(g, tree_path(g, t, *v, s.leaves[i])));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (weight[i] != weight[j]) continue;
      PathWitness w = make_witness(g, tree_path(g, t, s.leaves[i], s.leaves[j]));
      if (!g.group().is_zero(w.weight) || !is_a_path(g, w)) {
        throw InternalError("equal-weight leaf pair did not give a zero A-path");
      }
      return w;
    }
  }
  throw InternalError("no two of |Γ|+1 leaf paths share a weight");
}

std::vector<PathWitness> extract_zero_paths(const LabelledGraph& g, const ATree& t, int k) {
  require_frame_setting(g);
  require_a_tree(g, t);
  if (k < 1) throw InvalidArgument("k must be positive");
  const std::size_t order = g.group().order();
  const TreeShape s = tree_shape(g, t);
  if (s.leaves.size() < (2 * static_cast<std::size_t>(k) - 1) * order + 1) {
    throw InvalidArgument("tree has fewer than (2k-1)|Γ|+1 leaves");
  }
  if (k == 1) return {base_zero_path(g, t)};

  const Adjacency adj = tree_adjacency(g, t);
  const int a = s.leaves.front();
  const auto from_a = bfs_distances(adj, a);

  int split = -1;
  std::vector<char> side;  // vertex set of the component of T - split containing a
  for (int v : s.vertices) {
    if (s.degree[static_cast<std::size_t>(v)] != 3) continue;
    const auto reach = bfs_distances(adj, a, v);
    std::size_t leaves_one = 0;
    for (int leaf : s.leaves) {
      if (reach[static_cast<std::size_t>(leaf)] >= 0) ++leaves_one;
    }
    if (s.leaves.size() - leaves_one < order + 1) continue;
    if (split < 0 || from_a[static_cast<std::size_t>(v)] > from_a[static_cast<std::size_t>(split)]) {
      split = v;
      side.assign(adj.size(), 0);
      for (std::size_t x = 0; x < adj.size(); ++x) side[x] = reach[x] >= 0 ? 1 : 0;
    }
  }
  if (split < 0) throw InternalError("no degree-3 vertex leaves |Γ|+1 leaves on the far side");

  // T1: the near side, with leaves outside A pruned away repeatedly.
  std::vector<int> near_edges;
  std::vector<int> far_edges;
  for (int e : t.edges) {
    const Edge& edge = g.edge(e);
    if (side[static_cast<std::size_t>(edge.u)] && side[static_cast<std::size_t>(edge.v)]) {
      near_edges.push_back(e);
    } else if (!side[static_cast<std::size_t>(edge.u)] && !side[static_cast<std::size_t>(edge.v)]) {
      far_edges.push_back(e);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> deg(adj.size(), 0);
    for (int e : near_edges) {
      ++deg[static_cast<std::size_t>(g.edge(e).u)];
      ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    std::vector<int> kept;
    for (int e : near_edges) {
      const Edge& edge = g.edge(e);
      const bool prune_u = deg[static_cast<std::size_t>(edge.u)] == 1 && !g.is_terminal(edge.u);
      const bool prune_v = deg[static_cast<std::size_t>(edge.v)] == 1 && !g.is_terminal(edge.v);
      if (prune_u || prune_v) {
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    near_edges = std::move(kept);
  }

  std::vector<PathWitness> out = extract_zero_paths(g, ATree{near_edges}, k - 1);
  out.push_back(base_zero_path(g, ATree{far_edges}, split));
  return out;
}

FrameResult frame_pack_or_cover(const LabelledGraph& g, int k, const Limits& limits,
                                const FrameOptions& options) {
  require_frame_setting(g);
  if (k < 1) throw InvalidArgument("k must be positive");
  limits.validate();
  const Group& group = g.group();
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  const PathFilter zero = PathFilter::with_weight(group.zero());

  FrameResult result;
  std::vector<char> in_forest(n, 0);
  std::vector<int> degree(n, 0);
  std::vector<int> component_of(n, -1);

  auto add_path = [&](int c, const Walk& w) {
    for (int e : w.edges) {
      result.forest[static_cast<std::size_t>(c)].tree.edges.push_back(e);
      ++degree[static_cast<std::size_t>(g.edge(e).u)];
      ++degree[static_cast<std::size_t>(g.edge(e).v)];
    }
    for (int v : w.vertices) {
      in_forest[static_cast<std::size_t>(v)] = 1;
      component_of[static_cast<std::size_t>(v)] = c;
    }
  };

  auto check_forest = [&]() {
    std::vector<char> seen(n, 0);
    for (const ForestComponent& comp : result.forest) {
      const std::string why = a_tree_violation(g, comp.tree, true);
      if (!why.empty()) throw InternalError("forest component is not a subcubic A-tree: " + why);
      const TreeShape s = tree_shape(g, comp.tree);
      for (int v : s.vertices) {
        if (seen[static_cast<std::size_t>(v)]) throw InternalError("forest components overlap");
        seen[static_cast<std::size_t>(v)] = 1;
      }
      if (!is_a_path(g, comp.witness) || !group.is_zero(comp.witness.weight)) {
        throw InternalError("stored component witness is not a zero A-path");
      }
      for (int v : comp.witness.walk.vertices) {
        if (s.degree[static_cast<std::size_t>(v)] == 0) throw InternalError("witness leaves its component");
      }
    }
  };

  for (;;) {
    limits.check_deadline();
    if (auto p = find_a_path(g, zero, limits, &in_forest)) {
      const int c = static_cast<int>(result.forest.size());
      result.forest.push_back(ForestComponent{ATree{}, *p, {}, 0});
      add_path(c, p->walk);
      result.audit.push_back(AuditStep{AuditKind::kNewComponent, c, p->walk, -1});
      if (options.check_invariants) check_forest();
      continue;
    }

    // A path from a terminal outside F, through vertices outside F and A,
    // to a vertex of degree 2 in F. Shortest first, ties by BFS id order.
    bool attached = false;
    for (int a : g.terminals()) {
      if (in_forest[static_cast<std::size_t>(a)]) continue;
      std::vector<int> parent(n, -1);
      std::vector<int> parent_edge(n, -1);
      std::vector<char> seen(n, 0);
      seen[static_cast<std::size_t>(a)] = 1;
      std::deque<int> queue{a};
      int target = -1;
      while (!queue.empty() && target < 0) {
        const int x = queue.front();
        queue.pop_front();
        for (const Incidence& inc : g.incident(x)) {
          const int y = inc.neighbor;
          if (in_forest[static_cast<std::size_t>(y)]) {
            if (degree[static_cast<std::size_t>(y)] == 2) {
              parent[static_cast<std::size_t>(y)] = x;
              parent_edge[static_cast<std::size_t>(y)] = inc.edge;
              target = y;
              break;
            }
            continue;
          }
          if (g.is_terminal(y) || seen[static_cast<std::size_t>(y)]) continue;
          seen[static_cast<std::size_t>(y)] = 1;
          parent[static_cast<std::size_t>(y)] = x;
          parent_edge[static_cast<std::size_t>(y)] = inc.edge;
          queue.push_back(y);
        }
      }
      if (target < 0) continue;
      Walk w;
      for (int x = target; x != a; x = parent[static_cast<std::size_t>(x)]) {
        w.vertices.push_back(x);
        w.edges.push_back(parent_edge[static_cast<std::size_t>(x)]);
      }
      w.vertices.push_back(a);
      w = reversed(w);
      const int c = component_of[static_cast<std::size_t>(target)];
      add_path(c, w);
      result.audit.push_back(AuditStep{AuditKind::kAttach, c, w, target});
      if (options.check_invariants) check_forest();
      attached = true;
      break;
    }
    if (!attached) break;
  }

  for (ForestComponent& comp : result.forest) {
    comp.shape = tree_shape(g, comp.tree);
    comp.capacity = tree_capacity(comp.shape.leaves.size(), group.order());
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1 || degree[v] == 3) result.x.push_back(static_cast<int>(v));
  }
  result.cover_bound = 6 * static_cast<std::size_t>(k - 1) * group.order();
  const PathFamilySpec family = PathFamilySpec::of_weight(group.zero());

  auto finish_packing = [&](Packing p) {
    const std::string why = packing_violation(g, family, p);
    if (!why.empty()) throw InternalError("frame packing invalid: " + why);
    result.outcome = std::move(p);
    return result;
  };

  if (result.forest.size() >= static_cast<std::size_t>(k)) {
    Packing p;
    for (int i = 0; i < k; ++i) p.paths.push_back(result.forest[static_cast<std::size_t>(i)].witness);
    return finish_packing(std::move(p));
  }
  int total = 0;
  for (const ForestComponent& comp : result.forest) total += comp.capacity;
  if (total >= k) {
    Packing p;
    for (const ForestComponent& comp : result.forest) {
      if (comp.capacity == 0) continue;
      for (auto& w : extract_zero_paths(g, comp.tree, comp.capacity)) {
        if (p.paths.size() < static_cast<std::size_t>(k)) p.paths.push_back(std::move(w));
      }
    }
    return finish_packing(std::move(p));
  }

  if (result.x.size() >= result.cover_bound) {
    if (result.x.empty() && k == 1) {
      result.empty_cover_degenerate = true;
    } else {
      throw InternalError("frame cover has " + std::to_string(result.x.size()) +
                          " vertices, bound is " + std::to_string(result.cover_bound));
    }
  }
  std::vector<char> blocked(n, 0);
  for (int v : result.x) blocked[static_cast<std::size_t>(v)] = 1;
  if (find_a_path(g, zero, limits, &blocked)) {
    throw InternalError("a zero A-path avoids the frame cover");
  }
  result.outcome = Cover{result.x};
  return result;
}

}  // namespace gammapath
