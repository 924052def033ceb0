#include "gammapath/blocks.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gammapath/error.hpp"
#include "gammapath/paths.hpp"

namespace gammapath {
namespace {

bool reachable_without(const LabelledGraph& g, int from, int to, const std::vector<char>& removed) {
  std::vector<char> seen(removed);
  std::deque<int> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == to) return true;
    for (const Incidence& inc : g.incident(x)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return false;
}

bool adjacent(const LabelledGraph& g, int u, int v) {
  for (const Incidence& inc : g.incident(u)) {
    if (inc.neighbor == v) return true;
  }
  return false;
}

// Bron–Kerbosch with pivoting over a dense adjacency matrix.
void maximal_cliques(const std::vector<std::vector<char>>& adj, std::vector<int>& r,
                     std::vector<int> p, std::vector<int> x,
                     std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* pool : {&p, &x}) {
    for (int u : *pool) {
      std::size_t c = 0;
      for (int v : p) c += adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ? 1 : 0;
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p) {
    if (!adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) candidates.push_back(v);
  }
  for (int v : candidates) {
    std::vector<int> np;
    std::vector<int> nx;
    for (int w : p) {
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) np.push_back(w);
    }
    for (int w : x) {
      if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) nx.push_back(w);
    }
    r.push_back(v);
    maximal_cliques(adj, r, std::move(np), std::move(nx), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

bool is_connected_without(const LabelledGraph& g, const std::vector<char>& removed) {
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<char> seen(removed);
  std::deque<int> queue{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int count = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    ++count;
    for (const Incidence& inc : g.incident(x)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return count == remaining;
}

bool is_three_connected(const LabelledGraph& g) {
  const int n = g.num_vertices();
  if (n < 4) return false;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  if (!is_connected_without(g, removed)) return false;
  for (int a = 0; a < n; ++a) {
    removed[static_cast<std::size_t>(a)] = 1;
    if (!is_connected_without(g, removed)) return false;
    for (int b = a + 1; b < n; ++b) {
      removed[static_cast<std::size_t>(b)] = 1;
      const bool ok = is_connected_without(g, removed);
      removed[static_cast<std::size_t>(b)] = 0;
      if (!ok) return false;
    }
    removed[static_cast<std::size_t>(a)] = 0;
  }
  return true;
}

bool separable_by_two(const LabelledGraph& g, int u, int v) {
  if (adjacent(g, u, v)) return false;
  const int n = g.num_vertices();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  if (!reachable_without(g, u, v, removed)) return true;
  for (int a = 0; a < n; ++a) {
    if (a == u || a == v) continue;
    removed[static_cast<std::size_t>(a)] = 1;
    if (!reachable_without(g, u, v, removed)) return true;
    for (int b = a + 1; b < n; ++b) {
      if (b == u || b == v) continue;
      removed[static_cast<std::size_t>(b)] = 1;
      const bool reach = reachable_without(g, u, v, removed);
      removed[static_cast<std::size_t>(b)] = 0;
      if (!reach) return true;
    }
    removed[static_cast<std::size_t>(a)] = 0;
  }
  return false;
}

std::vector<std::vector<int>> three_block_vertex_sets(const LabelledGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const char ok = separable_by_two(g, u, v) ? 0 : 1;
      adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = ok;
      adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = ok;
    }
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  maximal_cliques(adj, r, all, {}, cliques);
  std::vector<std::vector<int>> out;
  for (auto& c : cliques) {
    if (c.size() < 3) continue;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ThreeBlock> three_blocks(const LabelledGraph& g, const Limits& limits) {
  if (g.directed()) throw InvalidArgument("labelled 3-blocks require the undirected model");
  limits.validate();
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<ThreeBlock> out;
  for (auto& b : three_block_vertex_sets(g)) {
    std::vector<char> in_b(n, 0);
    for (int v : b) in_b[static_cast<std::size_t>(v)] = 1;

    std::vector<EdgeSpec> block_edges;
    EdgeId next_id = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        std::set<Elem> weights;
        std::size_t count = 0;
        bool overflow = false;
        auto outcome = for_each_terminal_path(
            g, in_b, nullptr, limits,
            [&](const Walk&, const Elem& w) {
              if (++count > limits.max_paths) {
                overflow = true;
                return Visit::kStop;
              }
              weights.insert(w);
              return Visit::kContinue;
            },
            b[i], b[j]);
        if (overflow || outcome.truncated) {
          throw LimitExceeded("B-path weight enumeration exceeded the limits");
        }
        for (const Elem& w : weights) {
          block_edges.push_back({next_id++, g.vertex_id(b[i]), g.vertex_id(b[j]), w, std::nullopt});
        }
      }
    }
    std::vector<VertexId> ids;
    std::vector<VertexId> terminals;
    for (int v : b) {
      ids.push_back(g.vertex_id(v));
      if (g.is_terminal(v)) terminals.push_back(g.vertex_id(v));
    }
    LabelledGraph block(g.group_ptr(), Model::kUndirected, ids, terminals, std::move(block_edges));

    std::vector<Bridge> bridges;
    std::vector<char> seen(in_b);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      Bridge br;
      std::set<int> attach;
      std::set<int> edges;
      std::deque<int> queue{static_cast<int>(s)};
      seen[s] = 1;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        br.interior.push_back(x);
        for (const Incidence& inc : g.incident(x)) {
          edges.insert(inc.edge);
          if (in_b[static_cast<std::size_t>(inc.neighbor)]) {
            attach.insert(inc.neighbor);
          } else if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
            seen[static_cast<std::size_t>(inc.neighbor)] = 1;
            queue.push_back(inc.neighbor);
          }
        }
      }
      std::sort(br.interior.begin(), br.interior.end());
      br.attachments.assign(attach.begin(), attach.end());
      br.edges.assign(edges.begin(), edges.end());
      bridges.push_back(std::move(br));
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      if (in_b[static_cast<std::size_t>(edge.u)] && in_b[static_cast<std::size_t>(edge.v)]) {
        bridges.push_back(Bridge{{}, {std::min(edge.u, edge.v), std::max(edge.u, edge.v)}, {e}});
      }
    }
    out.push_back(ThreeBlock{std::move(b), std::move(block), std::move(bridges)});
  }
  return out;
}

}  // namespace gammapath
