#include "gammapath/oracles.hpp"

#include <cstdint>

#include "gammapath/error.hpp"

namespace gammapath::oracle {
namespace {

void extend(const LabelledGraph& g, const std::vector<char>* blocked, Walk& walk, std::vector<char>& on,
            std::vector<Walk>& out) {
  const int x = walk.back();
  for (const Incidence& inc : g.incident(x)) {
    const int y = inc.neighbor;
    if (on[static_cast<std::size_t>(y)]) continue;
    if (blocked && (*blocked)[static_cast<std::size_t>(y)]) continue;
    walk.vertices.push_back(y);
    walk.edges.push_back(inc.edge);
    if (g.is_terminal(y)) {
      if (y > walk.front()) out.push_back(walk);
    } else {
      on[static_cast<std::size_t>(y)] = 1;
      extend(g, blocked, walk, on, out);
      on[static_cast<std::size_t>(y)] = 0;
    }
    walk.vertices.pop_back();
    walk.edges.pop_back();
  }
}

}  // namespace

std::vector<Walk> all_a_paths(const LabelledGraph& g, const std::vector<char>* blocked) {
  std::vector<Walk> out;
  std::vector<char> on(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int a : g.terminals()) {
    if (blocked && (*blocked)[static_cast<std::size_t>(a)]) continue;
    Walk w{{a}, {}};
    on[static_cast<std::size_t>(a)] = 1;
    extend(g, blocked, w, on, out);
    on[static_cast<std::size_t>(a)] = 0;
  }
  return out;
}

std::size_t max_disjoint_by_subsets(const std::vector<std::vector<int>>& family) {
  const std::size_t m = family.size();
  if (m > 24) throw InvalidArgument("subset oracle limited to 24 members");
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << m); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    std::vector<int> seen;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      if (!(s >> i & 1U)) continue;
      for (int v : family[i]) {
        for (int u : seen) {
          if (u == v) ok = false;
        }
        seen.push_back(v);
      }
    }
    if (ok) best = size;
  }
  return best;
}

std::size_t min_hitting_by_subsets(const std::vector<std::vector<int>>& family, int num_vertices) {
  if (num_vertices > 24) throw InvalidArgument("subset oracle limited to 24 vertices");
  std::size_t best = static_cast<std::size_t>(num_vertices) + 1;
  for (std::uint32_t s = 0; s < (1U << num_vertices); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size >= best) continue;
    bool hits_all = true;
    for (const auto& f : family) {
      bool hit = false;
      for (int v : f) hit = hit || (s >> v & 1U);
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) best = size;
  }
  return best;
}

}  // namespace gammapath::oracle
