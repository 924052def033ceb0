#include "gammapath/fans.hpp"

#include <algorithm>
#include <set>

#include "gammapath/error.hpp"

namespace gammapath {
namespace {

// Arc of the cycle (given as m positions with vertices[m] == vertices[0])
// from position i to position j, walking forward or backward.
Walk arc(const Walk& cycle, std::size_t i, std::size_t j, bool forward) {
  const std::size_t m = cycle.edges.size();
  Walk out;
  out.vertices.push_back(cycle.vertices[i]);
  std::size_t p = i;
  while (p != j) {
    if (forward) {
      out.edges.push_back(cycle.edges[p]);
      p = (p + 1) % m;
    } else {
      const std::size_t q = (p + m - 1) % m;
      out.edges.push_back(cycle.edges[q]);
      p = q;
    }
    out.vertices.push_back(cycle.vertices[p]);
  }
  return out;
}

void append(Walk& into, const Walk& tail) {
  into.vertices.insert(into.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  into.edges.insert(into.edges.end(), tail.edges.begin(), tail.edges.end());
}

}  // namespace

PathWitness nonzero_a_path_from_fans(const LabelledGraph& g, const Walk& cycle,
                                     const std::array<Walk, 3>& fans) {
  if (g.directed()) throw InvalidArgument("the fan construction uses the undirected model");
  const Group& group = g.group();

  const std::size_t m = cycle.edges.size();
  if (m < 2 || cycle.vertices.size() != m + 1 || cycle.front() != cycle.back()) {
    throw InvalidArgument("cycle must be a closed walk of length at least 2");
  }
  Walk open{{cycle.vertices.begin(), cycle.vertices.end() - 1}, {}};
  if (!is_simple(open)) throw InvalidArgument("cycle repeats a vertex");
  std::set<int> cycle_edges(cycle.edges.begin(), cycle.edges.end());
  if (cycle_edges.size() != m) throw InvalidArgument("cycle repeats an edge");
  const Elem cw = walk_weight(g, cycle);
  if (group.is_zero(cw)) throw InvalidArgument("cycle weight must be nonzero");

  std::vector<char> on_cycle(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : open.vertices) {
    if (g.is_terminal(v)) throw InvalidArgument("cycle must avoid A");
    on_cycle[static_cast<std::size_t>(v)] = 1;
  }

  std::array<std::size_t, 3> position{};
  std::set<int> used;
  for (std::size_t f = 0; f < 3; ++f) {
    const Walk& fan = fans[f];
    walk_weight(g, fan);
    if (fan.length() == 0) throw InvalidArgument("fans must be nontrivial");
    if (!is_simple(fan)) throw InvalidArgument("fan repeats a vertex");
    if (!g.is_terminal(fan.front())) throw InvalidArgument("fan must start in A");
    if (!on_cycle[static_cast<std::size_t>(fan.back())]) throw InvalidArgument("fan must end on the cycle");
    for (std::size_t i = 1; i < fan.vertices.size(); ++i) {
      const int v = fan.vertices[i];
      if (g.is_terminal(v)) throw InvalidArgument("fan meets A twice");
      if (i + 1 < fan.vertices.size() && on_cycle[static_cast<std::size_t>(v)]) {
        throw InvalidArgument("fan meets the cycle before its end");
      }
    }
    for (int v : fan.vertices) {
      if (!used.insert(v).second) throw InvalidArgument("fans are not disjoint");
    }
    position[f] = static_cast<std::size_t>(
        std::find(open.vertices.begin(), open.vertices.end(), fan.back()) - open.vertices.begin());
  }

  constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : kPairs) {
    for (bool forward : {true, false}) {
      Walk candidate = fans[static_cast<std::size_t>(i)];
      append(candidate, arc(cycle, position[static_cast<std::size_t>(i)],
                            position[static_cast<std::size_t>(j)], forward));
      append(candidate, reversed(fans[static_cast<std::size_t>(j)]));
      PathWitness w = make_witness(g, std::move(candidate));
      if (!group.is_zero(w.weight)) {
        validate_a_path(g, w);
        return w;
      }
    }
  }
  throw InternalError("no nonzero A-path among the six fan candidates");
}

}  // namespace gammapath
