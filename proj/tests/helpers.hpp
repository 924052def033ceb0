#ifndef GAMMAPATH_TESTS_HELPERS_HPP_
#define GAMMAPATH_TESTS_HELPERS_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/group.hpp"

namespace testing_support {

using namespace gammapath;

inline std::shared_ptr<const Group> zmod(std::int64_t m) { return std::make_shared<const Group>(Group::cyclic(m)); }

inline Elem c(std::int64_t x) { return Elem::from_coords({x}); }
inline Elem c2(std::int64_t x, std::int64_t y) { return Elem::from_coords({x, y}); }

struct E {
  VertexId u;
  VertexId v;
  Elem label;
  std::optional<VertexId> tail = std::nullopt;
};

// Graph with vertices 0..n-1 and edge ids in list order.
inline LabelledGraph make_graph(std::shared_ptr<const Group> group, Model model, int n, std::vector<VertexId> a,
                                const std::vector<E>& edges) {
  std::vector<VertexId> vs;
  for (int i = 0; i < n; ++i) vs.push_back(i);
  std::vector<EdgeSpec> specs;
  EdgeId id = 0;
  for (const E& e : edges) {
    EdgeSpec s{id++, e.u, e.v, e.label, std::nullopt};
    if (model == Model::kDirected) s.tail = e.tail.value_or(e.u);
    specs.push_back(std::move(s));
  }
  return LabelledGraph(std::move(group), model, vs, std::move(a), std::move(specs));
}

// Walk from a vertex sequence, taking the smallest-id edge between
// consecutive vertices.
inline Walk walk_of(const LabelledGraph& g, const std::vector<int>& vertices) {
  Walk w{vertices, {}};
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    for (const Incidence& inc : g.incident(vertices[i])) {
      if (inc.neighbor == vertices[i + 1]) {
        w.edges.push_back(inc.edge);
        break;
      }
    }
  }
  return w;
}

}  // namespace testing_support

#endif  // GAMMAPATH_TESTS_HELPERS_HPP_
