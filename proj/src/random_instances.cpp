#include "gammapath/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "gammapath/blocks.hpp"
#include "gammapath/error.hpp"

namespace gammapath {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

std::int64_t InstanceRng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool InstanceRng::coin(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

Elem random_element(InstanceRng& rng, const Group& group) {
  return group.element_at(static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(group.order()) - 1)));
}

LabelledGraph random_graph(InstanceRng& rng, std::shared_ptr<const Group> group, Model model,
                           const RandomGraphShape& shape) {
  const int n = static_cast<int>(rng.between(shape.min_vertices, shape.max_vertices));
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<EdgeSpec> edges;
  EdgeId id = 0;
  auto add = [&](VertexId u, VertexId v) {
    EdgeSpec e{id++, u, v, random_element(rng, *group), std::nullopt};
    if (model == Model::kDirected) e.tail = rng.coin(0.5) ? u : v;
    edges.push_back(std::move(e));
  };
  for (VertexId v = 1; v < n; ++v) add(rng.between(0, v - 1), v);
  const auto extra = rng.between(shape.extra_edges_min, shape.extra_edges_max);
  for (std::int64_t i = 0; i < extra && n > 1; ++i) {
    const VertexId u = rng.between(0, n - 1);
    VertexId v = rng.between(0, n - 2);
    if (v >= u) ++v;
    add(u, v);
  }
  std::vector<VertexId> order = vertices;
  std::shuffle(order.begin(), order.end(), rng.engine());
  const auto t = std::min<std::int64_t>(n, rng.between(shape.min_terminals, shape.max_terminals));
  std::vector<VertexId> terminals(order.begin(), order.begin() + t);
  return LabelledGraph(std::move(group), model, vertices, terminals, std::move(edges));
}

LabelledGraph random_three_connected(InstanceRng& rng, std::shared_ptr<const Group> group, int n) {
  if (n < 4) throw InvalidArgument("3-connected graphs need at least 4 vertices");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng.engine());
  std::vector<VertexId> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);
  const Elem zero = group->zero();
  auto build = [&](const std::vector<std::pair<VertexId, VertexId>>& es) {
    std::vector<EdgeSpec> edges;
    EdgeId id = 0;
    for (auto [u, v] : es) edges.push_back({id++, u, v, zero, std::nullopt});
    return LabelledGraph(group, Model::kUndirected, vertices, {}, std::move(edges));
  };
  const auto removals = rng.between(0, static_cast<std::int64_t>(pairs.size()));
  std::vector<std::pair<VertexId, VertexId>> kept = pairs;
  std::int64_t removed = 0;
  for (std::size_t i = 0; i < pairs.size() && removed < removals; ++i) {
    auto trial = kept;
    trial.erase(std::find(trial.begin(), trial.end(), pairs[i]));
    if (is_three_connected(build(trial))) {
      kept = std::move(trial);
      ++removed;
    }
  }
  std::sort(kept.begin(), kept.end());
  return build(kept);
}

}  // namespace gammapath
