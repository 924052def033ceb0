#ifndef GAMMAPATH_RANDOM_INSTANCES_HPP_
#define GAMMAPATH_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "gammapath/graph.hpp"

namespace gammapath {

// Seed for instance `index` of stream `stream` under a run seed.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin(double p);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct RandomGraphShape {
  int min_vertices = 3;
  int max_vertices = 10;
  int extra_edges_min = 0;  // edges beyond n - 1
  int extra_edges_max = 4;
  int min_terminals = 2;
  int max_terminals = 4;
};

// A connected-ish random multigraph: a random spanning tree plus extra
// random edges (parallel edges allowed, loops never), uniformly random
// labels, random tails in the directed model, and a random terminal set.
LabelledGraph random_graph(InstanceRng& rng, std::shared_ptr<const Group> group, Model model,
                           const RandomGraphShape& shape);

// Random 3-connected simple graph on n vertices: K_n with random edges
// removed while 3-connectivity survives. Labels all zero.
LabelledGraph random_three_connected(InstanceRng& rng, std::shared_ptr<const Group> group, int n);

// Random element, uniform over the finite group.
Elem random_element(InstanceRng& rng, const Group& group);

}  // namespace gammapath

#endif  // GAMMAPATH_RANDOM_INSTANCES_HPP_
