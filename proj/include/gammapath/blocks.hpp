#ifndef GAMMAPATH_BLOCKS_HPP_
#define GAMMAPATH_BLOCKS_HPP_

#include <optional>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"

namespace gammapath {

// Connectivity of the graph with the marked vertices deleted. The empty
// graph counts as connected.
bool is_connected_without(const LabelledGraph& g, const std::vector<char>& removed);

// At least four vertices and no deletion of at most two vertices disconnects.
bool is_three_connected(const LabelledGraph& g);

// Some set of at most two vertices other than u and v separates them.
bool separable_by_two(const LabelledGraph& g, int u, int v);

struct Bridge {
  std::vector<int> interior;     // component of G - B; empty for a single edge
  std::vector<int> attachments;  // vertices of B the bridge meets
  std::vector<int> edges;
};

struct ThreeBlock {
  std::vector<int> vertices;  // the set B, in the host graph's indices
  LabelledGraph block;        // one u-v edge per distinct weight of a B-path from u to v
  std::vector<Bridge> bridges;
};

// Maximal sets of at least three pairwise inseparable vertices, sorted.
std::vector<std::vector<int>> three_block_vertex_sets(const LabelledGraph& g);

// Labelled 3-blocks with their bridges. Undirected model only. LimitExceeded
// when B-path weight enumeration overflows the limits.
std::vector<ThreeBlock> three_blocks(const LabelledGraph& g, const Limits& limits);

}  // namespace gammapath

#endif  // GAMMAPATH_BLOCKS_HPP_
