#ifndef GAMMAPATH_ORACLES_HPP_
#define GAMMAPATH_ORACLES_HPP_

#include <vector>

#include "gammapath/graph.hpp"

namespace gammapath::oracle {

// Plain recursive A-path listing, independent of the pruned searches in the
// library: every simple path between two distinct terminals with no
// terminal inside, each reported once from its smaller end. No length
// bound; use on small graphs only.
std::vector<Walk> all_a_paths(const LabelledGraph& g, const std::vector<char>* blocked = nullptr);

// Largest number of pairwise disjoint sets, by trying every subfamily from
// the largest size down. Exponential in the family size.
std::size_t max_disjoint_by_subsets(const std::vector<std::vector<int>>& family);

// Smallest hitting set size, by trying every vertex subset in order of size.
// Exponential in num_vertices.
std::size_t min_hitting_by_subsets(const std::vector<std::vector<int>>& family, int num_vertices);

}  // namespace gammapath::oracle

#endif  // GAMMAPATH_ORACLES_HPP_
