#ifndef GAMMAPATH_FANS_HPP_
#define GAMMAPATH_FANS_HPP_

#include <array>

#include "gammapath/graph.hpp"

namespace gammapath {

// Given a nonzero cycle C (closed walk, front == back) disjoint from A and
// three disjoint nontrivial paths, each running from a vertex of A to a
// vertex of C and otherwise avoiding A and C, returns a nonzero A-path inside
// their union. The six candidates (three fan pairs, both arcs of C) are tried
// in order: pairs (0,1), (0,2), (1,2); forward arc of C first.
//
// Undirected model only. InvalidArgument on a malformed configuration;
// InternalError if no candidate is nonzero.
PathWitness nonzero_a_path_from_fans(const LabelledGraph& g, const Walk& cycle,
                                     const std::array<Walk, 3>& fans);

}  // namespace gammapath

#endif  // GAMMAPATH_FANS_HPP_
