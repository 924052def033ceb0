#ifndef GAMMAPATH_CYCLE_CHAIN_HPP_
#define GAMMAPATH_CYCLE_CHAIN_HPP_

#include <optional>
#include <set>
#include <vector>

#include "gammapath/graph.hpp"

namespace gammapath {

// Weights only: gamma(P) and the deltas alpha_i = gamma(Q_i) - gamma(P_i).
struct AbstractChain {
  Elem core_weight;
  std::vector<Elem> deltas;
};

// A core A-path P with detours Q_1..Q_l. Each detour is stored in the
// direction of P, and its interval is the stretch of P between its ends,
// given as positions start < end along P.
struct CycleChain {
  PathWitness core;
  std::vector<Walk> detours;
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
  std::vector<Elem> deltas;

  std::size_t length() const noexcept { return detours.size(); }
  bool is_nonzero(const Group& group) const;
  AbstractChain abstract() const { return {core.weight, deltas}; }
};

// Validates the geometry (core is an A-path; detours nontrivial, pairwise
// disjoint, meeting P exactly in their two ends and avoiding A; intervals
// pairwise disjoint) and computes intervals and deltas. Abelian groups only.
// Detours may be given in either direction.
CycleChain make_cycle_chain(const LabelledGraph& g, const Walk& core, std::vector<Walk> detours);

// Every weight gamma(P) + sum over S of alpha_i, S ranging over subsets.
std::set<Elem> reachable_weights(const Group& group, const AbstractChain& chain);

// Lexicographically smallest index set S (sorted) with
// gamma(P) + sum_{i in S} alpha_i = target, via a suffix subset-sum table.
std::optional<std::vector<std::size_t>> reroute_subset(const Group& group, const AbstractChain& chain,
                                                       const Elem& target);

// The core with P_i replaced by Q_i for i in the subset.
PathWitness apply_reroute(const LabelledGraph& g, const CycleChain& chain,
                          const std::vector<std::size_t>& subset);

std::optional<PathWitness> reroute_to_weight(const LabelledGraph& g, const CycleChain& chain,
                                             const Elem& target);

// Zero A-path from a nonzero chain of length at least p - 1 over Z/p.
// InternalError if the rerouting fails.
std::vector<std::size_t> zero_subset_from_chain(const Group& group, const AbstractChain& chain);
PathWitness zero_a_path_from_chain(const LabelledGraph& g, const CycleChain& chain);

struct SharpnessWitness {
  LabelledGraph graph;
  CycleChain chain;
};

// Ladder over Z/p: core a, x_0, ..., x_{2m-1}, b with m = p - 2, the first
// edge labelled 1; rung i runs x_{2i} - y_i - x_{2i+1} with labels 1, 0 in
// parallel to the core edge x_{2i} x_{2i+1}. So gamma(P) = 1 and every
// alpha_i = 1, and no rerouting reaches 0 (checked before returning).
SharpnessWitness sharpness_witness(std::int64_t p);

}  // namespace gammapath

#endif  // GAMMAPATH_CYCLE_CHAIN_HPP_
