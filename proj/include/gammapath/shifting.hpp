#ifndef GAMMAPATH_SHIFTING_HPP_
#define GAMMAPATH_SHIFTING_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"
#include "gammapath/paths.hpp"

namespace gammapath {

struct ShiftStep {
  int vertex;
  Elem value;
};

// Adds `value` (2·value = 0) to the label of every edge incident with `vertex`.
// Undirected model only.
LabelledGraph shift(const LabelledGraph& g, int vertex, const Elem& value);
LabelledGraph apply_shifts(const LabelledGraph& g, const std::vector<ShiftStep>& steps);

// Visits each simple cycle once as a closed walk (front == back). Two
// parallel edges form a cycle of length 2. Returns false if stopped.
bool for_each_simple_cycle(const LabelledGraph& g,
                           const std::function<Visit(const Walk&)>& visit);

// All simple cycles; LimitExceeded beyond `cap`.
std::vector<Walk> enumerate_simple_cycles(const LabelledGraph& g, std::size_t cap);

// Sum of labels along a cycle or path, ignoring orientation.
Elem undirected_weight(const LabelledGraph& g, const Walk& walk);

// A vertex potential phi with values of order <= 2 and label(uv) = phi(u) + phi(v)
// on every edge, if one exists.
std::optional<std::vector<Elem>> order_two_potential(const LabelledGraph& g);

// Every simple cycle has weight zero. Tries the potential first, then
// enumerates cycles (stopping at the first nonzero one).
bool is_gamma_bipartite(const LabelledGraph& g, std::size_t cycle_cap);

struct Normalization {
  std::vector<ShiftStep> shifts;  // increasing vertex order, nonzero values only
  LabelledGraph graph;            // the all-zero labelling
};

// Shift values turning a 3-connected Γ-bipartite graph into the zero
// labelling. Throws PreconditionFailed when either hypothesis fails.
Normalization normalize_to_zero(const LabelledGraph& g, const Limits& limits);

}  // namespace gammapath

#endif  // GAMMAPATH_SHIFTING_HPP_
