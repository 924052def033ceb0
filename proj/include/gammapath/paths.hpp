#ifndef GAMMAPATH_PATHS_HPP_
#define GAMMAPATH_PATHS_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"

namespace gammapath {

enum class FilterKind { kAll, kNonzero, kWeight };

struct PathFilter {
  FilterKind kind = FilterKind::kAll;
  Elem weight;  // kWeight only

  static PathFilter all() { return {}; }
  static PathFilter nonzero() { return {FilterKind::kNonzero, {}}; }
  static PathFilter with_weight(Elem w) { return {FilterKind::kWeight, std::move(w)}; }
};

// In the directed model a path has weight ell when either traversal has
// weight ell; the witness is then oriented along that traversal.
// Returns false if the path does not pass the filter.
bool apply_filter(const LabelledGraph& g, const PathFilter& filter, PathWitness& candidate);

struct PathEnumeration {
  std::vector<PathWitness> paths;
  bool exhaustive = true;
};

enum class Visit { kContinue, kStop };

struct SearchOutcome {
  bool truncated = false;  // the length bound cut at least one branch
  bool stopped = false;    // the visitor asked to stop
};

// Depth-first visit of every simple path whose two endpoints are marked in
// `terminal`, whose internal vertices are unmarked, and which avoids every
// vertex marked in `blocked` (may be null). Paths are reported once, from
// the smaller endpoint, in lexicographic order of vertex sequences. With
// `only_start`/`only_end` set the search is restricted to those endpoints and
// paths are reported from `only_start`.
SearchOutcome for_each_terminal_path(
    const LabelledGraph& g, const std::vector<char>& terminal, const std::vector<char>* blocked,
    const Limits& limits, const std::function<Visit(const Walk&, const Elem&)>& visit,
    std::optional<int> only_start = std::nullopt, std::optional<int> only_end = std::nullopt);

// All A-paths passing the filter, up to limits. With require_exhaustive set
// a truncated enumeration throws LimitExceeded instead of returning.
PathEnumeration enumerate_a_paths(const LabelledGraph& g, const PathFilter& filter,
                                  const Limits& limits, bool require_exhaustive = true,
                                  const std::vector<char>* blocked = nullptr);

// First A-path (lexicographic order) passing the filter and avoiding
// `blocked`. Throws LimitExceeded if none was found but the search was cut.
std::optional<PathWitness> find_a_path(const LabelledGraph& g, const PathFilter& filter,
                                       const Limits& limits,
                                       const std::vector<char>* blocked = nullptr);

}  // namespace gammapath

#endif  // GAMMAPATH_PATHS_HPP_
