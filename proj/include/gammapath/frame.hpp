#ifndef GAMMAPATH_FRAME_HPP_
#define GAMMAPATH_FRAME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"
#include "gammapath/packing.hpp"

namespace gammapath {

// A subtree of the host graph given by its edge indices.
struct ATree {
  std::vector<int> edges;
};

struct TreeShape {
  std::vector<int> vertices;  // sorted
  std::vector<int> leaves;    // degree-1 vertices, sorted
  std::vector<int> degree;    // degree in the tree, indexed by host vertex (0 outside)
};

// Vertices, leaves and degrees of an edge set that is assumed to be a tree.
TreeShape tree_shape(const LabelledGraph& g, const ATree& t);

// Empty string if t is a tree whose leaves are exactly its vertices in A,
// with maximum degree at most 3 when `subcubic` is set.
std::string a_tree_violation(const LabelledGraph& g, const ATree& t, bool subcubic = true);

// Unique path from `from` to `to` inside the tree.
Walk tree_path(const LabelledGraph& g, const ATree& t, int from, int to);

// Largest c with leaves >= (2c - 1)·order + 1, found by counting up.
int tree_capacity(std::size_t leaves, std::size_t group_order);

// Zero A-path in a subcubic A-tree with at least |Γ|+1 leaves. Among the
// first |Γ|+1 leaves (by id) it takes the first pair (in lexicographic
// order) whose paths from v have equal weight and returns the tree path
// between them. Without v the smallest internal vertex is used. Directed
// model over a finite group.
PathWitness base_zero_path(const LabelledGraph& g, const ATree& t, std::optional<int> v = std::nullopt);

// k disjoint zero A-paths in a subcubic A-tree with at least (2k-1)|Γ|+1
// leaves, by peeling off a branch at a degree-3 vertex and recursing.
std::vector<PathWitness> extract_zero_paths(const LabelledGraph& g, const ATree& t, int k);

enum class AuditKind { kNewComponent, kAttach };

struct AuditStep {
  AuditKind kind;
  int component;
  Walk path;             // the added path (new component, or from its A-end to the attach vertex)
  int attach_vertex = -1;
};

struct ForestComponent {
  ATree tree;
  PathWitness witness;  // a zero A-path inside the component
  TreeShape shape;
  int capacity = 0;     // k_i
};

struct FrameOptions {
  bool check_invariants = false;  // re-validate the forest after every step
};

struct FrameResult {
  PackOrCover outcome;
  std::vector<ForestComponent> forest;
  std::vector<int> x;  // vertices of degree 1 or 3 in the forest
  std::vector<AuditStep> audit;
  std::size_t cover_bound = 0;           // 6(k-1)|Γ|
  bool empty_cover_degenerate = false;   // k = 1 with an empty forest, where the bound reads 0 < 0
};

// Either k disjoint zero A-paths or a set X with |X| < 6(k-1)|Γ| meeting
// every zero A-path. Directed model, finite group, k >= 1. Both conclusions
// are checked before returning and violations raise InternalError.
FrameResult frame_pack_or_cover(const LabelledGraph& g, int k, const Limits& limits,
                                const FrameOptions& options = {});

std::string to_string(AuditKind kind);

}  // namespace gammapath

#endif  // GAMMAPATH_FRAME_HPP_
