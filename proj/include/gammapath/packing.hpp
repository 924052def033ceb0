#ifndef GAMMAPATH_PACKING_HPP_
#define GAMMAPATH_PACKING_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"

namespace gammapath {

enum class FamilyKind { kWeight, kNonzero, kOdd, kABA };

// A family of A-paths in a fixed graph.
//
//   Weight(l)  A-paths of weight l (directed model: in either traversal)
//   Nonzero    A-paths of nonzero weight
//   Odd        A-paths with an odd number of edges; witnesses carry their
//              parity as an element of Z/2, labels of the host are ignored
//   ABA(B)     A-paths through a vertex of B, together with the one-vertex
//              path (a) for every a in A ∩ B
struct PathFamilySpec {
  FamilyKind kind = FamilyKind::kNonzero;
  Elem weight;         // kWeight
  std::vector<int> b;  // kABA, internal vertex indices

  static PathFamilySpec of_weight(Elem w) { return {FamilyKind::kWeight, std::move(w), {}}; }
  static PathFamilySpec nonzero() { return {FamilyKind::kNonzero, {}, {}}; }
  static PathFamilySpec odd() { return {FamilyKind::kOdd, {}, {}}; }
  static PathFamilySpec aba(std::vector<int> b) { return {FamilyKind::kABA, {}, std::move(b)}; }
};

// The shared two-element group used for the Odd family.
const std::shared_ptr<const Group>& z2_group();

// Copy of g over Z/2 with every label 1, undirected.
LabelledGraph parity_graph(const LabelledGraph& g);

// Every family member avoiding `blocked`, in lexicographic order of vertex
// sequences (trivial ABA members first). LimitExceeded if the enumeration
// does not finish within the limits.
std::vector<PathWitness> enumerate_family(const LabelledGraph& g, const PathFamilySpec& spec,
                                          const Limits& limits,
                                          const std::vector<char>* blocked = nullptr);

// Empty string if w is a member of the family, else the reason it is not.
std::string family_violation(const LabelledGraph& g, const PathFamilySpec& spec,
                             const PathWitness& w);

struct Packing {
  std::vector<PathWitness> paths;
};

struct Cover {
  std::vector<int> vertices;  // sorted internal indices
};

using PackOrCover = std::variant<Packing, Cover>;

struct PackingResult {
  std::size_t nu = 0;
  Packing packing;
  std::size_t family_size = 0;
};

struct CoverResult {
  std::size_t tau = 0;
  Cover cover;
  std::size_t family_size = 0;
};

// Exact maximum number of pairwise vertex-disjoint members.
PackingResult max_packing(const LabelledGraph& g, const PathFamilySpec& spec, const Limits& limits);

// Exact minimum size of a vertex set meeting every member.
CoverResult min_cover(const LabelledGraph& g, const PathFamilySpec& spec, const Limits& limits);

// The same two solvers on an explicit family of vertex sets (each a sorted
// list of vertex indices < num_vertices). The returned indices refer to the
// given family (packing) or to vertices (cover).
std::vector<std::size_t> max_disjoint_sets(const std::vector<std::vector<int>>& family,
                                           int num_vertices);
std::vector<int> min_hitting_set(const std::vector<std::vector<int>>& family, int num_vertices);

struct DualityReport {
  std::size_t nu = 0;
  std::size_t tau = 0;
  std::optional<double> ratio;  // tau / nu, absent when nu == 0
  bool bound_applies = false;   // whether tau <= 2 nu is guaranteed for this instance
  bool bound_holds = false;     // tau <= 2 nu
  Packing packing;
  Cover cover;
};

// Runs both oracles. For Odd and ABA, and for Nonzero in the directed model
// or over a group whose elements all satisfy 2g = 0, tau <= 2 nu holds for
// every graph; a violation there throws InternalError.
DualityReport duality_report(const LabelledGraph& g, const PathFamilySpec& spec,
                             const Limits& limits);

struct Reduction {
  LabelledGraph graph;
  std::vector<EdgeId> both_ends_in_a;  // edges shifted by -2g
};

// Subtracts g at every end of an edge that lies in A, turning weight-l
// A-paths (l = 2g) into weight-0 A-paths on the same vertex sequences.
// Undirected model only.
Reduction reduce_ell_to_zero(const LabelledGraph& g, const Elem& ell, const Elem& g_half);

// Verifies a packing (disjoint members) or a cover (the family is empty
// after deleting it). Empty string when valid.
std::string packing_violation(const LabelledGraph& g, const PathFamilySpec& spec,
                              const Packing& p);
std::string cover_violation(const LabelledGraph& g, const PathFamilySpec& spec, const Cover& c,
                            const Limits& limits);

}  // namespace gammapath

#endif  // GAMMAPATH_PACKING_HPP_
