#ifndef GAMMAPATH_GADGETS_HPP_
#define GAMMAPATH_GADGETS_HPP_

#include <string>
#include <vector>

#include "gammapath/graph.hpp"
#include "gammapath/limits.hpp"

namespace gammapath {

enum class GadgetVariant { kGamma, kGammaPrime, kGammaDoublePrime };

std::string to_string(GadgetVariant v);

// The n×n grid on v_{i,j} (i the row, j the column) with pendant terminals
// u_i on v_{1,i} and w_i on v_{n,i}. Vertex ids: v_{i,j} = (i-1)n + (j-1),
// u_i = n² + i - 1, w_i = n² + n + i - 1. Edge ids: grid edges row by row
// (down edge, then right edge at each v_{i,j}), then the u-edges, then the
// w-edges. Directed builds orient u_i -> v_{1,i}, v_{n,i} -> w_i, and every
// other edge from its smaller to its larger id.
struct GridGadget {
  int n = 0;
  GadgetVariant variant = GadgetVariant::kGamma;
  LabelledGraph graph;
  Elem ell;                  // the family weight (0 for the prime variant)
  std::vector<Elem> g_seq;   // gamma: g_1..g_n
  Elem g;                    // double prime
  Elem g1, g2;               // prime
};

inline VertexId grid_vertex(int n, int i, int j) { return static_cast<VertexId>((i - 1) * n + (j - 1)); }
inline VertexId u_vertex(int n, int i) { return static_cast<VertexId>(n * n + i - 1); }
inline VertexId w_vertex(int n, int i) { return static_cast<VertexId>(n * n + n + i - 1); }

// g_1, g_2, ...: each the smallest positive integer outside
// {g_j, l - g_j, g_j ± l, g_j ± 2l} for every earlier j.
std::vector<BigInt> gamma_sequence(int n, const BigInt& ell);

GridGadget build_gamma_n(int n, const BigInt& ell, Model model);
GridGadget build_gamma_prime(int n, std::shared_ptr<const Group> group, const Elem& g1, const Elem& g2);
GridGadget build_gamma_doubleprime(int n, std::shared_ptr<const Group> group, const Elem& ell,
                                   const Elem& g);

struct GadgetCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GadgetReport {
  std::size_t family_size = 0;
  std::size_t nu = 0;
  std::size_t tau = 0;
  std::vector<int> cover;
  std::vector<GadgetCheck> checks;

  bool all_passed() const;
};

// Exhaustive checks on the weight-l family: at most one disjoint member,
// no cover below n, and the endpoint (and special-edge) pattern on every
// member. Failures are reported, not thrown.
GadgetReport verify_gadget(const GridGadget& gadget, const Limits& limits);

}  // namespace gammapath

#endif  // GAMMAPATH_GADGETS_HPP_
