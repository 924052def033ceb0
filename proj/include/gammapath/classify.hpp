#ifndef GAMMAPATH_CLASSIFY_HPP_
#define GAMMAPATH_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "gammapath/group.hpp"

namespace gammapath {

// Whether zero A-paths in undirected Γ-labelled graphs have the Erdős–Pósa
// property: Γ ≅ (Z/2)^k, Z/4, or Z/p. Z yields false. Nonabelian groups are
// rejected.
bool classify_zero_path_ep(const Group& group);

// Whether weight-ell A-paths in undirected Γ-labelled graphs have the
// Erdős–Pósa property. Computes the answer from the explicit list and by
// replaying the case reduction, and throws InternalError if they disagree.
bool classify_ell_path_ep(const Group& group, const Elem& ell);

// The explicit list: ((Z/2)^k, 0), (Z/4, {0,2}), (Z/p, anything).
bool classify_ell_path_ep_by_list(const Group& group, const Elem& ell);

// The case chain, evaluated on elements rather than on the invariant factors:
// ell == 0 defers to the bad-pair search; otherwise some g with ell ∉ <g>
// refutes; otherwise Γ must be a cyclic p-group in which ell has order p, and
// the answer is Z/2 or (after halving ell) the zero-path answer for Γ.
bool classify_ell_path_ep_by_reduction(const Group& group, const Elem& ell);

// Order of g1 + <g2> in Γ/<g2>.
std::int64_t quotient_coset_order(const Group& group, const Elem& g1, const Elem& g2);

// g1, g2 nonzero and the coset of g1 modulo <g2> has order greater than two.
bool is_bad_pair(const Group& group, const Elem& g1, const Elem& g2);

enum class BadPairCase {
  kOddPrimeDivisor,     // |Γ| has an odd prime divisor q and Γ ≇ Z/q
  kCyclicTwoGroup,      // cyclic 2-group of order >= 8
  kNoncyclicTwoGroup,   // noncyclic 2-group that is not elementary abelian
};

struct BadPair {
  Elem g1;
  Elem g2;
  BadPairCase reason;
};

std::string to_string(BadPairCase c);

// A pair witnessing that zero A-paths fail the Erdős–Pósa property, or
// nullopt exactly when classify_zero_path_ep holds. Each case first tries the
// g1 the case analysis suggests (order q, order 8, order 4 respectively) and
// the smallest admissible g2; if that suggestion admits no g2 (as in Z/9,
// where every nonzero subgroup contains the order-3 elements) the search
// widens to all nonzero g1.
std::optional<BadPair> find_bad_pair(const Group& group);

}  // namespace gammapath

#endif  // GAMMAPATH_CLASSIFY_HPP_
