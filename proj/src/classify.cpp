#include "gammapath/classify.hpp"

#include <algorithm>
#include <set>

#include "gammapath/error.hpp"

namespace gammapath {
namespace {

void require_abelian(const Group& group) {
  if (!group.is_abelian()) {
    throw InvalidArgument("undirected-model classification requires an abelian group");
  }
}

bool is_power_of(std::size_t n, std::size_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

bool classify_zero_path_ep(const Group& group) {
  require_abelian(group);
  if (!group.is_finite()) return false;
  if (group.is_elementary_abelian_2()) return true;
  const auto& d = group.invariant_factors();
  return d.size() == 1 && (d[0] == 4 || is_prime(d[0]));
}

bool classify_ell_path_ep_by_list(const Group& group, const Elem& ell) {
  require_abelian(group);
  group.require(ell);
  if (!group.is_finite()) return false;
  const auto& d = group.invariant_factors();
  if (group.is_elementary_abelian_2() && group.is_zero(ell)) return true;
  if (d.size() == 1 && d[0] == 4) {
    // In Z/4 the elements 0 and 2 are exactly those with 2x = 0.
    return group.is_zero(group.add(ell, ell));
  }
  return d.size() == 1 && is_prime(d[0]);
}

bool classify_ell_path_ep_by_reduction(const Group& group, const Elem& ell) {
  require_abelian(group);
  group.require(ell);
  if (!group.is_finite()) return false;
  if (group.is_zero(ell)) return !find_bad_pair(group).has_value();

  const auto elements = group.elements();
  for (const Elem& g : elements) {
    if (!group.is_zero(g) && !group.subgroup_contains(g, ell)) return false;
  }

  // ell lies in every nonzero cyclic subgroup from here on.
  const std::int64_t p = *group.element_order(ell);
  if (!is_prime(p)) {
    throw InternalError("ell lies in every cyclic subgroup but has composite order");
  }
  const std::size_t n = group.order();
  if (!is_power_of(n, static_cast<std::size_t>(p))) {
    throw InternalError("ell lies in every cyclic subgroup but the group is not a p-group");
  }
  std::size_t order_p = 0;
  bool has_generator = false;
  for (const Elem& g : elements) {
    const std::int64_t o = *group.element_order(g);
    if (o == p) ++order_p;
    if (static_cast<std::size_t>(o) == n) has_generator = true;
  }
  if (order_p != static_cast<std::size_t>(p - 1)) {
    throw InternalError("subgroup of order p is not unique");
  }
  if (!has_generator) {
    throw InternalError("abelian p-group with a unique subgroup of order p is not cyclic");
  }
  if (n == 2) return true;  // odd A-paths
  if (!group.find_halving(ell)) {
    throw InternalError("no halving of ell in a cyclic p-group other than Z/2");
  }
  return !find_bad_pair(group).has_value();
}

bool classify_ell_path_ep(const Group& group, const Elem& ell) {
  const bool by_list = classify_ell_path_ep_by_list(group, ell);
  const bool by_reduction = classify_ell_path_ep_by_reduction(group, ell);
  if (by_list != by_reduction) {
    throw InternalError("ell-path classification: list and reduction disagree for " +
                        group.describe() + ", ell = " + group.format(ell));
  }
  return by_list;
}

std::int64_t quotient_coset_order(const Group& group, const Elem& g1, const Elem& g2) {
  const auto sub = group.cyclic_subgroup(g2);
  const std::set<Elem> h(sub.begin(), sub.end());
  std::int64_t k = 1;
  Elem x = g1;
  while (!h.contains(x)) {
    x = group.add(x, g1);
    ++k;
  }
  return k;
}

bool is_bad_pair(const Group& group, const Elem& g1, const Elem& g2) {
  require_abelian(group);
  if (!group.is_finite()) throw InvalidArgument("bad pairs are defined for finite groups");
  if (group.is_zero(g1) || group.is_zero(g2)) return false;
  return quotient_coset_order(group, g1, g2) > 2;
}

std::string to_string(BadPairCase c) {
  switch (c) {
    case BadPairCase::kOddPrimeDivisor:
      return "odd_prime_divisor";
    case BadPairCase::kCyclicTwoGroup:
      return "cyclic_2_group";
    case BadPairCase::kNoncyclicTwoGroup:
      return "noncyclic_2_group";
  }
  return "unknown";
}

std::optional<BadPair> find_bad_pair(const Group& group) {
  require_abelian(group);
  if (!group.is_finite()) throw InvalidArgument("find_bad_pair requires a finite group");
  const std::size_t n = group.order();
  const auto elements = group.elements();

  BadPairCase reason;
  std::int64_t suggested_order;
  std::int64_t odd = 0;
  for (auto [p, e] : factorize(static_cast<std::int64_t>(n))) {
    if (p > 2) {
      odd = p;
      break;
    }
  }
  if (odd != 0) {
    reason = BadPairCase::kOddPrimeDivisor;
    suggested_order = odd;
  } else {
    const bool cyclic = std::any_of(elements.begin(), elements.end(), [&](const Elem& g) {
      return static_cast<std::size_t>(*group.element_order(g)) == n;
    });
    reason = cyclic ? BadPairCase::kCyclicTwoGroup : BadPairCase::kNoncyclicTwoGroup;
    suggested_order = cyclic ? 8 : 4;
  }

  std::vector<Elem> preferred;
  std::vector<Elem> others;
  for (const Elem& g : elements) {
    if (group.is_zero(g)) continue;
    (*group.element_order(g) == suggested_order ? preferred : others).push_back(g);
  }
  for (const auto* pool : {&preferred, &others}) {
    for (const Elem& g1 : *pool) {
      for (const Elem& g2 : elements) {
        if (is_bad_pair(group, g1, g2)) return BadPair{g1, g2, reason};
      }
    }
  }
  return std::nullopt;
}

}  // namespace gammapath
