#include "gammapath/cycle_chain.hpp"

#include <algorithm>

#include "gammapath/error.hpp"

namespace gammapath {
namespace {

void require_finite_abelian(const Group& group) {
  if (!group.is_finite() || !group.is_abelian()) {
    throw InvalidArgument("cycle-chain rerouting needs a finite abelian group");
  }
}

Walk subwalk(const Walk& w, std::size_t from, std::size_t to) {
  return Walk{{w.vertices.begin() + static_cast<std::ptrdiff_t>(from),
               w.vertices.begin() + static_cast<std::ptrdiff_t>(to) + 1},
              {w.edges.begin() + static_cast<std::ptrdiff_t>(from),
               w.edges.begin() + static_cast<std::ptrdiff_t>(to)}};
}

// reach[i][r] says whether residual r (by rank) is a subset sum of deltas i..l-1.
std::vector<std::vector<char>> suffix_table(const Group& group, const AbstractChain& chain) {
  const std::size_t n = group.order();
  const std::size_t l = chain.deltas.size();
  std::vector<std::vector<char>> reach(l + 1, std::vector<char>(n, 0));
  reach[l][group.rank(group.zero())] = 1;
  for (std::size_t i = l; i-- > 0;) {
    reach[i] = reach[i + 1];
    for (std::size_t r = 0; r < n; ++r) {
      if (reach[i + 1][r]) reach[i][group.rank(group.add(group.element_at(r), chain.deltas[i]))] = 1;
    }
  }
  return reach;
}

}  // namespace

bool CycleChain::is_nonzero(const Group& group) const {
  return std::none_of(deltas.begin(), deltas.end(), [&](const Elem& d) { return group.is_zero(d); });
}

CycleChain make_cycle_chain(const LabelledGraph& g, const Walk& core, std::vector<Walk> detours) {
  const Group& group = g.group();
  if (!group.is_abelian()) throw InvalidArgument("cycle chains need an abelian group");
  CycleChain chain;
  chain.core = make_witness(g, core);
  validate_a_path(g, chain.core);

  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<long> position(n, -1);
  for (std::size_t i = 0; i < core.vertices.size(); ++i) position[static_cast<std::size_t>(core.vertices[i])] = static_cast<long>(i);

  std::vector<char> used(n, 0);
  std::vector<char> covered(core.vertices.size(), 0);
  for (std::size_t q = 0; q < detours.size(); ++q) {
    Walk& d = detours[q];
    const std::string tag = "detour " + std::to_string(q) + ": ";
    walk_weight(g, d);
    if (d.length() == 0) throw InvalidArgument(tag + "must be nontrivial");
    if (!is_simple(d)) throw InvalidArgument(tag + "repeats a vertex");
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
      const int v = d.vertices[i];
      const bool end = i == 0 || i + 1 == d.vertices.size();
      if (g.is_terminal(v)) throw InvalidArgument(tag + "meets A");
      if (end != (position[static_cast<std::size_t>(v)] >= 0)) {
        throw InvalidArgument(tag + "must meet the core exactly in its ends");
      }
      if (used[static_cast<std::size_t>(v)]) throw InvalidArgument(tag + "meets another detour");
      used[static_cast<std::size_t>(v)] = 1;
    }
    std::size_t s = static_cast<std::size_t>(position[static_cast<std::size_t>(d.front())]);
    std::size_t e = static_cast<std::size_t>(position[static_cast<std::size_t>(d.back())]);
    if (s > e) {
      d = reversed(d);
      std::swap(s, e);
    }
    if (d.length() == 1 && e == s + 1 && d.edges[0] == core.edges[s]) {
      throw InvalidArgument(tag + "coincides with the core edge");
    }
    for (std::size_t i = s; i <= e; ++i) {
      if (covered[i]) throw InvalidArgument(tag + "interval overlaps another interval");
      covered[i] = 1;
    }
    const Elem dq = walk_weight(g, d);
    const Elem dp = walk_weight(g, subwalk(core, s, e));
    chain.intervals.emplace_back(s, e);
    chain.deltas.push_back(group.sub(dq, dp));
  }
  chain.detours = std::move(detours);
  return chain;
}

std::set<Elem> reachable_weights(const Group& group, const AbstractChain& chain) {
  require_finite_abelian(group);
  const auto reach = suffix_table(group, chain);
  std::set<Elem> out;
  for (std::size_t r = 0; r < group.order(); ++r) {
    if (reach[0][r]) out.insert(group.add(chain.core_weight, group.element_at(r)));
  }
  return out;
}

std::optional<std::vector<std::size_t>> reroute_subset(const Group& group, const AbstractChain& chain,
                                                       const Elem& target) {
  require_finite_abelian(group);
  group.require(target);
  group.require(chain.core_weight);
  for (const Elem& d : chain.deltas) group.require(d);
  const auto reach = suffix_table(group, chain);
  Elem residual = group.sub(target, chain.core_weight);
  if (!reach[0][group.rank(residual)]) return std::nullopt;
  std::vector<std::size_t> subset;
  for (std::size_t i = 0; i < chain.deltas.size() && !group.is_zero(residual); ++i) {
    const Elem rest = group.sub(residual, chain.deltas[i]);
    if (reach[i + 1][group.rank(rest)]) {
      subset.push_back(i);
      residual = rest;
    }
  }
  if (!group.is_zero(residual)) throw InternalError("subset-sum reconstruction left a residual");
  return subset;
}

PathWitness apply_reroute(const LabelledGraph& g, const CycleChain& chain,
                          const std::vector<std::size_t>& subset) {
  std::vector<long> detour_at(chain.core.walk.vertices.size(), -1);
  for (std::size_t i : subset) {
    if (i >= chain.detours.size()) throw InvalidArgument("detour index out of range");
    detour_at[chain.intervals[i].first] = static_cast<long>(i);
  }
  const Walk& core = chain.core.walk;
  Walk out{{core.vertices.front()}, {}};
  std::size_t p = 0;
  while (p + 1 < core.vertices.size()) {
    if (detour_at[p] >= 0) {
      const std::size_t i = static_cast<std::size_t>(detour_at[p]);
      const Walk& d = chain.detours[i];
      out.vertices.insert(out.vertices.end(), d.vertices.begin() + 1, d.vertices.end());
      out.edges.insert(out.edges.end(), d.edges.begin(), d.edges.end());
      p = chain.intervals[i].second;
    } else {
      out.vertices.push_back(core.vertices[p + 1]);
      out.edges.push_back(core.edges[p]);
      ++p;
    }
  }
  PathWitness w = make_witness(g, std::move(out));
  validate_a_path(g, w);
  return w;
}

std::optional<PathWitness> reroute_to_weight(const LabelledGraph& g, const CycleChain& chain,
                                             const Elem& target) {
  const auto subset = reroute_subset(g.group(), chain.abstract(), target);
  if (!subset) return std::nullopt;
  PathWitness w = apply_reroute(g, chain, *subset);
  if (w.weight != target) throw InternalError("rerouted path misses the target weight");
  return w;
}

std::vector<std::size_t> zero_subset_from_chain(const Group& group, const AbstractChain& chain) {
  if (group.invariant_factors().size() != 1 || !is_prime(group.invariant_factors()[0])) {
    throw InvalidArgument("zero rerouting is guaranteed over Z/p only");
  }
  const std::size_t p = group.order();
  if (chain.deltas.size() + 1 < p) throw InvalidArgument("chain length must be at least p - 1");
  for (const Elem& d : chain.deltas) {
    if (group.is_zero(d)) throw InvalidArgument("chain is not nonzero");
  }
  auto s = reroute_subset(group, chain, group.zero());
  if (!s) throw InternalError("nonzero chain of length p - 1 failed to reach 0");
  return *s;
}

PathWitness zero_a_path_from_chain(const LabelledGraph& g, const CycleChain& chain) {
  const auto subset = zero_subset_from_chain(g.group(), chain.abstract());
  PathWitness w = apply_reroute(g, chain, subset);
  if (!g.group().is_zero(w.weight)) throw InternalError("rerouted path is not zero");
  return w;
}

SharpnessWitness sharpness_witness(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("sharpness family needs an odd prime");
  auto group = std::make_shared<const Group>(Group::cyclic(p));
  const Elem zero = group->zero();
  const Elem one = group->element_at(1);
  const std::int64_t m = p - 2;
  // Ids: a = 0, x_j = 1 + j, b = 2m + 1, y_i = 2m + 2 + i.
  const VertexId a = 0;
  const VertexId b = 2 * m + 1;
  std::vector<VertexId> vertices;
  for (VertexId v = 0; v < 3 * m + 2; ++v) vertices.push_back(v);
  std::vector<EdgeSpec> edges;
  EdgeId id = 0;
  for (VertexId v = 0; v < b; ++v) edges.push_back({id++, v, v + 1, v == 0 ? one : zero, std::nullopt});
  for (std::int64_t i = 0; i < m; ++i) {
    const VertexId y = 2 * m + 2 + i;
    edges.push_back({id++, 1 + 2 * i, y, one, std::nullopt});
    edges.push_back({id++, y, 2 + 2 * i, zero, std::nullopt});
  }
  LabelledGraph g(group, Model::kUndirected, vertices, {a, b}, std::move(edges));

  Walk core;
  for (VertexId v = 0; v <= b; ++v) {
    core.vertices.push_back(g.vertex_index(v));
    if (v < b) core.edges.push_back(g.edge_index(v));
  }
  std::vector<Walk> detours;
  for (std::int64_t i = 0; i < m; ++i) {
    const EdgeId first = b + 2 * i;
    detours.push_back(Walk{{g.vertex_index(1 + 2 * i), g.vertex_index(2 * m + 2 + i), g.vertex_index(2 + 2 * i)},
                           {g.edge_index(first), g.edge_index(first + 1)}});
  }
  CycleChain chain = make_cycle_chain(g, core, std::move(detours));
  if (chain.core.weight != one) throw InternalError("sharpness core weight is not 1");
  for (const Elem& d : chain.deltas) {
    if (d != one) throw InternalError("sharpness delta is not 1");
  }
  if (reroute_to_weight(g, chain, zero)) throw InternalError("sharpness chain reached 0");
  return SharpnessWitness{std::move(g), std::move(chain)};
}

}  // namespace gammapath
