#include "gammapath/packing.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "gammapath/error.hpp"
#include "gammapath/paths.hpp"

namespace gammapath {
namespace {

using Bits = boost::dynamic_bitset<>;

Bits mask_of(const std::vector<int>& vertices, int n) {
  Bits b(static_cast<std::size_t>(n));
  for (int v : vertices) {
    if (v < 0 || v >= n) throw InvalidArgument("set element out of range");
    b.set(static_cast<std::size_t>(v));
  }
  return b;
}

// Inclusion-minimal distinct members of a set family. Replacing a member by
// a subset never hurts a packing, and a hitting set for the minimal members
// hits every member, so both solvers may work on this reduced system.
struct SetSystem {
  std::vector<Bits> sets;
  std::vector<std::size_t> origin;
};

SetSystem minimal_sets(const std::vector<std::vector<int>>& family, int n) {
  std::vector<Bits> masks;
  masks.reserve(family.size());
  for (const auto& f : family) masks.push_back(mask_of(f, n));
  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return masks[a].count() < masks[b].count();
  });
  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t k : kept) {
      if (masks[k].is_subset_of(masks[i])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  SetSystem s;
  for (std::size_t i : kept) {
    s.sets.push_back(std::move(masks[i]));
    s.origin.push_back(i);
  }
  return s;
}

class DisjointSetSolver {
 public:
  explicit DisjointSetSolver(const SetSystem& s) : s_(s), m_(s.sets.size()) {
    conflict_.assign(m_, Bits(m_));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i + 1; j < m_; ++j) {
        if (s_.sets[i].intersects(s_.sets[j])) {
          conflict_[i].set(j);
          conflict_[j].set(i);
        }
      }
    }
  }

  std::vector<std::size_t> solve() {
    greedy();
    Bits cand(m_);
    cand.set();
    search(cand);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void greedy() {
    std::vector<std::size_t> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return s_.sets[a].count() < s_.sets[b].count();
    });
    Bits used(s_.sets.empty() ? 0 : s_.sets[0].size());
    for (std::size_t i : order) {
      if (!s_.sets[i].intersects(used)) {
        used |= s_.sets[i];
        best_.push_back(i);
      }
    }
  }

  // Members in cand use disjoint vertices, each at least min_size of them.
  std::size_t bound(const Bits& cand) const {
    Bits un(s_.sets[0].size());
    std::size_t min_size = SIZE_MAX;
    for (std::size_t i = cand.find_first(); i != Bits::npos; i = cand.find_next(i)) {
      un |= s_.sets[i];
      min_size = std::min(min_size, s_.sets[i].count());
    }
    const std::size_t by_vertices = min_size == 0 ? cand.count() : un.count() / min_size;
    return std::min(cand.count(), by_vertices);
  }

  void search(Bits cand) {
    if (cand.none()) {
      if (cur_.size() > best_.size()) best_ = cur_;
      return;
    }
    if (cur_.size() + bound(cand) <= best_.size()) return;
    std::size_t pick = Bits::npos;
    std::size_t degree = 0;
    for (std::size_t i = cand.find_first(); i != Bits::npos; i = cand.find_next(i)) {
      const std::size_t d = (conflict_[i] & cand).count();
      if (pick == Bits::npos || d > degree) {
        pick = i;
        degree = d;
      }
    }
    if (degree == 0) {
      const std::size_t before = cur_.size();
      for (std::size_t i = cand.find_first(); i != Bits::npos; i = cand.find_next(i)) cur_.push_back(i);
      if (cur_.size() > best_.size()) best_ = cur_;
      cur_.resize(before);
      return;
    }
    Bits with = cand - conflict_[pick];
    with.reset(pick);
    cur_.push_back(pick);
    search(std::move(with));
    cur_.pop_back();
    cand.reset(pick);
    search(std::move(cand));
  }

  const SetSystem& s_;
  std::size_t m_;
  std::vector<Bits> conflict_;
  std::vector<std::size_t> best_;
  std::vector<std::size_t> cur_;
};

class HittingSetSolver {
 public:
  HittingSetSolver(const SetSystem& s, int n)
      : s_(s), n_(static_cast<std::size_t>(n)), chosen_mask_(n_), forbidden_(n_) {}

  std::vector<int> solve() {
    greedy();
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void greedy() {
    std::vector<char> covered(s_.sets.size(), 0);
    std::size_t left = s_.sets.size();
    while (left > 0) {
      std::size_t best_v = 0;
      std::size_t best_hits = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < s_.sets.size(); ++i) {
          if (!covered[i] && s_.sets[i].test(v)) ++hits;
        }
        if (hits > best_hits) {
          best_hits = hits;
          best_v = v;
        }
      }
      best_.push_back(static_cast<int>(best_v));
      for (std::size_t i = 0; i < s_.sets.size(); ++i) {
        if (!covered[i] && s_.sets[i].test(best_v)) {
          covered[i] = 1;
          --left;
        }
      }
    }
  }

  void search() {
    std::vector<std::size_t> uncovered;
    for (std::size_t i = 0; i < s_.sets.size(); ++i) {
      if (!s_.sets[i].intersects(chosen_mask_)) uncovered.push_back(i);
    }
    if (uncovered.empty()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;

    // Greedy disjoint packing of the uncovered members among allowed
    // vertices: each needs its own new vertex.
    std::vector<Bits> allowed;
    allowed.reserve(uncovered.size());
    for (std::size_t i : uncovered) {
      allowed.push_back(s_.sets[i] - forbidden_);
      if (allowed.back().none()) return;
    }
    std::vector<std::size_t> order(uncovered.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return allowed[a].count() < allowed[b].count();
    });
    Bits used(n_);
    std::size_t lower = 0;
    for (std::size_t k : order) {
      if (!allowed[k].intersects(used)) {
        used |= allowed[k];
        ++lower;
      }
    }
    if (chosen_.size() + lower >= best_.size()) return;

    const Bits branch = allowed[order.front()];
    std::vector<std::size_t> newly_forbidden;
    for (std::size_t x = branch.find_first(); x != Bits::npos; x = branch.find_next(x)) {
      chosen_.push_back(static_cast<int>(x));
      chosen_mask_.set(x);
      search();
      chosen_mask_.reset(x);
      chosen_.pop_back();
      forbidden_.set(x);
      newly_forbidden.push_back(x);
    }
    for (std::size_t x : newly_forbidden) forbidden_.reset(x);
  }

  const SetSystem& s_;
  std::size_t n_;
  Bits chosen_mask_;
  Bits forbidden_;
  std::vector<int> chosen_;
  std::vector<int> best_;
};

std::vector<std::vector<int>> vertex_sets(const std::vector<PathWitness>& family) {
  std::vector<std::vector<int>> out;
  out.reserve(family.size());
  for (const auto& w : family) {
    std::vector<int> vs = w.walk.vertices;
    std::sort(vs.begin(), vs.end());
    out.push_back(std::move(vs));
  }
  return out;
}

bool meets(const std::vector<int>& vertices, const std::vector<char>& mask) {
  return std::any_of(vertices.begin(), vertices.end(),
                     [&](int v) { return mask[static_cast<std::size_t>(v)] != 0; });
}

std::vector<char> mask_vector(const LabelledGraph& g, const std::vector<int>& vertices) {
  std::vector<char> m(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices()) throw InvalidArgument("vertex index out of range");
    m[static_cast<std::size_t>(v)] = 1;
  }
  return m;
}

}  // namespace

const std::shared_ptr<const Group>& z2_group() {
  static const auto group = std::make_shared<const Group>(Group::cyclic(2));
  return group;
}

LabelledGraph parity_graph(const LabelledGraph& g) {
  const Elem one = z2_group()->element_at(1);
  return g.relabelled(z2_group(), Model::kUndirected,
                      std::vector<Elem>(static_cast<std::size_t>(g.num_edges()), one));
}

std::vector<PathWitness> enumerate_family(const LabelledGraph& g, const PathFamilySpec& spec,
                                          const Limits& limits, const std::vector<char>* blocked) {
  limits.validate();
  switch (spec.kind) {
    case FamilyKind::kWeight:
      g.group().require(spec.weight);
      return enumerate_a_paths(g, PathFilter::with_weight(spec.weight), limits, true, blocked).paths;
    case FamilyKind::kNonzero:
      return enumerate_a_paths(g, PathFilter::nonzero(), limits, true, blocked).paths;
    case FamilyKind::kOdd:
      return enumerate_a_paths(parity_graph(g), PathFilter::nonzero(), limits, true, blocked).paths;
    case FamilyKind::kABA: {
      const std::vector<char> in_b = mask_vector(g, spec.b);
      std::vector<PathWitness> out;
      for (int a : g.terminals()) {
        if (in_b[static_cast<std::size_t>(a)] && !(blocked && (*blocked)[static_cast<std::size_t>(a)])) {
          out.push_back(PathWitness{Walk{{a}, {}}, g.group().zero()});
        }
      }
      for (auto& w : enumerate_a_paths(g, PathFilter::all(), limits, true, blocked).paths) {
        if (meets(w.walk.vertices, in_b)) out.push_back(std::move(w));
      }
      return out;
    }
  }
  throw InvalidArgument("unknown family kind");
}

std::string family_violation(const LabelledGraph& g, const PathFamilySpec& spec,
                             const PathWitness& w) {
  if (spec.kind == FamilyKind::kABA && w.walk.length() == 0) {
    if (w.walk.vertices.size() != 1) return "malformed trivial path";
    const int a = w.walk.front();
    if (a < 0 || a >= g.num_vertices()) return "vertex out of range";
    if (!g.is_terminal(a)) return "trivial member must lie in A";
    if (std::find(spec.b.begin(), spec.b.end(), a) == spec.b.end()) return "trivial member must lie in B";
    if (!g.group().is_zero(w.weight)) return "trivial member must have weight zero";
    return {};
  }
  if (spec.kind == FamilyKind::kOdd) {
    const LabelledGraph parity = parity_graph(g);
    std::string why = a_path_violation(parity, w);
    if (!why.empty()) return why;
    if (parity.group().is_zero(w.weight)) return "path has even length";
    return {};
  }
  std::string why = a_path_violation(g, w);
  if (!why.empty()) return why;
  switch (spec.kind) {
    case FamilyKind::kWeight:
      if (w.weight != spec.weight) return "weight differs from the family weight";
      break;
    case FamilyKind::kNonzero:
      if (g.group().is_zero(w.weight)) return "path has weight zero";
      break;
    case FamilyKind::kABA:
      if (!meets(w.walk.vertices, mask_vector(g, spec.b))) return "path avoids B";
      break;
    case FamilyKind::kOdd:
      break;
  }
  return {};
}

std::vector<std::size_t> max_disjoint_sets(const std::vector<std::vector<int>>& family,
                                           int num_vertices) {
  if (family.empty()) return {};
  for (const auto& f : family) {
    if (f.empty()) throw InvalidArgument("family members must be nonempty");
  }
  const SetSystem s = minimal_sets(family, num_vertices);
  DisjointSetSolver solver(s);
  std::vector<std::size_t> out;
  for (std::size_t i : solver.solve()) out.push_back(s.origin[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> min_hitting_set(const std::vector<std::vector<int>>& family, int num_vertices) {
  if (family.empty()) return {};
  for (const auto& f : family) {
    if (f.empty()) throw InvalidArgument("family members must be nonempty");
  }
  const SetSystem s = minimal_sets(family, num_vertices);
  HittingSetSolver solver(s, num_vertices);
  return solver.solve();
}

PackingResult max_packing(const LabelledGraph& g, const PathFamilySpec& spec, const Limits& limits) {
  auto family = enumerate_family(g, spec, limits);
  PackingResult r;
  r.family_size = family.size();
  for (std::size_t i : max_disjoint_sets(vertex_sets(family), g.num_vertices())) {
    r.packing.paths.push_back(std::move(family[i]));
  }
  r.nu = r.packing.paths.size();
  return r;
}

CoverResult min_cover(const LabelledGraph& g, const PathFamilySpec& spec, const Limits& limits) {
  const auto family = enumerate_family(g, spec, limits);
  CoverResult r;
  r.family_size = family.size();
  r.cover.vertices = min_hitting_set(vertex_sets(family), g.num_vertices());
  r.tau = r.cover.vertices.size();
  return r;
}

DualityReport duality_report(const LabelledGraph& g, const PathFamilySpec& spec,
                             const Limits& limits) {
  const auto family = enumerate_family(g, spec, limits);
  const auto sets = vertex_sets(family);
  DualityReport r;
  for (std::size_t i : max_disjoint_sets(sets, g.num_vertices())) r.packing.paths.push_back(family[i]);
  r.cover.vertices = min_hitting_set(sets, g.num_vertices());
  r.nu = r.packing.paths.size();
  r.tau = r.cover.vertices.size();
  if (r.nu > 0) r.ratio = static_cast<double>(r.tau) / static_cast<double>(r.nu);
  switch (spec.kind) {
    case FamilyKind::kOdd:
    case FamilyKind::kABA:
      r.bound_applies = true;
      break;
    case FamilyKind::kNonzero: {
      bool involutive = g.group().is_finite();
      if (involutive && !g.directed()) {
        for (const Elem& x : g.group().elements()) {
          if (!g.group().is_zero(g.group().add(x, x))) {
            involutive = false;
            break;
          }
        }
      }
      r.bound_applies = g.directed() || involutive;
      break;
    }
    case FamilyKind::kWeight:
      r.bound_applies = false;
      break;
  }
  r.bound_holds = r.tau <= 2 * r.nu;
  if (r.nu > r.tau) throw InternalError("packing larger than cover");
  if (r.bound_applies && !r.bound_holds) {
    throw InternalError("tau = " + std::to_string(r.tau) + " exceeds 2 nu = " + std::to_string(2 * r.nu));
  }
  return r;
}

Reduction reduce_ell_to_zero(const LabelledGraph& g, const Elem& ell, const Elem& g_half) {
  if (g.directed()) throw InvalidArgument("the weight reduction uses the undirected model");
  const Group& group = g.group();
  group.require(ell);
  group.require(g_half);
  if (group.add(g_half, g_half) != ell) throw InvalidArgument("reduction requires 2g = ell");
  Reduction r{g, {}};
  std::vector<Elem> labels;
  labels.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    Elem label = e.label;
    const int ends = (g.is_terminal(e.u) ? 1 : 0) + (g.is_terminal(e.v) ? 1 : 0);
    for (int i = 0; i < ends; ++i) label = group.sub(label, g_half);
    if (ends == 2) r.both_ends_in_a.push_back(e.id);
    labels.push_back(std::move(label));
  }
  r.graph = g.with_labels(std::move(labels));
  return r;
}

std::string packing_violation(const LabelledGraph& g, const PathFamilySpec& spec, const Packing& p) {
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < p.paths.size(); ++i) {
    const std::string why = family_violation(g, spec, p.paths[i]);
    if (!why.empty()) return "member " + std::to_string(i) + ": " + why;
    for (int v : p.paths[i].walk.vertices) {
      if (used[static_cast<std::size_t>(v)]) return "members share vertex " + std::to_string(g.vertex_id(v));
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  return {};
}

std::string cover_violation(const LabelledGraph& g, const PathFamilySpec& spec, const Cover& c,
                            const Limits& limits) {
  const std::vector<char> blocked = mask_vector(g, c.vertices);
  const auto left = enumerate_family(g, spec, limits, &blocked);
  if (!left.empty()) {
    std::string seq;
    for (VertexId id : vertex_id_sequence(g, left.front().walk)) seq += (seq.empty() ? "" : ",") + std::to_string(id);
    return "member avoids the cover: " + seq;
  }
  return {};
}

}  // namespace gammapath
