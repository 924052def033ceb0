#include "gammapath/shifting.hpp"

#include <deque>

#include "gammapath/blocks.hpp"
#include "gammapath/error.hpp"

namespace gammapath {
namespace {

void require_undirected(const LabelledGraph& g, const char* what) {
  if (g.directed()) throw InvalidArgument(std::string(what) + " requires the undirected model");
}

class CycleSearch {
 public:
  CycleSearch(const LabelledGraph& g, const std::function<Visit(const Walk&)>& visit)
      : g_(g), visit_(visit), on_path_(static_cast<std::size_t>(g.num_vertices()), 0) {}

  bool run() {
    for (int s = 0; s < g_.num_vertices() && !stopped_; ++s) {
      start_ = s;
      walk_.vertices.assign(1, s);
      walk_.edges.clear();
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    return !stopped_;
  }

 private:
  void extend(int x) {
    for (const Incidence& inc : g_.incident(x)) {
      if (stopped_) return;
      const int y = inc.neighbor;
      if (y < start_) continue;
      if (y == start_) {
        // Close only with a new edge, and only in the orientation whose
        // first edge is smaller than its closing edge.
        if (walk_.edges.empty() || inc.edge <= walk_.edges.front()) continue;
        walk_.vertices.push_back(y);
        walk_.edges.push_back(inc.edge);
        if (visit_(walk_) == Visit::kStop) stopped_ = true;
        walk_.vertices.pop_back();
        walk_.edges.pop_back();
        continue;
      }
      if (on_path_[static_cast<std::size_t>(y)]) continue;
      on_path_[static_cast<std::size_t>(y)] = 1;
      walk_.vertices.push_back(y);
      walk_.edges.push_back(inc.edge);
      extend(y);
      walk_.vertices.pop_back();
      walk_.edges.pop_back();
      on_path_[static_cast<std::size_t>(y)] = 0;
    }
  }

  const LabelledGraph& g_;
  const std::function<Visit(const Walk&)>& visit_;
  std::vector<char> on_path_;
  Walk walk_;
  int start_ = 0;
  bool stopped_ = false;
};

}  // namespace

LabelledGraph shift(const LabelledGraph& g, int vertex, const Elem& value) {
  require_undirected(g, "shifting");
  const Group& group = g.group();
  group.require(value);
  if (!group.is_zero(group.add(value, value))) {
    throw InvalidArgument("shift value must satisfy 2g = 0");
  }
  if (vertex < 0 || vertex >= g.num_vertices()) throw InvalidArgument("shift vertex out of range");
  std::vector<Elem> labels;
  labels.reserve(static_cast<std::size_t>(g.num_edges()));
  for (const Edge& e : g.edges()) {
    labels.push_back(e.u == vertex || e.v == vertex ? group.add(e.label, value) : e.label);
  }
  return g.with_labels(std::move(labels));
}

LabelledGraph apply_shifts(const LabelledGraph& g, const std::vector<ShiftStep>& steps) {
  LabelledGraph out = g;
  for (const ShiftStep& s : steps) out = shift(out, s.vertex, s.value);
  return out;
}

bool for_each_simple_cycle(const LabelledGraph& g, const std::function<Visit(const Walk&)>& visit) {
  CycleSearch search(g, visit);
  return search.run();
}

std::vector<Walk> enumerate_simple_cycles(const LabelledGraph& g, std::size_t cap) {
  std::vector<Walk> cycles;
  bool overflow = false;
  for_each_simple_cycle(g, [&](const Walk& c) {
    if (cycles.size() == cap) {
      overflow = true;
      return Visit::kStop;
    }
    cycles.push_back(c);
    return Visit::kContinue;
  });
  if (overflow) throw LimitExceeded("simple-cycle count exceeds the cycle cap");
  return cycles;
}

Elem undirected_weight(const LabelledGraph& g, const Walk& walk) {
  Elem w = g.group().zero();
  for (int e : walk.edges) w = g.group().add(w, g.edge(e).label);
  return w;
}

std::optional<std::vector<Elem>> order_two_potential(const LabelledGraph& g) {
  const Group& group = g.group();
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::optional<Elem>> phi(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (phi[root]) continue;
    phi[root] = group.zero();
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(x)) {
        const Elem& label = g.edge(inc.edge).label;
        auto& py = phi[static_cast<std::size_t>(inc.neighbor)];
        if (!py) {
          Elem value = group.sub(label, *phi[static_cast<std::size_t>(x)]);
          if (!group.is_zero(group.add(value, value))) return std::nullopt;
          py = std::move(value);
          queue.push_back(inc.neighbor);
        } else if (group.add(*phi[static_cast<std::size_t>(x)], *py) != label) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Elem> out;
  out.reserve(n);
  for (auto& p : phi) out.push_back(std::move(*p));
  return out;
}

bool is_gamma_bipartite(const LabelledGraph& g, std::size_t cycle_cap) {
  require_undirected(g, "Γ-bipartiteness");
  if (order_two_potential(g)) return true;
  bool nonzero = false;
  bool overflow = false;
  std::size_t count = 0;
  for_each_simple_cycle(g, [&](const Walk& c) {
    if (++count > cycle_cap) {
      overflow = true;
      return Visit::kStop;
    }
    if (!g.group().is_zero(undirected_weight(g, c))) {
      nonzero = true;
      return Visit::kStop;
    }
    return Visit::kContinue;
  });
  if (nonzero) return false;
  if (overflow) throw LimitExceeded("simple-cycle count exceeds the cycle cap");
  return true;
}

Normalization normalize_to_zero(const LabelledGraph& g, const Limits& limits) {
  require_undirected(g, "normalization");
  if (!is_three_connected(g)) throw PreconditionFailed("graph is not 3-connected");
  if (!is_gamma_bipartite(g, limits.cycle_cap)) throw PreconditionFailed("graph is not Γ-bipartite");

  const Group& group = g.group();
  const std::size_t n = static_cast<std::size_t>(g.num_vertices());
  std::vector<std::optional<Elem>> value(n);
  value[0] = group.zero();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Incidence& inc : g.incident(x)) {
      auto& vy = value[static_cast<std::size_t>(inc.neighbor)];
      if (vy) continue;
      const Edge& e = g.edge(inc.edge);
      Elem v = group.neg(group.add(e.label, *value[static_cast<std::size_t>(x)]));
      if (!group.is_zero(group.add(v, v))) {
        throw NormalizationFailed("propagated shift has order > 2 at edge " + std::to_string(e.id), e.id);
      }
      vy = std::move(v);
      queue.push_back(inc.neighbor);
    }
  }
  for (const Edge& e : g.edges()) {
    const Elem sum = group.add(group.add(e.label, *value[static_cast<std::size_t>(e.u)]),
                               *value[static_cast<std::size_t>(e.v)]);
    if (!group.is_zero(sum)) {
      throw NormalizationFailed("non-tree edge " + std::to_string(e.id) + " is not zeroed", e.id);
    }
  }

  // Adding one c with 2c = 0 to every vertex leaves each edge check intact;
  // pick the c with the fewest nonzero shifts, smallest c on ties.
  Elem best_c = group.zero();
  std::size_t best_support = n + 1;
  for (const Elem& c : group.elements_of_order_at_most_2()) {
    std::size_t support = 0;
    for (const auto& v : value) {
      if (!group.is_zero(group.add(*v, c))) ++support;
    }
    if (support < best_support) {
      best_support = support;
      best_c = c;
    }
  }
  std::vector<ShiftStep> shifts;
  for (std::size_t v = 0; v < n; ++v) {
    Elem s = group.add(*value[v], best_c);
    if (!group.is_zero(s)) shifts.push_back({static_cast<int>(v), std::move(s)});
  }
  LabelledGraph zeroed = apply_shifts(g, shifts);
  for (const Edge& e : zeroed.edges()) {
    if (!group.is_zero(e.label)) {
      throw NormalizationFailed("shift replay left edge " + std::to_string(e.id) + " nonzero", e.id);
    }
  }
  return Normalization{std::move(shifts), std::move(zeroed)};
}

}  // namespace gammapath
