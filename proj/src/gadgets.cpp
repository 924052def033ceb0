#include "gammapath/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gammapath/classify.hpp"
#include "gammapath/error.hpp"
#include "gammapath/packing.hpp"

namespace gammapath {
namespace {

enum class EdgeRole { kGrid, kTopRow, kU, kW };

// Builds the grid skeleton; `label(role, index)` gives each edge its label,
// where index is i for u_i / w_i edges and unused otherwise.
LabelledGraph build_grid(int n, std::shared_ptr<const Group> group, Model model,
                         const std::function<Elem(EdgeRole, int)>& label) {
  if (n < 1) throw InvalidArgument("gadget size n must be positive");
  std::vector<VertexId> vertices;
  for (VertexId v = 0; v < static_cast<VertexId>(n * n + 2 * n); ++v) vertices.push_back(v);
  std::vector<VertexId> terminals;
  for (int i = 1; i <= n; ++i) {
    terminals.push_back(u_vertex(n, i));
    terminals.push_back(w_vertex(n, i));
  }
  const bool directed = model == Model::kDirected;
  std::vector<EdgeSpec> edges;
  EdgeId id = 0;
  auto add = [&](VertexId a, VertexId b, Elem l, VertexId tail) {
    edges.push_back({id++, a, b, std::move(l), directed ? std::optional<VertexId>(tail) : std::nullopt});
  };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const VertexId here = grid_vertex(n, i, j);
      if (i < n) add(here, grid_vertex(n, i + 1, j), label(EdgeRole::kGrid, 0), here);
      if (j < n) {
        add(here, grid_vertex(n, i, j + 1), label(i == 1 ? EdgeRole::kTopRow : EdgeRole::kGrid, 0), here);
      }
    }
  }
  for (int i = 1; i <= n; ++i) add(u_vertex(n, i), grid_vertex(n, 1, i), label(EdgeRole::kU, i), u_vertex(n, i));
  for (int i = 1; i <= n; ++i) add(grid_vertex(n, n, i), w_vertex(n, i), label(EdgeRole::kW, i), grid_vertex(n, n, i));
  return LabelledGraph(std::move(group), model, std::move(vertices), std::move(terminals), std::move(edges));
}

bool is_top_row_edge(const LabelledGraph& g, int n, int e) {
  const VertexId a = g.vertex_id(g.edge(e).u);
  const VertexId b = g.vertex_id(g.edge(e).v);
  return a < n && b < n;
}

}  // namespace

std::string to_string(GadgetVariant v) {
  switch (v) {
    case GadgetVariant::kGamma:
      return "gamma";
    case GadgetVariant::kGammaPrime:
      return "gamma-prime";
    case GadgetVariant::kGammaDoublePrime:
      return "gamma-double-prime";
  }
  return "unknown";
}

bool GadgetReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const GadgetCheck& c) { return c.passed; });
}

std::vector<BigInt> gamma_sequence(int n, const BigInt& ell) {
  std::vector<BigInt> seq;
  std::set<BigInt> excluded;
  for (BigInt candidate = 1; static_cast<int>(seq.size()) < n; ++candidate) {
    if (excluded.contains(candidate)) continue;
    seq.push_back(candidate);
    const BigInt twice = 2 * ell;
    for (BigInt x : std::initializer_list<BigInt>{candidate, ell - candidate, candidate + ell,
                                                  candidate - ell, candidate + twice, candidate - twice}) {
      excluded.insert(std::move(x));
    }
  }
  return seq;
}

GridGadget build_gamma_n(int n, const BigInt& ell, Model model) {
  auto group = std::make_shared<const Group>(Group::integers());
  const auto seq = gamma_sequence(n, ell);
  GridGadget gadget{n, GadgetVariant::kGamma,
                    build_grid(n, group, model,
                               [&](EdgeRole role, int i) {
                                 switch (role) {
                                   case EdgeRole::kU:
                                     return Elem::from_integer(ell - seq[static_cast<std::size_t>(i - 1)]);
                                   case EdgeRole::kW:
                                     return Elem::from_integer(seq[static_cast<std::size_t>(n - i)]);
                                   default:
                                     return Elem::from_integer(0);
                                 }
                               }),
                    Elem::from_integer(ell), {}, {}, {}, {}};
  for (const BigInt& x : seq) gadget.g_seq.push_back(Elem::from_integer(x));
  return gadget;
}

GridGadget build_gamma_prime(int n, std::shared_ptr<const Group> group, const Elem& g1, const Elem& g2) {
  if (!group->is_finite() || !group->is_abelian()) throw InvalidArgument("gamma-prime needs a finite abelian group");
  group->require(g1);
  group->require(g2);
  if (!is_bad_pair(*group, g1, g2)) {
    throw InvalidArgument("(g1, g2) must have g1 of order above 2 modulo <g2>");
  }
  const Group& gr = *group;
  LabelledGraph graph = build_grid(n, group, Model::kUndirected, [&](EdgeRole role, int) {
    switch (role) {
      case EdgeRole::kU:
        return g1;
      case EdgeRole::kW:
        return gr.sub(g2, g1);
      case EdgeRole::kTopRow:
        return g2;
      default:
        return gr.zero();
    }
  });
  return GridGadget{n, GadgetVariant::kGammaPrime, std::move(graph), gr.zero(), {}, {}, g1, g2};
}

GridGadget build_gamma_doubleprime(int n, std::shared_ptr<const Group> group, const Elem& ell,
                                   const Elem& g) {
  if (!group->is_finite() || !group->is_abelian()) {
    throw InvalidArgument("gamma-double-prime needs a finite abelian group");
  }
  group->require(ell);
  group->require(g);
  if (group->is_zero(g)) throw InvalidArgument("g must be nonzero");
  if (group->subgroup_contains(g, ell)) throw InvalidArgument("ell must lie outside <g>");
  const Group& gr = *group;
  LabelledGraph graph = build_grid(n, group, Model::kUndirected, [&](EdgeRole role, int) {
    switch (role) {
      case EdgeRole::kU:
        return gr.sub(ell, g);
      case EdgeRole::kTopRow:
        return g;
      default:
        return gr.zero();
    }
  });
  return GridGadget{n, GadgetVariant::kGammaDoublePrime, std::move(graph), ell, {}, g, {}, {}};
}

GadgetReport verify_gadget(const GridGadget& gadget, const Limits& limits) {
  const LabelledGraph& g = gadget.graph;
  const int n = gadget.n;
  const auto family = enumerate_family(g, PathFamilySpec::of_weight(gadget.ell), limits);
  std::vector<std::vector<int>> sets;
  for (const auto& w : family) {
    std::vector<int> vs = w.walk.vertices;
    std::sort(vs.begin(), vs.end());
    sets.push_back(std::move(vs));
  }
  GadgetReport r;
  r.family_size = family.size();
  r.nu = max_disjoint_sets(sets, g.num_vertices()).size();
  r.cover = min_hitting_set(sets, g.num_vertices());
  r.tau = r.cover.size();

  r.checks.push_back({"family_nonempty", !family.empty(), std::to_string(family.size()) + " members"});
  r.checks.push_back({"nu_equals_1", r.nu == 1, "nu = " + std::to_string(r.nu)});
  r.checks.push_back({"tau_at_least_n", r.tau >= static_cast<std::size_t>(n),
                      "tau = " + std::to_string(r.tau) + ", n = " + std::to_string(n)});

  const VertexId u_lo = u_vertex(n, 1);
  const VertexId w_lo = w_vertex(n, 1);
  auto is_u = [&](VertexId id) { return id >= u_lo && id < w_lo; };
  auto is_w = [&](VertexId id) { return id >= w_lo; };

  std::string endpoint_failure;
  std::string special_failure;
  for (const auto& w : family) {
    VertexId s = g.vertex_id(w.walk.front());
    VertexId t = g.vertex_id(w.walk.back());
    if (is_w(s)) std::swap(s, t);
    bool ok = is_u(s) && is_w(t);
    if (ok && gadget.variant == GadgetVariant::kGamma) {
      const VertexId i = s - u_lo + 1;
      ok = t == w_vertex(n, static_cast<int>(n + 1 - i));
    }
    if (!ok && endpoint_failure.empty()) {
      endpoint_failure = "member from " + std::to_string(s) + " to " + std::to_string(t);
    }
    if (gadget.variant != GadgetVariant::kGamma) {
      const bool uses = std::any_of(w.walk.edges.begin(), w.walk.edges.end(),
                                    [&](int e) { return is_top_row_edge(g, n, e); });
      if (!uses && special_failure.empty()) {
        special_failure = "member from " + std::to_string(s) + " to " + std::to_string(t) + " avoids the top row";
      }
    }
  }
  r.checks.push_back({gadget.variant == GadgetVariant::kGamma ? "endpoints_u_i_w_n+1-i" : "endpoints_u_to_w",
                      endpoint_failure.empty(), endpoint_failure.empty() ? "all members" : endpoint_failure});
  if (gadget.variant != GadgetVariant::kGamma) {
    r.checks.push_back({"uses_top_row_edge", special_failure.empty(),
                        special_failure.empty() ? "all members" : special_failure});
  }
  return r;
}

}  // namespace gammapath
