#include "gammapath/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "gammapath/blocks.hpp"
#include "gammapath/classify.hpp"
#include "gammapath/cycle_chain.hpp"
#include "gammapath/error.hpp"
#include "gammapath/frame.hpp"
#include "gammapath/gadgets.hpp"
#include "gammapath/json_io.hpp"
#include "gammapath/oracles.hpp"
#include "gammapath/packing.hpp"
#include "gammapath/random_instances.hpp"
#include "gammapath/shifting.hpp"

namespace gammapath::suite {
namespace {

using json = nlohmann::json;
using json_io::graph_to_json;

struct Outcome {
  bool ok = true;
  bool skipped = false;
  std::string failure;
  json reproducer = json::object();
  json stats = json::object();

  void fail(std::string why) {
    if (ok) failure = std::move(why);
    ok = false;
  }
};

constexpr std::size_t kMaxReproducers = 5;

CriterionResult blank_result(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::vector<Outcome> parallel_map(std::size_t count, unsigned threads,
                                  const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i].fail(std::string("uncaught exception: ") + e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

// Folds per-instance outcomes into the criterion in index order.
void merge(CriterionResult& r, const std::vector<Outcome>& outcomes) {
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.skipped) continue;
    ++r.instances;
    if (o.ok) continue;
    ++r.failures;
    if (r.reproducers.size() < kMaxReproducers) {
      json rep = o.reproducer;
      rep["index"] = i;
      rep["reason"] = o.failure;
      r.reproducers.push_back(std::move(rep));
    }
  }
}

void add_failure(CriterionResult& r, const std::string& why, json reproducer = json::object()) {
  ++r.failures;
  if (r.reproducers.size() < kMaxReproducers) {
    reproducer["reason"] = why;
    r.reproducers.push_back(std::move(reproducer));
  }
}

void finalize(CriterionResult& r, Clock::time_point start) {
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.failures > 0) {
    r.verdict = Verdict::kFail;
    if (r.reason.empty()) {
      r.reason = std::to_string(r.failures) + " of " + std::to_string(r.instances) + " instances failed";
    }
  } else if (r.time_limit_seconds > 0 && r.seconds > r.time_limit_seconds) {
    r.verdict = Verdict::kFail;
    r.reason = "took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.time_limit_seconds) + " s";
  } else {
    r.verdict = Verdict::kPass;
    if (r.reason.empty()) r.reason = std::to_string(r.instances) + " instances passed";
  }
}

std::shared_ptr<const Group> cyclic(std::int64_t m) { return std::make_shared<const Group>(Group::cyclic(m)); }

std::vector<char> mask_of(int n, const std::vector<int>& vertices) {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (int v : vertices) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

std::vector<int> sorted_vertices(const Walk& w) {
  std::vector<int> v = w.vertices;
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// 1. Frame algorithm on random directed graphs.

CriterionResult frame_criterion(const SuiteConfig& c, unsigned threads) {
  constexpr std::size_t kInstances = 500;
  CriterionResult r = blank_result(1, "frame algorithm returns a valid packing or a bounded verified cover");
  r.time_limit_seconds = 300.0;
  const auto start = Clock::now();
  const std::vector<std::shared_ptr<const Group>> groups{
      cyclic(2), cyclic(3), cyclic(5), std::make_shared<const Group>(symmetric_group(3))};
  const RandomGraphShape shape{3, 14, 2, 16, 2, 8};

  auto outcomes = parallel_map(kInstances, threads, [&](std::size_t i) {
    Outcome o;
    const std::uint64_t seed = instance_seed(c.seed, 1, i);
    InstanceRng rng(seed);
    const auto& group = groups[i % groups.size()];
    const LabelledGraph g = random_graph(rng, group, Model::kDirected, shape);
    const int k = static_cast<int>(rng.between(1, 3));
    o.reproducer = {{"seed", seed}, {"k", k}, {"graph", graph_to_json(g)}};
    try {
      const FrameResult fr = frame_pack_or_cover(g, k, c.limits, FrameOptions{true});
      const PathFamilySpec zero = PathFamilySpec::of_weight(group->zero());
      if (const auto* p = std::get_if<Packing>(&fr.outcome)) {
        o.stats["packing"] = 1;
        if (p->paths.size() != static_cast<std::size_t>(k)) o.fail("packing has the wrong size");
        const std::string why = packing_violation(g, zero, *p);
        if (!why.empty()) o.fail("packing invalid: " + why);
      } else {
        const Cover& cover = std::get<Cover>(fr.outcome);
        o.stats["cover"] = 1;
        const std::size_t bound = 6 * static_cast<std::size_t>(k - 1) * group->order();
        if (cover.vertices.size() >= bound) {
          if (cover.vertices.empty() && k == 1 && fr.empty_cover_degenerate) {
            o.stats["degenerate"] = 1;
          } else {
            o.fail("cover size " + std::to_string(cover.vertices.size()) + " not below " + std::to_string(bound));
          }
        }
        const auto blocked = mask_of(g.num_vertices(), cover.vertices);
        for (const Walk& w : oracle::all_a_paths(g, &blocked)) {
          if (group->is_zero(walk_weight(g, w))) {
            o.fail("a zero A-path avoids the cover");
            break;
          }
        }
        try {
          if (max_packing(g, zero, c.limits).nu >= static_cast<std::size_t>(k)) o.stats["cover_with_nu_ge_k"] = 1;
        } catch (const LimitExceeded&) {
        }
      }
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    return o;
  });
  merge(r, outcomes);
  std::map<std::string, std::size_t> totals;
  for (const auto& o : outcomes) {
    for (auto it = o.stats.begin(); it != o.stats.end(); ++it) totals[it.key()] += it.value().get<std::size_t>();
  }
  r.details["packings"] = totals["packing"];
  r.details["covers"] = totals["cover"];
  r.details["empty_covers_at_k1"] = totals["degenerate"];
  r.details["covers_with_nu_at_least_k"] = totals["cover_with_nu_ge_k"];
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 2. tau <= 2 nu for Nonzero, Odd and A-B-A paths.

CriterionResult duality_criterion(const SuiteConfig& c, unsigned threads) {
  constexpr std::size_t kPerFamily = 170;
  CriterionResult r = blank_result(2, "exact oracles satisfy tau <= 2 nu for nonzero, odd and A-B-A paths");
  const auto start = Clock::now();
  const std::vector<std::shared_ptr<const Group>> groups{
      cyclic(2), cyclic(3), cyclic(5), std::make_shared<const Group>(symmetric_group(3))};
  const RandomGraphShape shape{3, 12, 1, 10, 2, 6};

  auto outcomes = parallel_map(3 * kPerFamily, threads, [&](std::size_t i) {
    Outcome o;
    const std::uint64_t seed = instance_seed(c.seed, 2, i);
    InstanceRng rng(seed);
    const std::size_t family = i % 3;
    std::optional<LabelledGraph> g;
    PathFamilySpec spec;
    if (family == 0) {
      g.emplace(random_graph(rng, groups[(i / 3) % groups.size()], Model::kDirected, shape));
      spec = PathFamilySpec::nonzero();
    } else {
      g.emplace(random_graph(rng, cyclic(2), Model::kUndirected, shape));
      if (family == 1) {
        spec = PathFamilySpec::odd();
      } else {
        std::vector<int> b;
        const auto size = rng.between(1, 3);
        for (std::int64_t t = 0; t < size; ++t) b.push_back(static_cast<int>(rng.between(0, g->num_vertices() - 1)));
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        spec = PathFamilySpec::aba(b);
      }
    }
    o.reproducer = {{"seed", seed}, {"family", json_io::family_to_json(*g, spec)}, {"graph", graph_to_json(*g)}};
    try {
      const PackingResult packing = max_packing(*g, spec, c.limits);
      const auto nu = packing.nu;
      const auto tau = min_cover(*g, spec, c.limits).tau;
      o.stats = {{"nu", nu}, {"tau", tau}, {"members", packing.family_size}};
      if (tau > 2 * nu) o.fail("tau = " + std::to_string(tau) + " > 2 nu = " + std::to_string(2 * nu));
      if (nu > tau) o.fail("nu exceeds tau");
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    return o;
  });
  merge(r, outcomes);
  std::size_t tight = 0;
  std::size_t nonempty = 0;
  std::size_t members = 0;
  std::size_t largest = 0;
  for (const auto& o : outcomes) {
    if (!o.stats.contains("nu")) continue;
    members += o.stats["members"].get<std::size_t>();
    largest = std::max(largest, o.stats["members"].get<std::size_t>());
    if (o.stats["tau"].get<std::size_t>() > 0) ++nonempty;
    if (o.stats["tau"].get<std::size_t>() > o.stats["nu"].get<std::size_t>()) ++tight;
  }
  r.details["instances_per_family"] = kPerFamily;
  r.details["nonempty_families"] = nonempty;
  r.details["instances_with_tau_above_nu"] = tight;
  r.details["total_family_members"] = members;
  r.details["largest_family"] = largest;
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Rerouting in cycle chains over Z/p.

// Bit t of the result is set when t is reachable (independent bitmask DP).
std::uint32_t reachable_mask(int p, int core, const std::vector<int>& deltas) {
  const std::uint32_t full = (1U << p) - 1;
  std::uint32_t m = 1U << core;
  for (int d : deltas) m |= ((m << d) | (m >> (p - d))) & full;
  return m;
}

CriterionResult chain_criterion(const SuiteConfig&) {
  CriterionResult r = blank_result(3, "nonzero chains of length p-1 reach every weight; the p-2 ladder misses 0");
  r.time_limit_seconds = 60.0;
  const auto start = Clock::now();
  for (int p : {3, 5, 7}) {
    const Group group = Group::cyclic(p);
    std::size_t count = 0;
    std::vector<int> d(static_cast<std::size_t>(p - 1), 1);
    for (bool more = true; more;) {
      for (int core = 0; core < p; ++core) {
        ++count;
        AbstractChain chain{group.element_at(static_cast<std::size_t>(core)), {}};
        for (int x : d) chain.deltas.push_back(group.element_at(static_cast<std::size_t>(x)));
        const auto reach = reachable_weights(group, chain);
        const std::uint32_t expect = reachable_mask(p, core, d);
        std::uint32_t got = 0;
        for (const Elem& e : reach) got |= 1U << group.rank(e);
        json rep{{"p", p}, {"core", core}, {"deltas", d}};
        if (got != expect) add_failure(r, "reachable set differs from the bitmask oracle", rep);
        if (got != (1U << p) - 1) add_failure(r, "some weight unreachable", rep);
        const int targets = p <= 5 ? p : 1;
        for (int t = 0; t < targets; ++t) {
          const auto subset = reroute_subset(group, chain, group.element_at(static_cast<std::size_t>(t)));
          int sum = core;
          if (subset) {
            for (std::size_t i : *subset) sum = (sum + d[i]) % p;
          }
          if (!subset || sum != t) add_failure(r, "reroute to " + std::to_string(t) + " failed", rep);
        }
      }
      std::size_t pos = 0;
      while (pos < d.size() && d[pos] == p - 1) d[pos++] = 1;
      if (pos == d.size()) {
        more = false;
      } else {
        ++d[pos];
      }
    }
    r.instances += count;
    r.details["chains_p" + std::to_string(p)] = count;

    try {
      const SharpnessWitness sw = sharpness_witness(p);
      const std::uint32_t m = reachable_mask(p, 1, std::vector<int>(static_cast<std::size_t>(p - 2), 1));
      if (m & 1U) add_failure(r, "ladder oracle reaches 0", {{"p", p}});
      if (static_cast<std::size_t>(__builtin_popcount(m)) != static_cast<std::size_t>(p - 1)) {
        add_failure(r, "ladder oracle reach size is not p-1", {{"p", p}});
      }
      if (sw.chain.length() != static_cast<std::size_t>(p - 2)) add_failure(r, "ladder has the wrong length", {{"p", p}});
      for (int t = 1; t < p; ++t) {
        const auto w = reroute_to_weight(sw.graph, sw.chain, sw.graph.group().element_at(static_cast<std::size_t>(t)));
        if (!w || !is_a_path(sw.graph, *w)) add_failure(r, "ladder misses a nonzero weight", {{"p", p}, {"target", t}});
      }
      if (reroute_to_weight(sw.graph, sw.chain, sw.graph.group().zero())) add_failure(r, "ladder reaches 0", {{"p", p}});
      r.details["ladder_reachable_p" + std::to_string(p)] = __builtin_popcount(m);
      ++r.instances;
    } catch (const std::exception& e) {
      add_failure(r, e.what(), {{"p", p}});
    }
  }
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Cauchy-Davenport.

CriterionResult cauchy_davenport_criterion(const SuiteConfig&) {
  CriterionResult r = blank_result(4, "Cauchy-Davenport bound on nonempty subsets of Z/5 and Z/7");
  const auto start = Clock::now();
  for (int p : {5, 7}) {
    const Group group = Group::cyclic(p);
    const int max_size = p == 5 ? 5 : 4;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < (1U << p); ++s) {
      if (__builtin_popcount(s) <= max_size) subsets.push_back(s);
    }
    auto to_set = [&](std::uint32_t s) {
      std::set<Elem> out;
      for (int i = 0; i < p; ++i) {
        if (s >> i & 1U) out.insert(group.element_at(static_cast<std::size_t>(i)));
      }
      return out;
    };
    for (std::uint32_t x : subsets) {
      for (std::uint32_t y : subsets) {
        ++r.instances;
        std::uint32_t expect = 0;
        for (int i = 0; i < p; ++i) {
          for (int j = 0; j < p; ++j) {
            if ((x >> i & 1U) && (y >> j & 1U)) expect |= 1U << ((i + j) % p);
          }
        }
        json rep{{"p", p}, {"X", x}, {"Y", y}};
        try {
          const auto sum = group.sumset(to_set(x), to_set(y));
          std::uint32_t got = 0;
          for (const Elem& e : sum) got |= 1U << group.rank(e);
          if (got != expect) add_failure(r, "sumset differs from the oracle", rep);
          const int bound = std::min(__builtin_popcount(x) + __builtin_popcount(y) - 1, p);
          if (__builtin_popcount(expect) < bound) add_failure(r, "bound violated", rep);
        } catch (const std::exception& e) {
          add_failure(r, e.what(), rep);
        }
      }
    }
  }
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 5. Grid gadgets.

json report_json(const GadgetReport& rep) { return json_io::gadget_report_to_json(rep); }

CriterionResult gadget_criterion(const SuiteConfig& c) {
  CriterionResult r = blank_result(5, "grid gadgets: nu = 1 with tau = n (gamma''), tau >= n (gamma'), gamma_n endpoints");
  r.time_limit_seconds = 600.0;
  const auto start = Clock::now();
  auto z4 = cyclic(4);
  auto z8 = cyclic(8);
  json items = json::array();

  auto record = [&](const std::string& name, bool pass, json detail) {
    ++r.instances;
    detail["name"] = name;
    detail["passed"] = pass;
    if (!pass) {
      std::string why = name + " failed";
      if (detail.contains("nu") && detail.contains("tau")) {
        why += ": nu = " + detail["nu"].dump() + ", tau = " + detail["tau"].dump() + ", required " +
               detail.value("required", std::string("?"));
      } else if (detail.contains("error")) {
        why += ": " + detail["error"].get<std::string>();
      }
      add_failure(r, why, detail);
    }
    items.push_back(std::move(detail));
  };

  for (int n : {2, 3}) {
    try {
      const GridGadget gg = build_gamma_doubleprime(n, z4, z4->element_at(1), z4->element_at(2));
      const GadgetReport rep = verify_gadget(gg, c.limits);
      record("gamma'' Z/4 l=1 g=2 n=" + std::to_string(n), rep.nu == 1 && rep.tau == static_cast<std::size_t>(n),
             {{"nu", rep.nu}, {"tau", rep.tau}, {"required", "nu == 1 and tau == n"}, {"report", report_json(rep)},
              {"graph", graph_to_json(gg.graph)}});
    } catch (const std::exception& e) {
      record("gamma'' n=" + std::to_string(n), false, {{"error", e.what()}});
    }
    try {
      const GridGadget gg = build_gamma_prime(n, z8, z8->element_at(1), z8->element_at(4));
      const GadgetReport rep = verify_gadget(gg, c.limits);
      record("gamma' Z/8 g1=1 g2=4 n=" + std::to_string(n), rep.nu == 1 && rep.tau >= static_cast<std::size_t>(n),
             {{"nu", rep.nu}, {"tau", rep.tau}, {"required", "nu == 1 and tau >= n"}, {"report", report_json(rep)},
              {"graph", graph_to_json(gg.graph)}});
    } catch (const std::exception& e) {
      record("gamma' n=" + std::to_string(n), false, {{"error", e.what()}});
    }
  }
  for (Model model : {Model::kUndirected, Model::kDirected}) {
    const int n = 2;
    const std::string name = std::string("gamma_n Z l=0 n=2 ") + (model == Model::kDirected ? "directed" : "undirected");
    try {
      const GridGadget gg = build_gamma_n(n, 0, model);
      const LabelledGraph& g = gg.graph;
      std::size_t zero_paths = 0;
      std::string bad;
      for (const Walk& w : oracle::all_a_paths(g)) {
        if (!g.group().is_zero(walk_weight(g, w))) continue;
        ++zero_paths;
        VertexId s = g.vertex_id(w.front());
        VertexId t = g.vertex_id(w.back());
        if (s > t) std::swap(s, t);
        const bool ok = s >= u_vertex(n, 1) && s < w_vertex(n, 1) && t == w_vertex(n, static_cast<int>(n + 1 - (s - u_vertex(n, 1) + 1)));
        if (!ok && bad.empty()) bad = std::to_string(s) + "-" + std::to_string(t);
      }
      const GadgetReport rep = verify_gadget(gg, c.limits);
      record(name, zero_paths > 0 && bad.empty(),
             {{"zero_paths", zero_paths}, {"bad_endpoints", bad}, {"nu", rep.nu}, {"tau", rep.tau},
              {"required", "every zero A-path joins u_i and w_{n+1-i}"}, {"report", report_json(rep)}});
    } catch (const std::exception& e) {
      record(name, false, {{"error", e.what()}});
    }
  }
  r.details["items"] = std::move(items);
  finalize(r, start);
  return r;
}

// The n = 4 runs are informational: they never change the verdict and are
// reported as SKIPPED when the window closes first.
void attach_best_effort(CriterionResult& r, const SuiteConfig& c, Clock::time_point deadline) {
  auto z4 = cyclic(4);
  auto z8 = cyclic(8);
  Limits lim = c.limits;
  lim.deadline = deadline;
  json best = json::array();
  auto attempt = [&](const std::string& name, const std::function<GridGadget()>& make) {
    json entry{{"name", name}};
    const auto t0 = Clock::now();
    try {
      const GadgetReport rep = verify_gadget(make(), lim);
      entry["status"] = "completed";
      entry["nu"] = rep.nu;
      entry["tau"] = rep.tau;
      entry["report"] = report_json(rep);
    } catch (const LimitExceeded& e) {
      entry["status"] = "SKIPPED";
      entry["reason"] = e.what();
    } catch (const std::exception& e) {
      entry["status"] = "error";
      entry["reason"] = e.what();
    }
    entry["seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
    best.push_back(std::move(entry));
  };
  attempt("gamma'' Z/4 l=1 g=2 n=4", [&] { return build_gamma_doubleprime(4, z4, z4->element_at(1), z4->element_at(2)); });
  attempt("gamma' Z/8 g1=1 g2=4 n=4", [&] { return build_gamma_prime(4, z8, z8->element_at(1), z8->element_at(4)); });
  attempt("gamma_n Z l=0 n=4", [&] { return build_gamma_n(4, 0, Model::kUndirected); });
  r.details["best_effort_n4"] = std::move(best);
}

// ---------------------------------------------------------------------------
// 6. Classification cross-check.

void partitions(int e, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

// Every abelian group of order n, as lists of prime-power cyclic orders.
std::vector<std::vector<std::int64_t>> abelian_groups_of_order(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> result{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& base : result) {
      for (const auto& part : parts) {
        auto orders = base;
        for (int x : part) {
          std::int64_t q = 1;
          for (int i = 0; i < x; ++i) q *= p;
          orders.push_back(q);
        }
        next.push_back(std::move(orders));
      }
    }
    result = std::move(next);
  }
  return result;
}

CriterionResult classification_criterion(const SuiteConfig&) {
  CriterionResult r = blank_result(6, "classification: list and reduction agree, zero-path answer matches the characterization");
  const auto start = Clock::now();
  std::size_t groups = 0;
  for (std::int64_t n = 2; n <= 32; ++n) {
    for (const auto& prime_powers : abelian_groups_of_order(n)) {
      // Structure facts read off the prime-power list itself.
      const bool elementary_2 = std::all_of(prime_powers.begin(), prime_powers.end(), [](std::int64_t q) { return q == 2; });
      const bool z4 = prime_powers == std::vector<std::int64_t>{4};
      const bool zp = prime_powers.size() == 1 && is_prime(prime_powers[0]);
      const bool zero_ep_expected = elementary_2 || z4 || zp;

      const Group first = Group::cyclic_product(prime_powers);
      std::vector<Group> presentations{first};
      if (first.invariant_factors() != prime_powers) presentations.push_back(Group::cyclic_product(first.invariant_factors()));
      for (const Group& group : presentations) {
        ++groups;
        const auto& orders = group.factor_orders();
        json rep{{"orders", orders}};
        try {
          if (classify_zero_path_ep(group) != zero_ep_expected) add_failure(r, "zero-path classification wrong", rep);
          const auto bad = find_bad_pair(group);
          if (bad.has_value() == zero_ep_expected) add_failure(r, "bad pair existence disagrees", rep);
          if (bad) {
            // Coset order of g1 modulo <g2>, by coordinates.
            const auto& a = bad->g1.coords();
            const auto& b = bad->g2.coords();
            std::set<std::vector<std::int64_t>> sub;
            std::vector<std::int64_t> x(orders.size(), 0);
            do {
              sub.insert(x);
              for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + b[i]) % orders[i];
            } while (!sub.contains(x));
            std::int64_t k = 1;
            std::vector<std::int64_t> y(a.begin(), a.end());
            while (!sub.contains(y)) {
              for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + a[i]) % orders[i];
              ++k;
            }
            const bool nonzero = std::any_of(a.begin(), a.end(), [](std::int64_t v) { return v != 0; }) &&
                                 std::any_of(b.begin(), b.end(), [](std::int64_t v) { return v != 0; });
            if (!nonzero || k <= 2) add_failure(r, "returned pair is not bad", rep);
          }
          for (const Elem& ell : group.elements()) {
            ++r.instances;
            const auto& c = ell.coords();
            bool is_zero = true;
            bool twice_zero = true;
            for (std::size_t i = 0; i < c.size(); ++i) {
              is_zero = is_zero && c[i] == 0;
              twice_zero = twice_zero && (2 * c[i]) % orders[i] == 0;
            }
            const bool expected = (elementary_2 && is_zero) || (z4 && twice_zero) || zp;
            const bool by_list = classify_ell_path_ep_by_list(group, ell);
            const bool by_reduction = classify_ell_path_ep_by_reduction(group, ell);
            json erep = rep;
            erep["ell"] = std::vector<std::int64_t>(c.begin(), c.end());
            if (by_list != by_reduction) add_failure(r, "list and reduction disagree", erep);
            if (by_list != expected) add_failure(r, "list answer differs from the characterization", erep);
          }
        } catch (const std::exception& e) {
          add_failure(r, e.what(), rep);
        }
      }
    }
  }
  r.details["groups_checked"] = groups;
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Normalization of 3-connected Γ-bipartite graphs.

CriterionResult normalization_criterion(const SuiteConfig& c, unsigned threads) {
  constexpr std::size_t kInstances = 200;
  CriterionResult r = blank_result(7, "normalization recovers the zero labelling and the shift replay round-trips");
  const auto start = Clock::now();
  const std::vector<std::shared_ptr<const Group>> groups{
      cyclic(2), std::make_shared<const Group>(Group::cyclic_product({2, 2})), cyclic(4)};
  auto outcomes = parallel_map(kInstances, threads, [&](std::size_t i) {
    Outcome o;
    const std::uint64_t seed = instance_seed(c.seed, 7, i);
    InstanceRng rng(seed);
    const auto& group = groups[i % groups.size()];
    const LabelledGraph skeleton = random_three_connected(rng, group, static_cast<int>(rng.between(4, 10)));
    const auto halves = group->elements_of_order_at_most_2();
    std::vector<Elem> phi;
    for (int v = 0; v < skeleton.num_vertices(); ++v) {
      phi.push_back(halves[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(halves.size()) - 1))]);
    }
    std::vector<Elem> labels;
    for (const Edge& e : skeleton.edges()) {
      labels.push_back(group->add(phi[static_cast<std::size_t>(e.u)], phi[static_cast<std::size_t>(e.v)]));
    }
    const LabelledGraph g = skeleton.with_labels(labels);
    o.reproducer = {{"seed", seed}, {"graph", graph_to_json(g)}};
    try {
      const Normalization norm = normalize_to_zero(g, c.limits);
      for (const Edge& e : norm.graph.edges()) {
        if (!group->is_zero(e.label)) o.fail("normalized graph has a nonzero label");
      }
      const LabelledGraph replayed = apply_shifts(g, norm.shifts);
      for (const Edge& e : replayed.edges()) {
        if (!group->is_zero(e.label)) o.fail("replaying the shifts leaves a nonzero label");
      }
      const LabelledGraph back = apply_shifts(norm.graph, norm.shifts);
      for (int e = 0; e < g.num_edges(); ++e) {
        if (back.edge(e).label != g.edge(e).label) o.fail("inverse replay does not recover the input");
      }
      for (const ShiftStep& s : norm.shifts) {
        if (!group->is_zero(group->add(s.value, s.value))) o.fail("shift value has order above 2");
      }
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    return o;
  });
  merge(r, outcomes);
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 8. The l = 2g reduction.

CriterionResult reduction_criterion(const SuiteConfig& c, unsigned threads) {
  constexpr std::size_t kInstances = 200;
  CriterionResult r = blank_result(8, "weight-l A-paths before the reduction equal zero A-paths after it");
  const auto start = Clock::now();
  const RandomGraphShape shape{4, 10, 1, 6, 3, 5};
  auto outcomes = parallel_map(kInstances, threads, [&](std::size_t i) {
    Outcome o;
    const std::uint64_t seed = instance_seed(c.seed, 8, i);
    InstanceRng rng(seed);
    const auto group = cyclic(i % 2 == 0 ? 9 : 4);
    const LabelledGraph g = random_graph(rng, group, Model::kUndirected, shape);
    Elem half = random_element(rng, *group);
    const Elem ell = group->add(half, half);
    o.reproducer = {{"seed", seed},
                    {"ell", json_io::elem_to_json(*group, ell)},
                    {"g", json_io::elem_to_json(*group, half)},
                    {"graph", graph_to_json(g)}};
    try {
      const Reduction red = reduce_ell_to_zero(g, ell, half);
      auto collect = [&](const LabelledGraph& h, const Elem& target) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> out;
        for (const Walk& w : oracle::all_a_paths(h)) {
          if (walk_weight(h, w) == target) out.emplace(w.vertices, w.edges);
        }
        return out;
      };
      const auto before = collect(g, ell);
      const auto after = collect(red.graph, group->zero());
      o.stats["paths"] = before.size();
      if (before != after) o.fail("path sets differ");
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    return o;
  });
  merge(r, outcomes);
  std::size_t total = 0;
  for (const auto& o : outcomes) {
    if (o.stats.contains("paths")) total += o.stats["paths"].get<std::size_t>();
  }
  r.details["weight_l_paths_compared"] = total;
  finalize(r, start);
  return r;
}

// ---------------------------------------------------------------------------
// 9. Exact solvers against subset enumeration.

CriterionResult oracle_criterion(const SuiteConfig& c, unsigned threads) {
  constexpr std::size_t kGraphInstances = 150;
  constexpr std::size_t kSetInstances = 150;
  constexpr std::uint64_t kCorpusSeed = 0x5EEDC0DEULL;  // the corpus is fixed, whatever --seed says
  constexpr std::size_t kMaxMembers = 12;
  CriterionResult r = blank_result(9, "max_packing and min_cover agree with subset enumeration");
  const auto start = Clock::now();
  const RandomGraphShape shape{3, 9, 0, 3, 2, 4};

  auto outcomes = parallel_map(kGraphInstances + kSetInstances, threads, [&](std::size_t i) {
    Outcome o;
    std::vector<std::vector<int>> family;
    int n = 0;
    std::optional<LabelledGraph> g;
    std::optional<PathFamilySpec> spec;
    if (i < kGraphInstances) {
      for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t seed = instance_seed(kCorpusSeed, 9, i * 1000 + attempt);
        InstanceRng rng(seed);
        const std::size_t kind = i % 4;
        const auto group = cyclic(kind == 0 ? 3 : 2);
        g.emplace(random_graph(rng, group, kind == 0 ? Model::kDirected : Model::kUndirected, shape));
        if (kind == 0) {
          spec = PathFamilySpec::nonzero();
        } else if (kind == 1) {
          spec = PathFamilySpec::odd();
        } else if (kind == 2) {
          spec = PathFamilySpec::aba({static_cast<int>(rng.between(0, g->num_vertices() - 1))});
        } else {
          spec = PathFamilySpec::of_weight(group->zero());
        }
        const auto members = enumerate_family(*g, *spec, c.limits);
        if (members.size() > kMaxMembers) continue;
        o.reproducer = {{"seed", seed}, {"family", json_io::family_to_json(*g, *spec)}, {"graph", graph_to_json(*g)}};
        for (const auto& w : members) family.push_back(sorted_vertices(w.walk));
        n = g->num_vertices();
        break;
      }
    } else {
      const std::uint64_t seed = instance_seed(kCorpusSeed, 90, i);
      InstanceRng rng(seed);
      n = static_cast<int>(rng.between(1, 12));
      const auto m = rng.between(0, static_cast<std::int64_t>(kMaxMembers));
      for (std::int64_t s = 0; s < m; ++s) {
        std::set<int> members;
        const auto size = rng.between(1, std::min(4, n));
        while (static_cast<std::int64_t>(members.size()) < size) members.insert(static_cast<int>(rng.between(0, n - 1)));
        family.emplace_back(members.begin(), members.end());
      }
      o.reproducer = {{"seed", seed}, {"num_vertices", n}, {"sets", family}};
    }
    try {
      const auto packing = max_disjoint_sets(family, n);
      const auto cover = min_hitting_set(family, n);
      const auto nu = oracle::max_disjoint_by_subsets(family);
      const auto tau = oracle::min_hitting_by_subsets(family, n);
      if (packing.size() != nu) o.fail("packing size " + std::to_string(packing.size()) + " vs " + std::to_string(nu));
      if (cover.size() != tau) o.fail("cover size " + std::to_string(cover.size()) + " vs " + std::to_string(tau));
      std::set<int> used;
      for (std::size_t idx : packing) {
        for (int v : family[idx]) {
          if (!used.insert(v).second) o.fail("packing members intersect");
        }
      }
      const std::set<int> chosen(cover.begin(), cover.end());
      for (const auto& f : family) {
        if (std::none_of(f.begin(), f.end(), [&](int v) { return chosen.contains(v); })) o.fail("cover misses a member");
      }
      if (g) {
        if (max_packing(*g, *spec, c.limits).nu != nu) o.fail("max_packing disagrees with the subset oracle");
        if (min_cover(*g, *spec, c.limits).tau != tau) o.fail("min_cover disagrees with the subset oracle");
      }
      o.stats = {{"members", family.size()}};
    } catch (const std::exception& e) {
      o.fail(e.what());
    }
    return o;
  });
  merge(r, outcomes);
  std::size_t members = 0;
  for (const auto& o : outcomes) {
    if (o.stats.contains("members")) members += o.stats["members"].get<std::size_t>();
  }
  r.details["graph_instances"] = kGraphInstances;
  r.details["set_system_instances"] = kSetInstances;
  r.details["total_members"] = members;
  finalize(r, start);
  return r;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kSkipped:
      return "SKIPPED";
  }
  return "UNKNOWN";
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GAMMAPATH_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  const unsigned threads = resolve_threads(config.threads);
  try {
    switch (id) {
      case 1:
        return frame_criterion(config, threads);
      case 2:
        return duality_criterion(config, threads);
      case 3:
        return chain_criterion(config);
      case 4:
        return cauchy_davenport_criterion(config);
      case 5: {
        CriterionResult r = gadget_criterion(config);
        if (config.best_effort) {
          auto deadline = Clock::now() + std::chrono::seconds(600);
          if (config.limits.deadline) deadline = std::min(deadline, *config.limits.deadline);
          attach_best_effort(r, config, deadline);
        }
        return r;
      }
      case 6:
        return classification_criterion(config);
      case 7:
        return normalization_criterion(config, threads);
      case 8:
        return reduction_criterion(config, threads);
      case 9:
        return oracle_criterion(config, threads);
      default:
        break;
    }
  } catch (const std::exception& e) {
    CriterionResult r = blank_result(id, "criterion " + std::to_string(id));
    r.verdict = Verdict::kFail;
    r.reason = e.what();
    return r;
  }
  throw InvalidArgument("unknown criterion " + std::to_string(id));
}

json criterion_to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"title", r.title},
          {"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"instances", r.instances},
          {"failures", r.failures},
          {"seconds", r.seconds},
          {"time_limit_seconds", r.time_limit_seconds},
          {"details", r.details},
          {"reproducers", r.reproducers}};
}

json run_suite(const SuiteConfig& config, std::vector<CriterionResult>* results) {
  const auto start = Clock::now();
  const auto budget_end =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(config.budget_seconds));
  SuiteConfig cfg = config;
  cfg.best_effort = false;  // deferred until every required check has run
  std::vector<int> ids = cfg.criteria;
  if (ids.empty()) {
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  }
  std::vector<CriterionResult> done;
  for (int id : ids) done.push_back(run_criterion(id, cfg));
  if (config.best_effort) {
    for (auto& r : done) {
      if (r.id != 5) continue;
      auto deadline = std::min(budget_end, Clock::now() + std::chrono::seconds(600));
      if (config.limits.deadline) deadline = std::min(deadline, *config.limits.deadline);
      attach_best_effort(r, config, deadline);
    }
  }
  json checks = json::array();
  bool all_pass = true;
  for (auto& r : done) {
    all_pass = all_pass && r.verdict != Verdict::kFail;
    checks.push_back(criterion_to_json(r));
  }
  if (results) *results = std::move(done);
  return {{"config",
           {{"seed", cfg.seed},
            {"budget_seconds", cfg.budget_seconds},
            {"threads", resolve_threads(cfg.threads)},
            {"max_path_length", cfg.limits.max_path_length},
            {"max_paths", cfg.limits.max_paths},
            {"cycle_cap", cfg.limits.cycle_cap},
            {"best_effort", config.best_effort},
            {"criteria", ids}}},
          {"checks", std::move(checks)},
          {"verdict", all_pass ? "PASS" : "FAIL"},
          {"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
}

}  // namespace gammapath::suite
