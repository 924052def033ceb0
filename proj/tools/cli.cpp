// gammapath: command-line front end. Every subcommand prints one JSON
// document on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 domain-level NO or FAIL, 2 usage or input error,
// 3 a search limit was hit.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammapath/blocks.hpp"
#include "gammapath/classify.hpp"
#include "gammapath/cycle_chain.hpp"
#include "gammapath/error.hpp"
#include "gammapath/frame.hpp"
#include "gammapath/gadgets.hpp"
#include "gammapath/json_io.hpp"
#include "gammapath/packing.hpp"
#include "gammapath/shifting.hpp"
#include "gammapath/suite.hpp"

namespace {

using nlohmann::json;
using namespace gammapath;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct Options {
  std::string graph_path = "-";
  std::string output_path;
  std::size_t max_path_length = 20;
  std::size_t max_paths = 200000;
  std::size_t cycle_cap = 100000;
  double budget = 600.0;

  std::string group_text;
  std::string ell_text;
  std::string family = "nonzero";
  int k = 1;
  std::string target_text;
  std::int64_t sharpness_p = 0;

  std::string variant = "gamma-double-prime";
  int n = 2;
  std::string g_text;
  std::string g1_text;
  std::string g2_text;
  std::string model = "undirected";
  bool verify = false;

  std::uint64_t seed = 7;
  unsigned threads = 0;
  std::vector<int> criteria;
  bool skip_best_effort = false;
};

Limits limits_of(const Options& o) {
  Limits l;
  l.max_path_length = o.max_path_length;
  l.max_paths = o.max_paths;
  l.cycle_cap = o.cycle_cap;
  l.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(o.budget));
  l.validate();
  return l;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument("cannot parse " + what + ": " + e.what());
  }
}

json read_json_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_json_text(text, path == "-" ? "stdin" : path);
}

LabelledGraph read_graph(const Options& o) { return json_io::graph_from_json(read_json_input(o.graph_path)); }

std::shared_ptr<const Group> parse_group(const std::string& text) {
  if (text.empty()) throw InvalidArgument("--group is required");
  return json_io::group_from_json(parse_json_text(text, "--group"));
}

struct Emitted {
  json doc;
  int code = kExitOk;
};

Emitted cmd_classify(const Options& o) {
  const auto group = parse_group(o.group_text);
  json out{{"group", json_io::group_to_json(*group)}};
  const bool zero_ep = classify_zero_path_ep(*group);
  out["zero_path_ep"] = zero_ep;
  bool ep = zero_ep;
  if (!o.ell_text.empty()) {
    const Elem ell = json_io::elem_from_text(*group, o.ell_text);
    out["ell"] = json_io::elem_to_json(*group, ell);
    ep = classify_ell_path_ep(*group, ell);
  }
  out["ep"] = ep;
  if (group->is_finite()) {
    if (const auto bad = find_bad_pair(*group)) {
      out["bad_pair"] = {{"g1", json_io::elem_to_json(*group, bad->g1)},
                         {"g2", json_io::elem_to_json(*group, bad->g2)},
                         {"case", to_string(bad->reason)}};
    } else {
      out["bad_pair"] = nullptr;
    }
  }
  return {out, ep ? kExitOk : kExitNo};
}

Emitted cmd_pack(const Options& o) {
  const LabelledGraph g = read_graph(o);
  const PathFamilySpec spec = json_io::family_from_text(g, o.family);
  const PackingResult r = max_packing(g, spec, limits_of(o));
  json paths = json::array();
  for (const auto& w : r.packing.paths) paths.push_back(json_io::witness_to_json(g, w));
  return {{{"family", json_io::family_to_json(g, spec)},
           {"family_size", r.family_size},
           {"nu", r.nu},
           {"packing", std::move(paths)}}};
}

Emitted cmd_cover(const Options& o) {
  const LabelledGraph g = read_graph(o);
  const PathFamilySpec spec = json_io::family_from_text(g, o.family);
  const Limits lim = limits_of(o);
  const CoverResult r = min_cover(g, spec, lim);
  const std::string why = cover_violation(g, spec, r.cover, lim);
  if (!why.empty()) throw InternalError("computed cover fails verification: " + why);
  return {{{"family", json_io::family_to_json(g, spec)},
           {"family_size", r.family_size},
           {"tau", r.tau},
           {"cover", json_io::vertex_ids(g, r.cover.vertices)}}};
}

Emitted cmd_frame(const Options& o) {
  const LabelledGraph g = read_graph(o);
  const FrameResult r = frame_pack_or_cover(g, o.k, limits_of(o), FrameOptions{true});
  json out = json_io::frame_result_to_json(g, r);
  out["k"] = o.k;
  return {out};
}

Emitted cmd_chain(const Options& o) {
  if (o.sharpness_p > 0) {
    const SharpnessWitness sw = sharpness_witness(o.sharpness_p);
    json reach = json::array();
    for (const Elem& e : reachable_weights(sw.graph.group(), sw.chain.abstract())) {
      reach.push_back(json_io::elem_to_json(sw.graph.group(), e));
    }
    return {{{"chain", json_io::chain_to_json(sw.graph, sw.chain)}, {"reachable", std::move(reach)}}};
  }
  const json input = read_json_input(o.graph_path);
  if (!input.contains("graph")) throw InvalidArgument("chain input needs a \"graph\" field");
  const LabelledGraph g = json_io::graph_from_json(input["graph"]);
  const CycleChain chain = json_io::chain_from_json(g, input);
  json reach = json::array();
  for (const Elem& e : reachable_weights(g.group(), chain.abstract())) reach.push_back(json_io::elem_to_json(g.group(), e));
  json out{{"length", chain.length()}, {"nonzero", chain.is_nonzero(g.group())}, {"reachable", std::move(reach)}};
  if (o.target_text.empty()) return {out};
  const Elem target = json_io::elem_from_text(g.group(), o.target_text);
  out["target"] = json_io::elem_to_json(g.group(), target);
  const auto path = reroute_to_weight(g, chain, target);
  out["path"] = path ? json_io::witness_to_json(g, *path) : json(nullptr);
  return {out, path ? kExitOk : kExitNo};
}

Emitted cmd_gadget(const Options& o) {
  std::optional<GridGadget> gg;
  if (o.variant == "gamma") {
    if (o.model != "directed" && o.model != "undirected") throw InvalidArgument("--model must be directed or undirected");
    const BigInt ell(o.ell_text.empty() ? std::string("0") : o.ell_text);
    gg.emplace(build_gamma_n(o.n, ell, o.model == "directed" ? Model::kDirected : Model::kUndirected));
  } else if (o.variant == "gamma-prime") {
    const auto group = parse_group(o.group_text.empty() ? R"({"type":"cyclic_product","orders":[8]})" : o.group_text);
    gg.emplace(build_gamma_prime(o.n, group, json_io::elem_from_text(*group, o.g1_text.empty() ? "1" : o.g1_text),
                                 json_io::elem_from_text(*group, o.g2_text.empty() ? "4" : o.g2_text)));
  } else if (o.variant == "gamma-double-prime") {
    const auto group = parse_group(o.group_text.empty() ? R"({"type":"cyclic_product","orders":[4]})" : o.group_text);
    gg.emplace(build_gamma_doubleprime(o.n, group, json_io::elem_from_text(*group, o.ell_text.empty() ? "1" : o.ell_text),
                                       json_io::elem_from_text(*group, o.g_text.empty() ? "2" : o.g_text)));
  } else {
    throw InvalidArgument("unknown gadget variant " + o.variant);
  }
  const Group& group = gg->graph.group();
  json out{{"variant", to_string(gg->variant)},
           {"n", gg->n},
           {"graph", json_io::graph_to_json(gg->graph)},
           {"ell", json_io::elem_to_json(group, gg->ell)}};
  if (!gg->g_seq.empty()) {
    json seq = json::array();
    for (const Elem& e : gg->g_seq) seq.push_back(json_io::elem_to_json(group, e));
    out["g_sequence"] = std::move(seq);
  }
  if (!o.verify) return {out};
  const GadgetReport rep = verify_gadget(*gg, limits_of(o));
  out["report"] = json_io::gadget_report_to_json(rep);
  return {out, rep.all_passed() ? kExitOk : kExitNo};
}

Emitted cmd_bipartite(const Options& o) {
  const LabelledGraph g = read_graph(o);
  const bool yes = is_gamma_bipartite(g, o.cycle_cap);
  json out{{"gamma_bipartite", yes}};
  if (const auto phi = order_two_potential(g)) {
    json pot = json::object();
    for (int v = 0; v < g.num_vertices(); ++v) pot[std::to_string(g.vertex_id(v))] = json_io::elem_to_json(g.group(), (*phi)[static_cast<std::size_t>(v)]);
    out["potential"] = std::move(pot);
  }
  return {out, yes ? kExitOk : kExitNo};
}

Emitted cmd_normalize(const Options& o) {
  const LabelledGraph g = read_graph(o);
  try {
    return {json_io::normalization_to_json(g, normalize_to_zero(g, limits_of(o)))};
  } catch (const PreconditionFailed& e) {
    return {{{"normalized", false}, {"reason", e.what()}}, kExitNo};
  }
}

Emitted cmd_blocks(const Options& o) {
  const LabelledGraph g = read_graph(o);
  return {{{"three_connected", is_three_connected(g)}, {"blocks", json_io::three_blocks_to_json(g, three_blocks(g, limits_of(o)))}}};
}

Emitted cmd_verify_suite(const Options& o) {
  suite::SuiteConfig cfg;
  cfg.seed = o.seed;
  cfg.budget_seconds = o.budget;
  cfg.threads = o.threads;
  cfg.limits.max_path_length = o.max_path_length;
  cfg.limits.max_paths = o.max_paths;
  cfg.limits.cycle_cap = o.cycle_cap;
  cfg.limits.validate();
  cfg.best_effort = !o.skip_best_effort;
  cfg.criteria = o.criteria;
  for (int id : cfg.criteria) {
    if (id < 1 || id > suite::kCriterionCount) throw InvalidArgument("criterion ids run from 1 to 9");
  }
  std::vector<suite::CriterionResult> results;
  json report = suite::run_suite(cfg, &results);
  for (const auto& r : results) {
    std::cerr << "criterion " << r.id << ": " << suite::to_string(r.verdict) << " (" << r.reason << ", "
              << r.seconds << " s)\n";
  }
  return {report, report["verdict"] == "PASS" ? kExitOk : kExitNo};
}

void emit(const json& doc, const std::string& output_path) {
  const std::string text = doc.dump(2);
  std::cout << text << '\n';
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) throw InvalidArgument("cannot write " + output_path);
    out << text << '\n';
  }
}

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << "gammapath: " << message << '\n';
  std::cout << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump(2) << '\n';
  return code;
}

void add_limit_flags(CLI::App* sub, Options& o) {
  sub->add_option("--max-path-length", o.max_path_length, "longest path explored, in edges")->capture_default_str();
  sub->add_option("--max-paths", o.max_paths, "cap on enumerated paths")->capture_default_str();
  sub->add_option("--cycle-cap", o.cycle_cap, "cap on enumerated cycles")->capture_default_str();
  sub->add_option("--budget", o.budget, "time budget in seconds")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--output", o.output_path, "also write the JSON result to this file");
}

void add_graph_flag(CLI::App* sub, Options& o) {
  sub->add_option("--graph", o.graph_path, "graph JSON file, '-' for stdin")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"gammapath: packing and covering group-labelled A-paths"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Erdős–Pósa classification of a group (optionally for weight ell)");
  classify->add_option("--group", o.group_text, "group JSON")->required();
  classify->add_option("--ell", o.ell_text, "target weight ell");
  add_limit_flags(classify, o);

  auto* pack = app.add_subcommand("pack", "maximum packing of a path family");
  auto* cover = app.add_subcommand("cover", "minimum cover of a path family");
  for (auto* sub : {pack, cover}) {
    add_graph_flag(sub, o);
    sub->add_option("--family", o.family, "weight:<elem> | nonzero | odd | aba:<ids>")->capture_default_str();
    add_limit_flags(sub, o);
  }

  auto* frame = app.add_subcommand("frame", "k disjoint zero A-paths or a small cover");
  add_graph_flag(frame, o);
  frame->add_option("--k", o.k, "number of paths wanted")->required()->check(CLI::PositiveNumber);
  add_limit_flags(frame, o);

  auto* chain = app.add_subcommand("chain", "reroute a cycle chain to a target weight");
  add_graph_flag(chain, o);
  chain->add_option("--target", o.target_text, "target weight");
  chain->add_option("--sharpness", o.sharpness_p, "emit the length p-2 ladder over Z/p instead");
  add_limit_flags(chain, o);

  auto* gadget = app.add_subcommand("gadget", "build (and verify) a grid gadget");
  gadget->add_option("--variant", o.variant, "gamma | gamma-prime | gamma-double-prime")
      ->check(CLI::IsMember({"gamma", "gamma-prime", "gamma-double-prime"}))
      ->capture_default_str();
  gadget->add_option("--n", o.n, "grid size")->check(CLI::Range(2, 64))->capture_default_str();
  gadget->add_option("--group", o.group_text, "group JSON (prime and double prime variants)");
  gadget->add_option("--ell", o.ell_text, "family weight (gamma: an integer; double prime: a group element)");
  gadget->add_option("--g", o.g_text, "double prime shift element");
  gadget->add_option("--g1", o.g1_text, "prime variant: first element");
  gadget->add_option("--g2", o.g2_text, "prime variant: second element");
  gadget->add_option("--model", o.model, "gamma: directed | undirected")->capture_default_str();
  gadget->add_flag("--verify", o.verify, "compute nu and tau by brute force");
  add_limit_flags(gadget, o);

  auto* bipartite = app.add_subcommand("bipartite", "is every cycle zero?");
  add_graph_flag(bipartite, o);
  add_limit_flags(bipartite, o);

  auto* normalize = app.add_subcommand("normalize", "shift a 3-connected bipartite labelling to all zero");
  add_graph_flag(normalize, o);
  add_limit_flags(normalize, o);

  auto* blocks = app.add_subcommand("blocks", "3-blocks with their labelled forms");
  add_graph_flag(blocks, o);
  add_limit_flags(blocks, o);

  auto* verify_suite = app.add_subcommand("verify-suite", "run the acceptance checks and print a report");
  verify_suite->add_option("--seed", o.seed, "seed for the randomized checks")->capture_default_str();
  verify_suite->add_option("--threads", o.threads, "worker threads (0: GAMMAPATH_THREADS or all cores)");
  verify_suite->add_option("--criteria", o.criteria, "subset of criterion ids")->delimiter(',');
  verify_suite->add_flag("--skip-best-effort", o.skip_best_effort, "skip the n = 4 gadget runs");
  add_limit_flags(verify_suite, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, std::cerr, std::cerr);
      return kExitOk;
    }
    return fail("usage", e.what(), kExitUsage);
  }

  const std::vector<std::pair<CLI::App*, Emitted (*)(const Options&)>> table{
      {classify, cmd_classify}, {pack, cmd_pack},        {cover, cmd_cover},
      {frame, cmd_frame},       {chain, cmd_chain},      {gadget, cmd_gadget},
      {bipartite, cmd_bipartite}, {normalize, cmd_normalize}, {blocks, cmd_blocks},
      {verify_suite, cmd_verify_suite}};
  try {
    for (const auto& [sub, fn] : table) {
      if (!sub->parsed()) continue;
      const Emitted result = fn(o);
      emit(result.doc, o.output_path);
      return result.code;
    }
    return fail("usage", "no subcommand given", kExitUsage);
  } catch (const LimitExceeded& e) {
    return fail("limit_exceeded", e.what(), kExitLimit);
  } catch (const PreconditionFailed& e) {
    return fail("precondition_failed", e.what(), kExitNo);
  } catch (const InvalidArgument& e) {
    return fail("invalid_argument", e.what(), kExitUsage);
  } catch (const InternalError& e) {
    return fail("internal_error", e.what(), kExitNo);
  } catch (const std::exception& e) {
    return fail("error", e.what(), kExitNo);
  }
}
