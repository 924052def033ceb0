// Thin JSON-string bridge: every call takes and returns JSON text, and the
// Python package decodes it. Library exceptions map onto Python exception
// classes defined in gammapath/__init__.py via the _core module.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

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

namespace py = pybind11;
using nlohmann::json;
using namespace gammapath;

namespace {

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("cannot parse ") + what + ": " + e.what());
  }
}

LabelledGraph graph_of(const std::string& text) { return json_io::graph_from_json(parse(text, "graph")); }

Limits limits_of(std::size_t max_path_length, std::size_t max_paths, std::size_t cycle_cap) {
  Limits l;
  l.max_path_length = max_path_length;
  l.max_paths = max_paths;
  l.cycle_cap = cycle_cap;
  l.validate();
  return l;
}

#define GAMMAPATH_LIMIT_ARGS \
  py::arg("max_path_length") = 20, py::arg("max_paths") = 200000, py::arg("cycle_cap") = 100000

std::string classify(const std::string& group_text, std::optional<std::string> ell_text) {
  const auto group = json_io::group_from_json(parse(group_text, "group"));
  json out{{"group", json_io::group_to_json(*group)}, {"zero_path_ep", classify_zero_path_ep(*group)}};
  out["ep"] = out["zero_path_ep"];
  if (ell_text) {
    const Elem ell = json_io::elem_from_text(*group, *ell_text);
    out["ell"] = json_io::elem_to_json(*group, ell);
    out["ep"] = classify_ell_path_ep(*group, ell);
  }
  if (group->is_finite()) {
    const auto bad = find_bad_pair(*group);
    out["bad_pair"] = bad ? json{{"g1", json_io::elem_to_json(*group, bad->g1)},
                                 {"g2", json_io::elem_to_json(*group, bad->g2)},
                                 {"case", to_string(bad->reason)}}
                          : json(nullptr);
  }
  return out.dump();
}

std::string pack(const std::string& graph_text, const std::string& family, std::size_t mpl, std::size_t mp,
                 std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  const PathFamilySpec spec = json_io::family_from_text(g, family);
  const PackingResult r = max_packing(g, spec, limits_of(mpl, mp, cc));
  json paths = json::array();
  for (const auto& w : r.packing.paths) paths.push_back(json_io::witness_to_json(g, w));
  return json{{"family_size", r.family_size}, {"nu", r.nu}, {"packing", paths}}.dump();
}

std::string cover(const std::string& graph_text, const std::string& family, std::size_t mpl, std::size_t mp,
                  std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  const PathFamilySpec spec = json_io::family_from_text(g, family);
  const CoverResult r = min_cover(g, spec, limits_of(mpl, mp, cc));
  return json{{"family_size", r.family_size}, {"tau", r.tau}, {"cover", json_io::vertex_ids(g, r.cover.vertices)}}
      .dump();
}

std::string duality(const std::string& graph_text, const std::string& family, std::size_t mpl, std::size_t mp,
                    std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  const PathFamilySpec spec = json_io::family_from_text(g, family);
  return json_io::duality_to_json(g, duality_report(g, spec, limits_of(mpl, mp, cc))).dump();
}

std::string frame(const std::string& graph_text, int k, std::size_t mpl, std::size_t mp, std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  json out = json_io::frame_result_to_json(g, frame_pack_or_cover(g, k, limits_of(mpl, mp, cc), FrameOptions{true}));
  out["k"] = k;
  return out.dump();
}

std::string chain(const std::string& input_text, std::optional<std::string> target_text) {
  const json input = parse(input_text, "chain input");
  if (!input.contains("graph")) throw InvalidArgument("chain input needs a \"graph\" field");
  const LabelledGraph g = json_io::graph_from_json(input["graph"]);
  const CycleChain c = json_io::chain_from_json(g, input);
  json reach = json::array();
  for (const Elem& e : reachable_weights(g.group(), c.abstract())) reach.push_back(json_io::elem_to_json(g.group(), e));
  json out{{"length", c.length()}, {"nonzero", c.is_nonzero(g.group())}, {"reachable", reach}};
  if (target_text) {
    const Elem target = json_io::elem_from_text(g.group(), *target_text);
    const auto path = reroute_to_weight(g, c, target);
    out["target"] = json_io::elem_to_json(g.group(), target);
    out["path"] = path ? json_io::witness_to_json(g, *path) : json(nullptr);
  }
  return out.dump();
}

std::string sharpness(std::int64_t p) {
  const SharpnessWitness sw = sharpness_witness(p);
  json reach = json::array();
  for (const Elem& e : reachable_weights(sw.graph.group(), sw.chain.abstract())) {
    reach.push_back(json_io::elem_to_json(sw.graph.group(), e));
  }
  return json{{"chain", json_io::chain_to_json(sw.graph, sw.chain)}, {"reachable", reach}}.dump();
}

std::string gadget(const std::string& variant, int n, std::optional<std::string> group_text,
                   std::optional<std::string> a, std::optional<std::string> b, const std::string& model,
                   bool verify, std::size_t mpl, std::size_t mp, std::size_t cc) {
  std::optional<GridGadget> gg;
  if (variant == "gamma") {
    if (model != "directed" && model != "undirected") throw InvalidArgument("model must be directed or undirected");
    gg.emplace(build_gamma_n(n, BigInt(a.value_or("0")), model == "directed" ? Model::kDirected : Model::kUndirected));
  } else if (variant == "gamma-prime") {
    const auto group = json_io::group_from_json(parse(group_text.value_or(R"({"type":"cyclic_product","orders":[8]})"), "group"));
    gg.emplace(build_gamma_prime(n, group, json_io::elem_from_text(*group, a.value_or("1")),
                                 json_io::elem_from_text(*group, b.value_or("4"))));
  } else if (variant == "gamma-double-prime") {
    const auto group = json_io::group_from_json(parse(group_text.value_or(R"({"type":"cyclic_product","orders":[4]})"), "group"));
    gg.emplace(build_gamma_doubleprime(n, group, json_io::elem_from_text(*group, a.value_or("1")),
                                       json_io::elem_from_text(*group, b.value_or("2"))));
  } else {
    throw InvalidArgument("unknown gadget variant " + variant);
  }
  json out{{"variant", to_string(gg->variant)}, {"n", gg->n}, {"graph", json_io::graph_to_json(gg->graph)}};
  if (verify) out["report"] = json_io::gadget_report_to_json(verify_gadget(*gg, limits_of(mpl, mp, cc)));
  return out.dump();
}

std::string normalize(const std::string& graph_text, std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  Limits l;
  l.cycle_cap = cc;
  return json_io::normalization_to_json(g, normalize_to_zero(g, l)).dump();
}

std::string blocks(const std::string& graph_text, std::size_t mpl, std::size_t mp, std::size_t cc) {
  const LabelledGraph g = graph_of(graph_text);
  return json{{"three_connected", is_three_connected(g)},
              {"blocks", json_io::three_blocks_to_json(g, three_blocks(g, limits_of(mpl, mp, cc)))}}
      .dump();
}

std::string criterion(int id, std::uint64_t seed, unsigned threads, bool best_effort) {
  if (id < 1 || id > suite::kCriterionCount) throw InvalidArgument("criterion ids run from 1 to 9");
  suite::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  cfg.best_effort = best_effort;
  suite::CriterionResult r;
  {
    py::gil_scoped_release release;
    r = suite::run_criterion(id, cfg);
  }
  return suite::criterion_to_json(r).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-string bindings for the gammapath core library";

  static py::exception<Error> base(m, "GammapathError", PyExc_RuntimeError);
  static py::exception<InvalidArgument> invalid(m, "InvalidArgument", base.ptr());
  static py::exception<PreconditionFailed> precondition(m, "PreconditionFailed", base.ptr());
  static py::exception<LimitExceeded> limit(m, "LimitExceeded", base.ptr());
  static py::exception<InternalError> internal(m, "InternalError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      py::set_error(invalid, e.what());
    } catch (const PreconditionFailed& e) {
      py::set_error(precondition, e.what());
    } catch (const LimitExceeded& e) {
      py::set_error(limit, e.what());
    } catch (const InternalError& e) {
      py::set_error(internal, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("classify", &classify, py::arg("group"), py::arg("ell") = py::none());
  m.def("pack", &pack, py::arg("graph"), py::arg("family") = "nonzero", GAMMAPATH_LIMIT_ARGS);
  m.def("cover", &cover, py::arg("graph"), py::arg("family") = "nonzero", GAMMAPATH_LIMIT_ARGS);
  m.def("duality", &duality, py::arg("graph"), py::arg("family") = "nonzero", GAMMAPATH_LIMIT_ARGS);
  m.def("frame", &frame, py::arg("graph"), py::arg("k"), GAMMAPATH_LIMIT_ARGS);
  m.def("chain", &chain, py::arg("input"), py::arg("target") = py::none());
  m.def("sharpness", &sharpness, py::arg("p"));
  m.def("gadget", &gadget, py::arg("variant"), py::arg("n"), py::arg("group") = py::none(), py::arg("a") = py::none(),
        py::arg("b") = py::none(), py::arg("model") = "undirected", py::arg("verify") = false, GAMMAPATH_LIMIT_ARGS);
  m.def("normalize", &normalize, py::arg("graph"), py::arg("cycle_cap") = 100000);
  m.def("blocks", &blocks, py::arg("graph"), GAMMAPATH_LIMIT_ARGS);
  m.def("run_criterion", &criterion, py::arg("id"), py::arg("seed") = 7, py::arg("threads") = 0,
        py::arg("best_effort") = false);
}
