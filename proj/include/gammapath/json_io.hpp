#ifndef GAMMAPATH_JSON_IO_HPP_
#define GAMMAPATH_JSON_IO_HPP_

#include <memory>
#include <string>

#include "json.hpp"

#include "gammapath/blocks.hpp"
#include "gammapath/cycle_chain.hpp"
#include "gammapath/frame.hpp"
#include "gammapath/gadgets.hpp"
#include "gammapath/graph.hpp"
#include "gammapath/packing.hpp"
#include "gammapath/shifting.hpp"

namespace gammapath::json_io {

using nlohmann::json;

json group_to_json(const Group& group);
std::shared_ptr<const Group> group_from_json(const json& j);

// Cyclic products: coordinate arrays (a bare integer is accepted for a
// single factor and reduced). Cayley tables: the index. Integers: a
// decimal string (a JSON integer is accepted).
json elem_to_json(const Group& group, const Elem& g);
Elem elem_from_json(const Group& group, const json& j);
// Command-line form: JSON text, a comma-separated coordinate list, or a
// bare decimal.
Elem elem_from_text(const Group& group, const std::string& text);

json graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const json& j);

json walk_to_json(const LabelledGraph& g, const Walk& w);
Walk walk_from_json(const LabelledGraph& g, const json& j);
json witness_to_json(const LabelledGraph& g, const PathWitness& w);
// The stored weight, when present, must equal the recomputed one.
PathWitness witness_from_json(const LabelledGraph& g, const json& j);

json vertex_ids(const LabelledGraph& g, const std::vector<int>& vertices);
std::vector<int> vertex_indices(const LabelledGraph& g, const json& ids);

// "weight:<elem>", "nonzero", "odd", "aba:<id>,<id>,...".
PathFamilySpec family_from_text(const LabelledGraph& g, const std::string& text);
json family_to_json(const LabelledGraph& g, const PathFamilySpec& spec);

json pack_or_cover_to_json(const LabelledGraph& g, const PackOrCover& pc);
json frame_result_to_json(const LabelledGraph& g, const FrameResult& r);
json duality_to_json(const LabelledGraph& g, const DualityReport& r);

json chain_to_json(const LabelledGraph& g, const CycleChain& c);
CycleChain chain_from_json(const LabelledGraph& g, const json& j);
json abstract_chain_to_json(const Group& group, const AbstractChain& c);
AbstractChain abstract_chain_from_json(const Group& group, const json& j);

json normalization_to_json(const LabelledGraph& g, const Normalization& n);
json three_blocks_to_json(const LabelledGraph& g, const std::vector<ThreeBlock>& blocks);
json gadget_report_to_json(const GadgetReport& r);

}  // namespace gammapath::json_io

#endif  // GAMMAPATH_JSON_IO_HPP_
