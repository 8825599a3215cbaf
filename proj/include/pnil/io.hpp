// JSON and DOT serialization: pc presentations in a generator-name based
// interchange format, parameter tuples, count breakdowns, catalog entries,
// fingerprints, and ancestry output.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pnil/ancestry.hpp"
#include "pnil/catalog.hpp"
#include "pnil/rank2.hpp"

namespace pnil::io {

using json = nlohmann::ordered_json;

// {"p", "generators": [{"name", "order_exp"}], "power_relations":
//  [{"generator", "value": [[name, exp], ...]}], "commutator_relations":
//  [{"left", "right", "value": ...}]} where left is the later generator and
// the value is the word for [left, right]; omitted relations are trivial.
json presentation_json(const PcPresentation& pc);
PcPresentation presentation_from_json(const json& j);

json params_json(const rank2::Params& P);
json count_json(const rank2::CountBreakdown& c);
json descriptor_json(const ancestry::GroupDescriptor& d);
json fingerprint_json(const catalog::Fingerprint& f);
json entry_json(const catalog::CatalogEntry& e, bool with_presentation,
                bool with_properties);

// Edges ancestor -> target in descendant direction.
std::string ancestors_dot(const ancestry::GroupDescriptor& target,
                          const std::vector<rank2::Params>& ancestors);

// Fixed-width text table with a dashed separator under the header.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace pnil::io
