#pragma once

#include <string>

#include <json.hpp>

#include "lact/quotient.hpp"
#include "lact/tree_aut.hpp"

namespace lact {

// File schemas. All documents are emitted as ordered JSON so identical
// inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

// {"degree": d, "generators": ["(0 1)", ...]}
Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

// {"degree": d, "F": [...], "Fprime": [...]}
Json pair_to_json(const LocalActionPair& pair);
LocalActionPair pair_from_json(const Json& j);

// {"root_image": "01", "radius": 1, "portrait": {"": "(0 1)", ...}}
// Portrait keys in (length, lex) order.
Json aut_to_json(const TreeAut& g);
TreeAut aut_from_json(const Json& j, PairPtr pair);

Json report_to_json(const ClassificationReport& report);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace lact
