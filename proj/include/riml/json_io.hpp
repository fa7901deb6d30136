#ifndef RIML_JSON_IO_HPP
#define RIML_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "riml/kripke.hpp"

namespace riml {

using Json = nlohmann::ordered_json;

/// Parse a JSON document; InputError on malformed text.
Json load_json(const std::string& text);

/// Frame document: {"worlds": ["x", ...], "rel": [["x","y"], ...]} with an
/// optional "val": {"p": ["x", ...], ...}. Any other key is rejected.
Model model_from_json(const Json& doc);
Frame frame_from_json(const Json& doc);

Json frame_to_json(const Frame& f);
Json model_to_json(const Model& m);
Json valuation_to_json(const Valuation& v);

/// World map document: {"map": {"x": "y", ...}}.
std::map<std::string, std::string> world_map_from_json(const Json& doc);

}  // namespace riml

#endif
