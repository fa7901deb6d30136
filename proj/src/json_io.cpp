#include "riml/json_io.hpp"

namespace riml {

namespace {

void check_keys(const Json& doc, std::initializer_list<const char*> allowed,
                const char* what) {
  if (!doc.is_object()) {
    throw InputError(std::string(what) + ": expected a JSON object");
  }
  for (const auto& [key, _] : doc.items()) {
    bool ok = false;
    for (const char* a : allowed) {
      if (key == a) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw InputError(std::string(what) + ": unknown key \"" + key + "\"");
    }
  }
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + ": expected array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw InputError(std::string(what) + ": expected string entries");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

Json load_json(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed JSON");
  return doc;
}

Model model_from_json(const Json& doc) {
  check_keys(doc, {"worlds", "rel", "val"}, "frame");
  if (!doc.contains("worlds") || !doc.contains("rel")) {
    throw InputError("frame: needs \"worlds\" and \"rel\"");
  }
  auto worlds = string_list(doc["worlds"], "worlds");

  std::vector<std::pair<std::string, std::string>> rel;
  const Json& jrel = doc["rel"];
  if (!jrel.is_array()) throw InputError("rel: expected array of pairs");
  for (const auto& e : jrel) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string()) {
      throw InputError("rel: each entry must be a [from, to] pair");
    }
    rel.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }

  Valuation val;
  if (doc.contains("val")) {
    const Json& jval = doc["val"];
    if (!jval.is_object()) throw InputError("val: expected object");
    for (const auto& [var, jw] : jval.items()) {
      val[var] = string_list(jw, "val");
    }
  }
  return Model(Frame(std::move(worlds), std::move(rel)), val);
}

Frame frame_from_json(const Json& doc) { return model_from_json(doc).frame(); }

Json frame_to_json(const Frame& f) {
  Json doc;
  doc["worlds"] = f.worlds();
  Json rel = Json::array();
  for (const auto& [a, b] : f.pair_names()) {
    rel.push_back(Json::array({a, b}));
  }
  doc["rel"] = std::move(rel);
  return doc;
}

Json valuation_to_json(const Valuation& v) {
  Json out = Json::object();
  for (const auto& [var, worlds] : v) out[var] = worlds;
  return out;
}

Json model_to_json(const Model& m) {
  Json doc = frame_to_json(m.frame());
  doc["val"] = valuation_to_json(m.valuation());
  return doc;
}

std::map<std::string, std::string> world_map_from_json(const Json& doc) {
  check_keys(doc, {"map"}, "world map");
  if (!doc.contains("map") || !doc["map"].is_object()) {
    throw InputError("world map: needs a \"map\" object");
  }
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : doc["map"].items()) {
    if (!v.is_string()) throw InputError("world map: targets must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace riml
