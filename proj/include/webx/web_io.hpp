#pragma once

#include <string>

#include <json.hpp>

#include "webx/web.hpp"

namespace webx {

using json = nlohmann::json;

inline json web_to_json(const Web& web) {
  json paths = json::array();
  for (const auto& [pair, seq] : web.paths()) {
    paths.push_back({{"ends", {pair.lo, pair.hi}}, {"seq", seq}});
  }
  return {{"branch", web.branch()}, {"paths", std::move(paths)}};
}

inline Web web_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("branch") || !j.contains("paths")) {
      throw InputError("web JSON needs 'branch' and 'paths'");
    }
    auto branch = j.at("branch").get<VertexSet>();
    Web::PathMap paths;
    for (const auto& rec : j.at("paths")) {
      const auto ends = rec.at("ends").get<std::vector<Vertex>>();
      if (ends.size() != 2) throw InputError("path record needs exactly two ends");
      const auto pair = VertexPair::of(ends[0], ends[1]);
      if (!paths.emplace(pair, rec.at("seq").get<PathSeq>()).second) {
        throw InputError("duplicate path record for " + to_string(pair));
      }
    }
    return Web(std::move(branch), std::move(paths));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed web JSON: ") + e.what());
  }
}

inline std::string format_web(const Web& web) { return web_to_json(web).dump(2) + "\n"; }

inline Web parse_web(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("web file is not JSON: ") + e.what());
  }
  return web_from_json(j);
}

}  // namespace webx
