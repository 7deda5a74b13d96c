#pragma once

#include <string>

#include "json.hpp"
#include "ramkit/core/errors.hpp"
#include "ramkit/core/fin_tree.hpp"
#include "ramkit/core/homogeneity.hpp"

namespace ramkit {

using Json = nlohmann::json;

inline Json tree_to_json(const FinTree& t) {
  Json nodes = Json::array();
  for (const Word& w : t.nodes()) nodes.push_back(word_to_string(w, t.alphabet()));
  return Json{{"alphabet", t.alphabet()}, {"horizon", t.horizon()}, {"nodes", nodes}};
}

// Parses the interchange document and rejects anything that is not a valid tree.
inline FinTree tree_from_json(const Json& j) {
  try {
    auto k = j.at("alphabet").get<std::uint32_t>();
    auto horizon = j.at("horizon").get<std::size_t>();
    if (horizon > 4096) throw InputError("tree horizon too large");
    FinTree t(k, horizon);
    for (const auto& n : j.at("nodes")) t.insert(word_from_string(n.get<std::string>(), k));
    if (!validate_tree(t)) throw InputError("tree document is not prefix-closed or has out-of-range symbols");
    return t;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed tree document: ") + e.what());
  }
}

inline Json colorset_to_json(const ColorSet& h) { return Json{{"positions", h.positions}, {"color", h.color}}; }

inline ColorSet colorset_from_json(const Json& j) {
  try {
    return ColorSet(j.at("positions").get<std::vector<std::size_t>>(), j.at("color").get<Symbol>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed color set: ") + e.what());
  }
}

inline Json partial_hom_to_json(const PartialHom& h) {
  Json arr = Json::array();
  for (const auto& [p, v] : h.entries) arr.push_back(Json::array({p, v}));
  return arr;
}

inline PartialHom partial_hom_from_json(const Json& j) {
  PartialHom h;
  try {
    for (const auto& e : j) {
      auto p = e.at(0).get<std::size_t>();
      if (h.entries.count(p)) throw InputError("partial function lists a position twice");
      h.entries[p] = e.at(1).get<Symbol>();
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed partial function: ") + e.what());
  }
  return h;
}

}  // namespace ramkit
