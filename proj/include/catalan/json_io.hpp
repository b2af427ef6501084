#pragma once

// JSON encodings of the value types. Every `*_to_json` has a matching parser
// and parse(print(x)) == x.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalan/binary_tree.hpp"
#include "catalan/fan.hpp"
#include "catalan/permutation.hpp"
#include "catalan/polytope.hpp"
#include "catalan/sequences.hpp"
#include "catalan/triangulation.hpp"

namespace catalan {

using Json = nlohmann::json;

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::int64_t as_int(const Json& j) {
  if (!j.is_number_integer()) throw MalformedInput("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

inline IntVector as_int_vector(const Json& j) {
  if (!j.is_array()) throw MalformedInput("expected an integer array, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(as_int(x));
  return v;
}

}  // namespace detail

// permutations: [2,4,3,1]

inline Json permutation_to_json(const Permutation& p) { return Json(p.values()); }

inline Permutation permutation_from_json(const Json& j) {
  std::vector<int> v;
  for (auto x : detail::as_int_vector(j)) v.push_back(static_cast<int>(x));
  try {
    return Permutation(std::move(v));
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

// trees: {"label": 2, "left": ..., "right": ...}; unlabelled vertices carry "label": null

inline Json tree_to_json(const BinaryTree& t) {
  if (t.empty()) return nullptr;
  const auto& r = t.root();
  return {{"label", r.label ? Json(*r.label) : Json(nullptr)},
          {"left", tree_to_json(r.left)},
          {"right", tree_to_json(r.right)}};
}

inline BinaryTree tree_from_json(const Json& j) {
  if (j.is_null()) return {};
  const auto& label = detail::field(j, "label");
  std::optional<int> l;
  if (!label.is_null()) l = static_cast<int>(detail::as_int(label));
  return BinaryTree::node(l, tree_from_json(detail::field(j, "left")), tree_from_json(detail::field(j, "right")));
}

// big-integer sequences: arrays of decimal strings

inline Json sequence_to_json(const BigSequence& s) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(v.str());
  return {{"first_index", s.first_index}, {"values", values}};
}

inline BigSequence sequence_from_json(const Json& j) {
  BigSequence s;
  s.first_index = static_cast<int>(detail::as_int(detail::field(j, "first_index")));
  for (const auto& v : detail::field(j, "values")) {
    if (!v.is_string()) throw MalformedInput("sequence values must be decimal strings");
    try {
      s.values.emplace_back(v.get<std::string>());
    } catch (const std::exception&) {
      throw MalformedInput("not an integer: " + v.dump());
    }
  }
  return s;
}

// triangulations: {"n": 8, "diagonals": [[0,2],...]}

inline Json triangulation_to_json(const Triangulation& t) {
  Json d = Json::array();
  for (const auto& [a, b] : t.diagonals()) d.push_back({a, b});
  return {{"n", t.n()}, {"diagonals", d}};
}

inline Triangulation triangulation_from_json(const Json& j) {
  const int n = static_cast<int>(detail::as_int(detail::field(j, "n")));
  std::vector<Edge> diagonals;
  const auto& d = detail::field(j, "diagonals");
  if (!d.is_array()) throw MalformedInput("diagonals must be an array");
  for (const auto& e : d) {
    const auto pair = detail::as_int_vector(e);
    if (pair.size() != 2) throw MalformedInput("a diagonal has two endpoints: " + e.dump());
    diagonals.emplace_back(static_cast<int>(std::min(pair[0], pair[1])), static_cast<int>(std::max(pair[0], pair[1])));
  }
  try {
    return Triangulation(n, std::move(diagonals));
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
}

// fans: {"n":..., "rays_v":[...], "rays_w":[...], "relations":[{"k":1,"rhs":"zero"}, {"k":2,"rhs":{"w":3}}, ...]}
// Relations whose right side is not a single ray use {"sum":[{"pair":k,"side":"v","coeff":c}, ...]}.

struct FanDocument {
  PairedFan fan;
  std::vector<PrimitiveRelation> relations;
};

inline Json relation_to_json(const PrimitiveRelation& r) {
  Json rhs;
  if (r.is_zero()) {
    rhs = "zero";
  } else if (r.is_single_ray()) {
    rhs = {{r.rhs[0].side == Side::v ? "v" : "w", r.rhs[0].pair}};
  } else {
    Json terms = Json::array();
    for (const auto& t : r.rhs)
      terms.push_back({{"pair", t.pair}, {"side", t.side == Side::v ? "v" : "w"}, {"coeff", t.coeff}});
    rhs = {{"sum", terms}};
  }
  return {{"k", r.k}, {"rhs", rhs}};
}

inline PrimitiveRelation relation_from_json(const Json& j) {
  PrimitiveRelation r;
  r.k = static_cast<int>(detail::as_int(detail::field(j, "k")));
  const auto& rhs = detail::field(j, "rhs");
  auto side_of = [](const std::string& s) {
    if (s == "v") return Side::v;
    if (s == "w") return Side::w;
    throw MalformedInput("side must be \"v\" or \"w\", got " + s);
  };
  if (rhs.is_string()) {
    if (rhs.get<std::string>() != "zero") throw MalformedInput("unknown relation " + rhs.dump());
  } else if (rhs.is_object() && rhs.contains("sum")) {
    for (const auto& t : rhs.at("sum"))
      r.rhs.push_back({static_cast<int>(detail::as_int(detail::field(t, "pair"))),
                       side_of(detail::field(t, "side").get<std::string>()), detail::as_int(detail::field(t, "coeff"))});
  } else if (rhs.is_object() && rhs.size() == 1) {
    const auto& [key, value] = *rhs.items().begin();
    r.rhs.push_back({static_cast<int>(detail::as_int(value)), side_of(key), 1});
  } else {
    throw MalformedInput("malformed relation " + j.dump());
  }
  return r;
}

inline Json fan_to_json(const PairedFan& f, const std::vector<PrimitiveRelation>& relations) {
  Json v = Json::array(), w = Json::array(), rel = Json::array();
  for (const auto& r : f.rays_v()) v.push_back(r.coords);
  for (const auto& r : f.rays_w()) w.push_back(r.coords);
  for (const auto& r : relations) rel.push_back(relation_to_json(r));
  return {{"n", f.n()}, {"rays_v", v}, {"rays_w", w}, {"relations", rel}};
}

inline Json fan_to_json(const PairedFan& f) { return fan_to_json(f, primitive_relations(f)); }

inline FanDocument fan_from_json(const Json& j) {
  const auto n = detail::as_int(detail::field(j, "n"));
  std::vector<LatticeVectorN> v, w;
  for (const auto& r : detail::field(j, "rays_v")) v.push_back({detail::as_int_vector(r)});
  for (const auto& r : detail::field(j, "rays_w")) w.push_back({detail::as_int_vector(r)});
  if (static_cast<std::int64_t>(v.size()) != n) throw MalformedInput("fan: rays_v must have n entries");
  FanDocument doc;
  try {
    doc.fan = PairedFan(std::move(v), std::move(w));
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  }
  if (j.contains("relations"))
    for (const auto& r : j.at("relations")) doc.relations.push_back(relation_from_json(r));
  return doc;
}

inline Json simplicial_fan_to_json(const SimplicialFan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(r.coords);
  return {{"dim", f.dim}, {"rays", rays}, {"maximal_cones", f.maximal_cones}};
}

// polytopes

inline Json facet_to_json(const Facet& f) { return {{"normal", f.normal.coords}, {"offset", to_string(f.offset)}}; }

inline Json certificate_to_json(const CombinatorialCubeCertificate& c) {
  Json pairs = Json::array();
  for (const auto& [a, b] : c.opposite_pairs) pairs.push_back({a, b});
  return {{"dim", c.dim},
          {"vertex_count", c.vertex_count},
          {"vertex_count_ok", c.vertex_count_ok},
          {"simple", c.simple},
          {"graph_iso_to_hypercube", c.graph_iso_to_hypercube},
          {"opposite_pairs", pairs},
          {"valid", c.valid()}};
}

}  // namespace catalan
