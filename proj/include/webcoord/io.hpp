#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "webcoord/errors.hpp"
#include "webcoord/glue.hpp"
#include "webcoord/localweb.hpp"
#include "webcoord/surface.hpp"

namespace webcoord {

using json = nlohmann::ordered_json;

inline json parse_json(const std::string& text, const std::string& what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError(what + ": not valid JSON");
  return doc;
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

// Triangulation document:
//   { "triangles": ["T0", ...],
//     "edges": [ {"id": "a", "sides": [{"tri": "T0", "slot": 1},
//                                      {"tri": "T1", "slot": 1}]}, ... ] }
// Slots are 1-based in files; the first-listed side of an edge is its
// canonical viewing side for the global dot order.
inline IdealTriangulation triangulation_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("triangles") || !doc.contains("edges"))
    throw SchemaError("triangulation document needs \"triangles\" and \"edges\"");
  if (!doc["triangles"].is_array() || !doc["edges"].is_array())
    throw SchemaError("\"triangles\" and \"edges\" must be arrays");

  std::vector<std::string> tri_ids;
  for (const json& t : doc["triangles"]) {
    if (!t.is_string()) throw SchemaError("triangle ids must be strings");
    tri_ids.push_back(t.get<std::string>());
  }
  std::map<std::string, int> tri_index;
  for (int i = 0; i < static_cast<int>(tri_ids.size()); ++i) tri_index[tri_ids[i]] = i;

  std::vector<EdgeRecord> edges;
  for (const json& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("sides"))
      throw SchemaError("each edge needs \"id\" and \"sides\"");
    if (!e["id"].is_string()) throw SchemaError("edge ids must be strings");
    if (!e["sides"].is_array() || e["sides"].size() != 2)
      throw SchemaError("edge " + e["id"].get<std::string>() + " needs exactly two sides");
    EdgeRecord rec;
    rec.id = e["id"].get<std::string>();
    for (int s = 0; s < 2; ++s) {
      const json& side = e["sides"][s];
      if (!side.is_object() || !side.contains("tri") || !side.contains("slot") ||
          !side["tri"].is_string() || !side["slot"].is_number_integer())
        throw SchemaError("edge " + rec.id + ": each side needs \"tri\" and integer \"slot\"");
      auto it = tri_index.find(side["tri"].get<std::string>());
      if (it == tri_index.end())
        throw SchemaError("edge " + rec.id + " references unknown triangle " +
                          side["tri"].get<std::string>());
      const int slot = side["slot"].get<int>();
      if (slot < 1 || slot > 3)
        throw SchemaError("edge " + rec.id + ": slot must be 1, 2, or 3");
      rec.sides[s] = EdgeSide{it->second, slot - 1};
    }
    edges.push_back(rec);
  }
  return IdealTriangulation(std::move(tri_ids), std::move(edges));
}

inline json triangulation_to_json(const IdealTriangulation& t) {
  json doc;
  doc["triangles"] = json::array();
  for (const std::string& id : t.triangle_ids()) doc["triangles"].push_back(id);
  doc["edges"] = json::array();
  for (const EdgeRecord& e : t.edges()) {
    json rec;
    rec["id"] = e.id;
    rec["sides"] = json::array();
    for (const EdgeSide& s : e.sides) {
      rec["sides"].push_back({{"tri", t.triangle_id(s.tri)}, {"slot", s.slot + 1}});
    }
    doc["edges"].push_back(rec);
  }
  return doc;
}

inline IdealTriangulation load_triangulation(const std::string& text) {
  return triangulation_from_json(parse_json(text, "triangulation"));
}

inline std::shared_ptr<const IdealTriangulation> load_triangulation_file(
    const std::filesystem::path& path) {
  return std::make_shared<const IdealTriangulation>(triangulation_from_json(read_json_file(path)));
}

// Per-triangle web record:
//   {"honeycomb": {"dir": "out", "n": 1}, "corners": ["RL", "", ""]}
// Corner strings are innermost-first; "dir": "none" (with n absent or 0)
// or an absent "honeycomb" key mean no honeycomb.
inline TriangleWeb triangle_web_from_json(const json& rec) {
  if (!rec.is_object()) throw SchemaError("web record must be an object");
  TriangleWeb w;
  if (rec.contains("honeycomb")) {
    const json& h = rec["honeycomb"];
    if (!h.is_object() || !h.contains("dir") || !h["dir"].is_string())
      throw SchemaError("honeycomb record needs a \"dir\" string");
    const std::string dir = h["dir"].get<std::string>();
    const int n = h.contains("n") ? (h["n"].is_number_integer()
                                         ? h["n"].get<int>()
                                         : throw SchemaError("honeycomb \"n\" must be an integer"))
                                  : 0;
    if (dir == "none") {
      if (n != 0) throw SchemaError("honeycomb with dir \"none\" cannot have n > 0");
    } else if (dir == "in" || dir == "out") {
      w.honeycomb = Honeycomb{dir == "in" ? HoneycombDir::in : HoneycombDir::out, n};
    } else {
      throw SchemaError("honeycomb dir must be \"in\", \"out\", or \"none\"");
    }
  }
  if (rec.contains("corners")) {
    if (!rec["corners"].is_array() || rec["corners"].size() != 3)
      throw SchemaError("\"corners\" must be an array of three strings");
    for (int k = 0; k < 3; ++k) {
      if (!rec["corners"][k].is_string()) throw SchemaError("corner words must be strings");
      w.corners[k] = rec["corners"][k].get<std::string>();
    }
  }
  w.validate();
  return w;
}

inline json triangle_web_to_json(const TriangleWeb& w) {
  json rec;
  if (w.honeycomb.dir == HoneycombDir::none) {
    rec["honeycomb"] = {{"dir", "none"}};
  } else {
    rec["honeycomb"] = {{"dir", w.honeycomb.dir == HoneycombDir::in ? "in" : "out"},
                        {"n", w.honeycomb.n}};
  }
  rec["corners"] = json::array({w.corners[0], w.corners[1], w.corners[2]});
  return rec;
}

// Web document:
//   { "triangulation": <path or inline object>,
//     "webs": { "T0": <web record>, ... } }
// Triangles without an entry carry the empty local web.  A path is
// resolved relative to base_dir (the web file's own directory).
inline GlobalWeb web_from_json(const json& doc, const std::filesystem::path& base_dir = {}) {
  if (!doc.is_object() || !doc.contains("triangulation") || !doc.contains("webs"))
    throw SchemaError("web document needs \"triangulation\" and \"webs\"");
  std::shared_ptr<const IdealTriangulation> tri;
  if (doc["triangulation"].is_string()) {
    std::filesystem::path p = doc["triangulation"].get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    tri = load_triangulation_file(p);
  } else if (doc["triangulation"].is_object()) {
    tri = std::make_shared<const IdealTriangulation>(triangulation_from_json(doc["triangulation"]));
  } else {
    throw SchemaError("\"triangulation\" must be a path or an inline object");
  }
  if (!doc["webs"].is_object()) throw SchemaError("\"webs\" must be an object");
  GlobalWeb w = GlobalWeb::empty(tri);
  for (const auto& [key, rec] : doc["webs"].items())
    w.webs[tri->triangle_index(key)] = triangle_web_from_json(rec);
  w.validate();
  return w;
}

inline json web_to_json(const GlobalWeb& w) {
  json doc;
  doc["triangulation"] = triangulation_to_json(*w.triangulation);
  doc["webs"] = json::object();
  for (int t = 0; t < w.triangulation->num_triangles(); ++t)
    doc["webs"][w.triangulation->triangle_id(t)] = triangle_web_to_json(w.webs[t]);
  return doc;
}

inline GlobalWeb load_web_file(const std::filesystem::path& path) {
  return web_from_json(read_json_file(path), path.parent_path());
}

inline json content_to_json(const LocalWebContent& c) {
  json rec;
  rec["arcs"] = {{"R1", c.r_arcs[0]}, {"L1", c.l_arcs[0]}, {"R2", c.r_arcs[1]},
                 {"L2", c.l_arcs[1]}, {"R3", c.r_arcs[2]}, {"L3", c.l_arcs[2]}};
  if (c.honeycomb.dir == HoneycombDir::none) {
    rec["honeycomb"] = {{"dir", "none"}};
  } else {
    rec["honeycomb"] = {{"dir", c.honeycomb.dir == HoneycombDir::in ? "in" : "out"},
                        {"n", c.honeycomb.n}};
  }
  return rec;
}

} // namespace webcoord
