#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "webcoord/cone.hpp"
#include "webcoord/errors.hpp"
#include "webcoord/glue.hpp"
#include "webcoord/io.hpp"
#include "webcoord/oracle.hpp"
#include "webcoord/surface.hpp"

namespace webcoord::cli {

struct DispatchResult {
  int exit_code = 0;
  json report;
};

namespace detail {

inline json make_report(const std::string& status, json payload, std::vector<std::string> diags) {
  json report;
  report["status"] = status;
  report["payload"] = status == "ok" ? std::move(payload) : json::object();
  report["diagnostics"] = json::array();
  for (std::string& d : diags) report["diagnostics"].push_back(std::move(d));
  return report;
}

inline GlobalConePoint parse_vector(const std::string& text, int expected) {
  GlobalConePoint v;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw SchemaError("empty entry in coordinate vector");
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw SchemaError("coordinate vector entry is not an integer: " + token);
    }
    if (used != token.size())
      throw SchemaError("coordinate vector entry is not an integer: " + token);
    v.push_back(value);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(ch))) token.push_back(ch);
  }
  flush();
  if (static_cast<int>(v.size()) != expected)
    throw SchemaError("coordinate vector has " + std::to_string(v.size()) + " entries, expected " +
                      std::to_string(expected));
  return v;
}

struct Args {
  std::vector<std::string> positional;
  bool rhombus = false;
  bool dots = false;
  std::string out_path;
  long long max_bound = -1;
  int jobs = 1;
  bool have_max = false;
};

inline Args parse_args(const std::vector<std::string>& args, size_t from) {
  Args a;
  for (size_t i = from; i < args.size(); ++i) {
    const std::string& s = args[i];
    auto value_of = [&](const char* flag) -> const std::string& {
      if (++i >= args.size()) throw SchemaError(std::string(flag) + " requires a value");
      return args[i];
    };
    if (s == "--rhombus") a.rhombus = true;
    else if (s == "--dots") a.dots = true;
    else if (s == "-o" || s == "--output") a.out_path = value_of("-o");
    else if (s == "--max") { a.max_bound = std::stoll(value_of("--max")); a.have_max = true; }
    else if (s == "--jobs") a.jobs = std::stoi(value_of("--jobs"));
    else if (!s.empty() && s[0] == '-') throw SchemaError("unknown flag: " + s);
    else a.positional.push_back(s);
  }
  return a;
}

inline json legend_json(const IdealTriangulation& t, const DotIndexing& idx) {
  json legend = json::array();
  const std::vector<std::string> names = idx.labels(t);
  for (const std::string& n : names) legend.push_back(n);
  return legend;
}

inline json coords_json(const GlobalConePoint& v) {
  json out = json::array();
  for (long long x : v) out.push_back(x);
  return out;
}

inline json rhombus_tables(const GlobalConePoint& v, const IdealTriangulation& t,
                           const DotIndexing& idx) {
  json tables = json::object();
  for (int tri = 0; tri < t.num_triangles(); ++tri) {
    const RhombusVector r = rhombus_vector(local_point_at(v, t, idx, tri));
    json row = json::array();
    for (long long n : r.num3) {
      internal_check(n % 3 == 0, "rhombus number is not an integer");
      row.push_back(n / 3);
    }
    tables[t.triangle_id(tri)] = row;
  }
  return tables;
}

inline std::string require_one_path(const Args& a, const char* what) {
  if (a.positional.size() != 1) throw SchemaError(std::string(what) + ": expected one file path");
  return a.positional[0];
}

} // namespace detail

// Executes one subcommand and produces the machine-readable report.
// Exit codes: 0 ok, 1 invalid input, 2 not-in-cone or elliptic,
// 3 internal assertion failure.
inline DispatchResult dispatch(const std::vector<std::string>& args) {
  using namespace detail;
  try {
    if (args.empty())
      return {1, make_report("invalid", {},
                             {"usage: webcoord <validate|coords|cone-check|reconstruct|roundtrip|"
                              "enumerate|trace|confluence> ..."})};
    const std::string& cmd = args[0];
    const Args a = parse_args(args, 1);

    if (cmd == "validate") {
      const auto tri = load_triangulation_file(require_one_path(a, "validate"));
      const DotIndexing idx = dot_indexing(*tri);
      json payload;
      payload["triangles"] = tri->num_triangles();
      payload["edges"] = tri->num_edges();
      payload["euler"] = euler_characteristic(*tri);
      payload["dots"] = idx.size();
      if (a.dots) payload["legend"] = legend_json(*tri, idx);
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "coords") {
      const GlobalWeb w = load_web_file(require_one_path(a, "coords"));
      const GlobalConePoint v = global_coords(w);
      const DotIndexing idx = dot_indexing(*w.triangulation);
      json payload;
      payload["coordinates"] = coords_json(v);
      if (a.rhombus) payload["rhombus"] = rhombus_tables(v, *w.triangulation, idx);
      if (a.dots) payload["legend"] = legend_json(*w.triangulation, idx);
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "cone-check") {
      if (a.positional.size() != 2)
        throw SchemaError("cone-check: expected a triangulation path and a coordinate vector");
      const auto tri = load_triangulation_file(a.positional[0]);
      const DotIndexing idx = dot_indexing(*tri);
      const GlobalConePoint v = parse_vector(a.positional[1], idx.size());
      const int bad = first_failing_triangle(v, *tri, idx);
      if (bad >= 0)
        return {2, make_report("not-in-cone", {},
                               {"triangle " + tri->triangle_id(bad) +
                                " fails the rhombus inequalities or mod-3 congruences"})};
      json payload;
      payload["in_cone"] = true;
      payload["decomposition"] = json::object();
      for (int k = 0; k < tri->num_triangles(); ++k)
        payload["decomposition"][tri->triangle_id(k)] =
            content_to_json(decompose_local(local_point_at(v, *tri, idx, k)));
      if (a.dots) payload["legend"] = legend_json(*tri, idx);
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "reconstruct") {
      if (a.positional.size() != 2)
        throw SchemaError("reconstruct: expected a triangulation path and a coordinate vector");
      const auto tri = load_triangulation_file(a.positional[0]);
      const DotIndexing idx = dot_indexing(*tri);
      const GlobalConePoint v = parse_vector(a.positional[1], idx.size());
      const GlobalWeb w = reconstruct(v, tri);
      const json doc = web_to_json(w);
      if (!a.out_path.empty()) {
        std::ofstream out(a.out_path);
        if (!out) throw SchemaError("cannot write " + a.out_path);
        out << doc.dump(2) << "\n";
      }
      json payload;
      payload["web"] = doc;
      payload["crossings"] = total_crossings(w);
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "roundtrip") {
      const GlobalWeb w = load_web_file(require_one_path(a, "roundtrip"));
      require_compatible(w);
      if (!is_nonelliptic(w))
        return {2, make_report("elliptic", {}, {"web has a square face; resolve it first"})};
      const bool ok = roundtrip_web(w);
      json payload;
      payload["roundtrip"] = ok;
      if (ok) return {0, make_report("ok", payload, {})};
      return {3, make_report("invalid", {}, {"roundtrip failed: reconstruction is not "
                                             "parallel-equivalent to the input web"})};
    }

    if (cmd == "enumerate") {
      const auto tri = load_triangulation_file(require_one_path(a, "enumerate"));
      if (!a.have_max) throw SchemaError("enumerate requires --max <bound>");
      const std::vector<GlobalConePoint> points =
          enumerate_cone_parallel(*tri, a.max_bound, a.jobs);
      json payload;
      payload["bound"] = a.max_bound;
      payload["count"] = points.size();
      payload["points"] = json::array();
      for (const GlobalConePoint& c : points) payload["points"].push_back(coords_json(c));
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "trace") {
      const GlobalWeb w = load_web_file(require_one_path(a, "trace"));
      const GlobalPicture pic(w);
      const IdealTriangulation& t = *w.triangulation;
      json payload;
      payload["travelers"] = json::array();
      for (const Traveler& tr : pic.travelers()) {
        json rec;
        rec["id"] = tr.id;
        rec["kind"] = tr.is_loop ? "loop" : "arc";
        rec["route"] = json::array();
        const int n = static_cast<int>(tr.route.size());
        for (int i = 0; i < n; ++i) {
          const RouteEntry& e = tr.route[tr.is_loop ? (tr.base_index + i) % n : i];
          const EdgeSide side = t.side(e.edge, e.side);
          const auto& entry = pic.entry(side.tri, side.slot, e.position);
          rec["route"].push_back({{"edge", t.edge(e.edge).id},
                                  {"tri", t.triangle_id(side.tri)},
                                  {"dir", entry.dir == StrandDir::out ? "out" : "in"},
                                  {"position", e.position}});
        }
        payload["travelers"].push_back(rec);
      }
      payload["crossings"] = pic.crossings().size();
      return {0, make_report("ok", payload, {})};
    }

    if (cmd == "confluence") {
      const GlobalWeb w = load_web_file(require_one_path(a, "confluence"));
      const bool ok = confluence_check(w);
      json payload;
      payload["confluent"] = ok;
      if (ok) return {0, make_report("ok", payload, {})};
      return {3, make_report("invalid", {},
                             {"square removal is not confluent on this web"})};
    }

    return {1, make_report("invalid", {}, {"unknown subcommand: " + cmd})};
  } catch (const NotInCone& e) {
    return {2, detail::make_report("not-in-cone", {}, {e.what()})};
  } catch (const EllipticInput& e) {
    return {2, detail::make_report("elliptic", {}, {e.what()})};
  } catch (const InternalCheckFailure& e) {
    return {3, detail::make_report("invalid", {}, {std::string("internal: ") + e.what()})};
  } catch (const Error& e) {
    return {1, detail::make_report("invalid", {}, {e.what()})};
  } catch (const std::exception& e) {
    return {1, detail::make_report("invalid", {}, {e.what()})};
  }
}

} // namespace webcoord::cli
