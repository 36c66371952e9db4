#include "gerst/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gerst {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field " + field + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

int get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) fail(path, "integer out of range");
  return static_cast<int>(v);
}

Point get_point(const Json& j, const std::string& path, int dim = -1) {
  if (!j.is_array()) fail(path, "expected an integer array");
  Point p;
  for (std::size_t i = 0; i < j.size(); ++i) p.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  if (dim >= 0 && static_cast<int>(p.size()) != dim) {
    fail(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(p.size()));
  }
  return p;
}

std::vector<Point> get_points(const Json& j, const std::string& path, int dim = -1) {
  if (!j.is_array()) fail(path, "expected an array of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_point(j[i], path + "[" + std::to_string(i) + "]", dim));
  return out;
}

std::vector<std::vector<int>> get_rows(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(get_point(j[i], path + "[" + std::to_string(i) + "]"));
  return rows;
}

// Library errors raised while building a value are reported against the
// field that produced it.
template <typename F>
auto at_field(const std::string& path, F build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(path, e.what());
  }
}

HeightMap get_height_map(const Json& j, const std::string& path) {
  const auto rows = get_rows(j, path);
  return at_field(path, [&] { return HeightMap::from_rows(rows); });
}

YoungDiagram get_diagram(const Json& j, const std::string& path, int n) {
  if (j.is_object()) {
    if (n != 3) fail(path, "height rows describe diagrams in N^3 only");
    const HeightMap h = get_height_map(member(j, "heights", path), path + ".heights");
    return at_field(path, [&] { return diagram_from_heights(h); });
  }
  auto boxes = get_points(j, path, n);
  return at_field(path, [&] { return YoungDiagram(BoxSet(n, std::move(boxes))); });
}

Json points_json(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

Json diagram_json(const YoungDiagram& d) {
  if (d.dim() == 3) return Json{{"heights", heights_from_diagram(d).rows()}};
  return points_json(d.boxes().boxes());
}

std::vector<int> get_heights(const Json& j, const std::string& path) {
  const auto h = get_point(j, path);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] <= 0) fail(path + "[" + std::to_string(i) + "]", "heights must be positive integers");
  }
  return h;
}

GluingDatum gluing_from_json(const Json& j) {
  const int n = get_int(member(j, "n", "payload"), "payload.n");
  if (n < 1) fail("payload.n", "must be positive");
  if (j.contains("ideals")) {
    const Json& ids = j["ideals"];
    auto ideal = [&](const char* name) {
      const std::string path = std::string("payload.ideals.") + name;
      auto gens = get_points(member(ids, name, "payload.ideals"), path, n);
      return at_field(path, [&] { return MonomialIdeal(n, std::move(gens)); });
    };
    const auto i = ideal("I"), jj = ideal("J"), k = ideal("K"), l = ideal("L");
    return at_field("payload.ideals", [&] { return gluing_from_ideals(i, jj, k, l); });
  }
  GluingDatum g;
  g.n = n;
  g.lambda = get_diagram(member(j, "lambda", "payload"), "payload.lambda", n);
  g.mu = get_diagram(member(j, "mu", "payload"), "payload.mu", n);
  const Json& comps = member(j, "components", "payload");
  if (!comps.is_array()) fail("payload.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "payload.components[" + std::to_string(i) + "]";
    auto boxes = get_points(member(comps[i], "shape", path), path + ".shape", n);
    GluedComponent c;
    c.shape = at_field(path + ".shape", [&] { return AbstractSkewShape(BoxSet(n, std::move(boxes))); });
    c.b = get_point(member(comps[i], "b", path), path + ".b", n);
    c.c = get_point(member(comps[i], "c", path), path + ".c", n);
    g.components.push_back(std::move(c));
  }
  return g;
}

Tower tower_from_json(const Json& j) {
  Tower t;
  t.lambda = get_diagram(member(j, "lambda", "payload"), "payload.lambda", 3);
  const Json& cols = member(j, "columns", "payload");
  if (!cols.is_array()) fail("payload.columns", "expected an array");
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string path = "payload.columns[" + std::to_string(i) + "]";
    const int h = get_int(member(cols[i], "height", path), path + ".height");
    if (h <= 0) fail(path + ".height", "heights must be positive integers");
    t.columns.push_back({h, get_point(member(cols[i], "base", path), path + ".base", 3)});
  }
  return t;
}

CompatibleTower compatible_tower_from_json(const Json& j) {
  CompatibleTower t;
  t.lambda = get_diagram(member(j, "lambda", "payload"), "payload.lambda", 3);
  t.mu = get_diagram(member(j, "mu", "payload"), "payload.mu", 3);
  t.heights = get_heights(member(j, "heights", "payload"), "payload.heights");
  t.b = get_points(member(j, "b", "payload"), "payload.b", 3);
  t.c = get_points(member(j, "c", "payload"), "payload.c", 3);
  if (t.b.size() != t.heights.size() || t.c.size() != t.heights.size()) {
    fail("payload", "heights, b and c must have equal lengths");
  }
  return t;
}

std::vector<Point> plan_points(const Json& j, const char* key) {
  const std::string path = std::string("payload.") + key;
  auto pts = get_points(member(j, key, "payload"), path, 2);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!is_nonnegative(pts[i])) fail(path + "[" + std::to_string(i) + "]", "points must lie in N^2");
  }
  return pts;
}

}  // namespace

std::string kind_of(const Instance& instance) {
  static const char* const kNames[] = {"gluing",      "tower",      "compatible-tower", "floor-plan",
                                       "compatible-floor-plan", "height-map", "diagram"};
  return kNames[instance.index()];
}

Json payload_to_json(const Instance& instance) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GluingDatum>) {
          Json comps = Json::array();
          for (const auto& c : v.components) {
            comps.push_back({{"shape", points_json(c.shape.boxes().boxes())}, {"b", c.b}, {"c", c.c}});
          }
          return {{"n", v.n},
                  {"lambda", points_json(v.lambda.boxes().boxes())},
                  {"mu", points_json(v.mu.boxes().boxes())},
                  {"components", comps}};
        } else if constexpr (std::is_same_v<T, Tower>) {
          Json cols = Json::array();
          for (const auto& c : v.columns) cols.push_back({{"height", c.height}, {"base", c.base}});
          return {{"lambda", diagram_json(v.lambda)}, {"columns", cols}};
        } else if constexpr (std::is_same_v<T, CompatibleTower>) {
          return {{"lambda", diagram_json(v.lambda)},
                  {"mu", diagram_json(v.mu)},
                  {"heights", v.heights},
                  {"b", points_json(v.b)},
                  {"c", points_json(v.c)}};
        } else if constexpr (std::is_same_v<T, FloorPlan>) {
          return {{"P", points_json(v.P)}, {"h", v.h}};
        } else if constexpr (std::is_same_v<T, CompatibleFloorPlan>) {
          return {{"P", points_json(v.P)}, {"Q", points_json(v.Q)}, {"h", v.h}};
        } else if constexpr (std::is_same_v<T, HeightMap>) {
          return {{"rows", v.rows()}};
        } else {
          return {{"n", v.dim()}, {"boxes", points_json(v.boxes().boxes())}};
        }
      },
      instance);
}

Instance payload_from_json(const std::string& kind, const Json& payload) {
  if (!payload.is_object()) fail("payload", "expected an object");
  if (kind == "gluing") return gluing_from_json(payload);
  if (kind == "tower") return tower_from_json(payload);
  if (kind == "compatible-tower") return compatible_tower_from_json(payload);
  if (kind == "floor-plan") {
    FloorPlan p{plan_points(payload, "P"), get_heights(member(payload, "h", "payload"), "payload.h")};
    if (p.P.size() != p.h.size()) fail("payload.h", "length differs from P");
    return p;
  }
  if (kind == "compatible-floor-plan") {
    CompatibleFloorPlan p{plan_points(payload, "P"), plan_points(payload, "Q"),
                          get_heights(member(payload, "h", "payload"), "payload.h")};
    if (p.P.size() != p.h.size() || p.Q.size() != p.h.size()) fail("payload.h", "length differs from P or Q");
    return p;
  }
  if (kind == "height-map") return get_height_map(member(payload, "rows", "payload"), "payload.rows");
  if (kind == "diagram") {
    const int n = get_int(member(payload, "n", "payload"), "payload.n");
    if (n < 1) fail("payload.n", "must be positive");
    auto boxes = get_points(member(payload, "boxes", "payload"), "payload.boxes", n);
    return at_field("payload.boxes", [&] { return YoungDiagram(BoxSet(n, std::move(boxes))); });
  }
  fail("kind", "unknown kind '" + kind + "'");
}

Json record_to_json(const InstanceRecord& record) {
  return {{"kind", kind_of(record.instance)},
          {"payload", payload_to_json(record.instance)},
          {"provenance", record.provenance},
          {"results", record.results}};
}

InstanceRecord record_from_json(const Json& j) {
  if (!j.is_object()) fail("(root)", "expected an object");
  const Json& kind = member(j, "kind", "(root)");
  if (!kind.is_string()) fail("kind", "expected a string");
  InstanceRecord r{payload_from_json(kind.get<std::string>(), member(j, "payload", "(root)"))};
  if (j.contains("provenance")) r.provenance = j["provenance"];
  if (j.contains("results")) r.results = j["results"];
  return r;
}

namespace {

// Like dump(2), but arrays of scalars stay on one line.
void pretty(const Json& j, int indent, std::string& out) {
  const auto flat = [](const Json& v) { return !v.is_structured() || v.empty(); };
  const auto pad = [&](int k) { out.append(static_cast<std::size_t>(k), ' '); };
  if (flat(j) || (j.is_array() && std::all_of(j.begin(), j.end(), flat))) {
    out += j.dump();
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    pad(indent + 2);
    if (obj) out += Json(it.key()).dump() + ": ";
    pretty(*it, indent + 2, out);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  pad(indent);
  out += obj ? "}" : "]";
}

}  // namespace

std::string serialize(const InstanceRecord& record, bool compact) {
  if (compact) return record_to_json(record).dump();
  std::string out;
  pretty(record_to_json(record), 0, out);
  return out + "\n";
}

InstanceRecord deserialize(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
    const auto line = 1 + std::count(upto.begin(), upto.end(), '\n');
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + e.what());
  }
  return record_from_json(j);
}

InstanceRecord read_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

void write_record(const std::filesystem::path& path, const InstanceRecord& record) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << serialize(record);
}

std::string validation_problem(const Instance& instance) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GluingDatum> || std::is_same_v<T, Tower> ||
                      std::is_same_v<T, CompatibleTower>) {
          const ValidationReport report = [&] {
            if constexpr (std::is_same_v<T, GluingDatum>) {
              return validate_gluing(v);
            } else {
              return validate_tower(v);
            }
          }();
          return report.valid() ? "" : report.summary();
        } else if constexpr (std::is_same_v<T, FloorPlan> || std::is_same_v<T, CompatibleFloorPlan>) {
          try {
            check_plan(v);
          } catch (const Error& e) {
            return e.what();
          }
          return "";
        } else {
          return "";
        }
      },
      instance);
}

}  // namespace gerst
