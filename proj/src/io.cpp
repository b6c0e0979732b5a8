#include "dl/io.hpp"

#include <sstream>

namespace dl {

namespace {

std::int64_t key_to_int(const std::string& key, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) throw Error(what + ": key '" + key + "' is not an integer");
  return value;
}

template <typename T>
T field(const Json& j, const char* name, const std::string& what) {
  if (!j.is_object() || !j.contains(name)) throw Error(what + ": missing field '" + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception& e) {
    throw Error(what + ": field '" + name + "': " + e.what());
  }
}

std::map<std::int64_t, Label> int_map(const Json& j, const std::string& what) {
  if (!j.is_object()) throw Error(what + " must be an object");
  std::map<std::int64_t, Label> m;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw Error(what + ": value at '" + k + "' is not an integer");
    m[key_to_int(k, what)] = v.get<Label>();
  }
  return m;
}

Json map_json(const std::map<std::int64_t, Label>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

Json to_json(const TreeVertex& v) {
  Json branch = Json::object();
  for (const auto& [level, label] : v.branch.entries()) branch[std::to_string(level)] = label;
  return Json{{"h", v.height}, {"branch", branch}};
}

TreeVertex tree_vertex_from_json(const Json& j, int q) {
  TreeVertex v;
  v.height = field<Height>(j, "h", "tree vertex");
  for (const auto& [level, label] : int_map(j.contains("branch") ? j.at("branch") : Json::object(), "branch")) {
    if (label == 0) throw Error("tree vertex: explicit zero label at level " + std::to_string(level));
    v.branch.set(level, label);
  }
  if (!is_canonical(v, q)) throw Error("tree vertex " + to_string(v) + " is not canonical for q = " + std::to_string(q));
  return v;
}

Json to_json(const DLVertex& v) {
  Json out = Json::array();
  for (const auto& t : v.coords) out.push_back(to_json(t));
  return out;
}

DLVertex dl_vertex_from_json(const Json& j, const GraphParams& params) {
  if (!j.is_array()) throw Error("DL vertex must be an array of tree vertices");
  DLVertex v;
  for (std::size_t i = 0; i < j.size(); ++i) v.coords.push_back(tree_vertex_from_json(j[i], params.q(static_cast<int>(i))));
  require_valid(v, params);
  return v;
}

Json to_json(const LampStand& g) { return Json{{"lamps", map_json(g.lamps)}, {"pos", g.pos}}; }

LampStand lamp_stand_from_json(const Json& j, int q) {
  LampStand g;
  g.pos = field<std::int64_t>(j, "pos", "lamp stand");
  g.lamps = int_map(j.contains("lamps") ? j.at("lamps") : Json::object(), "lamps");
  require_valid(g, q);
  return g;
}

Json to_json(const BoundaryPoint& x) {
  const LampConfig c = lamp_config(x);
  return Json{{"side", x.side}, {"head", map_json(c.head)}, {"tail", c.tail}, {"tail_from", c.tail_from}};
}

BoundaryPoint boundary_point_from_json(const Json& j, int q) {
  LampConfig c;
  const int side = field<int>(j, "side", "boundary point");
  if (j.contains("head")) c.head = int_map(j.at("head"), "head");
  if (j.contains("tail")) c.tail = field<std::vector<Label>>(j, "tail", "boundary point");
  if (j.contains("tail_from")) {
    c.tail_from = field<std::int64_t>(j, "tail_from", "boundary point");
  } else if (!c.head.empty()) {
    // Finite configurations may omit it.
    c.tail_from = side == 0 ? c.head.rbegin()->first + 1 : c.head.begin()->first - 1;
  }
  return make_point(side, c, q);
}

Json to_json(const ClassIndex& c) { return Json{{"side", c.side}, {"n", c.n}}; }

Json to_json(const Path& p) { return Json{{"base", to_string(p.base)}, {"moves", to_word(p.moves)}}; }

Json to_json(const RayDescriptor& r) {
  return Json{{"base", to_string(r.prefix.base)},
              {"prefix", to_word(r.prefix.moves)},
              {"up_tree", r.up_tree},
              {"up_labels", r.up_labels},
              {"down_tree", r.down_tree}};
}

RayDescriptor ray_from_json(const Json& j, const GraphParams& params) {
  RayDescriptor r;
  r.prefix.base = j.contains("base") ? parse_dl_vertex(field<std::string>(j, "base", "ray"), params)
                                     : DLVertex::origin(params.d());
  if (j.contains("prefix")) r.prefix.moves = parse_word(field<std::string>(j, "prefix", "ray"), params);
  r.up_tree = field<int>(j, "up_tree", "ray");
  r.up_labels = field<std::vector<Label>>(j, "up_labels", "ray");
  r.down_tree = field<int>(j, "down_tree", "ray");
  require_valid(r, params);
  return r;
}

Json to_json(const TreeEnd& e) {
  switch (e.kind) {
    case TreeEnd::Kind::kConstant: return Json{{"kind", "constant"}, {"vertex", to_string(e.vertex)}};
    case TreeEnd::Kind::kDescending: return Json{{"kind", "descends"}};
    case TreeEnd::Kind::kAscending: break;
  }
  return Json{{"kind", "ascends"},
              {"head", map_json(e.labels.head())},
              {"tail", e.labels.tail()},
              {"tail_from", e.labels.tail_from()}};
}

Json to_json(const AsymptoticCertificate& c) {
  Json out{{"asymptotic", c.asymptotic}, {"merge_index", c.merge_index}, {"distances", c.distances},
           {"bound", c.bound}, {"checked_through", c.checked_through}};
  if (!c.failure.empty()) out["failure"] = c.failure;
  return out;
}

Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return Json{{"suite", r.name},           {"criterion", r.criterion},
              {"title", r.title},          {"passed", r.passed()},
              {"cases", r.cases},          {"failure_count", r.failure_count},
              {"failures", failures},      {"notes", r.notes},
              {"seconds", r.seconds},      {"limit_seconds", r.limit_seconds}};
}

std::string to_dot(const Ball& b, const GraphParams& params) {
  std::ostringstream out;
  out << "graph ball {\n";
  VertexMap<std::size_t> id;
  for (std::size_t k = 0; k < b.vertices.size(); ++k) {
    const DLVertex& v = b.vertices[k];
    id.emplace(v, k);
    out << "  v" << k << " [label=\"";
    for (int i = 0; i < v.d(); ++i) out << (i ? "," : "") << v[i].height;
    out << "\", tooltip=\"" << to_string(v) << "\"];\n";
  }
  for (std::size_t k = 0; k < b.vertices.size(); ++k) {
    for (const auto& w : neighbors(b.vertices[k], params)) {
      const auto it = id.find(w);
      if (it != id.end() && it->second > k) out << "  v" << k << " -- v" << it->second << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(what + ": " + e.what());
  }
}

}  // namespace dl
