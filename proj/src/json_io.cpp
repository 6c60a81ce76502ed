#include "mtk/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace mtk {

using nlohmann::json;

nlohmann::json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const std::size_t line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n'));
    throw ParseError(source + ":" + std::to_string(line) + ": " + e.what());
  }
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError("field '" + path + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) bad(path.empty() ? "<root>" : path, "expected object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected string");
  return v.get<std::string>();
}

// Atoms may be written as strings or integers.
std::string as_atom(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  bad(path, "expected string or integer atom");
}

long as_long(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) {
    auto u = v.get<unsigned long long>();
    if (u > static_cast<unsigned long long>(std::numeric_limits<long>::max())) bad(path, "integer out of range");
    return static_cast<long>(u);
  }
  if (!v.is_number_integer()) bad(path, "expected integer");
  return v.get<long>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected array");
  return v;
}

const json& as_object(const json& v, const std::string& path) {
  if (!v.is_object()) bad(path, "expected object");
  return v;
}

StabiliserClass as_class(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (s == "trivial") return StabiliserClass::Trivial;
  if (s == "z") return StabiliserClass::InfiniteCyclic;
  bad(path, "expected \"trivial\" or \"z\"");
}

std::map<std::string, StabiliserClass> classes_from(const json& j) {
  std::map<std::string, StabiliserClass> out;
  const json& c = as_object(require(j, "classes", ""), "classes");
  for (auto it = c.begin(); it != c.end(); ++it) out[it.key()] = as_class(it.value(), "classes." + it.key());
  return out;
}

}  // namespace

DiGraph graph_from_json(const nlohmann::json& j) {
  std::vector<std::string> vertices;
  const json& vs = as_array(require(j, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], at("vertices", i)));
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const json& es = as_array(j["edges"], "edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const std::string p = at("edges", i);
      as_object(es[i], p);
      edges.push_back({as_string(require(es[i], "id", p), join(p, "id")),
                       as_string(require(es[i], "range", p), join(p, "range")),
                       as_string(require(es[i], "source", p), join(p, "source"))});
    }
  }
  return DiGraph(std::move(vertices), std::move(edges));
}

UndirectedGraph undirected_from_json(const nlohmann::json& j) {
  std::map<std::string, std::string> bar;
  const json& b = as_object(require(j, "bar", ""), "bar");
  for (auto it = b.begin(); it != b.end(); ++it) bar[it.key()] = as_string(it.value(), "bar." + it.key());
  return UndirectedGraph(graph_from_json(j), bar);
}

QuotientPresentation presentation_from_json(const nlohmann::json& j) {
  QuotientPresentation p;
  p.graph = graph_from_json(j);
  p.vertex_class = classes_from(j);
  if (j.contains("omega")) {
    const json& om = as_object(j["omega"], "omega");
    for (auto it = om.begin(); it != om.end(); ++it) {
      const std::string path = "omega." + it.key();
      const json& pair = as_array(it.value(), path);
      if (pair.size() != 2) bad(path, "expected [w_e, w_ebar]");
      p.omega[it.key()] = {as_long(pair[0], at(path, 0)), as_long(pair[1], at(path, 1))};
    }
  }
  return p;
}

GraphOfGroupsZ gog_from_json(const nlohmann::json& j) {
  GraphOfGroupsZ gog;
  gog.graph = undirected_from_json(j);
  gog.vertex_class = classes_from(j);
  const json& al = as_object(require(j, "alpha", ""), "alpha");
  for (auto it = al.begin(); it != al.end(); ++it) gog.alpha[it.key()] = as_long(it.value(), "alpha." + it.key());
  return gog;
}

SetFamilyInput setfamily_from_json(const nlohmann::json& j, std::size_t max_atoms) {
  std::vector<std::string> universe;
  const json& u = as_array(require(j, "universe", ""), "universe");
  for (std::size_t i = 0; i < u.size(); ++i) universe.push_back(as_atom(u[i], at("universe", i)));
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  const json& ms = as_object(require(j, "members", ""), "members");
  for (auto it = ms.begin(); it != ms.end(); ++it) {
    const std::string path = "members." + it.key();
    const json& atoms = as_array(it.value(), path);
    std::vector<std::string> list;
    for (std::size_t i = 0; i < atoms.size(); ++i) list.push_back(as_atom(atoms[i], at(path, i)));
    members.emplace_back(it.key(), std::move(list));
  }
  SetFamilyInput in{SetFamily(std::move(universe), std::move(members), max_atoms), {}, std::nullopt};

  auto index = [&in](const json& v, const std::string& path) {
    const std::string id = as_string(v, path);
    const auto& ids = in.family.ids();
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) bad(path, "unknown member '" + id + "'");
    return static_cast<std::size_t>(it - ids.begin());
  };
  if (j.contains("action")) {
    const json& gens = as_array(j["action"], "action");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string path = at("action", g);
      const json& perm = as_array(gens[g], path);
      if (perm.size() != in.family.size()) bad(path, "permutation must list one image per member");
      std::vector<std::size_t> images;
      for (std::size_t i = 0; i < perm.size(); ++i) images.push_back(index(perm[i], at(path, i)));
      in.action.generators.push_back(std::move(images));
    }
  }
  if (j.contains("saturate")) {
    const json& s = as_array(j["saturate"], "saturate");
    std::vector<std::size_t> F;
    for (std::size_t i = 0; i < s.size(); ++i) F.push_back(index(s[i], at("saturate", i)));
    in.saturate = std::move(F);
  }
  return in;
}

nlohmann::json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const Integer& t : g.torsion()) torsion.push_back(t.get_str());
  return {{"rank", g.rank()}, {"torsion", torsion}, {"text", g.to_string()}};
}

nlohmann::json to_json(const DiGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({{"id", e.id}, {"range", e.range}, {"source", e.source}});
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

nlohmann::json to_json(const QuotientPresentation& p) {
  json out = to_json(p.graph);
  json classes = json::object();
  for (const auto& [v, c] : p.vertex_class) classes[v] = to_string(c);
  json omega = json::object();
  for (const auto& [e, w] : p.omega) omega[e] = {w.range, w.source};
  out["classes"] = classes;
  out["omega"] = omega;
  return out;
}

nlohmann::json to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"subject", v.subject}, {"rule", v.rule}});
  return {{"ok", r.ok()}, {"violations", violations}};
}

nlohmann::json to_json(const KTheoryReport& r) {
  json comps = json::array();
  for (const auto& c : r.components) {
    json matrices = json::object();
    if (c.kind == ComponentCase::Free) {
      matrices["1-A^T"] = to_json(c.matrices.at(0));
    } else {
      matrices["1-A0"] = to_json(c.matrices.at(0));
      matrices["1-A1"] = to_json(c.matrices.at(1));
    }
    comps.push_back({{"case", to_string(c.kind)},
                     {"vertices", c.vertices},
                     {"matrices", matrices},
                     {"K0", to_json(c.K0)},
                     {"K1", to_json(c.K1)}});
  }
  return {{"components", comps}, {"global", {{"K0", to_json(r.K0)}, {"K1", to_json(r.K1)}}}};
}

nlohmann::json to_json(const SixTermReport& r) {
  return {{"k0_basis", r.k0_basis},
          {"k1_basis", r.k1_basis},
          {"id-alpha0", to_json(r.id_minus_alpha0)},
          {"id-alpha1", to_json(r.id_minus_alpha1)},
          {"coker(id-alpha0)", to_json(r.coker0)},
          {"ker(id-alpha0)", to_json(r.ker0)},
          {"coker(id-alpha1)", to_json(r.coker1)},
          {"ker(id-alpha1)", to_json(r.ker1)},
          {"K0", to_json(r.K0)},
          {"K1", to_json(r.K1)}};
}

nlohmann::json to_json(const TriState& t) {
  switch (t.value) {
    case TriState::Value::Yes: return {{"value", "yes"}};
    case TriState::Value::No: return {{"value", "no"}};
    default: return {{"value", "unknown"}, {"reason", t.reason}};
  }
}

}  // namespace mtk
