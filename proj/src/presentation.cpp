#include "mtk/presentation.hpp"

#include "mtk/errors.hpp"

#include <numeric>
#include <set>

namespace mtk {

std::string to_string(StabiliserClass c) {
  return c == StabiliserClass::Trivial ? "trivial" : "z";
}

StabiliserClass QuotientPresentation::class_of(std::size_t vertex) const {
  auto it = vertex_class.find(graph.vertices()[vertex]);
  if (it == vertex_class.end()) throw ValidationError("vertex '" + graph.vertices()[vertex] + "' has no class");
  return it->second;
}

Omega QuotientPresentation::omega_of(std::size_t edge) const {
  if (class_of(graph.range_of(edge)) == StabiliserClass::Trivial) return {};
  auto it = omega.find(graph.edges()[edge].id);
  if (it == omega.end()) throw ValidationError("edge '" + graph.edges()[edge].id + "' has no omega");
  return it->second;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "\n";
    out += v.subject + ": " + v.rule;
  }
  return out;
}

ValidationReport validate(const QuotientPresentation& p) {
  ValidationReport report;
  auto add = [&report](std::string subject, std::string rule) {
    report.violations.push_back({std::move(subject), std::move(rule)});
  };
  const DiGraph& g = p.graph;

  for (const auto& [v, c] : p.vertex_class)
    if (!g.find_vertex(v)) add(v, "class given for unknown vertex");
  for (const auto& [e, w] : p.omega)
    if (!g.find_edge(e)) add(e, "omega given for unknown edge");

  bool classes_complete = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::string& id = g.vertices()[v];
    if (!p.vertex_class.count(id)) {
      add(id, "vertex has no stabiliser class");
      classes_complete = false;
    }
    if (g.in_edges(v).empty()) add(id, "vertex has in-degree 0");
  }
  if (!classes_complete) return report;

  std::size_t ncomp = 0;
  const auto comp = weak_components(g, &ncomp);
  std::vector<std::set<StabiliserClass>> classes(ncomp);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) classes[comp[v]].insert(p.class_of(v));
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (p.class_of(g.range_of(e)) != p.class_of(g.source_of(e)))
      add(g.edges()[e].id, "mixed stabiliser classes in component");

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::string& id = g.edges()[e].id;
    if (classes[comp[g.range_of(e)]].size() > 1) continue;
    const bool cyclic = p.class_of(g.range_of(e)) == StabiliserClass::InfiniteCyclic;
    auto it = p.omega.find(id);
    if (cyclic && it == p.omega.end()) add(id, "edge in infinite cyclic component has no omega");
    if (!cyclic && it != p.omega.end()) add(id, "omega given for edge in trivial component");
    if (cyclic && it != p.omega.end() && (it->second.range == 0 || it->second.source == 0))
      add(id, "omega entries must be nonzero");
  }
  return report;
}

void require_valid(const QuotientPresentation& p) {
  auto report = validate(p);
  if (!report.ok()) throw ValidationError("invalid presentation:\n" + report.to_string());
}

SignedRatio::SignedRatio(const Integer& num, const Integer& den) {
  if (num == 0 || den == 0) throw std::invalid_argument("SignedRatio: zero numerator or denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

SignedRatio::SignedRatio(const mpq_class& q) : value_(q) {
  value_.canonicalize();
  if (value_ == 0) throw std::invalid_argument("SignedRatio: zero value");
}

std::string SignedRatio::to_string() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

SignedRatio signed_index_ratio(const QuotientPresentation& p, const Path& path) {
  if (!is_composable(p.graph, path)) throw ValidationError("path is not composable");
  mpq_class q(1);
  for (const std::string& id : path.edges) {
    Omega w = p.omega_of(p.graph.edge_index(id));
    q *= mpq_class(w.source) / w.range;
    q.canonicalize();
  }
  return SignedRatio(q);
}

Integer denominator(const SignedRatio& r) { return r.denominator(); }

StabiliserClass GraphOfGroupsZ::class_of(std::size_t vertex) const {
  const auto& id = graph.graph().vertices()[vertex];
  auto it = vertex_class.find(id);
  if (it == vertex_class.end()) throw ValidationError("vertex '" + id + "' has no class");
  return it->second;
}

long GraphOfGroupsZ::alpha_of(std::size_t edge) const {
  const auto& id = graph.graph().edges()[edge].id;
  auto it = alpha.find(id);
  if (it == alpha.end()) throw ValidationError("edge '" + id + "' has no alpha");
  return it->second;
}

ValidationReport validate(const GraphOfGroupsZ& gog) {
  ValidationReport report;
  auto add = [&report](std::string subject, std::string rule) {
    report.violations.push_back({std::move(subject), std::move(rule)});
  };
  const DiGraph& g = gog.graph.graph();

  for (const auto& [v, c] : gog.vertex_class)
    if (!g.find_vertex(v)) add(v, "class given for unknown vertex");
  for (const auto& [e, a] : gog.alpha)
    if (!g.find_edge(e)) add(e, "alpha given for unknown edge");

  bool complete = true;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!gog.vertex_class.count(g.vertices()[v])) {
      add(g.vertices()[v], "vertex has no stabiliser class");
      complete = false;
    }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto it = gog.alpha.find(g.edges()[e].id);
    if (it == gog.alpha.end()) {
      add(g.edges()[e].id, "edge has no alpha");
      complete = false;
    } else if (it->second == 0) {
      add(g.edges()[e].id, "alpha must be nonzero");
      complete = false;
    }
  }
  if (!complete) return report;

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto rc = gog.class_of(g.range_of(e));
    if (rc != gog.class_of(g.source_of(e))) add(g.edges()[e].id, "mixed stabiliser classes in component");
    const long a = gog.alpha_of(e);
    if (rc == StabiliserClass::Trivial && a != 1 && a != -1)
      add(g.edges()[e].id, "alpha must be +-1 in trivial component");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    long degree = 0;
    for (std::size_t f : g.in_edges(v)) degree += std::labs(gog.alpha_of(f));
    if (degree < 2) add(g.vertices()[v], "covering tree vertex has degree < 2");
  }
  return report;
}

QuotientPresentation dual_quotient(const GraphOfGroupsZ& gog) {
  auto report = validate(gog);
  if (!report.ok()) throw ValidationError("invalid graph of groups:\n" + report.to_string());

  const DiGraph& g = gog.graph.graph();
  QuotientPresentation out;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::string& ei = g.edges()[e].id;
    vertices.push_back(ei);
    out.vertex_class[ei] = gog.class_of(g.range_of(e));
  }

  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const std::string& ei = g.edges()[e].id;
    const std::size_t ebar = gog.graph.bar(e);
    const bool cyclic = gog.class_of(g.source_of(e)) == StabiliserClass::InfiniteCyclic;
    for (std::size_t f : g.in_edges(g.source_of(e))) {
      const std::string& fi = g.edges()[f].id;
      const std::string base = ei + "|" + fi;
      if (!cyclic) {
        if (f != ebar) edges.push_back({base, ei, fi});
        continue;
      }
      const long a = gog.alpha_of(ebar);
      const long b = gog.alpha_of(f);
      long count;
      Omega w;
      if (f != ebar) {
        count = std::gcd(std::labs(a), std::labs(b));
        const long l = std::lcm(std::labs(a), std::labs(b));
        w = {l / a, l / b};
      } else {
        count = std::labs(a) - 1;
        w = {a > 0 ? 1 : -1, a > 0 ? 1 : -1};
      }
      for (long k = 1; k <= count; ++k) {
        std::string id = count == 1 ? base : base + "#" + std::to_string(k);
        edges.push_back({id, ei, fi});
        out.omega[id] = w;
      }
    }
  }
  out.graph = DiGraph(std::move(vertices), std::move(edges));
  return out;
}

QuotientPresentation restrict_to(const QuotientPresentation& p, const std::vector<std::size_t>& vertices) {
  const DiGraph& g = p.graph;
  std::vector<bool> keep(g.vertex_count(), false);
  for (std::size_t v : vertices) keep[v] = true;
  QuotientPresentation out;
  std::vector<std::string> vs;
  std::vector<Edge> es;
  for (std::size_t v : vertices) {
    vs.push_back(g.vertices()[v]);
    auto it = p.vertex_class.find(g.vertices()[v]);
    if (it != p.vertex_class.end()) out.vertex_class.insert(*it);
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!keep[g.range_of(e)] || !keep[g.source_of(e)]) continue;
    es.push_back(g.edges()[e]);
    auto it = p.omega.find(g.edges()[e].id);
    if (it != p.omega.end()) out.omega.insert(*it);
  }
  out.graph = DiGraph(std::move(vs), std::move(es));
  return out;
}

}  // namespace mtk
