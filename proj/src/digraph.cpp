#include "mtk/digraph.hpp"

#include "mtk/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace mtk {

DiGraph::DiGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw ValidationError("duplicate vertex id '" + *std::adjacent_find(vertices_.begin(), vertices_.end()) + "'");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i - 1].id == edges_[i].id) throw ValidationError("duplicate edge id '" + edges_[i].id + "'");

  in_.assign(vertices_.size(), {});
  out_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto r = find_vertex(edges_[i].range);
    auto s = find_vertex(edges_[i].source);
    if (!r) throw ValidationError("edge '" + edges_[i].id + "' has unknown range '" + edges_[i].range + "'");
    if (!s) throw ValidationError("edge '" + edges_[i].id + "' has unknown source '" + edges_[i].source + "'");
    range_.push_back(*r);
    source_.push_back(*s);
    in_[*r].push_back(i);
    out_[*s].push_back(i);
  }
}

std::optional<std::size_t> DiGraph::find_vertex(const std::string& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> DiGraph::find_edge(const std::string& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, const std::string& key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t DiGraph::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw ValidationError("unknown vertex '" + id + "'");
  return *v;
}

std::size_t DiGraph::edge_index(const std::string& id) const {
  auto e = find_edge(id);
  if (!e) throw ValidationError("unknown edge '" + id + "'");
  return *e;
}

UndirectedGraph::UndirectedGraph(DiGraph graph, const std::map<std::string, std::string>& bar)
    : graph_(std::move(graph)) {
  const std::size_t n = graph_.edge_count();
  bar_.assign(n, n);
  for (const auto& [from, to] : bar) {
    auto a = graph_.find_edge(from);
    auto b = graph_.find_edge(to);
    if (!a) throw ValidationError("bar given for unknown edge '" + from + "'");
    if (!b) throw ValidationError("bar of '" + from + "' is unknown edge '" + to + "'");
    bar_[*a] = *b;
  }
  for (std::size_t e = 0; e < n; ++e) {
    const std::string& id = graph_.edges()[e].id;
    if (bar_[e] == n) throw ValidationError("edge '" + id + "' has no reverse");
    if (bar_[e] == e) throw ValidationError("edge '" + id + "' is its own reverse");
    if (bar_[bar_[e]] != e) throw ValidationError("reverse of edge '" + id + "' is not an involution");
    if (graph_.range_of(e) != graph_.source_of(bar_[e]))
      throw ValidationError("edge '" + id + "': range differs from the source of its reverse");
  }
}

const std::string& UndirectedGraph::bar(const std::string& edge) const {
  return graph_.edges()[bar_[graph_.edge_index(edge)]].id;
}

bool UndirectedGraph::is_nonsingular() const {
  for (std::size_t v = 0; v < graph_.vertex_count(); ++v)
    if (graph_.in_edges(v).size() < 2) return false;
  return true;
}

bool is_composable(const DiGraph& g, const Path& p) {
  auto v = g.find_vertex(p.vertex);
  if (!v) return false;
  std::size_t at = *v;
  for (const std::string& id : p.edges) {
    auto e = g.find_edge(id);
    if (!e || g.range_of(*e) != at) return false;
    at = g.source_of(*e);
  }
  return true;
}

bool is_reduced(const UndirectedGraph& g, const Path& p) {
  if (!is_composable(g.graph(), p)) return false;
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i)
    if (g.bar(p.edges[i]) == p.edges[i + 1]) return false;
  return true;
}

std::string path_source(const DiGraph& g, const Path& p) {
  if (p.edges.empty()) return p.vertex;
  return g.edges()[g.edge_index(p.edges.back())].source;
}

IntMatrix path_count_matrix(const DiGraph& g, std::size_t max_len) {
  const std::size_t n = g.vertex_count();
  IntMatrix a(n, n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) a(g.range_of(e), g.source_of(e)) += 1;
  IntMatrix power = IntMatrix::identity(n);
  IntMatrix total = power;
  for (std::size_t k = 1; k <= max_len; ++k) {
    power = power * a;
    total = total + power;
  }
  return total;
}

namespace {

// Kahn's algorithm over range <- source; empty if g has a cycle.
std::vector<std::size_t> topological_order(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) ++indeg[g.range_of(e)];
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t e : g.out_edges(v))
      if (--indeg[g.range_of(e)] == 0) ready.push_back(g.range_of(e));
  }
  if (order.size() != n) return {};
  return order;
}

std::vector<bool> cylinder_mask(const DiGraph& g, std::size_t v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t e : g.in_edges(x)) {
      std::size_t s = g.source_of(e);
      if (!seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_multitree(const DiGraph& g) {
  const auto order = topological_order(g);
  if (order.size() != g.vertex_count()) return false;
  const std::size_t n = g.vertex_count();
  // count[x] = number of paths from w to x, saturated at 2
  std::vector<int> count(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::fill(count.begin(), count.end(), 0);
    count[w] = 1;
    for (std::size_t x : order) {
      if (count[x] == 0) continue;
      for (std::size_t e : g.out_edges(x)) {
        int& c = count[g.range_of(e)];
        c = std::min(2, c + count[x]);
        if (c > 1) return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> weak_components(const DiGraph& g, std::size_t* count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != n) continue;
    std::vector<std::size_t> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      auto visit = [&](std::size_t y) {
        if (comp[y] == n) {
          comp[y] = next;
          stack.push_back(y);
        }
      };
      for (std::size_t e : g.in_edges(x)) visit(g.source_of(e));
      for (std::size_t e : g.out_edges(x)) visit(g.range_of(e));
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

std::vector<std::string> vertex_cylinder(const DiGraph& g, const std::string& v) {
  const auto mask = cylinder_mask(g, g.vertex_index(v));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(g.vertices()[i]);
  return out;
}

bool leq(const DiGraph& g, const std::string& v, const std::string& w) {
  return cylinder_mask(g, g.vertex_index(v))[g.vertex_index(w)];
}

std::vector<std::string> min_upper_bounds(const DiGraph& g, const std::string& v, const std::string& w) {
  const auto zv = cylinder_mask(g, g.vertex_index(v));
  const auto zw = cylinder_mask(g, g.vertex_index(w));
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> common;
  for (std::size_t u = 0; u < n; ++u)
    if (zv[u] && zw[u]) common.push_back(u);
  std::vector<std::string> out;
  for (std::size_t u : common) {
    bool minimal = true;
    for (std::size_t x : common) {
      // x < u means there is a path from u to x
      if (x != u && cylinder_mask(g, x)[u]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(g.vertices()[u]);
  }
  return out;
}

CylinderDecomposition decompose_cylinder_intersection(const DiGraph& g, const std::string& v,
                                                      const std::string& w) {
  CylinderDecomposition d;
  d.bounds = min_upper_bounds(g, v, w);
  const auto zv = cylinder_mask(g, g.vertex_index(v));
  const auto zw = cylinder_mask(g, g.vertex_index(w));
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    if (zv[u] && zw[u]) d.intersection.push_back(g.vertices()[u]);

  std::vector<int> covered(n, 0);
  for (const std::string& u : d.bounds) {
    const auto zu = cylinder_mask(g, g.vertex_index(u));
    for (std::size_t x = 0; x < n; ++x)
      if (zu[x]) ++covered[x];
  }
  for (std::size_t x = 0; x < n; ++x) {
    const bool inside = zv[x] && zw[x];
    if (covered[x] > 1)
      throw CertificationError("cylinders of the bounds of " + v + ", " + w + " overlap at " + g.vertices()[x]);
    if (inside != (covered[x] == 1))
      throw CertificationError("cylinders of the bounds of " + v + ", " + w + " do not cover the intersection at " +
                               g.vertices()[x]);
  }
  return d;
}

DiGraph dual_graph(const UndirectedGraph& ug) {
  const DiGraph& g = ug.graph();
  std::vector<std::string> vertices;
  for (const Edge& e : g.edges()) vertices.push_back(e.id);
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    for (std::size_t f : g.in_edges(g.source_of(e))) {
      if (f == ug.bar(e)) continue;
      const std::string& ei = g.edges()[e].id;
      const std::string& fi = g.edges()[f].id;
      edges.push_back({ei + "|" + fi, ei, fi});
    }
  return DiGraph(std::move(vertices), std::move(edges));
}

}  // namespace mtk
