#pragma once

#include "mtk/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// Edges are {id, range, source}.
inline mtk::DiGraph graph(std::vector<std::string> vertices, std::vector<mtk::Edge> edges) {
  return mtk::DiGraph(std::move(vertices), std::move(edges));
}

inline mtk::QuotientPresentation free_presentation(const mtk::DiGraph& g) {
  mtk::QuotientPresentation p;
  p.graph = g;
  for (const auto& v : g.vertices()) p.vertex_class[v] = mtk::StabiliserClass::Trivial;
  return p;
}

inline mtk::QuotientPresentation rose(int n) {
  std::vector<mtk::Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({"e" + std::to_string(i), "v", "v"});
  return free_presentation(graph({"v"}, edges));
}

/// Loops at one InfiniteCyclic vertex "v", edge k named "e", "f", "g", ...
inline mtk::QuotientPresentation z_loops(const std::vector<std::pair<long, long>>& omegas) {
  mtk::QuotientPresentation p;
  std::vector<mtk::Edge> edges;
  for (std::size_t k = 0; k < omegas.size(); ++k) {
    const std::string id(1, static_cast<char>('e' + k));
    edges.push_back({id, "v", "v"});
    p.omega[id] = {omegas[k].first, omegas[k].second};
  }
  p.graph = graph({"v"}, edges);
  p.vertex_class["v"] = mtk::StabiliserClass::InfiniteCyclic;
  return p;
}

inline mtk::QuotientPresentation bs(long m, long n) { return z_loops({{m, n}}); }

/// Undirected graph from (id, range, source) triples; reverse edges get "~".
inline mtk::UndirectedGraph undirected(std::vector<std::string> vertices,
                                       const std::vector<mtk::Edge>& halves) {
  std::vector<mtk::Edge> edges;
  std::map<std::string, std::string> bar;
  for (const auto& e : halves) {
    edges.push_back(e);
    edges.push_back({e.id + "~", e.source, e.range});
    bar[e.id] = e.id + "~";
    bar[e.id + "~"] = e.id;
  }
  return mtk::UndirectedGraph(mtk::DiGraph(std::move(vertices), std::move(edges)), bar);
}

inline mtk::GraphOfGroupsZ undirected_rose(int n, mtk::StabiliserClass c, long a = 1, long abar = 1) {
  std::vector<mtk::Edge> halves;
  for (int i = 1; i <= n; ++i) halves.push_back({"a" + std::to_string(i), "x", "x"});
  mtk::GraphOfGroupsZ gog;
  gog.graph = undirected({"x"}, halves);
  gog.vertex_class["x"] = c;
  for (const auto& h : halves) {
    gog.alpha[h.id] = a;
    gog.alpha[h.id + "~"] = abar;
  }
  return gog;
}

}  // namespace fixtures
