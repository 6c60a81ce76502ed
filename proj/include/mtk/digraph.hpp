#pragma once

// Finite directed and undirected graphs with range/source maps.
//
// Paths follow the right-to-left convention: e1 e2 ... en is composable when
// s(e_i) == r(e_{i+1}). Its range is r(e1), its source s(en), and it is said
// to go "from" its source "to" its range.

#include "mtk/zmatrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mtk {

struct Edge {
  std::string id;
  std::string range;
  std::string source;
};

/// Vertices and edges are kept sorted by id, so every iteration order and
/// every matrix index is deterministic.
class DiGraph {
 public:
  DiGraph() = default;
  /// Throws ValidationError on duplicate ids or dangling endpoints.
  DiGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::optional<std::size_t> find_edge(const std::string& id) const;
  /// Like find_*, but throws ValidationError for unknown ids.
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;

  std::size_t range_of(std::size_t edge) const { return range_[edge]; }
  std::size_t source_of(std::size_t edge) const { return source_[edge]; }
  /// Edges with range v.
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }
  /// Edges with source v.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> range_;
  std::vector<std::size_t> source_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

/// A DiGraph whose edges come in pairs {e, bar(e)} with r(e) = s(bar(e)).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws ValidationError unless bar is a fixed-point-free involution on the
  /// edges compatible with range and source.
  UndirectedGraph(DiGraph graph, const std::map<std::string, std::string>& bar);

  const DiGraph& graph() const { return graph_; }
  std::size_t bar(std::size_t edge) const { return bar_[edge]; }
  const std::string& bar(const std::string& edge) const;

  /// Finite graphs are always locally finite; kept for completeness of the
  /// interface.
  bool is_locally_finite() const { return true; }
  /// Every vertex is the range of at least two edges.
  bool is_nonsingular() const;

 private:
  DiGraph graph_;
  std::vector<std::size_t> bar_;
};

/// A path, or the length-0 path at `vertex` when `edges` is empty.
/// For nonempty paths `vertex` is the range r(e1).
struct Path {
  std::string vertex;
  std::vector<std::string> edges;
};

bool is_composable(const DiGraph& g, const Path& p);
/// Composable and without backtracking: e_{i+1} != bar(e_i).
bool is_reduced(const UndirectedGraph& g, const Path& p);
std::string path_source(const DiGraph& g, const Path& p);

/// Entry (v, w) counts paths of length 0..max_len with range v and source w.
IntMatrix path_count_matrix(const DiGraph& g, std::size_t max_len);

/// Acyclic, with at most one path between any ordered pair of vertices.
bool is_multitree(const DiGraph& g);

/// Weakly connected components: component index per vertex, numbered in
/// order of their smallest vertex.
std::vector<std::size_t> weak_components(const DiGraph& g, std::size_t* count = nullptr);

/// Vertices w with a path from w to v, sorted. This is the up-set of v.
std::vector<std::string> vertex_cylinder(const DiGraph& g, const std::string& v);

/// v <= w iff there is a path from w to v.
bool leq(const DiGraph& g, const std::string& v, const std::string& w);

/// Minimal common upper bounds of v and w.
std::vector<std::string> min_upper_bounds(const DiGraph& g, const std::string& v, const std::string& w);

struct CylinderDecomposition {
  std::vector<std::string> bounds;        // v ∨ w
  std::vector<std::string> intersection;  // Z(v) ∩ Z(w)
};

/// Returns v ∨ w after checking that the cylinders of the bounds are pairwise
/// disjoint and cover Z(v) ∩ Z(w). Throws CertificationError otherwise.
CylinderDecomposition decompose_cylinder_intersection(const DiGraph& g, const std::string& v,
                                                      const std::string& w);

/// Vertices are the edges of g; one edge "e|f" with range e and source f for
/// every reduced 2-path ef.
DiGraph dual_graph(const UndirectedGraph& g);

}  // namespace mtk
