#include "mtk/random.hpp"

#include "mtk/digraph.hpp"

#include <algorithm>
#include <set>

namespace mtk {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long nonzero(Rng& rng, long max_abs) {
  long v = std::uniform_int_distribution<long>(1, max_abs)(rng);
  return uniform(rng, 0, 1) ? v : -v;
}

std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Edges with each vertex receiving at least one edge, plus random extras.
std::vector<Edge> no_source_edges(Rng& rng, std::size_t n, std::size_t max_extra) {
  const auto vs = names("v", n);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({"", vs[v], vs[uniform(rng, 0, n - 1)]});
  const std::size_t extra = uniform(rng, 0, max_extra);
  for (std::size_t k = 0; k < extra; ++k) edges.push_back({"", vs[uniform(rng, 0, n - 1)], vs[uniform(rng, 0, n - 1)]});
  for (std::size_t k = 0; k < edges.size(); ++k) edges[k].id = "e" + std::to_string(k);
  return edges;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long max_abs) {
  IntMatrix m(uniform(rng, 1, max_rows), uniform(rng, 1, max_cols));
  std::uniform_int_distribution<long> entry(-max_abs, max_abs);
  // Bias towards sparse and low-rank shapes as well as dense ones.
  const std::size_t density = uniform(rng, 1, 4);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (uniform(rng, 1, 4) <= density) m(i, j) = entry(rng);
  if (m.rows() > 1 && uniform(rng, 0, 3) == 0) {
    const std::size_t a = uniform(rng, 0, m.rows() - 1), b = uniform(rng, 0, m.rows() - 1);
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) = m(b, j) * 2;
  }
  return m;
}

DiGraph random_multitree(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  const auto vs = names("v", n);
  std::vector<Edge> edges;
  if (n == 1) return DiGraph(vs, edges);
  const std::size_t attempts = uniform(rng, 0, 3 * n);
  for (std::size_t k = 0; k < attempts; ++k) {
    std::size_t r = uniform(rng, 0, n - 2);
    std::size_t s = uniform(rng, r + 1, n - 1);
    auto trial = edges;
    trial.push_back({"e" + std::to_string(edges.size()), vs[r], vs[s]});
    if (is_multitree(DiGraph(vs, trial))) edges = std::move(trial);
  }
  return DiGraph(vs, edges);
}

DiGraph random_no_source_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  return DiGraph(names("v", n), no_source_edges(rng, n, max_extra_edges));
}

QuotientPresentation random_free_presentation(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges) {
  QuotientPresentation p;
  p.graph = random_no_source_digraph(rng, max_vertices, max_extra_edges);
  for (const auto& v : p.graph.vertices()) p.vertex_class[v] = StabiliserClass::Trivial;
  return p;
}

QuotientPresentation random_z_presentation(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges,
                                           long max_omega) {
  QuotientPresentation p;
  p.graph = random_no_source_digraph(rng, max_vertices, max_extra_edges);
  for (const auto& v : p.graph.vertices()) p.vertex_class[v] = StabiliserClass::InfiniteCyclic;
  for (const auto& e : p.graph.edges()) p.omega[e.id] = {nonzero(rng, max_omega), nonzero(rng, max_omega)};
  return p;
}

UndirectedGraph random_tree(Rng& rng, std::size_t max_vertices) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  const auto vs = names("x", n);
  std::vector<Edge> edges;
  std::map<std::string, std::string> bar;
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = uniform(rng, 0, v - 1);
    const std::string id = "t" + std::to_string(v);
    edges.push_back({id, vs[v], vs[u]});
    edges.push_back({id + "~", vs[u], vs[v]});
    bar[id] = id + "~";
    bar[id + "~"] = id;
  }
  return UndirectedGraph(DiGraph(vs, edges), bar);
}

GraphOfGroupsZ random_gog(Rng& rng, std::size_t max_vertices, long max_alpha) {
  for (;;) {
    const std::size_t n = uniform(rng, 1, max_vertices);
    const auto vs = names("x", n);
    const std::size_t m = uniform(rng, 1, n + 2);
    std::vector<Edge> edges;
    std::map<std::string, std::string> bar;
    for (std::size_t k = 0; k < m; ++k) {
      const std::string a = vs[uniform(rng, 0, n - 1)], b = vs[uniform(rng, 0, n - 1)];
      const std::string id = "g" + std::to_string(k);
      edges.push_back({id, a, b});
      edges.push_back({id + "~", b, a});
      bar[id] = id + "~";
      bar[id + "~"] = id;
    }
    GraphOfGroupsZ gog;
    gog.graph = UndirectedGraph(DiGraph(vs, edges), bar);
    const bool cyclic = uniform(rng, 0, 3) != 0;
    for (const auto& v : vs)
      gog.vertex_class[v] = cyclic ? StabiliserClass::InfiniteCyclic : StabiliserClass::Trivial;
    for (const auto& e : gog.graph.graph().edges()) gog.alpha[e.id] = nonzero(rng, cyclic ? max_alpha : 1);
    if (validate(gog).ok()) return gog;
  }
}

SetFamily cylinder_family(const DiGraph& g) {
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  for (const auto& v : g.vertices()) members.emplace_back("Z(" + v + ")", vertex_cylinder(g, v));
  return SetFamily(g.vertices(), std::move(members), SetFamily::kHardMaxAtoms);
}

FamilyCase random_family_case(Rng& rng, std::size_t max_atoms) {
  const bool doubled = uniform(rng, 0, 1) == 1 && max_atoms >= 2;
  const DiGraph g = random_multitree(rng, doubled ? max_atoms / 2 : max_atoms);
  std::vector<bool> pick(g.vertex_count());
  for (std::size_t v = 0; v < pick.size(); ++v) pick[v] = uniform(rng, 0, 2) == 0;

  if (!doubled) {
    FamilyCase c{cylinder_family(g), {}, {}};
    for (std::size_t v = 0; v < pick.size(); ++v)
      if (pick[v]) c.F.push_back(c.family.index_of("Z(" + g.vertices()[v] + ")"));
    return c;
  }

  std::vector<std::string> universe;
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  for (const char* copy : {"a:", "b:"}) {
    for (const auto& v : g.vertices()) universe.push_back(copy + v);
    for (const auto& v : g.vertices()) {
      std::vector<std::string> atoms;
      for (const auto& w : vertex_cylinder(g, v)) atoms.push_back(copy + w);
      members.emplace_back(std::string(copy) + "Z(" + v + ")", std::move(atoms));
    }
  }
  FamilyCase c{SetFamily(universe, members, SetFamily::kHardMaxAtoms), {}, {}};
  std::vector<std::size_t> swap(c.family.size());
  for (std::size_t i = 0; i < c.family.size(); ++i) {
    std::string id = c.family.ids()[i];
    id[0] = id[0] == 'a' ? 'b' : 'a';
    swap[i] = c.family.index_of(id);
  }
  c.action.generators.push_back(std::move(swap));
  for (std::size_t v = 0; v < pick.size(); ++v)
    if (pick[v])
      for (const char* copy : {"a:", "b:"})
        c.F.push_back(c.family.index_of(std::string(copy) + "Z(" + g.vertices()[v] + ")"));
  std::sort(c.F.begin(), c.F.end());
  return c;
}

SetFamily random_family(Rng& rng, std::size_t max_atoms, std::size_t max_members) {
  const std::size_t u = uniform(rng, 1, max_atoms);
  const auto atoms = names("a", u);
  const std::size_t k = uniform(rng, 1, max_members);
  std::set<AtomSet> seen;
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  for (std::size_t i = 0; i < k; ++i) {
    AtomSet mask = std::uniform_int_distribution<AtomSet>(1, (AtomSet(1) << u) - 1)(rng);
    // Favour small members so that containments are common.
    if (uniform(rng, 0, 1)) mask &= std::uniform_int_distribution<AtomSet>(1, (AtomSet(1) << u) - 1)(rng);
    if (mask == 0 || !seen.insert(mask).second) continue;
    std::vector<std::string> list;
    for (std::size_t b = 0; b < u; ++b)
      if (mask >> b & 1) list.push_back(atoms[b]);
    members.emplace_back("m" + std::to_string(i), std::move(list));
  }
  if (members.empty()) members.emplace_back("m0", std::vector<std::string>{atoms[0]});
  return SetFamily(atoms, std::move(members), SetFamily::kHardMaxAtoms);
}

}  // namespace mtk
