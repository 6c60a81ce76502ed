#include "mtk/dynamics.hpp"

#include "mtk/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

namespace mtk {

std::string TriState::to_string() const {
  switch (value) {
    case Value::Yes: return "yes";
    case Value::No: return "no";
    default: return "unknown (" + reason + ")";
  }
}

namespace {

struct Sccs {
  std::vector<std::size_t> of;  // scc index per vertex
  std::size_t count = 0;
  std::vector<bool> cyclic;     // contains a cycle
};

// Tarjan over the edges r(e) -> s(e); cyclicity does not depend on direction.
Sccs strongly_connected(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t unset = n;
  Sccs out;
  out.of.assign(n, unset);
  std::vector<std::size_t> index(n, unset), low(n, 0), stack;
  std::vector<bool> on_stack(n, false);
  std::size_t counter = 0;

  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t e : g.in_edges(v)) {
      std::size_t w = g.source_of(e);
      if (index[w] == unset) {
        dfs(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        out.of[w] = out.count;
      } while (w != v);
      ++out.count;
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == unset) dfs(v);

  out.cyclic.assign(out.count, false);
  std::vector<std::size_t> size(out.count, 0);
  for (std::size_t v = 0; v < n; ++v) ++size[out.of[v]];
  for (std::size_t c = 0; c < out.count; ++c) out.cyclic[c] = size[c] > 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (g.range_of(e) == g.source_of(e)) out.cyclic[out.of[g.range_of(e)]] = true;
  return out;
}

// Shortest path (in path order) from range `to` back through in-edges to
// source `from`, staying inside `allowed`. Empty optional if none.
std::optional<std::vector<std::size_t>> path_between(const DiGraph& g, std::size_t to, std::size_t from,
                                                     const std::vector<bool>& allowed) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> via(n, g.edge_count());
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{to};
  seen[to] = true;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (x == from) break;
    for (std::size_t e : g.in_edges(x)) {
      std::size_t s = g.source_of(e);
      if (!allowed[s] || seen[s]) continue;
      seen[s] = true;
      via[s] = e;
      queue.push_back(s);
    }
  }
  if (!seen[from]) return std::nullopt;
  std::vector<std::size_t> path;
  for (std::size_t x = from; x != to; x = g.range_of(via[x])) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

// A cycle whose first edge is `first`, inside `allowed`.
std::vector<std::size_t> cycle_through(const DiGraph& g, std::size_t first, const std::vector<bool>& allowed) {
  std::vector<std::size_t> cycle{first};
  auto rest = path_between(g, g.source_of(first), g.range_of(first), allowed);
  if (!rest) throw CertificationError("edge '" + g.edges()[first].id + "' lies on no cycle");
  cycle.insert(cycle.end(), rest->begin(), rest->end());
  return cycle;
}

std::vector<std::string> edge_ids(const DiGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::string> out;
  for (std::size_t e : edges) out.push_back(g.edges()[e].id);
  return out;
}

std::vector<bool> scc_mask(const Sccs& s, std::size_t c) {
  std::vector<bool> mask(s.of.size(), false);
  for (std::size_t v = 0; v < s.of.size(); ++v) mask[v] = s.of[v] == c;
  return mask;
}

// Some edge with both ends in scc c.
std::size_t internal_edge(const DiGraph& g, const Sccs& s, std::size_t c) {
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (s.of[g.range_of(e)] == c && s.of[g.source_of(e)] == c) return e;
  throw CertificationError("cyclic component without internal edge");
}

// Vertices reachable from the seeds by following edges source -> range.
std::vector<bool> forward_reach(const DiGraph& g, const std::vector<bool>& seeds) {
  std::vector<bool> seen = seeds;
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < seeds.size(); ++v)
    if (seeds[v]) stack.push_back(v);
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t e : g.out_edges(x)) {
      std::size_t r = g.range_of(e);
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

// Vertices reachable from v by following edges range -> source.
std::vector<bool> backward_reach(const DiGraph& g, std::size_t v) {
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

unsigned multiplicity(Integer x, const Integer& b) {
  x = abs(x);
  unsigned k = 0;
  while (mpz_divisible_p(x.get_mpz_t(), b.get_mpz_t())) {
    x /= b;
    ++k;
  }
  return k;
}

}  // namespace

CofinalityCertificate cofinality_certificate(const DiGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.in_edges(v).empty()) throw ValidationError("vertex '" + g.vertices()[v] + "' is a source");
  const Sccs s = strongly_connected(g);
  CofinalityCertificate cert;
  for (std::size_t c = 0; c < s.count; ++c) {
    if (!s.cyclic[c]) continue;
    const auto mask = scc_mask(s, c);
    const auto reach = forward_reach(g, mask);
    auto miss = std::find(reach.begin(), reach.end(), false);
    if (miss == reach.end()) continue;
    cert.cofinal = false;
    cert.cycle = edge_ids(g, cycle_through(g, internal_edge(g, s, c), mask));
    cert.unreachable = g.vertices()[static_cast<std::size_t>(miss - reach.begin())];
    return cert;
  }
  return cert;
}

bool is_cofinal(const DiGraph& g) { return cofinality_certificate(g).cofinal; }

AperiodicityCertificate aperiodicity_certificate(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  AperiodicityCertificate cert;
  // state: 0 unvisited, 1 on current walk, 2 done
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t x = start;
    while (state[x] == 0 && g.in_edges(x).size() == 1) {
      state[x] = 1;
      walk.push_back(x);
      x = g.source_of(g.in_edges(x).front());
    }
    if (state[x] == 1) {
      auto pos = std::find(walk.begin(), walk.end(), x);
      std::vector<std::size_t> cycle;
      for (auto it = pos; it != walk.end(); ++it) cycle.push_back(g.in_edges(*it).front());
      cert.aperiodic = false;
      cert.cycle = edge_ids(g, cycle);
      return cert;
    }
    for (std::size_t w : walk) state[w] = 2;
  }
  return cert;
}

bool is_aperiodic(const DiGraph& g) { return aperiodicity_certificate(g).aperiodic; }

ContractivityCertificate local_contractivity_certificate(const QuotientPresentation& p) {
  require_valid(p);
  const DiGraph& g = p.graph;
  const Sccs s = strongly_connected(g);
  ContractivityCertificate cert;
  std::vector<bool> seeds(g.vertex_count(), false);
  for (std::size_t c = 0; c < s.count; ++c) {
    if (!s.cyclic[c]) continue;
    const auto mask = scc_mask(s, c);
    std::optional<std::size_t> first;
    for (std::size_t e = 0; e < g.edge_count() && !first; ++e) {
      if (!mask[g.range_of(e)] || !mask[g.source_of(e)]) continue;
      if (g.in_edges(g.range_of(e)).size() >= 2 || std::labs(p.omega_of(e).range) >= 2) first = e;
    }
    if (!first) continue;
    cert.cycles.push_back(edge_ids(g, cycle_through(g, *first, mask)));
    for (std::size_t v = 0; v < mask.size(); ++v)
      if (mask[v]) seeds[v] = true;
  }
  const auto reach = forward_reach(g, seeds);
  for (std::size_t v = 0; v < reach.size(); ++v)
    if (!reach[v]) cert.uncovered.push_back(g.vertices()[v]);
  cert.verdict = cert.uncovered.empty() ? TriState::yes() : TriState::unknown("sufficient condition fails");
  return cert;
}

TriState local_contractivity_sufficient(const QuotientPresentation& p) {
  return local_contractivity_certificate(p).verdict;
}

Integer lift_stabiliser_generator(const QuotientPresentation& p, const Path& path) {
  if (!is_composable(p.graph, path)) throw ValidationError("path is not composable");
  Integer m = 1;
  mpq_class q(1);
  for (const std::string& id : path.edges) {
    const Omega w = p.omega_of(p.graph.edge_index(id));
    mpq_class x = q / w.range;
    x.canonicalize();
    m = lcm(m, Integer(x.get_den()));
    q *= mpq_class(w.source) / w.range;
    q.canonicalize();
  }
  return m;
}

DenominatorCertificate denominator_certificate(const QuotientPresentation& p, const std::string& vid) {
  const DiGraph& g = p.graph;
  const std::size_t v = g.vertex_index(vid);
  DenominatorCertificate cert;
  if (p.class_of(v) == StabiliserClass::Trivial) return cert;

  const auto reach = backward_reach(g, v);
  std::vector<std::size_t> edges;
  std::vector<Integer> values;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!reach[g.range_of(e)]) continue;
    edges.push_back(e);
    const Omega w = p.omega_of(e);
    values.emplace_back(std::labs(w.range));
    values.emplace_back(std::labs(w.source));
  }
  const std::size_t n = g.vertex_count();

  for (const Integer& b : coprime_base(values)) {
    std::vector<long> weight(g.edge_count(), 0);
    for (std::size_t e : edges) {
      const Omega w = p.omega_of(e);
      weight[e] = static_cast<long>(multiplicity(Integer(w.source), b)) -
                  static_cast<long>(multiplicity(Integer(w.range), b));
    }
    // Bellman-Ford from a virtual root joined to every reachable vertex.
    std::vector<long> dist(n, 0);
    std::vector<std::size_t> pred(n, g.edge_count());
    std::optional<std::size_t> relaxed;
    for (std::size_t round = 0; round < n; ++round) {
      relaxed.reset();
      for (std::size_t e : edges) {
        const std::size_t from = g.range_of(e), to = g.source_of(e);
        if (dist[from] + weight[e] < dist[to]) {
          dist[to] = dist[from] + weight[e];
          pred[to] = e;
          relaxed = to;
        }
      }
      if (!relaxed) break;
    }
    if (!relaxed) continue;

    std::size_t z = *relaxed;
    for (std::size_t i = 0; i < n; ++i) {
      if (pred[z] == g.edge_count()) throw CertificationError("broken predecessor chain in negative cycle search");
      z = g.range_of(pred[z]);
    }
    std::vector<std::size_t> cycle;
    std::size_t x = z;
    do {
      cycle.push_back(pred[x]);
      x = g.range_of(pred[x]);
    } while (x != z);
    std::reverse(cycle.begin(), cycle.end());

    long total = 0;
    for (std::size_t e : cycle) total += weight[e];
    if (total >= 0) throw CertificationError("negative cycle extraction produced a non-negative cycle");

    auto prefix = path_between(g, v, g.range_of(cycle.front()), reach);
    if (!prefix) throw CertificationError("negative cycle not reachable from '" + vid + "'");
    cert.unbounded = true;
    cert.factor = b;
    cert.prefix = edge_ids(g, *prefix);
    cert.cycle = edge_ids(g, cycle);
    return cert;
  }
  return cert;
}

bool has_unbounded_denominator_path(const QuotientPresentation& p, const std::string& v) {
  return denominator_certificate(p, v).unbounded;
}

FreenessCertificate topological_freeness_certificate(const QuotientPresentation& p) {
  require_valid(p);
  FreenessCertificate cert;
  cert.verdict = TriState::yes();
  std::size_t ncomp = 0;
  const auto comp = weak_components(p.graph, &ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) members.push_back(v);
    const QuotientPresentation sub = restrict_to(p, members);
    FreenessComponent fc;
    fc.vertices = sub.graph.vertices();
    fc.cyclic = sub.class_of(0) == StabiliserClass::InfiniteCyclic;
    fc.verdict = TriState::yes();
    if (!fc.cyclic) {
      auto ap = aperiodicity_certificate(sub.graph);
      if (!ap.aperiodic) {
        fc.verdict = TriState::no();
        fc.periodic_cycle = ap.cycle;
      }
    } else {
      for (const std::string& v : fc.vertices)
        if (!has_unbounded_denominator_path(sub, v)) {
          fc.verdict = TriState::no();
          fc.bounded_vertex = v;
          break;
        }
    }
    if (!fc.verdict.is_yes()) cert.verdict = TriState::no();
    cert.components.push_back(std::move(fc));
  }
  return cert;
}

TriState is_topologically_free(const QuotientPresentation& p) {
  return topological_freeness_certificate(p).verdict;
}

}  // namespace mtk
