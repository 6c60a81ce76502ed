#include "mtk/errors.hpp"
#include "mtk/ktheory.hpp"
#include "mtk/lifttree.hpp"
#include "mtk/oracle.hpp"
#include "mtk/random.hpp"
#include "mtk/setfamily.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

namespace mtk::oracle {

namespace {

using Failure = std::optional<std::string>;
using Check = std::function<Failure(Rng&)>;

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

std::string describe(const DiGraph& g) {
  std::string out = "V=" + join(g.vertices()) + " E=";
  std::vector<std::string> es;
  for (const Edge& e : g.edges()) es.push_back(e.id + ":" + e.range + "<-" + e.source);
  return out + join(es);
}

std::string describe(const QuotientPresentation& p) {
  std::string out = describe(p.graph);
  std::vector<std::string> ws;
  for (const auto& [e, w] : p.omega) ws.push_back(e + "=(" + std::to_string(w.range) + "," + std::to_string(w.source) + ")");
  if (!ws.empty()) out += " w=" + join(ws);
  return out;
}

// ---- linear algebra ----

Failure smith_case(Rng& rng) {
  const IntMatrix m = random_matrix(rng, 8, 8, 10);
  const auto d = smith_normal_form(m);
  if (!(d.U * m * d.V == d.S)) return "U M V != S for " + m.to_string();
  if (abs(determinant(d.U)) != 1 || abs(determinant(d.V)) != 1) return "transform not unimodular for " + m.to_string();
  if (!d.S.is_diagonal()) return "S not diagonal for " + m.to_string();
  const std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    if (d.S(i, i) < 0) return "negative diagonal entry for " + m.to_string();
    if (i + 1 < diag && d.S(i, i) == 0 && d.S(i + 1, i + 1) != 0) return "zero before nonzero for " + m.to_string();
    if (i + 1 < diag && d.S(i + 1, i + 1) != 0 && !mpz_divisible_p(d.S(i + 1, i + 1).get_mpz_t(), d.S(i, i).get_mpz_t()))
      return "divisibility chain broken for " + m.to_string();
  }
  const std::size_t r = d.rank();
  if (r != rank_by_elimination(m) || r != rank_over_q(m)) return "rank disagreement for " + m.to_string();

  const IntMatrix tiny = random_matrix(rng, 3, 3, 3);
  const AbelianGroup coker = cokernel(tiny);
  if (auto why = check_cokernel_by_enumeration(tiny, coker)) return "cokernel of " + tiny.to_string() + ": " + *why;
  if (!(cokernel_by_minors(tiny) == coker)) return "cokernel by minors differs for " + tiny.to_string();
  if (kernel(tiny).rank() != tiny.cols() - rank_over_q(tiny)) return "kernel rank wrong for " + tiny.to_string();
  return std::nullopt;
}

// ---- multitrees and cylinders ----

Failure cylinder_case(Rng& rng) {
  const DiGraph g = random_multitree(rng, 12);
  const std::string where = " in " + describe(g);
  if (!mtk::is_multitree(g) || !oracle::is_multitree(g)) return "generated graph is not a multitree" + where;
  const IntMatrix counts = path_count_matrix(g, g.vertex_count());
  for (std::size_t i = 0; i < counts.rows(); ++i)
    for (std::size_t j = 0; j < counts.cols(); ++j)
      if (counts(i, j) > 1) return "path count above 1" + where;

  const SetFamily cyl = cylinder_family(g);
  if (!is_independent(cyl)) return "cylinder family not independent" + where;
  for (const auto& v : g.vertices())
    for (const auto& w : g.vertices()) {
      const auto d = decompose_cylinder_intersection(g, v, w);
      if (d.bounds != oracle::min_upper_bounds(g, v, w)) return "bounds of " + v + "," + w + " differ from brute force" + where;
      AtomSet target = cyl.member(cyl.index_of("Z(" + v + ")")) & cyl.member(cyl.index_of("Z(" + w + ")"));
      const auto parts = all_partitions(cyl, target);
      if (parts.size() != 1) return "intersection of " + v + "," + w + " has " + std::to_string(parts.size()) + " partitions" + where;
      std::vector<std::string> ids;
      for (std::size_t k : parts.front()) ids.push_back(cyl.ids()[k]);
      std::vector<std::string> expected;
      for (const auto& u : d.bounds) expected.push_back("Z(" + u + ")");
      std::sort(expected.begin(), expected.end());
      if (ids != expected) return "unique partition of " + v + "," + w + " is not the bound cylinders" + where;

      // order equivalence
      const auto zv = vertex_cylinder(g, v);
      const auto zw = vertex_cylinder(g, w);
      const bool in = std::binary_search(zv.begin(), zv.end(), w);
      const bool sub = std::includes(zv.begin(), zv.end(), zw.begin(), zw.end());
      if (in != sub || in != leq(g, v, w)) return "order characterisations disagree for " + v + "," + w + where;
    }
  return std::nullopt;
}

Failure dual_tree_case(Rng& rng) {
  const UndirectedGraph t = random_tree(rng, 8);
  const DiGraph d = dual_graph(t);
  if (!mtk::is_multitree(d) || !oracle::is_multitree(d)) return "dual of a tree is not a multitree: " + describe(t.graph());
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const auto& id = d.edges()[e];
    if (t.bar(id.range) == id.source) return "dual edge " + id.id + " is a backtrack";
  }
  return std::nullopt;
}

Failure dual_quotient_case(Rng& rng) {
  const GraphOfGroupsZ gog = random_gog(rng, 3, 4);
  const DiGraph& g = gog.graph.graph();
  const QuotientPresentation q = dual_quotient(gog);
  const auto report = validate(q);
  if (!report.ok()) return "dual quotient invalid: " + report.to_string() + " for " + describe(g);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    long expected = -1;
    for (std::size_t f : g.in_edges(g.source_of(e))) expected += std::labs(gog.alpha_of(f));
    long got = 0;
    for (std::size_t d : q.graph.in_edges(q.graph.vertex_index(g.edges()[e].id)))
      got += std::labs(q.omega_of(d).range);
    if (got != expected)
      return "in-degree identity fails at " + g.edges()[e].id + ": " + std::to_string(got) + " vs " +
             std::to_string(expected) + " for " + describe(g);
  }
  if (gog.class_of(0) == StabiliserClass::Trivial) {
    const DiGraph plain = dual_graph(gog.graph);
    if (plain.vertices() != q.graph.vertices() || plain.edge_count() != q.graph.edge_count())
      return "trivial dual quotient differs from the dual graph";
    for (std::size_t e = 0; e < plain.edge_count(); ++e) {
      const Edge &a = plain.edges()[e], &b = q.graph.edges()[e];
      if (a.id != b.id || a.range != b.range || a.source != b.source) return "trivial dual quotient differs at " + a.id;
    }
  }
  return std::nullopt;
}

// ---- presentations, ratios, K-theory ----

Path random_path(Rng& rng, const QuotientPresentation& p, std::size_t from, std::size_t len) {
  Path path{p.graph.vertices()[from], {}};
  std::size_t at = from;
  for (std::size_t k = 0; k < len; ++k) {
    const auto& in = p.graph.in_edges(at);
    const std::size_t e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    path.edges.push_back(p.graph.edges()[e].id);
    at = p.graph.source_of(e);
  }
  return path;
}

Failure ratio_case(Rng& rng) {
  const QuotientPresentation p = random_z_presentation(rng, 5, 3, 4);
  const std::size_t v = std::uniform_int_distribution<std::size_t>(0, p.graph.vertex_count() - 1)(rng);
  const Path a = random_path(rng, p, v, std::uniform_int_distribution<std::size_t>(0, 4)(rng));
  const std::string mid = path_source(p.graph, a);
  const Path b = random_path(rng, p, p.graph.vertex_index(mid), std::uniform_int_distribution<std::size_t>(0, 4)(rng));
  Path ab = a;
  ab.edges.insert(ab.edges.end(), b.edges.begin(), b.edges.end());
  if (!(signed_index_ratio(p, ab) == signed_index_ratio(p, a) * signed_index_ratio(p, b)))
    return "q is not multiplicative in " + describe(p);
  const Integer m = lift_stabiliser_generator(p, ab);
  mpq_class mq = signed_index_ratio(p, ab).value() * m;
  mq.canonicalize();
  if (mq.get_den() != 1) return "M q(path) is not an integer in " + describe(p);
  return std::nullopt;
}

QuotientPresentation relabelled(const QuotientPresentation& p, Rng& rng) {
  std::vector<std::string> vs = p.graph.vertices();
  std::vector<std::string> shuffled = vs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < vs.size(); ++i) rename[vs[i]] = "r" + shuffled[i];
  QuotientPresentation out;
  std::vector<std::string> nv;
  for (const auto& v : vs) nv.push_back(rename[v]);
  std::vector<Edge> ne;
  for (const Edge& e : p.graph.edges()) ne.push_back({"x" + e.id, rename[e.range], rename[e.source]});
  out.graph = DiGraph(nv, ne);
  for (const auto& [v, c] : p.vertex_class) out.vertex_class[rename[v]] = c;
  for (const auto& [e, w] : p.omega) out.omega["x" + e] = w;
  return out;
}

Failure ktheory_case(Rng& rng) {
  const bool cyclic = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  QuotientPresentation p =
      cyclic ? random_z_presentation(rng, 5, 4, 4) : random_free_presentation(rng, 5, 5);
  if (cyclic && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
    for (auto& [e, w] : p.omega) {
      w.range = w.range > 0 ? 1 : -1;
      w.source = w.source > 0 ? 1 : -1;
    }
  const std::string where = " in " + describe(p);
  const KTheoryReport k = k_theory(p);
  const SixTermReport six = six_term_report(p);
  if (!(six.K0 == k.K0) || !(six.K1 == k.K1)) return "six-term groups differ from k_theory" + where;
  AbelianGroup sum0, sum1;
  for (const auto& c : k.components) {
    sum0 = direct_sum(sum0, c.K0);
    sum1 = direct_sum(sum1, c.K1);
  }
  if (!(sum0 == k.K0) || !(sum1 == k.K1)) return "components do not sum to the global groups" + where;
  if (!(k_theory(relabelled(p, rng)).K0 == k.K0) || !(k_theory(relabelled(p, rng)).K1 == k.K1))
    return "relabelling changes K-theory" + where;

  const std::size_t n = p.graph.vertex_count();
  const IntMatrix a = adjacency_matrix(p);
  if (!cyclic) {
    const IntMatrix m = IntMatrix::identity(n) - a.transpose();
    if (!(cokernel_by_minors(m) == k.K0)) return "free K0 differs from the minors oracle" + where;
    if (k.K1.rank() != n - rank_over_q(m) || !k.K1.torsion().empty()) return "free K1 differs from the rank oracle" + where;
    return std::nullopt;
  }

  const auto sm = stabiliser_matrices(p);
  IntMatrix a0(n, n), a1(n, n);
  bool units = true;
  for (const Edge& e : p.graph.edges()) {
    const auto [m0, m1] = theta_induced(p, e.id);
    const std::size_t v = p.graph.vertex_index(e.range), s = p.graph.vertex_index(e.source);
    a0(s, v) += m0;
    a1(s, v) += m1;
    const Omega w = p.omega.at(e.id);
    units = units && std::labs(w.range) == 1 && std::labs(w.source) == 1;
  }
  if (!(a0 == sm.A0) || !(a1 == sm.A1)) return "stabiliser matrices differ from the edge-by-edge sum" + where;
  if (units && !(sm.A0 == a.transpose())) return "unit indices but A0 != A^T" + where;

  QuotientPresentation flipped = p;
  const std::string e = p.graph.edges()[std::uniform_int_distribution<std::size_t>(0, p.graph.edge_count() - 1)(rng)].id;
  flipped.omega[e] = {-p.omega.at(e).range, -p.omega.at(e).source};
  const auto fm = stabiliser_matrices(flipped);
  if (!(fm.A0 == sm.A0) || !(fm.A1 == sm.A1)) return "negating both indices of " + e + " changes A0 or A1" + where;

  QuotientPresentation regen = p;
  const std::size_t x = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  for (std::size_t i = 0; i < p.graph.edge_count(); ++i) {
    Omega& w = regen.omega[p.graph.edges()[i].id];
    if (p.graph.range_of(i) == x) w.range = -w.range;
    if (p.graph.source_of(i) == x) w.source = -w.source;
  }
  const KTheoryReport k2 = k_theory(regen);
  if (!(k2.K0 == k.K0) || !(k2.K1 == k.K1)) return "changing the generator at a vertex changes K-theory" + where;
  return std::nullopt;
}

// ---- isotropy and lift trees ----

Failure isotropy_case(Rng& rng) {
  const QuotientPresentation p = random_z_presentation(rng, 4, 1, 4);
  for (const auto& v : p.graph.vertices()) {
    const LiftTree t(p, v, 5);
    std::vector<Integer> stab(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      const LiftNode& node = t.nodes()[i];
      Path path{v, {}};
      for (std::size_t e : node.path) path.edges.push_back(p.graph.edges()[e].id);
      stab[i] = brute_stabiliser(t, i);
      const Integer formula = lift_stabiliser_generator(p, path);
      if (stab[i] != formula)
        return "lift " + t.label(i) + " over " + v + ": brute " + stab[i].get_str() + ", formula " + formula.get_str() +
               " in " + describe(p);
      mpq_class mq = signed_index_ratio(p, path).value() * formula;
      mq.canonicalize();
      if (mq.get_den() != 1) return "M q(path) is not an integer at " + t.label(i) + " in " + describe(p);
      if (i > 0 && !mpz_divisible_p(stab[i].get_mpz_t(), stab[node.parent].get_mpz_t()))
        return "stabiliser of " + t.label(i) + " not a multiple of its parent's in " + describe(p);
    }
  }
  return std::nullopt;
}

Failure lift_action_case(Rng& rng) {
  const QuotientPresentation p = random_z_presentation(rng, 4, 2, 4);
  std::uniform_int_distribution<long> pick(-12, 12);
  for (const auto& v : p.graph.vertices()) {
    const LiftTree t(p, v, 3);
    const auto report = verify_lift_invariants(t);
    if (!report.ok()) return "lift invariants fail over " + v + ": " + report.violations.front() + " in " + describe(p);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const long a = pick(rng), b = pick(rng);
      if (act_on_lift(t, a + b, i).node != act_on_lift(t, a, act_on_lift(t, b, i).node).node)
        return "action is not additive at " + t.label(i) + " in " + describe(p);
      if (act_on_lift(t, 0, i).node != i) return "0 does not act trivially";
      const LiftNode& node = t.nodes()[i];
      if (node.path.size() == 1) {
        const Omega w = p.omega_of(node.path[0]);
        const auto r = act_on_lift(t, std::labs(w.range), i);
        if (r.node != i || r.carry != (w.range > 0 ? 1 : -1) * w.source)
          return "corner identity fails at " + t.label(i) + " in " + describe(p);
      }
    }
  }
  return std::nullopt;
}

// ---- dynamics ----

Failure freeness_case(Rng& rng) {
  const QuotientPresentation p = random_z_presentation(rng, 5, 2, 4);
  for (const auto& v : p.graph.vertices()) {
    const auto cert = denominator_certificate(p, v);
    const bool brute = oracle::has_unbounded_denominator_path(p, v);
    if (cert.unbounded != brute)
      return std::string("unbounded-denominator decider says ") + (cert.unbounded ? "yes" : "no") +
             ", enumeration says " + (brute ? "yes" : "no") + " at " + v + " in " + describe(p);
  }
  const QuotientPresentation f = random_free_presentation(rng, 5, 3);
  if (is_topologically_free(f).is_yes() != mtk::is_aperiodic(f.graph))
    return "free-case freeness differs from aperiodicity in " + describe(f);
  return std::nullopt;
}

Failure graph_decider_case(Rng& rng) {
  const DiGraph g = random_no_source_digraph(rng, 7, 7);
  if (mtk::is_cofinal(g) != oracle::is_cofinal(g)) return "cofinality disagrees on " + describe(g);
  const bool ap = mtk::is_aperiodic(g);
  if (ap != oracle::is_aperiodic(g)) return "aperiodicity disagrees on " + describe(g);
  if (ap) {
    // adding an edge into a cycle vertex keeps aperiodicity
    const auto cycles = oracle::simple_cycles(g);
    if (!cycles.empty()) {
      const std::size_t target = g.range_of(cycles.front().front());
      const std::size_t from = std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng);
      auto edges = g.edges();
      edges.push_back({"extra", g.vertices()[target], g.vertices()[from]});
      if (!mtk::is_aperiodic(DiGraph(g.vertices(), edges))) return "adding an entrance broke aperiodicity on " + describe(g);
    }
  }
  return std::nullopt;
}

// ---- set families ----

Failure setfamily_case(Rng& rng) {
  const FamilyCase c = random_family_case(rng, 8);
  const SetFamily& f = c.family;
  const std::string where = " in family " + join(f.ids());
  const auto cond = verify_prop_equivalence(f);
  if (!cond.condition_a || !cond.condition_b) return "generated family fails the conditions" + where;
  const auto t = transition_matrix(f);
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& x = t.gamma(i, j);
      if (x != 0 && x != 1) return "transition matrix entry outside {0,1}" + where;
      if (i == j && x != 1) return "transition matrix diagonal entry != 1" + where;
      if (i > j && x != 0) return "transition matrix not upper triangular" + where;
    }
  if (determinant(t.gamma) != 1) return "transition matrix determinant != 1" + where;

  const auto J = saturate(f, c.F, c.action);
  if (!std::includes(J.begin(), J.end(), c.F.begin(), c.F.end())) return "saturation does not contain F" + where;
  if (!is_invariant(J, c.action)) return "saturation is not invariant" + where;
  if (!is_finitely_aligned_within(f, J)) return "saturation is not finitely aligned" + where;

  // Uniqueness of decompositions in independent families, and the
  // equivalence on arbitrary families.
  const SetFamily g = random_family(rng, 6, 7);
  verify_prop_equivalence(g);
  if (is_independent(g))
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        if (all_partitions(g, g.member(i) & g.member(j)).size() > 1)
          return "independent family with two partitions of an intersection: " + join(g.ids());
  return std::nullopt;
}

struct SuiteDef {
  SuiteInfo info;
  Check check;
};

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = {
      {{"smith", "Smith form transforms, ranks, cokernel enumeration", 500}, smith_case},
      {{"cylinders", "multitree cylinder partitions and their uniqueness", 200}, cylinder_case},
      {{"dual-tree", "duals of finite trees are multitrees", 100}, dual_tree_case},
      {{"dual-quotient", "dual quotient validity and in-degree identity", 100}, dual_quotient_case},
      {{"ratio", "multiplicativity of q and integrality of M q", 100}, ratio_case},
      {{"ktheory", "K-theory consistency, invariance and free-case oracle", 100}, ktheory_case},
      {{"isotropy", "lift stabilisers against the lcm formula", 50}, isotropy_case},
      {{"lift-action", "lift tree invariants and the digit action", 50}, lift_action_case},
      {{"freeness", "unbounded denominators against periodic enumeration", 100}, freeness_case},
      {{"graph-deciders", "cofinality and aperiodicity against cycle enumeration", 200}, graph_decider_case},
      {{"setfamily", "transition matrix, saturation, condition equivalence", 100}, setfamily_case},
  };
  return defs;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases, std::optional<std::size_t> only) {
  const auto& defs = definitions();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == name; });
  if (it == defs.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  const std::uint64_t salt = static_cast<std::uint64_t>(it - defs.begin()) << 32;

  SuiteResult result;
  result.name = name;
  const auto start = std::chrono::steady_clock::now();
  const std::size_t first = only ? *only : 0;
  const std::size_t last = only ? *only + 1 : cases;
  for (std::size_t k = first; k < last; ++k) {
    Rng rng = make_rng(seed, salt | k);
    Failure failure;
    try {
      failure = it->check(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++result.cases;
    if (failure) {
      if (result.failures == 0) {
        result.first_failure = "case " + std::to_string(k) + ": " + *failure;
        result.repro = "mtk oracle --suite " + name + " --seed " + std::to_string(seed) + " --case " + std::to_string(k);
      }
      ++result.failures;
    }
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace mtk::oracle
