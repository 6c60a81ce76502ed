#include "mtk/ktheory.hpp"

#include "mtk/errors.hpp"

namespace mtk {

std::string to_string(ComponentCase c) { return c == ComponentCase::Free ? "free" : "z"; }

IntMatrix adjacency_matrix(const QuotientPresentation& p) {
  const DiGraph& g = p.graph;
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) a(g.range_of(e), g.source_of(e)) += 1;
  return a;
}

StabiliserMatrices stabiliser_matrices(const QuotientPresentation& p) {
  const DiGraph& g = p.graph;
  const std::size_t n = g.vertex_count();
  for (std::size_t v = 0; v < n; ++v)
    if (p.class_of(v) != StabiliserClass::InfiniteCyclic)
      throw ValidationError("stabiliser matrices need infinite cyclic vertex groups; '" + g.vertices()[v] +
                            "' is trivial");
  StabiliserMatrices m{IntMatrix(n, n), IntMatrix(n, n)};
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Omega w = p.omega_of(e);
    const std::size_t v = g.range_of(e);
    const std::size_t s = g.source_of(e);
    m.A0(s, v) += std::labs(w.range);
    m.A1(s, v) += (w.range > 0 ? 1 : -1) * w.source;
  }
  return m;
}

std::pair<Integer, Integer> theta_induced(const QuotientPresentation& p, const std::string& edge) {
  const std::size_t e = p.graph.edge_index(edge);
  if (p.class_of(p.graph.range_of(e)) == StabiliserClass::Trivial) return {1, 0};
  const Omega w = p.omega_of(e);
  return {Integer(std::labs(w.range)), Integer((w.range > 0 ? 1 : -1) * w.source)};
}

KTheoryReport k_theory(const QuotientPresentation& p) {
  require_valid(p);
  KTheoryReport report;
  std::size_t ncomp = 0;
  const auto comp = weak_components(p.graph, &ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> members;
    for (std::size_t v = 0; v < comp.size(); ++v)
      if (comp[v] == c) members.push_back(v);
    const QuotientPresentation sub = restrict_to(p, members);
    const std::size_t n = sub.graph.vertex_count();
    const IntMatrix one = IntMatrix::identity(n);

    ComponentK ck;
    ck.vertices = sub.graph.vertices();
    if (sub.class_of(0) == StabiliserClass::Trivial) {
      ck.kind = ComponentCase::Free;
      IntMatrix m = one - adjacency_matrix(sub).transpose();
      ck.K0 = cokernel(m);
      ck.K1 = kernel(m);
      ck.matrices.push_back(std::move(m));
    } else {
      ck.kind = ComponentCase::InfiniteCyclic;
      const auto a = stabiliser_matrices(sub);
      IntMatrix m0 = one - a.A0;
      IntMatrix m1 = one - a.A1;
      ck.K0 = direct_sum(cokernel(m0), kernel(m1));
      ck.K1 = direct_sum(cokernel(m1), kernel(m0));
      ck.matrices.push_back(std::move(m0));
      ck.matrices.push_back(std::move(m1));
    }
    report.K0 = direct_sum(report.K0, ck.K0);
    report.K1 = direct_sum(report.K1, ck.K1);
    report.components.push_back(std::move(ck));
  }
  return report;
}

SixTermReport six_term_report(const QuotientPresentation& p) {
  require_valid(p);
  const DiGraph& g = p.graph;
  const std::size_t n = g.vertex_count();
  SixTermReport r;
  r.k0_basis = g.vertices();
  std::vector<std::size_t> k1_index(n, n);
  for (std::size_t v = 0; v < n; ++v)
    if (p.class_of(v) == StabiliserClass::InfiniteCyclic) {
      k1_index[v] = r.k1_basis.size();
      r.k1_basis.push_back(g.vertices()[v]);
    }
  const std::size_t n1 = r.k1_basis.size();
  IntMatrix alpha0(n, n);
  IntMatrix alpha1(n1, n1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [m0, m1] = theta_induced(p, g.edges()[e].id);
    const std::size_t v = g.range_of(e);
    const std::size_t s = g.source_of(e);
    alpha0(s, v) += m0;
    if (k1_index[v] != n && k1_index[s] != n) alpha1(k1_index[s], k1_index[v]) += m1;
  }
  r.id_minus_alpha0 = IntMatrix::identity(n) - alpha0;
  r.id_minus_alpha1 = IntMatrix::identity(n1) - alpha1;
  r.coker0 = cokernel(r.id_minus_alpha0);
  r.ker0 = kernel(r.id_minus_alpha0);
  r.coker1 = cokernel(r.id_minus_alpha1);
  r.ker1 = kernel(r.id_minus_alpha1);
  r.K0 = direct_sum(r.coker0, r.ker1);
  r.K1 = direct_sum(r.coker1, r.ker0);
  return r;
}

}  // namespace mtk
