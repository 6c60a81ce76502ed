#include "mtk/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mtk::oracle {

std::size_t rank_over_q(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// gcd of all k x k minors (D_0 = 1).
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  if (k == 0) return 1;
  Integer g = 0;
  for (const auto& rows : subsets_of_size(m.rows(), k))
    for (const auto& cols : subsets_of_size(m.cols(), k)) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, cofactor_determinant(sub));
    }
  return g;
}

}  // namespace

AbelianGroup cokernel_by_minors(const IntMatrix& m) {
  std::vector<Integer> factors;
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    factors.push_back(d / prev);
    prev = d;
    rank = k;
  }
  return AbelianGroup(m.rows() - rank, factors);
}

std::optional<std::string> check_cokernel_by_enumeration(const IntMatrix& m, const AbelianGroup& predicted) {
  const std::size_t n = m.rows();
  const std::size_t r = rank_over_q(m);
  if (predicted.rank() != n - r)
    return "free rank " + std::to_string(predicted.rank()) + " but rows - rank = " + std::to_string(n - r);
  const Integer big_n = determinantal_divisor(m, r);
  Integer product = 1;
  for (const Integer& t : predicted.torsion()) product *= t;
  if (product != big_n) return "torsion order " + product.get_str() + " but D_r = " + big_n.get_str();
  if (big_n == 1) return std::nullopt;
  if (!big_n.fits_ulong_p()) return "modulus too large to enumerate";
  const unsigned long N = big_n.get_ui();
  std::size_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    space *= N;
    if (space > 20'000'000) return "residue space too large to enumerate";
  }

  auto encode = [&](const std::vector<unsigned long>& y) {
    std::size_t code = 0;
    for (std::size_t i = n; i-- > 0;) code = code * N + y[i];
    return code;
  };
  auto decode = [&](std::size_t code) {
    std::vector<unsigned long> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = code % N;
      code /= N;
    }
    return y;
  };
  std::vector<std::vector<unsigned long>> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<unsigned long> col(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer x;
      mpz_fdiv_r_ui(x.get_mpz_t(), m(i, j).get_mpz_t(), N);
      col[i] = x.get_ui();
    }
    gens.push_back(std::move(col));
  }
  std::vector<bool> in_h(space, false);
  std::vector<std::size_t> queue{0};
  in_h[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto y = decode(queue[head]);
    for (const auto& g : gens) {
      std::vector<unsigned long> z(n);
      for (std::size_t i = 0; i < n; ++i) z[i] = (y[i] + g[i]) % N;
      const std::size_t code = encode(z);
      if (!in_h[code]) {
        in_h[code] = true;
        queue.push_back(code);
      }
    }
  }
  const std::size_t h_size = queue.size();

  for (unsigned long k = 1; k <= N; ++k) {
    if (N % k != 0) continue;
    std::size_t killed = 0;
    for (std::size_t code = 0; code < space; ++code) {
      auto y = decode(code);
      for (auto& x : y) x = (x * k) % N;
      if (in_h[encode(y)]) ++killed;
    }
    unsigned long expected = 1;
    for (std::size_t i = 0; i < n - r; ++i) expected *= std::gcd(k, N);
    for (const Integer& t : predicted.torsion()) expected *= std::gcd(k, t.get_ui());
    if (killed != expected * h_size)
      return "k = " + std::to_string(k) + ": " + std::to_string(killed / h_size) + " elements killed, expected " +
             std::to_string(expected);
  }
  return std::nullopt;
}

PathCensus census_paths(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  PathCensus c;
  c.paths.assign(n, std::vector<int>(n, 0));
  for (std::size_t w = 0; w < n; ++w) {
    // paths leaving w, following source -> range
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t at, std::size_t len) {
      c.paths[w][at] = std::min(2, c.paths[w][at] + 1);
      if (len == n) {
        c.has_cycle = true;
        return;
      }
      for (const Edge& e : g.edges())
        if (e.source == g.vertices()[at]) walk(*g.find_vertex(e.range), len + 1);
    };
    walk(w, 0);
    if (c.has_cycle) return c;
  }
  return c;
}

bool is_multitree(const DiGraph& g) {
  const auto c = census_paths(g);
  if (c.has_cycle) return false;
  for (const auto& row : c.paths)
    for (int x : row)
      if (x > 1) return false;
  return true;
}

std::vector<std::string> min_upper_bounds(const DiGraph& g, const std::string& v, const std::string& w) {
  const auto c = census_paths(g);
  const std::size_t n = g.vertex_count();
  const std::size_t vi = *g.find_vertex(v), wi = *g.find_vertex(w);
  std::vector<std::string> out;
  for (std::size_t u = 0; u < n; ++u) {
    if (!c.paths[u][vi] || !c.paths[u][wi]) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < n && minimal; ++x)
      if (x != u && c.paths[x][vi] && c.paths[x][wi] && c.paths[u][x]) minimal = false;
    if (minimal) out.push_back(g.vertices()[u]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> simple_cycles(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> used(n, false);
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> extend = [&](std::size_t at) {
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.range_of(e) != at) continue;
        const std::size_t src = g.source_of(e);
        if (src == s) {
          path.push_back(e);
          out.push_back(path);
          path.pop_back();
        } else if (src > s && !used[src]) {
          used[src] = true;
          path.push_back(e);
          extend(src);
          path.pop_back();
          used[src] = false;
        }
      }
    };
    extend(s);
  }
  return out;
}

bool is_cofinal(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  for (const auto& cycle : simple_cycles(g)) {
    std::vector<bool> reached(n, false);
    for (std::size_t e : cycle) reached[g.range_of(e)] = true;
    for (std::size_t step = 0; step < 2 * n; ++step) {
      auto next = reached;
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (reached[g.source_of(e)]) next[g.range_of(e)] = true;
      reached = std::move(next);
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end()) return false;
  }
  return true;
}

bool is_aperiodic(const DiGraph& g) {
  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) ++indeg[g.range_of(e)];
  for (const auto& cycle : simple_cycles(g)) {
    bool entrance = false;
    for (std::size_t e : cycle) entrance = entrance || indeg[g.range_of(e)] >= 2;
    if (!entrance) return false;
  }
  return true;
}

bool has_unbounded_denominator_path(const QuotientPresentation& p, const std::string& v, std::size_t max_len,
                                    std::size_t horizon) {
  const DiGraph& g = p.graph;
  const std::size_t start = g.vertex_index(v);
  if (p.class_of(start) == StabiliserClass::Trivial) return false;

  // Denominators d_1..d_horizon along beta eta eta ...
  auto grows = [&](const std::vector<std::size_t>& walk, std::size_t b) {
    const std::size_t c = walk.size() - b;
    std::vector<Integer> d(horizon + 1);
    mpq_class q(1);
    for (std::size_t k = 1; k <= horizon; ++k) {
      const std::size_t idx = k - 1 < b ? k - 1 : b + (k - 1 - b) % c;
      const Omega w = p.omega_of(walk[idx]);
      mpq_class x = q / w.range;
      x.canonicalize();
      d[k] = x.get_den();
      q *= mpq_class(w.source) / w.range;
      q.canonicalize();
    }
    for (std::size_t k = b + 1; k + c <= horizon; ++k)
      if (d[k + c] > d[k]) return true;
    return false;
  };

  std::vector<std::size_t> walk;
  std::function<bool(std::size_t)> search = [&](std::size_t at) {
    if (!walk.empty()) {
      for (std::size_t b = 0; b < walk.size(); ++b)
        if (g.range_of(walk[b]) == g.source_of(walk.back()) && grows(walk, b)) return true;
    }
    if (walk.size() == max_len) return false;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      if (g.range_of(e) != at) continue;
      walk.push_back(e);
      if (search(g.source_of(e))) return true;
      walk.pop_back();
    }
    return false;
  };
  return search(start);
}

}  // namespace mtk::oracle
