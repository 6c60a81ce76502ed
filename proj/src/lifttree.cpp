#include "mtk/lifttree.hpp"

#include "mtk/errors.hpp"

#include <sstream>

namespace mtk {

namespace {

long digit_bound(const QuotientPresentation& p, std::size_t edge) { return std::labs(p.omega_of(edge).range); }

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer d = 2; d * d <= n; ++d) {
    if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) continue;
    out.push_back(d);
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

LiftTree::LiftTree(QuotientPresentation p, const std::string& base, std::size_t depth, std::size_t max_nodes)
    : p_(std::move(p)), depth_(depth) {
  require_valid(p_);
  base_ = p_.graph.vertex_index(base);
  nodes_.push_back(LiftNode{});
  std::size_t level_begin = 0;
  for (std::size_t level = 0; level < depth_; ++level) {
    const std::size_t level_end = nodes_.size();
    for (std::size_t n = level_begin; n < level_end; ++n) {
      const std::size_t u = vertex_of(n);
      for (std::size_t e : p_.graph.in_edges(u)) {
        const long bound = digit_bound(p_, e);
        for (long c = 0; c < bound; ++c) {
          if (nodes_.size() >= max_nodes)
            throw SizeGuardError("lift tree exceeds " + std::to_string(max_nodes) + " nodes");
          LiftNode child;
          child.path = nodes_[n].path;
          child.path.push_back(e);
          child.digits = nodes_[n].digits;
          child.digits.push_back(c);
          child.parent = n;
          nodes_[n].children.push_back(nodes_.size());
          nodes_.push_back(std::move(child));
        }
      }
    }
    level_begin = level_end;
  }
  index_nodes();
}

LiftTree::LiftTree(QuotientPresentation p, const std::string& base, std::size_t depth, std::vector<LiftNode> nodes)
    : p_(std::move(p)), depth_(depth), nodes_(std::move(nodes)) {
  base_ = p_.graph.vertex_index(base);
  index_nodes();
}

void LiftTree::index_nodes() {
  lookup_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) lookup_.emplace(std::make_pair(nodes_[i].path, nodes_[i].digits), i);
}

std::size_t LiftTree::find(const std::vector<std::size_t>& path, const std::vector<long>& digits) const {
  auto it = lookup_.find({path, digits});
  if (it == lookup_.end()) throw ValidationError("node is not in the lift tree");
  return it->second;
}

std::size_t LiftTree::vertex_of(std::size_t node) const {
  const auto& path = nodes_.at(node).path;
  return path.empty() ? base_ : p_.graph.source_of(path.back());
}

std::string LiftTree::label(std::size_t node) const {
  const LiftNode& n = nodes_.at(node);
  if (n.path.empty()) return p_.graph.vertices()[base_];
  std::string out;
  for (std::size_t i = 0; i < n.path.size(); ++i) {
    if (i) out += " ";
    out += p_.graph.edges()[n.path[i]].id + ":" + std::to_string(n.digits[i]);
  }
  return out;
}

LiftAction act_on_lift(const LiftTree& t, const Integer& m, std::size_t node) {
  if (node >= t.size()) throw ValidationError("node is not in the lift tree");
  const QuotientPresentation& p = t.presentation();
  if (p.class_of(t.base()) == StabiliserClass::Trivial) {
    if (m != 0) throw ValidationError("trivial vertex group acts only by 0");
    return {node, 0};
  }
  const LiftNode& n = t.nodes()[node];
  std::vector<long> digits(n.digits.size());
  Integer carry = m;
  for (std::size_t i = 0; i < n.path.size(); ++i) {
    const Omega w = p.omega_of(n.path[i]);
    const Integer bound = std::labs(w.range);
    Integer sum = carry + n.digits[i];
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), sum.get_mpz_t(), bound.get_mpz_t());
    Integer q = sum - c;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), Integer(w.range).get_mpz_t());
    carry = q * w.source;
    digits[i] = c.get_si();
  }
  return {t.find(n.path, digits), carry};
}

Integer brute_stabiliser(const LiftTree& t, std::size_t node) {
  if (node >= t.size()) throw ValidationError("node is not in the lift tree");
  const QuotientPresentation& p = t.presentation();
  if (p.class_of(t.base()) == StabiliserClass::Trivial) return 1;
  const LiftNode& n = t.nodes()[node];

  Integer step = 1;
  for (std::size_t i = 1; i <= n.path.size(); ++i) {
    const std::vector<std::size_t> path(n.path.begin(), n.path.begin() + static_cast<std::ptrdiff_t>(i));
    const std::vector<long> digits(n.digits.begin(), n.digits.begin() + static_cast<std::ptrdiff_t>(i));
    const std::size_t prefix = t.find(path, digits);
    const long bound = digit_bound(p, n.path[i - 1]);
    bool found = false;
    for (long k = 1; k <= bound && !found; ++k)
      if (act_on_lift(t, step * k, prefix).node == prefix) {
        step *= k;
        found = true;
      }
    if (!found) throw CertificationError("no stabilising multiple found at level " + std::to_string(i));
  }

  if (act_on_lift(t, step, node).node != node)
    throw CertificationError("computed stabiliser " + step.get_str() + " does not fix " + t.label(node));
  for (const Integer& q : prime_divisors(step))
    if (act_on_lift(t, step / q, node).node == node)
      throw CertificationError("stabiliser " + step.get_str() + " is not minimal at " + t.label(node));
  return step;
}

LiftReport verify_lift_invariants(const LiftTree& t) {
  LiftReport report;
  const QuotientPresentation& p = t.presentation();
  const DiGraph& g = p.graph;
  const auto& nodes = t.nodes();
  auto fail = [&](std::size_t node, const std::string& what) {
    report.violations.push_back("node " + std::to_string(node) + " [" +
                                (node < nodes.size() ? t.label(node) : std::string("?")) + "]: " + what);
  };
  if (nodes.empty()) {
    report.violations.push_back("tree has no root");
    return report;
  }
  if (!nodes[0].path.empty() || !nodes[0].digits.empty()) fail(0, "root is not the empty path");

  bool shape_ok = true;
  std::map<std::vector<std::size_t>, std::size_t> lifts;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const LiftNode& n = nodes[i];
    if (n.digits.size() != n.path.size()) {
      fail(i, "digit vector length differs from path length");
      shape_ok = false;
      continue;
    }
    if (n.path.size() > t.depth()) fail(i, "node deeper than the tree depth");
    std::size_t at = t.base();
    for (std::size_t k = 0; k < n.path.size(); ++k) {
      if (n.path[k] >= g.edge_count() || g.range_of(n.path[k]) != at) {
        fail(i, "path is not composable into the base vertex");
        shape_ok = false;
        break;
      }
      at = g.source_of(n.path[k]);
      if (n.digits[k] < 0 || n.digits[k] >= digit_bound(p, n.path[k])) {
        fail(i, "digit " + std::to_string(k + 1) + " outside [0, |w|)");
        shape_ok = false;
      }
    }
    ++lifts[n.path];
    if (i == 0) continue;
    if (n.parent >= nodes.size()) {
      fail(i, "parent index out of range");
      shape_ok = false;
      continue;
    }
    const LiftNode& par = nodes[n.parent];
    if (n.path.empty() || par.path.size() + 1 != n.path.size() ||
        !std::equal(par.path.begin(), par.path.end(), n.path.begin()) ||
        !std::equal(par.digits.begin(), par.digits.end(), n.digits.begin()))
      fail(i, "parent is not the node with the last edge and digit removed");
    if (std::count(par.children.begin(), par.children.end(), i) != 1) fail(i, "parent does not list this child");
  }

  // Every quotient path of length <= depth has exactly prod |w| lifts.
  std::vector<std::pair<std::vector<std::size_t>, long>> stack{{{}, 1}};
  std::size_t quotient_paths = 0;
  while (!stack.empty()) {
    auto [path, count] = stack.back();
    stack.pop_back();
    ++quotient_paths;
    auto it = lifts.find(path);
    const std::size_t found = it == lifts.end() ? 0 : it->second;
    if (found != static_cast<std::size_t>(count)) {
      std::string name;
      for (std::size_t e : path) name += (name.empty() ? "" : " ") + g.edges()[e].id;
      report.violations.push_back("path [" + name + "] has " + std::to_string(found) + " lifts, expected " +
                                  std::to_string(count));
    }
    if (path.size() == t.depth()) continue;
    const std::size_t u = path.empty() ? t.base() : g.source_of(path.back());
    for (std::size_t e : g.in_edges(u)) {
      auto next = path;
      next.push_back(e);
      stack.push_back({std::move(next), count * digit_bound(p, e)});
    }
  }
  if (lifts.size() != quotient_paths) report.violations.push_back("tree has lifts of paths that do not exist");

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].path.size() >= t.depth() || nodes[i].digits.size() != nodes[i].path.size()) continue;
    if (nodes[i].path.size() > 0 && nodes[i].path.back() >= g.edge_count()) continue;
    long expected = 0;
    for (std::size_t e : g.in_edges(t.vertex_of(i))) expected += digit_bound(p, e);
    if (static_cast<long>(nodes[i].children.size()) != expected)
      fail(i, "in-degree " + std::to_string(nodes[i].children.size()) + ", expected " + std::to_string(expected));
  }

  if (!shape_ok || p.class_of(t.base()) == StabiliserClass::Trivial) return report;

  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (long m : {-3L, -2L, -1L, 1L, 2L, 3L}) {
      try {
        const auto moved = act_on_lift(t, m, i);
        if (nodes[moved.node].path != nodes[i].path) fail(i, "action changes the quotient path");
        if (act_on_lift(t, -m, moved.node).node != i) fail(i, "actions by m and -m are not inverse");
        if (i != 0 && nodes[moved.node].parent != act_on_lift(t, m, nodes[i].parent).node)
          fail(i, "action does not commute with the parent map");
      } catch (const ValidationError& err) {
        fail(i, std::string("action leaves the tree: ") + err.what());
      }
    }
  return report;
}

std::string to_dot(const LiftTree& t) {
  std::ostringstream os;
  os << "digraph lifts {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < t.size(); ++i) os << "  n" << i << " [label=\"" << t.label(i) << "\"];\n";
  for (std::size_t i = 1; i < t.size(); ++i) os << "  n" << i << " -> n" << t.nodes()[i].parent << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mtk
