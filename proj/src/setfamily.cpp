#include "mtk/setfamily.hpp"

#include "mtk/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

namespace mtk {

SetFamily::SetFamily(std::vector<std::string> universe,
                     std::vector<std::pair<std::string, std::vector<std::string>>> members,
                     std::size_t max_atoms)
    : universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  if (std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw ValidationError("duplicate atom in universe");
  const std::size_t cap = std::min(max_atoms, kHardMaxAtoms);
  if (universe_.size() > cap)
    throw SizeGuardError("universe has " + std::to_string(universe_.size()) + " atoms, bound is " +
                         std::to_string(cap));

  std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::map<AtomSet, std::string> seen;
  for (const auto& [id, atoms] : members) {
    if (!ids_.empty() && ids_.back() == id) throw ValidationError("duplicate member id '" + id + "'");
    AtomSet mask = 0;
    for (const std::string& a : atoms) {
      auto it = std::lower_bound(universe_.begin(), universe_.end(), a);
      if (it == universe_.end() || *it != a) throw ValidationError("member '" + id + "' uses unknown atom '" + a + "'");
      mask |= AtomSet(1) << (it - universe_.begin());
    }
    if (mask == 0) throw ValidationError("member '" + id + "' is empty");
    auto [pos, fresh] = seen.emplace(mask, id);
    if (!fresh) throw ValidationError("members '" + pos->second + "' and '" + id + "' are equal");
    ids_.push_back(id);
    masks_.push_back(mask);
  }
}

std::size_t SetFamily::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw ValidationError("unknown member '" + id + "'");
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<std::string> SetFamily::atoms_of(AtomSet s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (s >> i & 1) out.push_back(universe_[i]);
  return out;
}

namespace {

bool subset(AtomSet a, AtomSet b) { return (a & ~b) == 0; }

AtomSet union_of_proper_subsets(const SetFamily& f, AtomSet s) {
  AtomSet u = 0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f.member(k) != s && subset(f.member(k), s)) u |= f.member(k);
  return u;
}

AtomSet union_of_subsets(const SetFamily& f, AtomSet s) {
  AtomSet u = 0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (subset(f.member(k), s)) u |= f.member(k);
  return u;
}

class PartitionCounter {
 public:
  PartitionCounter(const SetFamily& f, std::size_t cap) : f_(f), cap_(cap) {}

  std::size_t count(AtomSet target) {
    if (target == 0) return 1;
    auto it = memo_.find(target);
    if (it != memo_.end()) return it->second;
    const AtomSet low = target & (~target + 1);
    std::size_t total = 0;
    for (std::size_t k = 0; k < f_.size() && total < cap_; ++k) {
      const AtomSet m = f_.member(k);
      if ((m & low) && subset(m, target)) total = std::min(cap_, total + count(target & ~m));
    }
    memo_[target] = total;
    return total;
  }

 private:
  const SetFamily& f_;
  std::size_t cap_;
  std::unordered_map<AtomSet, std::size_t> memo_;
};

void enumerate(const SetFamily& f, AtomSet target, std::vector<std::size_t>& chosen,
               std::vector<std::vector<std::size_t>>& out) {
  if (target == 0) {
    auto sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  const AtomSet low = target & (~target + 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const AtomSet m = f.member(k);
    if (!(m & low) || !subset(m, target)) continue;
    chosen.push_back(k);
    enumerate(f, target & ~m, chosen, out);
    chosen.pop_back();
  }
}

SetFamily subfamily(const SetFamily& f, const std::vector<std::size_t>& J) {
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  for (std::size_t j : J) members.emplace_back(f.ids()[j], f.atoms_of(f.member(j)));
  return SetFamily(f.universe(), std::move(members), SetFamily::kHardMaxAtoms);
}

}  // namespace

bool is_independent(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (union_of_proper_subsets(f, f.member(i)) == f.member(i)) return false;
  return true;
}

std::size_t count_partitions(const SetFamily& f, AtomSet target, std::size_t cap) {
  return PartitionCounter(f, cap).count(target);
}

std::vector<std::vector<std::size_t>> all_partitions(const SetFamily& f, AtomSet target) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  enumerate(f, target, chosen, out);
  return out;
}

bool is_finitely_aligned(const SetFamily& f) {
  PartitionCounter counter(f, 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (counter.count(f.member(i) & f.member(j)) == 0) return false;
  return true;
}

std::optional<std::vector<std::size_t>> decompose_intersection(const SetFamily& f, std::size_t i, std::size_t j) {
  if (i >= f.size() || j >= f.size()) throw ValidationError("member index out of range");
  const AtomSet target = f.member(i) & f.member(j);
  const std::size_t n = count_partitions(f, target, 2);
  if (n == 0) return std::nullopt;
  if (n > 1)
    throw CertificationError("intersection of '" + f.ids()[i] + "' and '" + f.ids()[j] +
                             "' has more than one partition into members");
  return all_partitions(f, target).front();
}

bool is_compatible(const SetFamily& f, const PermAction& h) {
  const std::size_t n = f.size();
  for (const auto& g : h.generators) {
    if (g.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t x : g) {
      if (x >= n || hit[x]) return false;
      hit[x] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const AtomSet a = f.member(i) & f.member(j);
        const AtomSet b = f.member(g[i]) & f.member(g[j]);
        for (std::size_t k = 0; k < n; ++k)
          if (subset(f.member(k), a) != subset(f.member(g[k]), b)) return false;
      }
  }
  return true;
}

bool is_invariant(const std::vector<std::size_t>& J, const PermAction& h) {
  std::set<std::size_t> in(J.begin(), J.end());
  for (const auto& g : h.generators)
    for (std::size_t j : J)
      if (j >= g.size() || !in.count(g[j])) return false;
  return true;
}

std::vector<std::size_t> saturate(const SetFamily& f, const std::vector<std::size_t>& F, const PermAction& h) {
  if (!is_independent(f)) throw ValidationError("saturate: family is not independent");
  if (!is_finitely_aligned(f)) throw ValidationError("saturate: family is not finitely aligned");
  if (!is_compatible(f, h)) throw ValidationError("saturate: action does not respect the family");
  std::vector<std::size_t> base(F.begin(), F.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  for (std::size_t i : base)
    if (i >= f.size()) throw ValidationError("saturate: index out of range");
  if (!is_invariant(base, h)) throw ValidationError("saturate: index set is not invariant");
  if (base.size() > 20) throw SizeGuardError("saturate: more than 20 indices");

  PartitionCounter counter(f, 2);
  std::set<std::size_t> J;
  const std::size_t subsets = std::size_t(1) << base.size();
  for (std::size_t y = 1; y < subsets; ++y) {
    AtomSet meet = ~AtomSet(0);
    for (std::size_t b = 0; b < base.size(); ++b)
      if (y >> b & 1) meet &= f.member(base[b]);
    if (meet == 0) continue;
    const std::size_t n = counter.count(meet);
    if (n != 1)
      throw CertificationError("saturate: an intersection has " + std::string(n == 0 ? "no" : "several") +
                               " partitions into members");
    const auto parts = all_partitions(f, meet);
    J.insert(parts.front().begin(), parts.front().end());
  }
  return {J.begin(), J.end()};
}

bool is_finitely_aligned_within(const SetFamily& f, const std::vector<std::size_t>& J) {
  if (J.empty()) return true;
  return is_finitely_aligned(subfamily(f, J));
}

std::vector<AtomSet> primitive_parts(const SetFamily& f) {
  std::vector<AtomSet> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f.member(i) & ~union_of_proper_subsets(f, f.member(i)));
  return out;
}

bool condition_a(const SetFamily& f) {
  const auto prim = primitive_parts(f);
  AtomSet seen = 0;
  for (AtomSet p : prim) {
    if (p == 0 || (p & seen)) return false;
    seen |= p;
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    AtomSet u = 0;
    for (AtomSet p : prim)
      if (subset(p, f.member(i))) u |= p;
    if (u != f.member(i)) return false;
  }
  return true;
}

bool condition_b(const SetFamily& f) {
  if (!is_independent(f)) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const AtomSet meet = f.member(i) & f.member(j);
      if (union_of_subsets(f, meet) != meet) return false;
    }
  return true;
}

PropConditions verify_prop_equivalence(const SetFamily& f) {
  PropConditions c{condition_a(f), condition_b(f)};
  if (c.condition_a != c.condition_b)
    throw CertificationError(std::string("orthogonality and alignment conditions disagree: A = ") +
                             (c.condition_a ? "true" : "false") + ", B = " + (c.condition_b ? "true" : "false"));
  return c;
}

TransitionMatrix transition_matrix(const SetFamily& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (union_of_proper_subsets(f, f.member(i)) == f.member(i))
      throw ValidationError("member '" + f.ids()[i] + "' is the union of smaller members");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      const AtomSet meet = f.member(i) & f.member(j);
      if (union_of_subsets(f, meet) != meet)
        throw ValidationError("intersection of '" + f.ids()[i] + "' and '" + f.ids()[j] +
                              "' is not a union of members");
    }

  TransitionMatrix t;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) t.order.push_back(i);
  std::stable_sort(t.order.begin(), t.order.end(), [&f](std::size_t a, std::size_t b) {
    return std::popcount(f.member(a)) < std::popcount(f.member(b));
  });
  t.gamma = IntMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (subset(f.member(t.order[a]), f.member(t.order[b]))) t.gamma(a, b) = 1;

  for (std::size_t a = 0; a < n; ++a) {
    if (t.gamma(a, a) != 1) throw CertificationError("transition matrix has a diagonal entry != 1");
    for (std::size_t b = 0; b < a; ++b)
      if (t.gamma(a, b) != 0) throw CertificationError("transition matrix is not upper triangular");
  }
  if (determinant(t.gamma) != 1) throw CertificationError("transition matrix has determinant != 1");

  const auto prim = primitive_parts(f);
  for (std::size_t b = 0; b < n; ++b) {
    AtomSet u = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (t.gamma(a, b) == 0) continue;
      const AtomSet p = prim[t.order[a]];
      if (u & p) throw CertificationError("primitives under '" + f.ids()[t.order[b]] + "' overlap");
      u |= p;
    }
    if (u != f.member(t.order[b]))
      throw CertificationError("member '" + f.ids()[t.order[b]] + "' is not the union of its primitives");
  }
  return t;
}

}  // namespace mtk
