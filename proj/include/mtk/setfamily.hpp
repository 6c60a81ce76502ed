#pragma once

// Finite set families: independence, finite alignment, unique disjoint
// decompositions of intersections, invariant saturation, primitive parts and
// the containment (transition) matrix.
//
// Atoms are stored as bits of a 64-bit mask; members are indexed by their
// position in sorted-id order.

#include "mtk/zmatrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mtk {

using AtomSet = std::uint64_t;

class SetFamily {
 public:
  static constexpr std::size_t kDefaultMaxAtoms = 16;
  static constexpr std::size_t kHardMaxAtoms = 64;

  SetFamily() = default;
  /// Throws ValidationError for empty or repeated members, unknown atoms,
  /// duplicate ids, or a universe larger than max_atoms (SizeGuardError).
  SetFamily(std::vector<std::string> universe,
            std::vector<std::pair<std::string, std::vector<std::string>>> members,
            std::size_t max_atoms = kDefaultMaxAtoms);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t size() const { return masks_.size(); }
  AtomSet member(std::size_t i) const { return masks_[i]; }
  std::size_t index_of(const std::string& id) const;
  std::vector<std::string> atoms_of(AtomSet s) const;

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> ids_;
  std::vector<AtomSet> masks_;
};

/// Generators acting on member indices: generators[g][i] is the image of i.
struct PermAction {
  std::vector<std::vector<std::size_t>> generators;
};

bool is_independent(const SetFamily& f);
bool is_finitely_aligned(const SetFamily& f);

/// Number of ways to write `target` as a disjoint union of members, counted
/// up to `cap`. The empty set has exactly one (empty) partition.
std::size_t count_partitions(const SetFamily& f, AtomSet target, std::size_t cap = 2);
/// All partitions of `target` into members (member indices, ascending).
std::vector<std::vector<std::size_t>> all_partitions(const SetFamily& f, AtomSet target);

/// The partition of member(i) ∩ member(j) into members, or nullopt when none
/// exists. Throws CertificationError when the partition is not unique.
std::optional<std::vector<std::size_t>> decompose_intersection(const SetFamily& f, std::size_t i, std::size_t j);

/// True when h permutes the indices and preserves the relation
/// member(k) ⊆ member(i) ∩ member(j) for all i, j, k.
bool is_compatible(const SetFamily& f, const PermAction& h);

/// J = union over nonempty Y ⊆ F of the decomposition of the intersection of
/// the members in Y. Throws ValidationError if f is not independent and
/// finitely aligned, h is incompatible, or F is not h-invariant.
std::vector<std::size_t> saturate(const SetFamily& f, const std::vector<std::size_t>& F, const PermAction& h);

/// Finite alignment of the subfamily indexed by J, partitions drawn from J.
bool is_finitely_aligned_within(const SetFamily& f, const std::vector<std::size_t>& J);
bool is_invariant(const std::vector<std::size_t>& J, const PermAction& h);

/// member(i) minus the union of all members strictly contained in it.
std::vector<AtomSet> primitive_parts(const SetFamily& f);

struct TransitionMatrix {
  /// Row/column order: a linear extension of ⊆ (by size, then id).
  std::vector<std::size_t> order;
  /// gamma(a, b) = 1 iff member(order[a]) ⊆ member(order[b]).
  IntMatrix gamma;
};

/// Requires condition B below; throws ValidationError naming the failing
/// member or pair otherwise, and CertificationError if a check fails.
TransitionMatrix transition_matrix(const SetFamily& f);

struct PropConditions {
  /// Primitives nonempty, pairwise disjoint, every member a union of them.
  bool condition_a = false;
  /// Independent, and each pairwise intersection is the union of the members
  /// it contains.
  bool condition_b = false;
};

bool condition_a(const SetFamily& f);
bool condition_b(const SetFamily& f);
/// Throws CertificationError if the two conditions disagree.
PropConditions verify_prop_equivalence(const SetFamily& f);

}  // namespace mtk
