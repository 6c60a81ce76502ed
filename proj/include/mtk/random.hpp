#pragma once

// Seeded generators for the property and oracle suites.

#include "mtk/presentation.hpp"
#include "mtk/setfamily.hpp"
#include "mtk/zmatrix.hpp"

#include <cstdint>
#include <random>

namespace mtk {

using Rng = std::mt19937_64;

/// Independent stream for (seed, case index), so single cases can be replayed.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

IntMatrix random_matrix(Rng& rng, std::size_t max_rows, std::size_t max_cols, long max_abs);

/// 1..max_vertices vertices; edges added only while the graph stays a multitree.
DiGraph random_multitree(Rng& rng, std::size_t max_vertices);

/// Every vertex has in-degree >= 1.
DiGraph random_no_source_digraph(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges);

QuotientPresentation random_free_presentation(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges);

/// All vertices InfiniteCyclic, omega entries uniform in [-max_omega, max_omega] \ {0}.
QuotientPresentation random_z_presentation(Rng& rng, std::size_t max_vertices, std::size_t max_extra_edges,
                                           long max_omega);

/// Finite tree as an undirected graph; edge k is "tk" with reverse "tk~".
UndirectedGraph random_tree(Rng& rng, std::size_t max_vertices);

/// Valid graph of groups on a small undirected graph (loops allowed).
GraphOfGroupsZ random_gog(Rng& rng, std::size_t max_vertices, long max_alpha);

/// The vertex cylinders of a multitree: universe = vertices, member "Z(v)".
SetFamily cylinder_family(const DiGraph& multitree);

struct FamilyCase {
  SetFamily family;
  PermAction action;
  std::vector<std::size_t> F;  // invariant index set
};

/// Cylinder family of a random multitree, either alone with no action or as
/// two disjoint copies exchanged by one generator; F is a random invariant
/// index set.
FamilyCase random_family_case(Rng& rng, std::size_t max_atoms);

/// Arbitrary family of distinct nonempty subsets.
SetFamily random_family(Rng& rng, std::size_t max_atoms, std::size_t max_members);

}  // namespace mtk
