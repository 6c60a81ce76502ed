#pragma once

// K-theory of boundary crossed products from quotient data.
//
// Orientation: matrices act on column vectors indexed by the sorted vertex
// ids. For the stabiliser matrices, column v holds the coefficients of A_i(v).

#include "mtk/presentation.hpp"
#include "mtk/zmatrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mtk {

/// A(v, w) = number of edges with range v and source w.
IntMatrix adjacency_matrix(const QuotientPresentation& p);

struct StabiliserMatrices {
  IntMatrix A0;
  IntMatrix A1;
};

/// A0(v) = sum over edges e into v of |w_e| s(e);
/// A1(v) = sum over edges e into v of sgn(w_e) w_ebar s(e).
/// Throws ValidationError if any vertex has Trivial class.
StabiliserMatrices stabiliser_matrices(const QuotientPresentation& p);

/// Multipliers of the maps induced on K0 and K1 of the vertex groups by the
/// corner inclusion of an edge: (|w_e|, sgn(w_e) w_ebar), or (1, 0) when
/// the component is Trivial.
std::pair<Integer, Integer> theta_induced(const QuotientPresentation& p, const std::string& edge);

enum class ComponentCase { Free, InfiniteCyclic };

struct ComponentK {
  ComponentCase kind = ComponentCase::Free;
  std::vector<std::string> vertices;
  /// Free: {1 - A^T}. InfiniteCyclic: {1 - A0, 1 - A1}.
  std::vector<IntMatrix> matrices;
  AbelianGroup K0;
  AbelianGroup K1;
};

struct KTheoryReport {
  std::vector<ComponentK> components;
  AbelianGroup K0;
  AbelianGroup K1;
};

/// Per weakly connected component, then direct sums. Validates first.
KTheoryReport k_theory(const QuotientPresentation& p);

struct SixTermReport {
  std::vector<std::string> k0_basis;  // every vertex
  std::vector<std::string> k1_basis;  // InfiniteCyclic vertices only
  IntMatrix id_minus_alpha0;
  IntMatrix id_minus_alpha1;
  AbelianGroup coker0, ker0, coker1, ker1;
  /// coker(id - a0) + ker(id - a1) and coker(id - a1) + ker(id - a0).
  AbelianGroup K0;
  AbelianGroup K1;
};

/// Assembles alpha_0 and alpha_1 edge by edge from theta_induced.
SixTermReport six_term_report(const QuotientPresentation& p);

std::string to_string(ComponentCase c);

}  // namespace mtk
