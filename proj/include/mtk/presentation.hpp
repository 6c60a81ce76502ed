#pragma once

// Quotient data of a group action on a multitree: the quotient graph, the
// stabiliser class of each vertex, and the signed indices (w_e, w_ebar)
// describing how each edge group Z embeds into the groups at its range and
// source.

#include "mtk/digraph.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace mtk {

enum class StabiliserClass { Trivial, InfiniteCyclic };

std::string to_string(StabiliserClass c);

/// The generator of G_e maps to range * (generator of G_r(e)) and to
/// source * (generator of G_s(e)).
struct Omega {
  long range = 1;
  long source = 1;
};

struct QuotientPresentation {
  DiGraph graph;
  std::map<std::string, StabiliserClass> vertex_class;
  /// Defined exactly on edges of InfiniteCyclic components.
  std::map<std::string, Omega> omega;

  StabiliserClass class_of(std::size_t vertex) const;
  /// Omega of an edge; (1, 1) on Trivial components.
  Omega omega_of(std::size_t edge) const;
};

struct Violation {
  std::string subject;
  std::string rule;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const QuotientPresentation& p);
/// Throws ValidationError listing the violations.
void require_valid(const QuotientPresentation& p);

/// Nonzero rational kept in lowest terms with positive denominator.
class SignedRatio {
 public:
  SignedRatio() : value_(1) {}
  SignedRatio(const Integer& num, const Integer& den);
  explicit SignedRatio(const mpq_class& q);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  SignedRatio operator*(const SignedRatio& rhs) const { return SignedRatio(value_ * rhs.value_); }
  SignedRatio operator/(const SignedRatio& rhs) const { return SignedRatio(value_ / rhs.value_); }
  bool operator==(const SignedRatio& rhs) const { return value_ == rhs.value_; }

  std::string to_string() const;

 private:
  mpq_class value_;
};

/// Product of w_ebar / w_e along the path; 1 for the empty path.
SignedRatio signed_index_ratio(const QuotientPresentation& p, const Path& path);
Integer denominator(const SignedRatio& r);

/// Graph of groups on an undirected graph, each group trivial or Z.
/// alpha[e] is the index of the edge group in the group at r(e), signed.
struct GraphOfGroupsZ {
  UndirectedGraph graph;
  std::map<std::string, StabiliserClass> vertex_class;
  std::map<std::string, long> alpha;

  StabiliserClass class_of(std::size_t vertex) const;
  long alpha_of(std::size_t edge) const;
};

/// Besides the class rules, requires every vertex of the covering tree to
/// have degree at least 2, i.e. sum of |alpha_f| over edges f into v >= 2.
ValidationReport validate(const GraphOfGroupsZ& gog);

/// Quotient presentation of the induced action on the dual multitree.
/// Dual edges are named "e|f", or "e|f#k" (k = 1, 2, ...) when a pair of
/// oriented edges contributes more than one orbit.
QuotientPresentation dual_quotient(const GraphOfGroupsZ& gog);

/// Sub-presentation on one set of vertices (assumed closed under edges).
QuotientPresentation restrict_to(const QuotientPresentation& p, const std::vector<std::size_t>& vertices);

}  // namespace mtk
