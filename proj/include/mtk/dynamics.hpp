#pragma once

// Decision procedures for the boundary action: minimality (cofinality),
// aperiodicity, a sufficient condition for local contractivity, isotropy of
// finite-path lifts, and topological freeness.
//
// Every decider has a *_certificate variant returning the witness it used.
// Cycles are edge lists e1 ... en with s(e_i) = r(e_{i+1}) and s(en) = r(e1).

#include "mtk/presentation.hpp"

#include <string>
#include <vector>

namespace mtk {

struct TriState {
  enum class Value { Yes, No, Unknown };
  Value value = Value::Unknown;
  std::string reason;  // set when Unknown

  static TriState yes() { return {Value::Yes, {}}; }
  static TriState no() { return {Value::No, {}}; }
  static TriState unknown(std::string why) { return {Value::Unknown, std::move(why)}; }
  bool is_yes() const { return value == Value::Yes; }
  bool is_no() const { return value == Value::No; }
  std::string to_string() const;
};

struct CofinalityCertificate {
  bool cofinal = true;
  /// When not cofinal: a cycle and a vertex none of its vertices reaches.
  std::vector<std::string> cycle;
  std::string unreachable;
};

/// Throws ValidationError if g has a vertex of in-degree 0.
CofinalityCertificate cofinality_certificate(const DiGraph& g);
bool is_cofinal(const DiGraph& g);

struct AperiodicityCertificate {
  bool aperiodic = true;
  /// When not aperiodic: a cycle all of whose vertices have in-degree 1.
  std::vector<std::string> cycle;
};

AperiodicityCertificate aperiodicity_certificate(const DiGraph& g);
bool is_aperiodic(const DiGraph& g);

struct ContractivityCertificate {
  TriState verdict;
  /// Good cycles found: each has an entrance or an edge of index >= 2.
  std::vector<std::vector<std::string>> cycles;
  /// Vertices no good cycle reaches.
  std::vector<std::string> uncovered;
};

ContractivityCertificate local_contractivity_certificate(const QuotientPresentation& p);
/// Yes, or Unknown("sufficient condition fails"); never No.
TriState local_contractivity_sufficient(const QuotientPresentation& p);

/// lcm over k of the denominator of q(e1 ... e_{k-1}) / w_{e_k}; 1 for the
/// empty path.
Integer lift_stabiliser_generator(const QuotientPresentation& p, const Path& path);

struct DenominatorCertificate {
  bool unbounded = false;
  /// When unbounded: a coprime-base factor b (every prime of b works), a
  /// cycle whose ratio has negative b-adic valuation, and a path from the
  /// start vertex to the cycle.
  Integer factor;
  std::vector<std::string> prefix;
  std::vector<std::string> cycle;
};

DenominatorCertificate denominator_certificate(const QuotientPresentation& p, const std::string& v);
/// Some infinite path with range v has unbounded denominators along it.
bool has_unbounded_denominator_path(const QuotientPresentation& p, const std::string& v);

struct FreenessComponent {
  std::vector<std::string> vertices;
  bool cyclic = false;
  TriState verdict;
  /// Free components: witness of periodicity. Cyclic: first vertex failing.
  std::vector<std::string> periodic_cycle;
  std::string bounded_vertex;
};

struct FreenessCertificate {
  TriState verdict;
  std::vector<FreenessComponent> components;
};

FreenessCertificate topological_freeness_certificate(const QuotientPresentation& p);
TriState is_topologically_free(const QuotientPresentation& p);

}  // namespace mtk
