#pragma once

// Finite truncations of the covering tree over a base vertex.
//
// A node is a quotient path e1 ... ek with r(e1) = v together with digits
// c_i in [0, |w_{e_i}|). The generator of the base vertex group acts by the
// carry recursion
//   c_i' = (m_{i-1} + c_i) mod |w_i|,
//   t_i  = (m_{i-1} + c_i - c_i') / w_i,
//   m_i  = t_i * w_ibar,            m_0 = m.

#include "mtk/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mtk {

struct LiftNode {
  std::vector<std::size_t> path;  // edge indices into the quotient graph
  std::vector<long> digits;
  std::size_t parent = 0;         // ignored for the root
  std::vector<std::size_t> children;
};

class LiftTree {
 public:
  static constexpr std::size_t kDefaultMaxNodes = 1000000;

  /// Throws SizeGuardError when more than max_nodes nodes would be built.
  LiftTree(QuotientPresentation p, const std::string& base, std::size_t depth,
           std::size_t max_nodes = kDefaultMaxNodes);
  /// Wraps an arbitrary node list without checking it; node 0 is the root.
  /// Used to exercise verify_lift_invariants on corrupted data.
  LiftTree(QuotientPresentation p, const std::string& base, std::size_t depth, std::vector<LiftNode> nodes);

  const QuotientPresentation& presentation() const { return p_; }
  std::size_t base() const { return base_; }
  std::size_t depth() const { return depth_; }
  const std::vector<LiftNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  /// Node index for a (path, digits) pair; throws ValidationError if absent.
  std::size_t find(const std::vector<std::size_t>& path, const std::vector<long>& digits) const;
  /// Quotient vertex the node lies over.
  std::size_t vertex_of(std::size_t node) const;
  std::string label(std::size_t node) const;

 private:
  void index_nodes();

  QuotientPresentation p_;
  std::size_t base_ = 0;
  std::size_t depth_ = 0;
  std::vector<LiftNode> nodes_;
  std::map<std::pair<std::vector<std::size_t>, std::vector<long>>, std::size_t> lookup_;
};

struct LiftAction {
  std::size_t node;
  Integer carry;  // m_k after the last level
};

/// Throws ValidationError for foreign nodes, or for m != 0 over a Trivial
/// base vertex.
LiftAction act_on_lift(const LiftTree& t, const Integer& m, std::size_t node);

/// Least M > 0 fixing the node, by the level-by-level recursion. Throws
/// CertificationError if M does not fix the node or M / p does for a prime p.
Integer brute_stabiliser(const LiftTree& t, std::size_t node);

struct LiftReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

LiftReport verify_lift_invariants(const LiftTree& t);

std::string to_dot(const LiftTree& t);

}  // namespace mtk
