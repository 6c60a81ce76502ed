#pragma once

// Brute-force oracles and the seeded cross-check suites built on them.
//
// The oracles deliberately avoid the library's own algorithms: they work by
// enumerating paths, cycles, residues or minors directly.

#include "mtk/dynamics.hpp"
#include "mtk/presentation.hpp"
#include "mtk/zmatrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtk::oracle {

/// Rank over Q by rational Gaussian elimination.
std::size_t rank_over_q(const IntMatrix& m);

/// Determinant by cofactor expansion (small matrices only).
Integer cofactor_determinant(const IntMatrix& m);

/// Cokernel from determinantal divisors: d_k = D_k / D_{k-1}, where D_k is the
/// gcd of all k x k minors. Practical up to about 6 x 6.
AbelianGroup cokernel_by_minors(const IntMatrix& m);

/// Checks `predicted` against Z^rows / image(m) by enumerating residues
/// modulo D_r (the gcd of the maximal nonzero minors) and counting, for each
/// k | D_r, the elements killed by k. Returns an explanation on mismatch.
std::optional<std::string> check_cokernel_by_enumeration(const IntMatrix& m, const AbelianGroup& predicted);

/// reach[w][v]: some path goes from w to v. paths[w][v] counts them, capped
/// at 2. Found by enumerating paths of length <= vertex count.
struct PathCensus {
  std::vector<std::vector<int>> paths;
  bool has_cycle = false;
};
PathCensus census_paths(const DiGraph& g);

bool is_multitree(const DiGraph& g);
std::vector<std::string> min_upper_bounds(const DiGraph& g, const std::string& v, const std::string& w);

/// Simple cycles as edge lists in path order.
std::vector<std::vector<std::size_t>> simple_cycles(const DiGraph& g);

/// Every simple cycle reaches every vertex within 2 |V| steps.
bool is_cofinal(const DiGraph& g);
/// Every simple cycle has a vertex that is the range of two or more edges.
bool is_aperiodic(const DiGraph& g);

/// Searches eventually periodic paths beta eta^inf with range v and
/// |beta| + |eta| <= max_len, evaluating the denominators of
/// q(lambda_{k-1}) / w_{e_k} for k <= horizon. Reports unbounded when some
/// residue class modulo |eta| strictly grows inside the horizon.
bool has_unbounded_denominator_path(const QuotientPresentation& p, const std::string& v, std::size_t max_len = 8,
                                    std::size_t horizon = 64);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string repro;
  double seconds = 0;
  bool ok() const { return failures == 0; }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::size_t default_cases;
};

const std::vector<SuiteInfo>& suites();

/// Runs `cases` seeded cases of the named suite, or only case `only` when
/// given. Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases,
                      std::optional<std::size_t> only = std::nullopt);

}  // namespace mtk::oracle
