#pragma once

// Exact integer linear algebra: dense matrices over Z, Smith normal form,
// and kernels/cokernels reported as finitely generated abelian groups.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mtk {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
/// Matrices act on column vectors: an r x c matrix maps Z^c -> Z^r.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square matrices only;
/// the 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

/// Rank by fraction-free Gaussian elimination; independent of the Smith path.
std::size_t rank_by_elimination(const IntMatrix& m);

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Nonzero diagonal entries of S, in order.
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const { return invariant_factors().size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk with
/// 2 <= t1 | t2 | ... | tk. Always held in this canonical form, so structural
/// equality is group isomorphism.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of cyclic orders; entries 0 add to the rank, entries 1
  /// vanish, the rest are regrouped into invariant factors.
  AbelianGroup(std::size_t rank, std::vector<Integer> cyclic_orders);

  static AbelianGroup free(std::size_t rank) { return AbelianGroup(rank, {}); }
  static AbelianGroup cyclic(const Integer& order) { return AbelianGroup(0, {order}); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  bool operator==(const AbelianGroup& rhs) const = default;

  /// "0", "Z^2 + Z/2 + Z/4", ...
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Z^rows / image(M).
AbelianGroup cokernel(const IntMatrix& m);
/// ker(M) in Z^cols, always free.
AbelianGroup kernel(const IntMatrix& m);

/// Rewrites cyclic orders (each >= 2) as invariant factors t1 | t2 | ...
/// Regroups over a pairwise coprime base, so no integer factorisation is needed.
std::vector<Integer> invariant_factors_of(std::vector<Integer> cyclic_orders);

/// Sorted, pairwise coprime integers > 1 such that every input > 1 is a
/// product of powers of them.
std::vector<Integer> coprime_base(const std::vector<Integer>& values);

}  // namespace mtk
