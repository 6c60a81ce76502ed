#include "mtk/zmatrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mtk {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank_by_elimination(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(rank, pivot);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Integer f = a(i, col);
      Integer p = a(rank, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) * p - a(rank, j) * f;
      // keep entries small
      Integer g = 0;
      for (std::size_t j = col; j < a.cols(); ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(i, j).get_mpz_t());
      if (g > 1)
        for (std::size_t j = col; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), g.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

namespace {

// Smallest-magnitude nonzero entry of the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Integer v = abs(s(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithDecomposition d{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& s = d.S;
  const std::size_t diag = std::min(s.rows(), s.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    bool block_is_zero = false;
    for (;;) {
      auto pivot = smallest_pivot(s, t);
      if (!pivot) {
        block_is_zero = true;
        break;
      }
      s.swap_rows(t, pivot->first);
      d.U.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      d.V.swap_cols(t, pivot->second);

      bool remainder_left = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        d.U.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) remainder_left = true;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        d.V.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) remainder_left = true;
      }
      if (remainder_left) continue;

      // Row and column t are clear; enforce d_t | every trailing entry.
      bool fixed = false;
      for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            d.U.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (block_is_zero) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      d.U.negate_row(t);
    }
  }
  return d;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t diag = std::min(S.rows(), S.cols());
  for (std::size_t i = 0; i < diag; ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

std::vector<Integer> coprime_base(const std::vector<Integer>& values) {
  std::vector<Integer> base;
  for (const Integer& v : values)
    if (v > 1) base.push_back(v);
  for (;;) {
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    bool split = false;
    for (std::size_t i = 0; i < base.size() && !split; ++i)
      for (std::size_t j = i + 1; j < base.size() && !split; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g;
        Integer b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (Integer* x : {&g, &a, &b})
          if (*x > 1) base.push_back(*x);
        split = true;
      }
    if (!split) return base;
  }
}

std::vector<Integer> invariant_factors_of(std::vector<Integer> cyclic_orders) {
  std::vector<Integer> orders;
  for (Integer& v : cyclic_orders) {
    Integer a = abs(v);
    if (a == 0) throw std::invalid_argument("invariant_factors_of: infinite cyclic summand");
    if (a > 1) orders.push_back(a);
  }
  if (orders.empty()) return {};

  const auto base = coprime_base(orders);
  // For each base element, the exponents it takes in the inputs, largest first.
  std::vector<Integer> factors(orders.size(), Integer(1));
  for (const Integer& b : base) {
    std::vector<unsigned> exps;
    for (Integer x : orders) {
      unsigned e = 0;
      while (mpz_divisible_p(x.get_mpz_t(), b.get_mpz_t())) {
        x /= b;
        ++e;
      }
      exps.push_back(e);
    }
    std::sort(exps.rbegin(), exps.rend());
    for (std::size_t k = 0; k < exps.size(); ++k) {
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), exps[k]);
      factors[k] *= p;
    }
  }
  std::vector<Integer> out;
  for (const Integer& f : factors)
    if (f > 1) out.push_back(f);
  std::reverse(out.begin(), out.end());
  return out;
}

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> cyclic_orders) : rank_(rank) {
  std::vector<Integer> finite;
  for (Integer& v : cyclic_orders) {
    if (v == 0)
      ++rank_;
    else
      finite.push_back(abs(v));
  }
  torsion_ = invariant_factors_of(std::move(finite));
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (rank_ == 1) append("Z");
  if (rank_ > 1) append("Z^" + std::to_string(rank_));
  for (const Integer& t : torsion_) append("Z/" + t.get_str());
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> orders = a.torsion();
  orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
  return AbelianGroup(a.rank() + b.rank(), std::move(orders));
}

AbelianGroup cokernel(const IntMatrix& m) {
  const auto factors = smith_normal_form(m).invariant_factors();
  return AbelianGroup(m.rows() - factors.size(), factors);
}

AbelianGroup kernel(const IntMatrix& m) {
  return AbelianGroup::free(m.cols() - smith_normal_form(m).rank());
}

}  // namespace mtk
