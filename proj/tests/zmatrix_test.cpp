#include "mtk/oracle.hpp"
#include "mtk/random.hpp"
#include "mtk/zmatrix.hpp"

#include <doctest.h>

using namespace mtk;

namespace {

void check_smith(const IntMatrix& m) {
  const auto d = smith_normal_form(m);
  CHECK(d.U * m * d.V == d.S);
  CHECK(abs(determinant(d.U)) == 1);
  CHECK(abs(determinant(d.V)) == 1);
  CHECK(d.S.is_diagonal());
}

}  // namespace

TEST_CASE("smith form of the zero matrix") {
  IntMatrix z(2, 2);
  const auto d = smith_normal_form(z);
  CHECK(d.S == z);
  CHECK(d.rank() == 0);
  check_smith(z);
}

TEST_CASE("smith form [[2,4],[6,8]] is diag(2,4)") {
  const IntMatrix m{{2, 4}, {6, 8}};
  const auto d = smith_normal_form(m);
  CHECK(d.S == IntMatrix{{2, 0}, {0, 4}});
  CHECK(d.invariant_factors() == std::vector<Integer>{2, 4});
  check_smith(m);
}

TEST_CASE("smith form of the identity") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto d = smith_normal_form(IntMatrix::identity(n));
    CHECK(d.S == IntMatrix::identity(n));
  }
}

TEST_CASE("smith form of non-square matrices") {
  check_smith(IntMatrix{{1, 2, 3}, {4, 5, 6}});
  check_smith(IntMatrix{{0, 6}, {4, 0}, {0, 10}});
  const auto d = smith_normal_form(IntMatrix{{0, 6}, {4, 0}, {0, 10}});
  CHECK(d.invariant_factors() == std::vector<Integer>{2, 4});
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel(IntMatrix{{-1}}).is_trivial());
  CHECK(cokernel(IntMatrix{{0, 0, -1, -1}, {0, 0, -1, -1}, {-1, -1, 0, 0}, {-1, -1, 0, 0}}) == AbelianGroup::free(2));
  CHECK(cokernel(IntMatrix{{-2}}) == AbelianGroup::cyclic(2));
  CHECK(cokernel(IntMatrix(3, 0)) == AbelianGroup::free(3));
  CHECK(cokernel(IntMatrix{{2, 0}, {0, 3}}) == AbelianGroup::cyclic(6));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(IntMatrix::identity(3)).is_trivial());
  CHECK(kernel(IntMatrix(3, 3)) == AbelianGroup::free(3));
  CHECK(kernel(IntMatrix{{1, 1}, {1, 1}}) == AbelianGroup::free(1));
}

TEST_CASE("direct sums are held in invariant factor form") {
  CHECK(direct_sum(AbelianGroup::cyclic(2), AbelianGroup::cyclic(3)) == AbelianGroup::cyclic(6));
  const auto g = direct_sum(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2));
  CHECK(g.torsion() == std::vector<Integer>{2, 2});
  CHECK(direct_sum(AbelianGroup::free(1), AbelianGroup(2, {4})) == AbelianGroup(3, {4}));
  CHECK(AbelianGroup(0, {1, 1}).is_trivial());
  CHECK(AbelianGroup(0, {0}) == AbelianGroup::free(1));
  CHECK(AbelianGroup(0, {-4, 6}) == AbelianGroup(0, {2, 12}));
}

TEST_CASE("abelian group text") {
  CHECK(AbelianGroup().to_string() == "0");
  CHECK(AbelianGroup::free(1).to_string() == "Z");
  CHECK(AbelianGroup(2, {2}).to_string() == "Z^2 + Z/2");
}

TEST_CASE("coprime base") {
  CHECK(coprime_base({12, 18}) == std::vector<Integer>{2, 3});
  CHECK(coprime_base({4, 6, 1}) == std::vector<Integer>{2, 3});
  CHECK(coprime_base({10}) == std::vector<Integer>{10});
  const auto b = coprime_base({30, 42, 35});
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) CHECK(gcd(b[i], b[j]) == 1);
}

TEST_CASE("cokernel agrees with determinantal divisors on random matrices") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    Rng rng = make_rng(11, k);
    const IntMatrix m = random_matrix(rng, 5, 5, 6);
    CAPTURE(m.to_string());
    CHECK(cokernel(m) == oracle::cokernel_by_minors(m));
    CHECK(rank_by_elimination(m) == oracle::rank_over_q(m));
    if (m.rows() == m.cols()) CHECK(determinant(m) == oracle::cofactor_determinant(m));
    check_smith(m);
  }
}

TEST_CASE("enumeration oracle rejects a wrong answer") {
  const IntMatrix m{{2, 0}, {0, 2}};
  CHECK_FALSE(oracle::check_cokernel_by_enumeration(m, AbelianGroup(0, {2, 2})).has_value());
  CHECK(oracle::check_cokernel_by_enumeration(m, AbelianGroup::cyclic(4)).has_value());
  CHECK(oracle::check_cokernel_by_enumeration(m, AbelianGroup(1, {2})).has_value());
}
