#include "fixtures.hpp"

#include "mtk/errors.hpp"
#include "mtk/ktheory.hpp"
#include "mtk/oracle.hpp"
#include "mtk/random.hpp"

#include <doctest.h>

using namespace mtk;

TEST_CASE("adjacency matrices") {
  CHECK(adjacency_matrix(fixtures::rose(3)) == IntMatrix{{3}});
  auto p = fixtures::free_presentation(fixtures::graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "a", "a"}}));
  CHECK(adjacency_matrix(p) == IntMatrix{{1, 1}, {1, 0}});
}

TEST_CASE("stabiliser matrices") {
  auto s = stabiliser_matrices(fixtures::bs(2, 3));
  CHECK(s.A0 == IntMatrix{{2}});
  CHECK(s.A1 == IntMatrix{{3}});
  s = stabiliser_matrices(fixtures::bs(-2, 3));
  CHECK(s.A0 == IntMatrix{{2}});
  CHECK(s.A1 == IntMatrix{{-3}});
  s = stabiliser_matrices(fixtures::z_loops({{2, 3}, {1, 1}}));
  CHECK(s.A0 == IntMatrix{{3}});
  CHECK(s.A1 == IntMatrix{{4}});
  CHECK_THROWS_AS(stabiliser_matrices(fixtures::rose(2)), ValidationError);
}

TEST_CASE("induced maps on edges") {
  CHECK(theta_induced(fixtures::bs(2, 3), "e") == std::pair<Integer, Integer>{2, 3});
  CHECK(theta_induced(fixtures::bs(-2, 3), "e") == std::pair<Integer, Integer>{2, -3});
  CHECK(theta_induced(fixtures::rose(1), "e1") == std::pair<Integer, Integer>{1, 0});
}

TEST_CASE("Cuntz roses") {
  for (int n = 2; n <= 6; ++n) {
    const auto k = k_theory(fixtures::rose(n));
    CHECK(k.K0 == AbelianGroup(0, {Integer(n - 1)}));
    CHECK(k.K1.is_trivial());
    REQUIRE(k.components.size() == 1);
    CHECK(k.components[0].kind == ComponentCase::Free);
  }
  CHECK(k_theory(fixtures::rose(2)).K0.is_trivial());
  CHECK(k_theory(fixtures::rose(3)).K0 == AbelianGroup::cyclic(2));
}

TEST_CASE("Baumslag-Solitar loops") {
  auto k = k_theory(fixtures::bs(2, 3));
  CHECK(k.K0.is_trivial());
  CHECK(k.K1 == AbelianGroup::cyclic(2));
  REQUIRE(k.components.size() == 1);
  CHECK(k.components[0].kind == ComponentCase::InfiniteCyclic);
  REQUIRE(k.components[0].matrices.size() == 2);
  CHECK(k.components[0].matrices[0] == IntMatrix{{-1}});
  CHECK(k.components[0].matrices[1] == IntMatrix{{-2}});

  // BS(1,1): 1 - A0 = 1 - A1 = 0, so both groups pick up Z twice
  k = k_theory(fixtures::bs(1, 1));
  CHECK(k.K0 == AbelianGroup::free(2));
  CHECK(k.K1 == AbelianGroup::free(2));

  // BS(1,-1): A1 = [-1], 1 - A1 = [2]
  k = k_theory(fixtures::bs(1, -1));
  CHECK(k.K0 == AbelianGroup::free(1));
  CHECK(k.K1 == AbelianGroup(1, {2}));
}

TEST_CASE("six-term report") {
  for (int n = 2; n <= 5; ++n) {
    const auto s = six_term_report(fixtures::rose(n));
    CHECK(s.id_minus_alpha0 == IntMatrix{{1 - n}});
    CHECK(s.k1_basis.empty());
    CHECK(s.K0 == k_theory(fixtures::rose(n)).K0);
  }
  const auto s = six_term_report(fixtures::bs(2, 3));
  CHECK(s.id_minus_alpha0 == IntMatrix{{-1}});
  CHECK(s.id_minus_alpha1 == IntMatrix{{-2}});
  CHECK(s.K1 == AbelianGroup::cyclic(2));

  QuotientPresentation two;
  two.graph = fixtures::graph({"u", "v"}, {{"a", "u", "u"}, {"b", "u", "u"}, {"c", "v", "v"}});
  two.vertex_class = {{"u", StabiliserClass::Trivial}, {"v", StabiliserClass::InfiniteCyclic}};
  two.omega["c"] = {2, 3};
  const auto t = six_term_report(two);
  CHECK(t.k0_basis == std::vector<std::string>{"u", "v"});
  CHECK(t.k1_basis == std::vector<std::string>{"v"});
  CHECK(t.id_minus_alpha0 == IntMatrix{{-1, 0}, {0, -1}});
  const auto k = k_theory(two);
  CHECK(k.components.size() == 2);
  CHECK(t.K0 == k.K0);
  CHECK(t.K1 == k.K1);
  CHECK(k.K1 == AbelianGroup::cyclic(2));
}

TEST_CASE("free group via the dual quotient") {
  const auto q = dual_quotient(fixtures::undirected_rose(2, StabiliserClass::Trivial));
  const auto k = k_theory(q);
  CHECK(k.K0 == AbelianGroup::free(2));
  CHECK(k.K1 == AbelianGroup::free(2));
}

TEST_CASE("unit indices give A0 equal to the transposed adjacency matrix") {
  for (std::uint64_t c = 0; c < 40; ++c) {
    Rng rng = make_rng(17, c);
    auto p = random_z_presentation(rng, 5, 4, 1);
    const auto s = stabiliser_matrices(p);
    CHECK(s.A0 == adjacency_matrix(p).transpose());
  }
}

TEST_CASE("free components agree with the minors oracle") {
  for (std::uint64_t c = 0; c < 40; ++c) {
    Rng rng = make_rng(19, c);
    const auto p = random_free_presentation(rng, 5, 4);
    const IntMatrix m = IntMatrix::identity(p.graph.vertex_count()) - adjacency_matrix(p).transpose();
    CHECK(k_theory(p).K0 == oracle::cokernel_by_minors(m));
  }
}
