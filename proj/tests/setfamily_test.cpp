#include "mtk/errors.hpp"
#include "mtk/random.hpp"
#include "mtk/setfamily.hpp"

#include <doctest.h>

using namespace mtk;

namespace {

using Members = std::vector<std::pair<std::string, std::vector<std::string>>>;

SetFamily family(const Members& members, std::vector<std::string> universe = {"1", "2", "3", "4"}) {
  return SetFamily(std::move(universe), members);
}

// {1,2}, {2,3}, {2}
SetFamily crossing() { return family({{"A", {"1", "2"}}, {"B", {"2", "3"}}, {"C", {"2"}}}); }

std::vector<std::string> ids(const SetFamily& f, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(f.ids()[i]);
  return out;
}

}  // namespace

TEST_CASE("family construction") {
  CHECK_THROWS_AS(family({{"A", {}}}), ValidationError);
  CHECK_THROWS_AS(family({{"A", {"9"}}}), ValidationError);
  CHECK_THROWS_AS(family({{"A", {"1"}}, {"B", {"1"}}}), ValidationError);
  CHECK_THROWS_AS(family({{"A", {"1"}}, {"A", {"2"}}}), ValidationError);
  std::vector<std::string> big;
  for (int i = 0; i < 17; ++i) big.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(SetFamily(big, {{"A", {"x0"}}}), SizeGuardError);
  CHECK_NOTHROW(SetFamily(big, {{"A", {"x0"}}}, 17));
  for (int i = 17; i < 65; ++i) big.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(SetFamily(big, {{"A", {"x0"}}}, 100), SizeGuardError);
  const auto f = crossing();
  CHECK(f.ids() == std::vector<std::string>{"A", "B", "C"});
  CHECK(f.atoms_of(f.member(f.index_of("B"))) == std::vector<std::string>{"2", "3"});
}

TEST_CASE("independence") {
  CHECK(is_independent(crossing()));
  CHECK_FALSE(is_independent(family({{"A", {"1"}}, {"B", {"2"}}, {"C", {"1", "2"}}})));
  CHECK(is_independent(family({{"A", {"1"}}})));
}

TEST_CASE("finite alignment") {
  CHECK(is_finitely_aligned(crossing()));
  CHECK_FALSE(is_finitely_aligned(family({{"A", {"1", "2"}}, {"B", {"2", "3"}}})));
  CHECK(is_finitely_aligned(family({{"A", {"1"}}, {"B", {"2"}}, {"C", {"3", "4"}}})));
}

TEST_CASE("intersection decompositions") {
  const auto f = crossing();
  const auto d = decompose_intersection(f, f.index_of("A"), f.index_of("B"));
  REQUIRE(d.has_value());
  CHECK(ids(f, *d) == std::vector<std::string>{"C"});
  const auto g = family({{"A", {"1"}}, {"B", {"2"}}});
  CHECK(decompose_intersection(g, 0, 1).value().empty());
  CHECK(decompose_intersection(f, 1, 1).value() == std::vector<std::size_t>{1});
  CHECK_FALSE(decompose_intersection(family({{"A", {"1", "2"}}, {"B", {"2", "3"}}}), 0, 1).has_value());
  const auto amb = family({{"A", {"1", "2", "3"}}, {"B", {"1", "2", "4"}}, {"C", {"1"}}, {"D", {"2"}}, {"E", {"1", "2"}}});
  CHECK_THROWS_AS(decompose_intersection(amb, 0, 1), CertificationError);
  CHECK(count_partitions(amb, amb.member(4)) == 2);
  CHECK(all_partitions(amb, amb.member(4)).size() == 2);
  CHECK(count_partitions(amb, 0) == 1);
}

TEST_CASE("saturation") {
  const auto f = crossing();
  const PermAction trivial;
  CHECK(ids(f, saturate(f, {0, 1}, trivial)) == std::vector<std::string>{"A", "B", "C"});
  CHECK(ids(f, saturate(f, {0, 2}, trivial)) == std::vector<std::string>{"A", "C"});
  CHECK(saturate(f, {}, trivial).empty());

  // two copies exchanged by the action
  const auto g = family({{"a", {"1", "2"}}, {"a2", {"2"}}, {"b", {"3", "4"}}, {"b2", {"4"}}});
  PermAction swap{{{2, 3, 0, 1}}};
  CHECK(is_compatible(g, swap));
  const auto J = saturate(g, {0, 2}, swap);
  CHECK(ids(g, J) == std::vector<std::string>{"a", "b"});
  CHECK(is_invariant(J, swap));
  CHECK_THROWS_AS(saturate(g, {0}, swap), ValidationError);
  CHECK_THROWS_AS(saturate(family({{"A", {"1", "2"}}, {"B", {"2", "3"}}}), {0, 1}, trivial), ValidationError);

  PermAction bad{{{1, 0, 2, 3}}};
  CHECK_FALSE(is_compatible(g, bad));
  CHECK_THROWS_AS(saturate(g, {0, 1}, bad), ValidationError);
  PermAction not_perm{{{0, 0, 2, 3}}};
  CHECK_FALSE(is_compatible(g, not_perm));
}

TEST_CASE("primitive parts") {
  const auto f = family({{"A", {"1", "2"}}, {"B", {"2"}}});
  const auto p = primitive_parts(f);
  CHECK(f.atoms_of(p[0]) == std::vector<std::string>{"1"});
  CHECK(f.atoms_of(p[1]) == std::vector<std::string>{"2"});
  const auto anti = family({{"A", {"1", "2"}}, {"B", {"3"}}});
  CHECK(primitive_parts(anti)[0] == anti.member(0));
  const auto chain = family({{"A", {"1"}}, {"B", {"1", "2"}}, {"C", {"1", "2", "3"}}});
  const auto q = primitive_parts(chain);
  CHECK(chain.atoms_of(q[0]) == std::vector<std::string>{"1"});
  CHECK(chain.atoms_of(q[1]) == std::vector<std::string>{"2"});
  CHECK(chain.atoms_of(q[2]) == std::vector<std::string>{"3"});
}

TEST_CASE("transition matrices") {
  const auto anti = family({{"A", {"1"}}, {"B", {"2"}}, {"C", {"3"}}});
  CHECK(transition_matrix(anti).gamma == IntMatrix::identity(3));
  const auto two = family({{"A", {"1", "2"}}, {"B", {"2"}}});
  const auto t = transition_matrix(two);
  CHECK(ids(two, t.order) == std::vector<std::string>{"B", "A"});
  CHECK(t.gamma == IntMatrix{{1, 1}, {0, 1}});
  const auto chain = family({{"A", {"1"}}, {"B", {"1", "2"}}, {"C", {"1", "2", "3"}}});
  CHECK(transition_matrix(chain).gamma == IntMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK_THROWS_AS(transition_matrix(family({{"A", {"1"}}, {"B", {"2"}}, {"C", {"1", "2"}}})), ValidationError);
}

TEST_CASE("equivalent conditions") {
  auto c = verify_prop_equivalence(crossing());
  CHECK(c.condition_a);
  CHECK(c.condition_b);
  c = verify_prop_equivalence(family({{"A", {"1"}}, {"B", {"2"}}, {"C", {"1", "2"}}}));
  CHECK_FALSE(c.condition_a);
  CHECK_FALSE(c.condition_b);
  c = verify_prop_equivalence(family({{"A", {"1", "3"}}}));
  CHECK(c.condition_a);
  CHECK(c.condition_b);
}

TEST_CASE("conditions agree on random families") {
  for (std::uint64_t k = 0; k < 300; ++k) {
    Rng rng = make_rng(31, k);
    const SetFamily f = random_family(rng, 6, 7);
    CHECK_NOTHROW(verify_prop_equivalence(f));
  }
}

TEST_CASE("cylinder families of multitrees") {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng = make_rng(37, k);
    const auto c = random_family_case(rng, 10);
    CHECK(condition_b(c.family));
    CHECK(is_compatible(c.family, c.action));
    const auto J = saturate(c.family, c.F, c.action);
    CHECK(std::includes(J.begin(), J.end(), c.F.begin(), c.F.end()));
    CHECK(is_invariant(J, c.action));
    CHECK(is_finitely_aligned_within(c.family, J));
    CHECK(determinant(transition_matrix(c.family).gamma) == 1);
  }
}
