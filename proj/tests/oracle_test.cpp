#include "fixtures.hpp"

#include "mtk/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace mtk;

TEST_CASE("cycle enumeration") {
  const auto g = fixtures::graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "a", "a"}});
  CHECK(oracle::simple_cycles(g).size() == 2);
  CHECK(oracle::simple_cycles(fixtures::rose(3).graph).size() == 3);
  CHECK(oracle::simple_cycles(fixtures::graph({"a", "b"}, {{"e", "a", "b"}})).empty());
}

TEST_CASE("path census") {
  const auto d = fixtures::graph({"a", "b", "c", "d"}, {{"ab", "a", "b"}, {"ac", "a", "c"}, {"bd", "b", "d"}, {"cd", "c", "d"}});
  const auto c = oracle::census_paths(d);
  CHECK_FALSE(c.has_cycle);
  CHECK(c.paths[d.vertex_index("d")][d.vertex_index("a")] == 2);
  CHECK(oracle::census_paths(fixtures::rose(1).graph).has_cycle);
}

TEST_CASE("periodic enumeration on loops") {
  CHECK(oracle::has_unbounded_denominator_path(fixtures::bs(2, 3), "v"));
  CHECK_FALSE(oracle::has_unbounded_denominator_path(fixtures::bs(1, 2), "v"));
  CHECK_FALSE(oracle::has_unbounded_denominator_path(fixtures::bs(2, 4), "v"));
  CHECK(oracle::has_unbounded_denominator_path(fixtures::bs(4, 2), "v"));
  CHECK_FALSE(oracle::has_unbounded_denominator_path(fixtures::rose(2), "v"));
}

TEST_CASE("suite registry") {
  std::set<std::string> names;
  for (const auto& s : oracle::suites()) names.insert(s.name);
  for (const char* n : {"smith", "cylinders", "dual-tree", "dual-quotient", "ratio", "ktheory", "isotropy",
                        "lift-action", "freeness", "graph-deciders", "setfamily"})
    CHECK(names.count(n) == 1);
  CHECK_THROWS_AS(oracle::run_suite("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("suites are reproducible case by case") {
  const auto all = oracle::run_suite("ktheory", 7, 10);
  CHECK(all.ok());
  CHECK(all.cases == 10);
  const auto one = oracle::run_suite("ktheory", 7, 10, 4);
  CHECK(one.cases == 1);
  CHECK(one.ok());
}

TEST_CASE("every suite passes a short run") {
  for (const auto& s : oracle::suites()) {
    const auto r = oracle::run_suite(s.name, 99, std::min<std::size_t>(s.default_cases, 10));
    CHECK_MESSAGE(r.ok(), s.name << ": " << r.first_failure);
  }
}
