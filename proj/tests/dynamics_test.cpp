#include "fixtures.hpp"

#include "mtk/dynamics.hpp"
#include "mtk/errors.hpp"
#include "mtk/oracle.hpp"
#include "mtk/random.hpp"

#include <doctest.h>

using namespace mtk;
using fixtures::graph;

namespace {

DiGraph two_cycle_with_loop() {
  return graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"z", "a", "a"}});
}

}  // namespace

TEST_CASE("cofinality") {
  for (int n = 1; n <= 4; ++n) CHECK(is_cofinal(fixtures::rose(n).graph));
  const DiGraph split = graph({"u", "v"}, {{"lu", "u", "u"}, {"lv", "v", "v"}, {"e", "v", "u"}});
  const auto c = cofinality_certificate(split);
  CHECK_FALSE(c.cofinal);
  CHECK(c.cycle == std::vector<std::string>{"lv"});
  CHECK(c.unreachable == "u");
  CHECK(is_cofinal(two_cycle_with_loop()));
  CHECK_THROWS_AS(cofinality_certificate(graph({"a", "b"}, {{"e", "a", "b"}})), ValidationError);
}

TEST_CASE("aperiodicity") {
  const auto single = aperiodicity_certificate(fixtures::rose(1).graph);
  CHECK_FALSE(single.aperiodic);
  CHECK(single.cycle == std::vector<std::string>{"e1"});
  CHECK(is_aperiodic(fixtures::rose(2).graph));
  CHECK(is_aperiodic(two_cycle_with_loop()));
  CHECK_FALSE(is_aperiodic(graph({"a", "b"}, {{"x", "a", "b"}, {"y", "b", "a"}})));
}

TEST_CASE("local contractivity sufficient condition") {
  CHECK(local_contractivity_sufficient(fixtures::bs(2, 3)).is_yes());
  CHECK(local_contractivity_sufficient(fixtures::rose(2)).is_yes());
  const TriState t = local_contractivity_sufficient(fixtures::rose(1));
  CHECK(t.value == TriState::Value::Unknown);
  CHECK(t.reason == "sufficient condition fails");
  CHECK(local_contractivity_sufficient(fixtures::bs(1, 5)).value == TriState::Value::Unknown);
  CHECK(local_contractivity_sufficient(fixtures::bs(-2, 1)).is_yes());

  // a good loop at u that reaches v, but nothing reaches u from v
  QuotientPresentation p = fixtures::free_presentation(
      graph({"u", "v"}, {{"a", "u", "u"}, {"b", "u", "u"}, {"c", "v", "u"}, {"d", "v", "v"}}));
  const auto cert = local_contractivity_certificate(p);
  CHECK(cert.verdict.is_yes());
  CHECK(cert.uncovered.empty());
  p = fixtures::free_presentation(graph({"u", "v"}, {{"a", "u", "u"}, {"b", "u", "u"}, {"c", "u", "v"}, {"d", "v", "v"}}));
  // v has a lone loop; u is reached from v's loop but v is never reached from u
  const auto cert2 = local_contractivity_certificate(p);
  CHECK(cert2.verdict.value == TriState::Value::Unknown);
  CHECK(cert2.uncovered == std::vector<std::string>{"v"});
}

TEST_CASE("lift stabiliser generator") {
  const auto p = fixtures::bs(2, 3);
  CHECK(lift_stabiliser_generator(p, {"v", {}}) == 1);
  CHECK(lift_stabiliser_generator(p, {"v", {"e"}}) == 2);
  CHECK(lift_stabiliser_generator(p, {"v", {"e", "e"}}) == 4);
  CHECK(lift_stabiliser_generator(p, {"v", {"e", "e", "e"}}) == 8);
  CHECK(lift_stabiliser_generator(fixtures::bs(3, 2), {"v", {"e", "e"}}) == 9);
  CHECK(lift_stabiliser_generator(fixtures::bs(1, 2), {"v", {"e", "e", "e"}}) == 1);
  CHECK(lift_stabiliser_generator(fixtures::rose(2), {"v", {"e1", "e2"}}) == 1);
}

TEST_CASE("unbounded denominators") {
  const auto d = denominator_certificate(fixtures::bs(2, 3), "v");
  CHECK(d.unbounded);
  CHECK(d.factor == 2);
  CHECK(d.cycle == std::vector<std::string>{"e"});
  CHECK(d.prefix.empty());
  CHECK_FALSE(has_unbounded_denominator_path(fixtures::bs(1, 2), "v"));
  CHECK_FALSE(has_unbounded_denominator_path(fixtures::bs(1, 1), "v"));
  CHECK_FALSE(has_unbounded_denominator_path(fixtures::rose(2), "v"));
  CHECK(has_unbounded_denominator_path(fixtures::bs(6, 10), "v"));  // q = 5/3
  CHECK_FALSE(has_unbounded_denominator_path(fixtures::bs(6, 12), "v"));

  // loops with ratios 3/2 and 2/3 at one vertex: both primes are reachable
  const auto both = fixtures::z_loops({{2, 3}, {3, 2}});
  CHECK(has_unbounded_denominator_path(both, "v"));

  // a vertex that only reaches a bounded loop, feeding from an unbounded one
  QuotientPresentation p;
  p.graph = graph({"a", "b"}, {{"la", "a", "a"}, {"lb", "b", "b"}, {"ab", "a", "b"}});
  p.vertex_class = {{"a", StabiliserClass::InfiniteCyclic}, {"b", StabiliserClass::InfiniteCyclic}};
  p.omega = {{"la", {1, 2}}, {"lb", {2, 3}}, {"ab", {1, 1}}};
  const auto via = denominator_certificate(p, "a");
  CHECK(via.unbounded);
  CHECK(via.prefix == std::vector<std::string>{"ab"});
  CHECK(via.cycle == std::vector<std::string>{"lb"});
  CHECK(has_unbounded_denominator_path(p, "b"));
  p.omega["lb"] = {1, 3};
  CHECK_FALSE(has_unbounded_denominator_path(p, "a"));
}

TEST_CASE("topological freeness") {
  CHECK(is_topologically_free(fixtures::rose(2)).is_yes());
  CHECK(is_topologically_free(fixtures::rose(1)).is_no());
  CHECK(is_topologically_free(fixtures::bs(2, 3)).is_yes());
  const auto c = topological_freeness_certificate(fixtures::bs(1, 2));
  CHECK(c.verdict.is_no());
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].bounded_vertex == "v");

  QuotientPresentation two;
  two.graph = graph({"u", "v"}, {{"a", "u", "u"}, {"b", "u", "u"}, {"c", "v", "v"}});
  two.vertex_class = {{"u", StabiliserClass::Trivial}, {"v", StabiliserClass::InfiniteCyclic}};
  two.omega["c"] = {2, 3};
  CHECK(is_topologically_free(two).is_yes());
  two.omega["c"] = {1, 3};
  CHECK(is_topologically_free(two).is_no());
}

TEST_CASE("BS(2,3) dynamics") {
  const auto p = fixtures::bs(2, 3);
  CHECK(is_cofinal(p.graph));
  CHECK(is_topologically_free(p).is_yes());
  CHECK(local_contractivity_sufficient(p).is_yes());
  // the single loop has no entrance
  CHECK_FALSE(is_aperiodic(p.graph));
}

TEST_CASE("graph deciders agree with cycle enumeration") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng = make_rng(23, k);
    const DiGraph g = random_no_source_digraph(rng, 6, 6);
    CHECK(is_cofinal(g) == oracle::is_cofinal(g));
    CHECK(is_aperiodic(g) == oracle::is_aperiodic(g));
  }
}

TEST_CASE("denominator decider agrees with periodic enumeration") {
  for (std::uint64_t k = 0; k < 40; ++k) {
    Rng rng = make_rng(29, k);
    const auto p = random_z_presentation(rng, 4, 2, 4);
    for (const auto& v : p.graph.vertices())
      CHECK(has_unbounded_denominator_path(p, v) == oracle::has_unbounded_denominator_path(p, v));
  }
}

TEST_CASE("tri-state text") {
  CHECK(TriState::yes().to_string() == "yes");
  CHECK(TriState::no().to_string() == "no");
  CHECK(TriState::unknown("why").to_string() == "unknown (why)");
}
