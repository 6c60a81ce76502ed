#include "mtk/errors.hpp"
#include "mtk/json_io.hpp"

#include <doctest.h>

using namespace mtk;
using nlohmann::json;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("syntax errors carry the line") {
  const std::string text = "{\n  \"vertices\": [\"v\"],\n  \"edges\": [,]\n}\n";
  const std::string msg = error_of([&] { parse_json(text, "rose.json"); });
  CHECK(msg.rfind("rose.json:3:", 0) == 0);
  CHECK_THROWS_AS(parse_json(text), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("field errors name the field") {
  const json j = json::parse(R"({"vertices": ["v"], "edges": [{"id": "e", "range": 3, "source": "v"}]})");
  CHECK(error_of([&] { graph_from_json(j); }).find("edges[0].range") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), ParseError);
  CHECK_THROWS_AS(presentation_from_json(json::parse(R"({"vertices": ["v"]})")), ParseError);
  const json bad_class = json::parse(R"({"vertices": ["v"], "classes": {"v": "free"}})");
  CHECK(error_of([&] { presentation_from_json(bad_class); }).find("classes.v") != std::string::npos);
}

TEST_CASE("presentation round trip") {
  const json j = json::parse(R"({
    "vertices": ["v"],
    "edges": [{"id": "e", "range": "v", "source": "v"}],
    "classes": {"v": "z"},
    "omega": {"e": [2, 3]}})");
  const auto p = presentation_from_json(j);
  CHECK(p.omega.at("e").range == 2);
  CHECK(p.omega.at("e").source == 3);
  CHECK(p.class_of(0) == StabiliserClass::InfiniteCyclic);
  const auto back = presentation_from_json(to_json(p));
  CHECK(back.graph.vertices() == p.graph.vertices());
  CHECK(back.omega.at("e").source == 3);
  CHECK(to_json(back) == to_json(p));
}

TEST_CASE("graph of groups input") {
  const json j = json::parse(R"({
    "vertices": ["x"],
    "edges": [{"id": "a", "range": "x", "source": "x"}, {"id": "b", "range": "x", "source": "x"}],
    "bar": {"a": "b", "b": "a"},
    "classes": {"x": "z"},
    "alpha": {"a": 2, "b": 3}})");
  const auto gog = gog_from_json(j);
  CHECK(gog.alpha.at("b") == 3);
  CHECK(gog.graph.bar("a") == "b");
  CHECK(validate(gog).ok());
  json nobar = j;
  nobar.erase("bar");
  CHECK_THROWS_AS(gog_from_json(nobar), ParseError);
}

TEST_CASE("set family input") {
  const json j = json::parse(R"({
    "universe": [1, 2, 3],
    "members": {"A": [1, 2], "B": [2, 3], "C": [2]},
    "action": [["A", "B", "C"]],
    "saturate": ["A", "B"]})");
  const auto in = setfamily_from_json(j);
  CHECK(in.family.size() == 3);
  CHECK(in.family.universe() == std::vector<std::string>{"1", "2", "3"});
  CHECK(in.action.generators.size() == 1);
  CHECK(in.saturate.value() == std::vector<std::size_t>{0, 1});
  json wrong = j;
  wrong["action"] = json::parse(R"([["A", "B"]])");
  CHECK_THROWS_AS(setfamily_from_json(wrong), ParseError);
  wrong = j;
  wrong["saturate"] = json::parse(R"(["Q"])");
  CHECK(error_of([&] { setfamily_from_json(wrong); }).find("saturate[0]") != std::string::npos);
}

TEST_CASE("report serialisation") {
  const json g = to_json(AbelianGroup(2, {2, 4}));
  CHECK(g["rank"] == 2);
  CHECK(g["torsion"] == json::array({"2", "4"}));
  CHECK(g["text"] == "Z^2 + Z/2 + Z/4");
  CHECK(to_json(IntMatrix{{1, -2}}) == json::parse(R"([["1", "-2"]])"));
  CHECK(to_json(TriState::unknown("x")) == json::parse(R"({"value": "unknown", "reason": "x"})"));
  CHECK(to_json(TriState::yes()) == json::parse(R"({"value": "yes"})"));
  ValidationReport r;
  r.violations.push_back({"v", "vertex has in-degree 0"});
  CHECK(to_json(r)["ok"] == false);
  CHECK(to_json(r)["violations"][0]["rule"] == "vertex has in-degree 0");
}
