#pragma once

// JSON input parsing and report serialisation.
//
// Input errors are reported as ParseError with the file name and either the
// line of a syntax error or the path of the offending field.

#include "mtk/dynamics.hpp"
#include "mtk/ktheory.hpp"
#include "mtk/lifttree.hpp"
#include "mtk/presentation.hpp"
#include "mtk/setfamily.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtk {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses text, reporting syntax errors as "<source>:<line>: ...".
nlohmann::json parse_json(const std::string& text, const std::string& source = "<input>");
nlohmann::json read_json_file(const std::string& path);

DiGraph graph_from_json(const nlohmann::json& j);
UndirectedGraph undirected_from_json(const nlohmann::json& j);
QuotientPresentation presentation_from_json(const nlohmann::json& j);
GraphOfGroupsZ gog_from_json(const nlohmann::json& j);

struct SetFamilyInput {
  SetFamily family;
  PermAction action;
  std::optional<std::vector<std::size_t>> saturate;
};

SetFamilyInput setfamily_from_json(const nlohmann::json& j, std::size_t max_atoms = SetFamily::kDefaultMaxAtoms);

nlohmann::json to_json(const IntMatrix& m);
nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const DiGraph& g);
nlohmann::json to_json(const QuotientPresentation& p);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const KTheoryReport& r);
nlohmann::json to_json(const SixTermReport& r);
nlohmann::json to_json(const TriState& t);

}  // namespace mtk
