#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bei/betti.hpp"
#include "bei/constructions.hpp"
#include "bei/decomposition.hpp"
#include "bei/formulas.hpp"
#include "bei/graph.hpp"
#include "bei/invariants.hpp"
#include "bei/monomial_ideal.hpp"

namespace bei {

using Json = nlohmann::ordered_json;

// {"n": int, "edges": [[i, j], ...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"base": graph, "S": [ints], "H": [graph, ...]}
Json to_json(const GenCoronaSpec& spec);
GenCoronaSpec spec_from_json(const Json& j);

// {"n_vars": int, "generators": [[var_indices]]}
Json to_json(const MonomialIdealSF& ideal);
MonomialIdealSF ideal_from_json(const Json& j);

// {"entries": [[i, j, beta]], "pd", "depth", "reg", "vars"}
Json to_json(const BettiTable& t);
Json to_json(const InvariantReport& r);
Json to_json(const BoundReport& r);
Json to_json(const ClassMembership& c);
Json to_json(const Cutset& c, int n, int m);
Json to_json(const CmVerdict& v);

// Whole-document parse; syntax errors become ParseError with the byte offset.
Json parse_json(std::string_view text);
Graph parse_graph_json(std::string_view text);
GenCoronaSpec parse_spec_json(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace bei
