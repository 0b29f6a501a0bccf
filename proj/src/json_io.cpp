#include "bei/json_io.hpp"

#include <fstream>
#include <sstream>

#include "bei/error.hpp"

namespace bei {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

Json vertex_list(VertexSet s) { return Json(s.labels()); }

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n", "graph"), "graph.n");
  if (n < 0 || n > kMaxVertices) throw ParseError("graph.n out of range: " + std::to_string(n));
  const Json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) throw ParseError("graph.edges: expected an array");
  std::vector<Edge> list;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph.edges: each edge must be a pair");
    list.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return Graph::from_edge_list(n, list);
}

Json to_json(const GenCoronaSpec& spec) {
  Json hs = Json::array();
  for (const auto& h : spec.attachments) hs.push_back(to_json(h));
  return Json{{"base", to_json(spec.base)}, {"S", spec.attach}, {"H", std::move(hs)}};
}

GenCoronaSpec spec_from_json(const Json& j) {
  GenCoronaSpec spec;
  spec.base = graph_from_json(field(j, "base", "spec"));
  const Json& s = field(j, "S", "spec");
  const Json& h = field(j, "H", "spec");
  if (!s.is_array() || !h.is_array()) throw ParseError("spec: S and H must be arrays");
  for (const auto& v : s) spec.attach.push_back(as_int(v, "spec.S"));
  for (const auto& g : h) spec.attachments.push_back(graph_from_json(g));
  validate(spec);
  return spec;
}

Json to_json(const MonomialIdealSF& ideal) {
  return Json{{"n_vars", ideal.n_vars()}, {"generators", ideal.generator_indices()}};
}

MonomialIdealSF ideal_from_json(const Json& j) {
  const int n_vars = as_int(field(j, "n_vars", "ideal"), "ideal.n_vars");
  if (n_vars < 0 || n_vars > kMaxVariables) throw ParseError("ideal.n_vars out of range");
  const Json& gens = field(j, "generators", "ideal");
  if (!gens.is_array()) throw ParseError("ideal.generators: expected an array");
  std::vector<VarMask> supports;
  for (const auto& g : gens) {
    if (!g.is_array()) throw ParseError("ideal.generators: each generator must be an index list");
    VarMask s = 0;
    for (const auto& v : g) {
      const int k = as_int(v, "variable index");
      if (k < 1 || k > n_vars) throw ParseError("ideal: variable index " + std::to_string(k) + " out of range");
      s |= VarMask{1} << (k - 1);
    }
    supports.push_back(s);
  }
  return MonomialIdealSF::from_minimal(n_vars, std::move(supports));
}

Json to_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [ij, b] : t.entries) entries.push_back({ij.first, ij.second, b});
  return Json{{"entries", std::move(entries)}, {"pd", t.pd}, {"depth", t.depth}, {"reg", t.reg}, {"vars", t.vars}};
}

Json to_json(const InvariantReport& r) {
  Json j{{"n", r.n},   {"c", r.c},   {"i", r.i},   {"diam_sum", r.diam_sum}, {"d", r.d},
         {"f", r.f},   {"iv", r.iv}, {"im", r.im}, {"complete", r.complete}};
  j["gap_free"] = r.gap_free ? Json(*r.gap_free) : Json(nullptr);
  j["kappa"] = r.kappa ? Json(*r.kappa) : Json(nullptr);
  j["kappa_convention"] = r.kappa_convention;
  return j;
}

Json to_json(const BoundReport& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json j{{"name", r.name}, {"value", r.value}, {"kind", to_string(r.kind)}, {"inputs", std::move(inputs)}};
  j["flagged"] = r.flagged;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ClassMembership& c) {
  Json j{{"in_G1", c.in_G1}, {"in_G2", c.in_G2}};
  j["in_Gprime"] = c.in_Gprime ? Json(*c.in_Gprime) : Json(nullptr);
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  return j;
}

Json to_json(const Cutset& c, int n, int m) {
  Json comps = Json::array();
  for (const auto& part : c.parts) comps.push_back(vertex_list(part));
  return Json{{"T", vertex_list(c.T)}, {"components", std::move(comps)}, {"dim", prime_dimension(n, c.T.size(), c.c, m)}};
}

Json to_json(const CmVerdict& v) { return Json{{"status", to_string(v.status)}, {"reason", v.reason}}; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
}

Graph parse_graph_json(std::string_view text) {
  try {
    return graph_from_json(parse_json(text));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

GenCoronaSpec parse_spec_json(std::string_view text) {
  try {
    return spec_from_json(parse_json(text));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("spec JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bei
