// bei: construct, analyze, decompose and verify binomial edge ideal formulas.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bei/betti.hpp"
#include "bei/constructions.hpp"
#include "bei/decomposition.hpp"
#include "bei/error.hpp"
#include "bei/formulas.hpp"
#include "bei/groebner.hpp"
#include "bei/invariants.hpp"
#include "bei/json_io.hpp"
#include "bei/verify.hpp"

using namespace bei;

namespace {

enum Exit { kPass = 0, kViolation = 1, kUsage = 2, kCap = 3 };

struct GraphInput {
  std::string graph_file;
  std::string graph6;
  std::string spec_file;
};

Graph load_graph(const GraphInput& in) {
  if (!in.graph6.empty()) return from_graph6(in.graph6);
  if (!in.graph_file.empty()) return parse_graph_json(read_file(in.graph_file));
  throw InputError("no graph given (use --graph or --graph6)");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

void add_check(Json& checks, bool& violated, const BoundReport& b, long long observed) {
  const bool ok = satisfies(b, observed);
  violated = violated || !ok;
  checks.push_back(Json{{"name", b.name}, {"value", b.value}, {"oracle", observed}, {"pass", ok}});
}

Json bounds_json(const std::vector<BoundReport>& bounds) {
  Json out = Json::array();
  for (const auto& b : bounds) out.push_back(to_json(b));
  return out;
}

std::string csv_report(const std::string& id, const InvariantReport& inv, const std::vector<BoundReport>& bounds,
                       const std::optional<OracleValues>& oracle, bool violated) {
  std::ostringstream head, row;
  head << "id,n,c,i,d,f,iv,im";
  row << csv_field(id) << ',' << inv.n << ',' << inv.c << ',' << inv.i << ',' << inv.d << ',' << inv.f << ','
      << inv.iv << ',' << inv.im;
  for (const auto& b : bounds) {
    head << ',' << b.name;
    row << ',' << b.value;
  }
  head << ",depth,reg,verdict\n";
  if (oracle) {
    row << ',' << oracle->depth << ',' << oracle->reg << ',' << (violated ? "fail" : "pass") << '\n';
  } else {
    row << ",,,\n";
  }
  return head.str() + row.str();
}

int analyze_graph(const Graph& g, int m, bool with_oracle, const std::string& format, const std::string& out) {
  const auto inv = invariant_report(g);
  std::vector<BoundReport> bounds{depth_lower_bound_general(inv, m)};
  if (inv.c == 1) bounds.push_back(depth_upper_bound_kappa(inv, m));

  Json report;
  report["input"] = Json{{"graph6", to_graph6(g)}, {"graph", to_json(g)}};
  report["m"] = m;
  report["invariants"] = to_json(inv);
  report["bounds"] = bounds_json(bounds);
  const auto dim = dimension(g, m);
  Json decomposition{{"dimension", dim.dim}, {"witness", dim.witness.labels()}};
  decomposition["unmixed"] = inv.c == 1 && inv.n > 0 ? Json(is_unmixed(g, m).unmixed) : Json(nullptr);
  report["decomposition"] = std::move(decomposition);

  bool violated = false;
  std::optional<OracleValues> oracle;
  if (with_oracle) {
    const auto table = oracle_betti_table(g);
    oracle = OracleValues{table.depth, table.reg, krull_dimension(initial_ideal(g))};
    Json checks = Json::array();
    for (const auto& b : bounds) add_check(checks, violated, b, oracle->depth);
    if (oracle->dim != dim.dim) violated = true;
    report["oracle"] = Json{{"depth", oracle->depth}, {"reg", oracle->reg}, {"dim", oracle->dim},
                            {"cohen_macaulay", oracle->cohen_macaulay()}, {"betti", to_json(table)}};
    report["checks"] = std::move(checks);
  }
  emit(format == "csv" ? csv_report(to_graph6(g), inv, bounds, oracle, violated) : report.dump(2) + "\n", out);
  return violated ? kViolation : kPass;
}

int analyze_spec(const GenCoronaSpec& spec, int m, bool with_oracle, const std::string& format,
                 const std::string& out) {
  OracleCache cache;
  const Graph d = composite(spec);
  const auto depths = known_attachment_depths(spec, m, cache);
  const auto membership = depths ? class_membership(spec, std::span<const int>(*depths), m)
                                 : class_membership(spec, std::nullopt, m);
  const auto ci = depths ? corona_invariants(spec, std::span<const int>(*depths), m) : corona_invariants(spec, std::nullopt, m);
  const auto inv = invariant_report(d);

  std::vector<BoundReport> depth_bounds{depth_lower_bound_general(inv, m)};
  if (inv.c == 1) depth_bounds.push_back(depth_upper_bound_kappa(inv, m));
  if (ci.in_G2) depth_bounds.push_back(depth_lower_bound_G2_gen(ci, m));
  if (ci.in_Gprime.value_or(false)) depth_bounds.push_back(depth_equality_Gprime(ci, m));
  if (ci.in_G2 && depths && m == 2) depth_bounds.push_back(depth_lower_bound_G2_binom(ci, *depths));
  std::vector<BoundReport> reg_bounds;
  if (ci.in_G1) reg_bounds.push_back(reg_upper_bound_G1(ci, m));
  if (m == 2 && ci.in_G1 && ci.l == ci.p && ci.base.gap_free.value_or(false)) reg_bounds.push_back(reg_gapfree_whisker(ci.base));
  std::vector<BoundReport> dim_bounds;
  if (ci.base_complete) {
    std::vector<int> dims;
    for (const auto& h : spec.attachments) dims.push_back(dimension(h, m).dim);
    dim_bounds.push_back(dim_G2prime(ci, dims));
  }

  Json report;
  report["input"] = Json{{"spec", to_json(spec)}, {"graph6", to_graph6(d)}, {"graph", to_json(d)}};
  report["m"] = m;
  report["membership"] = to_json(membership);
  report["invariants"] = to_json(inv);
  std::vector<BoundReport> all = depth_bounds;
  all.insert(all.end(), reg_bounds.begin(), reg_bounds.end());
  all.insert(all.end(), dim_bounds.begin(), dim_bounds.end());
  report["bounds"] = bounds_json(all);
  const auto dim = dimension(d, m);
  report["decomposition"] = Json{{"dimension", dim.dim}, {"witness", dim.witness.labels()}};
  if (inv.c == 1 && (spec.base.order() == 1 || (spec.base.size() > 0 && ci.in_G2))) {
    // Attachment CM facts only matter at m = 2.
    std::vector<bool> cm;
    for (const auto& h : spec.attachments) cm.push_back(m == 2 && cache.get(h).cohen_macaulay());
    report["cm"] = to_json(classify_cm(spec, m, cm));
  }

  bool violated = false;
  std::optional<OracleValues> oracle;
  if (with_oracle) {
    const auto table = oracle_betti_table(d);
    oracle = OracleValues{table.depth, table.reg, krull_dimension(initial_ideal(d))};
    Json checks = Json::array();
    for (const auto& b : depth_bounds) add_check(checks, violated, b, oracle->depth);
    for (const auto& b : reg_bounds) add_check(checks, violated, b, oracle->reg);
    for (const auto& b : dim_bounds) add_check(checks, violated, b, oracle->dim);
    if (report.contains("cm") && report["cm"]["status"] != "undetermined") {
      const bool says_cm = report["cm"]["status"] == "cohen-macaulay";
      const bool ok = says_cm == oracle->cohen_macaulay();
      violated = violated || !ok;
      checks.push_back(Json{{"name", "thm5.6"}, {"value", says_cm}, {"oracle", oracle->cohen_macaulay()}, {"pass", ok}});
    }
    report["oracle"] = Json{{"depth", oracle->depth}, {"reg", oracle->reg}, {"dim", oracle->dim},
                            {"cohen_macaulay", oracle->cohen_macaulay()}, {"betti", to_json(table)}};
    report["checks"] = std::move(checks);
  }
  emit(format == "csv" ? csv_report(spec_id(spec), inv, all, oracle, violated) : report.dump(2) + "\n", out);
  return violated ? kViolation : kPass;
}

std::string verification_text(const VerificationRun& run, const std::string& format) {
  if (format == "csv") {
    std::ostringstream os;
    os << "id,formula,oracle,relation,verdict,note\n";
    for (const auto& r : run.records) {
      os << csv_field(r.id) << ',' << r.formula << ',' << r.oracle << ',' << r.relation << ','
         << (r.pass ? "pass" : "fail") << ',' << csv_field(r.note) << '\n';
    }
    return os.str();
  }
  Json records = Json::array();
  for (const auto& r : run.records) {
    Json j{{"id", r.id}, {"formula", r.formula}, {"oracle", r.oracle}, {"relation", r.relation},
           {"verdict", r.pass ? "pass" : "fail"}};
    if (!r.note.empty()) j["note"] = r.note;
    records.push_back(std::move(j));
  }
  Json universe = Json::object();
  for (const auto& [k, v] : run.universe) universe[k] = v;
  Json j{{"tag", run.tag},
         {"universe", std::move(universe)},
         {"records", std::move(records)},
         {"summary", Json{{"total", run.records.size()}, {"passed", run.passed}, {"failed", run.failed}}},
         {"wall_seconds", run.wall_seconds}};
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial edge ideals of whisker and corona graphs: invariants, bounds and exact verification"};
  app.require_subcommand(1);

  std::string format = "json", out;
  int m = 2;

  auto* analyze = app.add_subcommand("analyze", "Invariants, bounds and optional oracle values for a graph or spec");
  GraphInput a_in;
  bool with_oracle = false;
  auto* a_graph = analyze->add_option("--graph", a_in.graph_file, "Graph JSON file");
  auto* a_g6 = analyze->add_option("--graph6", a_in.graph6, "Graph in graph6 format");
  auto* a_spec = analyze->add_option("--spec", a_in.spec_file, "Corona spec JSON file");
  a_graph->excludes(a_g6)->excludes(a_spec);
  a_g6->excludes(a_spec);
  analyze->add_option("--m", m, "Number of rows of the generic matrix")->check(CLI::Range(2, 64));
  analyze->add_flag("--oracle", with_oracle, "Compute depth and reg exactly (m = 2)");
  analyze->add_option("--out", out, "Write the report here instead of stdout");
  analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Sweep a family and compare a formula against the oracle");
  std::string tag, attachments = "k1,k2,p3,2k1";
  VerifyOptions vopt;
  verify->add_option("tag", tag, "Check to run, e.g. thm3.3 or gb-oracle")->required();
  verify->add_option("--max-n", vopt.max_n, "Largest graph order for graph sweeps");
  verify->add_option("--max-base", vopt.universe.max_base, "Largest base order for class sweeps");
  verify->add_option("--min-base", vopt.universe.min_base, "Smallest base order for class G2 sweeps");
  verify->add_option("--max-total", vopt.universe.max_total, "Largest composite order for class G2 sweeps");
  verify->add_option("--attachments", attachments, "Attachment graphs, e.g. k1,k2,p3,2k1");
  verify->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_option("--out", out, "Write the run here instead of stdout");
  verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "Stream class members as spec JSON, one per line");
  std::string klass = "g2";
  CoronaUniverse eu;
  enumerate->add_option("--class", klass, "g1 or g2")->check(CLI::IsMember({"g1", "g2"}));
  enumerate->add_option("--max-base", eu.max_base, "Largest base order");
  enumerate->add_option("--min-base", eu.min_base, "Smallest base order (g2)");
  enumerate->add_option("--max-total", eu.max_total, "Largest composite order (g2)");
  std::string e_attach = "k1,k2,p3,2k1";
  enumerate->add_option("--attachments", e_attach, "Attachment graphs (g2)");
  enumerate->add_option("--out", out, "Write the stream here instead of stdout");

  auto* decompose = app.add_subcommand("decompose", "Cutsets, prime dimensions and unmixedness");
  GraphInput d_in;
  decompose->add_option("--graph", d_in.graph_file, "Graph JSON file");
  decompose->add_option("--graph6", d_in.graph6, "Graph in graph6 format");
  decompose->add_option("--m", m, "Number of rows of the generic matrix")->check(CLI::Range(2, 64));
  decompose->add_option("--out", out, "Write the result here instead of stdout");

  auto* construct = app.add_subcommand("construct", "Build a whisker graph, cone or corona");
  std::string kind = "whisker", set;
  GraphInput c_in;
  bool special = false;
  construct->add_option("kind", kind, "whisker, cone or corona")->check(CLI::IsMember({"whisker", "cone", "corona"}));
  construct->add_option("--graph", c_in.graph_file, "Graph JSON file");
  construct->add_option("--graph6", c_in.graph6, "Graph in graph6 format");
  construct->add_option("--spec", c_in.spec_file, "Corona spec JSON file (corona)");
  construct->add_option("--set", set, "Whisker set S as a comma list; default all vertices");
  construct->add_flag("--special-labeling", special, "Relabel W(G) so the first edge's whiskers are 1 and 2");
  construct->add_option("--out", out, "Write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (analyze->parsed()) {
      if (with_oracle && m != 2) throw InputError("--oracle is only available at m = 2");
      if (!a_in.spec_file.empty()) return analyze_spec(parse_spec_json(read_file(a_in.spec_file)), m, with_oracle, format, out);
      return analyze_graph(load_graph(a_in), m, with_oracle, format, out);
    }
    if (verify->parsed()) {
      vopt.universe.attachments = split_csv(attachments);
      OracleCache cache;
      const auto run = run_verification(tag, vopt, cache);
      emit(verification_text(run, format), out);
      std::cerr << run.tag << ": " << run.passed << " passed, " << run.failed << " failed\n";
      return run.all_pass() ? kPass : kViolation;
    }
    if (enumerate->parsed()) {
      std::ostringstream os;
      if (klass == "g1") {
        for (const auto& s : enumerate_g1(eu.max_base)) os << to_json(s).dump() << '\n';
      } else {
        eu.attachments = split_csv(e_attach);
        for (const auto& s : enumerate_g2(eu)) os << to_json(s).dump() << '\n';
      }
      emit(os.str(), out);
      return kPass;
    }
    if (decompose->parsed()) {
      const Graph g = load_graph(d_in);
      Json cutsets = Json::array();
      for (const auto& c : enumerate_cutsets(g)) cutsets.push_back(to_json(c, g.order(), m));
      const auto dim = dimension(g, m);
      Json j{{"graph6", to_graph6(g)}, {"m", m}, {"cutsets", std::move(cutsets)}};
      if (component_count(g) == 1) {
        const auto un = is_unmixed(g, m);
        j["unmixed"] = un.unmixed;
        j["failing_cutset"] = un.witness ? to_json(*un.witness, g.order(), m) : Json(nullptr);
      } else {
        j["unmixed"] = nullptr;
        j["failing_cutset"] = nullptr;
      }
      j["dimension"] = dim.dim;
      j["witness"] = dim.witness.labels();
      emit(j.dump(2) + "\n", out);
      return kPass;
    }
    if (construct->parsed()) {
      Json j;
      if (kind == "corona") {
        const auto spec = parse_spec_json(read_file(c_in.spec_file));
        const Graph d = composite(spec);
        j = Json{{"spec", to_json(spec)}, {"graph6", to_graph6(d)}, {"graph", to_json(d)}};
      } else if (kind == "cone") {
        const Graph d = cone(load_graph(c_in));
        j = Json{{"graph6", to_graph6(d)}, {"graph", to_json(d)}};
      } else {
        const Graph g = load_graph(c_in);
        if (special) {
          const auto lab = special_whisker_labeling(g);
          j = Json{{"graph6", to_graph6(lab.graph)}, {"graph", to_json(lab.graph)},
                   {"base_label", lab.base_label}, {"whisker_label", lab.whisker_label}};
        } else {
          VertexSet s = g.vertices();
          if (!set.empty()) {
            std::vector<int> labels;
            for (const auto& t : split_csv(set)) labels.push_back(std::stoi(t));
            s = VertexSet::from_labels(labels);
          }
          const auto c = whisker_on_set(g, s);
          j = Json{{"spec", to_json(c.spec)}, {"graph6", to_graph6(c.graph)}, {"graph", to_json(c.graph)}};
        }
      }
      emit(j.dump(2) + "\n", out);
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const InternalError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
