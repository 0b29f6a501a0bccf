#include "bei/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "bei/decomposition.hpp"
#include "bei/error.hpp"
#include "bei/formulas.hpp"
#include "bei/groebner.hpp"
#include "bei/invariants.hpp"

namespace bei {

OracleValues OracleCache::get(const Graph& g) {
  const std::string key = g.order() <= 12 ? to_graph6(canonical_form(g)) : to_graph6(g);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const auto ideal = initial_ideal(g);
  const auto table = betti_table(ideal, options_);
  const OracleValues v{table.depth, table.reg, krull_dimension(ideal)};
  std::lock_guard lock(mu_);
  memo_.emplace(key, v);
  return v;
}

std::size_t OracleCache::size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

std::optional<std::vector<int>> known_attachment_depths(const GenCoronaSpec& spec, int m, OracleCache& cache) {
  std::vector<int> out;
  for (const auto& h : spec.attachments) {
    if (h.is_complete() && h.order() >= 1) {
      out.push_back(m + h.order() - 1);
    } else if (m == 2) {
      out.push_back(cache.get(h).depth);
    } else {
      return std::nullopt;
    }
  }
  return out;
}

Graph named_graph(const std::string& name) {
  auto number = [&](std::size_t from) {
    if (from >= name.size() || !std::all_of(name.begin() + static_cast<long>(from), name.end(), ::isdigit)) {
      throw InputError("unknown graph name: " + name);
    }
    const int n = std::stoi(name.substr(from));
    if (n < 1 || n > kMaxVertices) throw InputError("graph size out of range: " + name);
    return n;
  };
  std::size_t pos = 0;
  int copies = 1;
  while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
  if (pos > 0) copies = std::stoi(name.substr(0, pos));
  if (pos >= name.size() || copies < 1) throw InputError("unknown graph name: " + name);
  Graph one;
  switch (name[pos]) {
    case 'k':
      one = Graph::complete(number(pos + 1));
      break;
    case 'p':
      one = Graph::path(number(pos + 1));
      break;
    case 'c':
      one = Graph::cycle(number(pos + 1));
      break;
    default:
      throw InputError("unknown graph name: " + name);
  }
  Graph out = one;
  for (int r = 1; r < copies; ++r) out = disjoint_union(out, one);
  return out;
}

std::vector<GenCoronaSpec> enumerate_g2(const CoronaUniverse& u) {
  std::vector<Graph> pool;
  for (const auto& name : u.attachments) pool.push_back(named_graph(name));
  std::vector<GenCoronaSpec> out;
  if (u.max_base < 1) return out;
  for (const auto& g : enumerate_connected_graphs(std::min(u.max_base, 7))) {
    if (g.order() < u.min_base) continue;
    const auto fv = free_vertex_counts(g);
    const auto free_labels = fv.free.labels();
    const std::size_t k = free_labels.size();
    // Subsets of A_G in increasing mask order, each joined with B_G.
    std::vector<VertexSet> choices;
    for (Mask sub = 0; sub < (Mask{1} << k); ++sub) {
      VertexSet s = fv.non_free;
      for (std::size_t t = 0; t < k; ++t) {
        if (sub >> t & 1) s.insert(free_labels[t]);
      }
      choices.push_back(s);
    }
    std::sort(choices.begin(), choices.end(), [](VertexSet a, VertexSet b) { return a.mask() < b.mask(); });
    for (VertexSet s : choices) {
      const auto attach = s.labels();
      std::vector<std::size_t> pick(attach.size(), 0);
      auto emit = [&](auto&& self, std::size_t at, int total) -> void {
        if (total > u.max_total) return;
        if (at == attach.size()) {
          GenCoronaSpec spec{g, attach, {}};
          for (std::size_t t = 0; t < attach.size(); ++t) spec.attachments.push_back(pool[pick[t]]);
          out.push_back(std::move(spec));
          return;
        }
        for (std::size_t c = 0; c < pool.size(); ++c) {
          pick[at] = c;
          self(self, at + 1, total + pool[c].order());
        }
      };
      emit(emit, 0, g.order());
    }
  }
  return out;
}

std::vector<GenCoronaSpec> enumerate_g1(int max_base) {
  CoronaUniverse u;
  u.min_base = 1;
  u.max_base = max_base;
  u.max_total = 2 * kMaxVertices;
  u.attachments = {"k1"};
  return enumerate_g2(u);
}

std::string spec_id(const GenCoronaSpec& spec) {
  std::string id = to_graph6(spec.base) + "|S=";
  for (std::size_t k = 0; k < spec.attach.size(); ++k) id += (k ? "," : "") + std::to_string(spec.attach[k]);
  id += "|H=";
  for (std::size_t k = 0; k < spec.attachments.size(); ++k) id += (k ? "," : "") + to_graph6(spec.attachments[k]);
  return id;
}

const std::vector<std::string>& verification_tags() {
  static const std::vector<std::string> tags{"thm2.4", "thm2.5", "thm3.2", "thm3.3", "thm3.5", "thm4.2",
                                             "thm4.3", "thm4.6", "lem5.1", "thm5.2", "thm5.3", "thm5.4",
                                             "thm5.6", "lem2.3", "seq",    "gb-oracle", "dim-formula", "enum"};
  return tags;
}

bool is_verification_tag(const std::string& tag) {
  const auto& t = verification_tags();
  return std::find(t.begin(), t.end(), tag) != t.end();
}

namespace {

using Records = std::vector<InstanceRecord>;

InstanceRecord record(std::string id, long long formula, long long oracle, std::string relation, std::string note = {}) {
  InstanceRecord r{std::move(id), formula, oracle, relation, false, std::move(note)};
  if (relation == "formula<=oracle") {
    r.pass = formula <= oracle;
  } else if (relation == "oracle<=formula") {
    r.pass = oracle <= formula;
  } else if (relation == "oracle<formula") {
    r.pass = oracle < formula;
  } else if (relation == "formula==oracle") {
    r.pass = formula == oracle;
  } else {
    throw InternalError("unknown relation " + relation);
  }
  return r;
}

InstanceRecord equivalence(std::string id, bool lhs, bool rhs, std::string note = {}) {
  InstanceRecord r{std::move(id), lhs, rhs, "formula<=>oracle", lhs == rhs, std::move(note)};
  return r;
}

InstanceRecord implication(std::string id, bool premise, bool conclusion, std::string note = {}) {
  InstanceRecord r{std::move(id), premise, conclusion, "formula=>oracle", !premise || conclusion, std::move(note)};
  return r;
}

// Runs fn on every index with `jobs` threads; results keep index order.
template <class Fn>
Records run_parallel(std::size_t count, int jobs, Fn fn) {
  std::vector<Records> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Records out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

template <class T, class Fn>
Records for_each_instance(const std::vector<T>& items, int jobs, Fn fn) {
  return run_parallel(items.size(), jobs, [&](std::size_t i) { return fn(items[i]); });
}

std::string vertex_suffix(const Graph& g, int v) { return to_graph6(g) + "/v=" + std::to_string(v); }

std::vector<int> oracle_depths(const std::vector<Graph>& hs, OracleCache& cache) {
  std::vector<int> out;
  for (const auto& h : hs) out.push_back(cache.get(h).depth);
  return out;
}

std::vector<bool> oracle_cm(const std::vector<Graph>& hs, OracleCache& cache) {
  std::vector<bool> out;
  for (const auto& h : hs) out.push_back(cache.get(h).cohen_macaulay());
  return out;
}

int default_max(int given, int fallback) { return given > 0 ? given : fallback; }

Records connected_sweep(int max_n, int jobs, const std::function<Records(const Graph&)>& fn) {
  return for_each_instance(enumerate_connected_graphs(max_n), jobs, fn);
}

}  // namespace

VerificationRun run_verification(const std::string& tag, const VerifyOptions& options, OracleCache& cache) {
  if (!is_verification_tag(tag)) throw InputError("unknown verification tag: " + tag);
  const auto start = std::chrono::steady_clock::now();
  VerificationRun run;
  run.tag = tag;
  const int jobs = options.jobs;
  const auto& u = options.universe;
  auto describe_g2 = [&] {
    std::string names;
    for (const auto& a : u.attachments) names += (names.empty() ? "" : ",") + a;
    run.universe = {{"class", "g2"},
                    {"base_orders", std::to_string(u.min_base) + ".." + std::to_string(u.max_base)},
                    {"max_total", std::to_string(u.max_total)},
                    {"attachments", names}};
  };
  auto describe_graphs = [&](const std::string& kind, int max_n) {
    run.universe = {{"class", kind}, {"max_n", std::to_string(max_n)}};
  };

  Records records;
  if (tag == "thm2.4" || tag == "thm2.5") {
    const int max_n = default_max(options.max_n, 5);
    describe_graphs("connected", max_n);
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      const auto inv = invariant_report(g);
      const int depth = cache.get(g).depth;
      if (tag == "thm2.4") return Records{record(to_graph6(g), depth_lower_bound_general(inv, 2).value, depth, "formula<=oracle")};
      const auto b = depth_upper_bound_kappa(inv, 2);
      return Records{record(to_graph6(g), b.value, depth, "oracle<=formula", b.note)};
    });
  } else if (tag == "thm3.2" || tag == "thm3.5" || tag == "thm5.6") {
    describe_g2();
    records = for_each_instance(enumerate_g2(u), jobs, [&](const GenCoronaSpec& spec) {
      const Graph d = composite(spec);
      const auto oracle = cache.get(d);
      const std::string id = spec_id(spec);
      if (tag == "thm3.2") {
        const auto ci = corona_invariants(spec);
        return Records{record(id, depth_lower_bound_G2_gen(ci, 2).value, oracle.depth, "formula<=oracle")};
      }
      if (tag == "thm3.5") {
        const auto ci = corona_invariants(spec);
        const auto depths = oracle_depths(spec.attachments, cache);
        return Records{record(id, depth_lower_bound_G2_binom(ci, depths).value, oracle.depth, "formula<=oracle")};
      }
      if (component_count(d) != 1 || spec.base.size() == 0) return Records{};
      const auto cm = oracle_cm(spec.attachments, cache);
      const auto verdict = classify_cm(spec, 2, cm);
      if (verdict.status == CmStatus::Undetermined) {
        InstanceRecord r{id, 0, 0, "formula<=>oracle", false, "classifier undetermined: " + verdict.reason};
        return Records{r};
      }
      return Records{equivalence(id, verdict.is_cm(), oracle.depth == dimension(d, 2).dim, verdict.reason)};
    });
  } else if (tag == "thm3.3") {
    describe_g2();
    run.universe["plus"] = "whiskers of connected graphs up to max_base vertices";
    auto specs = enumerate_g2(u);
    for (const auto& g : enumerate_connected_graphs(std::max(1, std::min(u.max_base, 7)))) {
      auto w = whisker(g).spec;
      const auto id = spec_id(w);
      if (std::none_of(specs.begin(), specs.end(), [&](const GenCoronaSpec& s) { return spec_id(s) == id; })) {
        specs.push_back(std::move(w));
      }
    }
    records = for_each_instance(specs, jobs, [&](const GenCoronaSpec& spec) {
      const auto depths = known_attachment_depths(spec, 2, cache);
      const auto ci = corona_invariants(spec, std::span<const int>(*depths), 2);
      if (!ci.in_Gprime.value_or(false)) return Records{};
      return Records{record(spec_id(spec), depth_equality_Gprime(ci, 2).value, cache.get(composite(spec)).depth,
                            "formula==oracle")};
    });
  } else if (tag == "thm4.2") {
    const int max_base = u.max_base;
    run.universe = {{"class", "g1"}, {"max_base", std::to_string(max_base)}};
    records = for_each_instance(enumerate_g1(max_base), jobs, [&](const GenCoronaSpec& spec) {
      const auto ci = corona_invariants(spec);
      return Records{record(spec_id(spec), reg_upper_bound_G1(ci, 2).value, cache.get(composite(spec)).reg,
                            "oracle<=formula")};
    });
  } else if (tag == "thm4.3") {
    const int max_n = default_max(options.max_n, 5);
    describe_graphs("connected", max_n);
    run.universe["plus"] = "special whisker labelings of gap-free graphs with 2..3 vertices";
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      const auto bound = hypergraph_induced_matching_bound(initial_ideal(g)).bound;
      return Records{record(to_graph6(g), bound, cache.get(g).reg, "formula<=oracle")};
    });
    for (const auto& g : enumerate_connected_graphs(3)) {
      if (g.size() == 0 || !is_gap_free(g)) continue;
      const auto lab = special_whisker_labeling(g);
      const int bound = hypergraph_induced_matching_bound(initial_ideal(lab.graph)).bound;
      const std::string id = "W(" + to_graph6(g) + ")/special";
      records.push_back(record(id + "/lower", g.order() + 1, bound, "formula<=oracle"));
      records.push_back(record(id + "/reg", bound, cache.get(lab.graph).reg, "formula<=oracle"));
    }
  } else if (tag == "thm4.6") {
    const int max_base = u.max_base;
    run.universe = {{"class", "gap-free whiskers"}, {"max_base", std::to_string(max_base)}};
    records = connected_sweep(std::min(max_base, 7), jobs, [&](const Graph& g) {
      if (g.size() == 0 || !is_gap_free(g)) return Records{};
      const auto b = reg_gapfree_whisker(invariant_report(g));
      return Records{record("W(" + to_graph6(g) + ")", b.value, cache.get(whisker(g).graph).reg, "formula==oracle")};
    });
  } else if (tag == "lem5.1") {
    describe_g2();
    run.universe["plus"] = "dimension(K_n, m) for n <= 5, m <= 4";
    records = for_each_instance(enumerate_g2(u), jobs, [&](const GenCoronaSpec& spec) {
      if (!spec.base.is_complete()) return Records{};
      std::vector<int> dims;
      for (const auto& h : spec.attachments) dims.push_back(dimension(h, 2).dim);
      const auto ci = corona_invariants(spec);
      return Records{record(spec_id(spec), dim_G2prime(ci, dims).value, dimension(composite(spec), 2).dim,
                            "formula==oracle")};
    });
    for (int n = 1; n <= 5; ++n) {
      for (int m = 2; m <= 4; ++m) {
        records.push_back(record("K" + std::to_string(n) + "/m=" + std::to_string(m), n + m - 1,
                                 dimension(Graph::complete(n), m).dim, "formula==oracle"));
      }
    }
  } else if (tag == "thm5.2") {
    const int max_n = default_max(options.max_n, 5);
    describe_graphs("all graphs H, cone over H", max_n);
    records = for_each_instance(enumerate_graphs(max_n), jobs, [&](const Graph& h) {
      const bool unmixed = is_unmixed(cone(h), 2).unmixed;
      return Records{implication("cone(" + to_graph6(h) + ")", unmixed, component_count(h) <= 2,
                                 "components=" + std::to_string(component_count(h)))};
    });
  } else if (tag == "thm5.3") {
    const int max_n = default_max(options.max_n, 5);
    describe_graphs("connected", max_n);
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      Records out;
      const bool cm = cache.get(g).cohen_macaulay();
      for (int v = 1; v <= g.order(); ++v) {
        out.push_back(implication(vertex_suffix(g, v), cm, cache.get(g_v_operation(g, v)).cohen_macaulay()));
      }
      return out;
    });
  } else if (tag == "thm5.4") {
    const int max_n = default_max(options.max_n, 3);
    describe_graphs("pairs of connected graphs, cone over their union", max_n);
    const auto parts = enumerate_connected_graphs(max_n);
    std::vector<std::pair<Graph, Graph>> pairs;
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = a; b < parts.size(); ++b) pairs.emplace_back(parts[a], parts[b]);
    }
    records = for_each_instance(pairs, jobs, [&](const std::pair<Graph, Graph>& hh) {
      const bool both = cache.get(hh.first).cohen_macaulay() && cache.get(hh.second).cohen_macaulay();
      const bool cone_cm = cache.get(cone(disjoint_union(hh.first, hh.second))).cohen_macaulay();
      return Records{equivalence("cone(" + to_graph6(hh.first) + "+" + to_graph6(hh.second) + ")", both, cone_cm)};
    });
  } else if (tag == "lem2.3") {
    const int max_n = default_max(options.max_n, 6);
    describe_graphs("all", max_n);
    records = for_each_instance(enumerate_graphs(max_n), jobs, [&](const Graph& g) {
      Records out;
      const int iv = free_vertex_counts(g).iv;
      for (int v = 1; v <= g.order(); ++v) {
        if (is_free_vertex(g, v)) continue;
        const auto dec = decompose_at_vertex(g, v);
        const int worst = std::max({free_vertex_counts(dec.completed).iv, free_vertex_counts(dec.removed.graph).iv,
                                    free_vertex_counts(dec.completed_removed.graph).iv});
        out.push_back(record(vertex_suffix(g, v), iv, worst, "oracle<formula"));
      }
      return out;
    });
  } else if (tag == "seq") {
    const int max_n = default_max(options.max_n, 4);
    describe_graphs("connected", max_n);
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      Records out;
      const auto whole = cache.get(g);
      for (int v = 1; v <= g.order(); ++v) {
        if (is_free_vertex(g, v)) continue;
        const auto dec = decompose_at_vertex(g, v);
        const auto a = cache.get(dec.completed);
        const auto b = cache.get(dec.removed.graph);
        const auto c = cache.get(dec.completed_removed.graph);
        const int depth_bound = std::min({a.depth, b.depth, c.depth + 1});
        const int reg_bound = std::max({a.reg, b.reg, c.reg + 1});
        out.push_back(record(vertex_suffix(g, v) + "/depth", depth_bound, whole.depth, "formula<=oracle"));
        out.push_back(record(vertex_suffix(g, v) + "/reg", reg_bound, whole.reg, "oracle<=formula"));
      }
      return out;
    });
  } else if (tag == "gb-oracle") {
    const int max_n = default_max(options.max_n, 6);
    describe_graphs("connected", max_n);
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      const auto fast = initial_ideal(g);
      const auto slow = buchberger_oracle(g);
      InstanceRecord r{to_graph6(g), static_cast<long long>(fast.generators().size()),
                       static_cast<long long>(slow.generators().size()), "formula==oracle", fast == slow,
                       fast == slow ? "" : "generator sets differ"};
      return Records{r};
    });
  } else if (tag == "dim-formula") {
    const int max_n = default_max(options.max_n, 5);
    describe_graphs("connected", max_n);
    records = connected_sweep(max_n, jobs, [&](const Graph& g) {
      return Records{record(to_graph6(g), dimension(g, 2).dim, krull_dimension(initial_ideal(g)), "formula==oracle")};
    });
  } else if (tag == "enum") {
    const int max_n = default_max(options.max_n, 6);
    describe_graphs("connected", max_n);
    static const long long expected[] = {1, 1, 2, 6, 21, 112, 853};
    if (max_n > 7) throw CapError("enum: max_n above 7");
    std::vector<long long> counts(static_cast<std::size_t>(max_n) + 1, 0);
    for (const auto& g : enumerate_connected_graphs(max_n)) ++counts[g.order()];
    for (int n = 1; n <= max_n; ++n) {
      records.push_back(record("n=" + std::to_string(n), expected[n - 1], counts[n], "formula==oracle"));
    }
  }

  std::stable_sort(records.begin(), records.end(),
                   [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; });
  run.records = std::move(records);
  for (const auto& r : run.records) (r.pass ? run.passed : run.failed)++;
  run.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace bei
