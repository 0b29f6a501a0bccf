#include <doctest.h>

#include <set>

#include "bei/error.hpp"
#include "bei/verify.hpp"

using namespace bei;

namespace {

VerificationRun run(const std::string& tag, int max_n = 0) {
  static OracleCache cache;
  VerifyOptions o;
  o.max_n = max_n;
  return run_verification(tag, o, cache);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("oracle cache is keyed by isomorphism class") {
    OracleCache cache;
    const auto a = cache.get(Graph::path(4));
    const auto b = cache.get(permute(Graph::path(4), std::vector<int>{2, 1, 3, 4}));
    CHECK(a.depth == 5);
    CHECK(b.depth == 5);
    CHECK(a.reg == b.reg);
    CHECK(cache.size() == 1);
    CHECK(a.dim == 5);
    CHECK(a.cohen_macaulay());
  }

  TEST_CASE("attachment depths") {
    OracleCache cache;
    const auto spec = GenCoronaSpec{Graph::complete(2), {1, 2}, {Graph::complete(3), Graph::path(3)}};
    CHECK(*known_attachment_depths(spec, 2, cache) == std::vector<int>{4, 4});
    CHECK_FALSE(known_attachment_depths(spec, 3, cache).has_value());
    const auto complete_only = GenCoronaSpec{Graph::complete(2), {1}, {Graph::complete(3)}};
    CHECK(*known_attachment_depths(complete_only, 4, cache) == std::vector<int>{6});
  }

  TEST_CASE("named graphs") {
    CHECK(named_graph("k1") == Graph::empty(1));
    CHECK(named_graph("p3") == Graph::path(3));
    CHECK(named_graph("c4") == Graph::cycle(4));
    CHECK(named_graph("2k1") == Graph::empty(2));
    CHECK_THROWS_AS(named_graph("q3"), InputError);
    CHECK_THROWS_AS(named_graph("k"), InputError);
  }

  TEST_CASE("class enumeration") {
    const auto g1 = enumerate_g1(3);
    std::set<std::string> ids;
    for (const auto& s : g1) {
      CHECK(class_membership(s, std::nullopt, 2).in_G1);
      ids.insert(spec_id(s));
    }
    CHECK(ids.size() == g1.size());
    CHECK(enumerate_g1(0).empty());
    CoronaUniverse u;
    for (const auto& s : enumerate_g2(u)) {
      CHECK(class_membership(s, std::nullopt, 2).in_G2);
      CHECK(s.order() <= u.max_total);
      CHECK(s.base.order() >= 2);
      CHECK(s.base.order() <= 3);
    }
  }

  TEST_CASE("record tallies are consistent") {
    for (const std::string tag : {"lem2.3", "seq", "thm5.4"}) {
      const auto r = run(tag, tag == std::string("lem2.3") ? 5 : 0);
      CHECK(r.passed + r.failed == static_cast<int>(r.records.size()));
      CHECK(std::is_sorted(r.records.begin(), r.records.end(),
                           [](const InstanceRecord& a, const InstanceRecord& b) { return a.id < b.id; }));
      CHECK(r.all_pass());
    }
    CHECK_THROWS_AS(run("thm9.9"), InputError);
    CHECK(is_verification_tag("gb-oracle"));
  }

  TEST_CASE("cone and vertex-completion checks") {
    CHECK(run("thm5.2").all_pass());
    CHECK(run("thm5.3", 4).all_pass());
    CHECK(run("dim-formula", 5).all_pass());
  }

  TEST_CASE("parallel runs are deterministic") {
    OracleCache c1, c2;
    VerifyOptions one, four;
    one.max_n = 4;
    four.max_n = 4;
    four.jobs = 4;
    const auto a = run_verification("thm2.4", one, c1);
    const auto b = run_verification("thm2.4", four, c2);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
      CHECK(a.records[k].id == b.records[k].id);
      CHECK(a.records[k].oracle == b.records[k].oracle);
    }
  }
}
