#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"
#include "ybst/enumerate.hpp"

using namespace ybst;

TEST_CASE("a single point carries exactly one solution") {
  SearchSpec spec;
  spec.n = 1;
  long long count = 0;
  EnumerationSummary s = enumerate(spec, [&count](const Solution&) { ++count; });
  CHECK(count == 1);
  CHECK(s.emitted == 1);
}

TEST_CASE("unconstrained census at n = 2 equals the brute-force filter of all 256 maps") {
  std::set<std::vector<int>> oracle = support::brute_solutions_n2();
  std::set<std::vector<int>> mine;
  SearchSpec spec;
  spec.n = 2;
  enumerate(spec, [&mine](const Solution& s) { mine.insert(solution_key(s)); });
  CHECK(mine == oracle);
  CHECK(mine.size() == oracle.size());
}

TEST_CASE("involutive non-degenerate census at n = 2 is flip and the double twist") {
  SearchSpec spec;
  spec.n = 2;
  spec.require_lnd = true;
  spec.require_rnd = true;
  spec.require_involutive = true;
  spec.dedup = true;
  std::vector<std::vector<int>> keys;
  enumerate(spec, [&keys](const Solution& s) { keys.push_back(solution_key(s)); });
  REQUIRE(keys.size() == 2);
  std::set<std::vector<int>> expect{canonical_key(support::flip(2)),
                                    canonical_key(support::involutive_twist())};
  CHECK(std::set<std::vector<int>>(keys.begin(), keys.end()) == expect);
}

TEST_CASE("census sizes at n = 2: 14 lnd tables in 10 classes") {
  SearchSpec spec;
  spec.n = 2;
  spec.require_lnd = true;
  EnumerationSummary full = enumerate(spec, nullptr);
  CHECK(full.emitted == 14);
  spec.dedup = true;
  EnumerationSummary classes = enumerate(spec, nullptr);
  CHECK(classes.emitted == 10);
  CHECK(classes.by_properties.at("lnd") == 3);
  CHECK(classes.by_properties.at("lnd+idempotent") == 3);
  CHECK(classes.by_properties.at("lnd+rnd+bijective") == 2);
  CHECK(classes.by_properties.at("lnd+rnd+bijective+involutive") == 2);
}

TEST_CASE("census sizes at n = 3 are stable") {
  SearchSpec spec;
  spec.n = 3;
  spec.require_lnd = true;
  CHECK(enumerate(spec, nullptr).emitted == 354);
  spec.dedup = true;
  CHECK(enumerate(spec, nullptr).emitted == 90);
}

TEST_CASE("parallel and serial runs produce identical streams") {
  for (bool dedup : {false, true}) {
    SearchSpec spec;
    spec.n = 3;
    spec.require_lnd = true;
    spec.dedup = dedup;
    std::vector<std::vector<int>> serial, parallel;
    enumerate(spec, [&serial](const Solution& s) { serial.push_back(solution_key(s)); });
    spec.jobs = 4;
    enumerate(spec, [&parallel](const Solution& s) { parallel.push_back(solution_key(s)); });
    CHECK(serial == parallel);
  }
}

TEST_CASE("repeat runs are deterministic") {
  SearchSpec spec;
  spec.n = 2;
  std::vector<std::vector<int>> a, b;
  enumerate(spec, [&a](const Solution& s) { a.push_back(solution_key(s)); });
  enumerate(spec, [&b](const Solution& s) { b.push_back(solution_key(s)); });
  CHECK(a == b);
}

TEST_CASE("budget and size guards") {
  SearchSpec spec;
  spec.n = 3;  // unconstrained space is (27*27)^3, far over budget
  CHECK_THROWS_AS(enumerate(spec, nullptr), resource_error);
  spec.n = 5;
  CHECK_THROWS_AS(enumerate(spec, nullptr), resource_error);
  spec.n = 4;
  spec.require_lnd = true;
  CHECK_THROWS_AS(enumerate(spec, nullptr), resource_error);  // needs involutive pruning
  spec.require_involutive = true;
  CHECK_NOTHROW(enumerate(spec, nullptr));
}

TEST_CASE("every emitted solution is canonical under dedup") {
  SearchSpec spec;
  spec.n = 2;
  spec.require_lnd = true;
  spec.dedup = true;
  enumerate(spec, [](const Solution& s) {
    CHECK(is_canonical(s));
    CHECK(check_ybe(s).valid);
  });
}

TEST_CASE("theorem B audit is clean at n = 2") {
  TheoremBAudit a = audit_theorem_b(2);
  CHECK(a.checked == 14);
  CHECK(a.counterexamples == 0);
}

TEST_CASE("the two-sigma example is consistent with theorem B") {
  PropertyFlags f = classify(support::candc_prime());
  CHECK(f.lnd);
  CHECK(!f.rnd);
  CHECK(!f.bijective);  // not rnd, hence not bijective
}

TEST_CASE("flag implications hold across the unconstrained n = 2 census") {
  SearchSpec spec;
  spec.n = 2;
  enumerate(spec, [](const Solution& s) {
    PropertyFlags f = classify(s);
    if (f.involutive) CHECK(f.bijective);
    if (f.idempotent && f.bijective) {
      // r must be the identity map on pairs
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) CHECK(s.apply(x, y) == std::pair<int, int>{x, y});
    }
  });
}

TEST_CASE("bijectivity of r is equivalent to bijectivity of every sigma row") {
  SearchSpec spec;
  spec.n = 2;
  spec.require_lnd = true;
  enumerate(spec, [](const Solution& s) {
    bool sig_bij = true;
    for (const FinMap& g : sigma_maps(s))
      if (!g.is_permutation()) sig_bij = false;
    CHECK(classify(s).bijective == sig_bij);
    Solution d = derived_solution(s);  // re-verifies YBE internally
    CHECK(check_ybe(d).valid);
  });
}

TEST_CASE("involutive-dim audit at n = 2") {
  // Independent aggregation over the full census for the expected counts.
  SearchSpec spec;
  spec.n = 2;
  spec.require_lnd = true;
  long long bijective = 0, involutive = 0;
  enumerate(spec, [&](const Solution& s) {
    PropertyFlags f = classify(s);
    if (f.bijective && f.rnd) ++bijective;
    if (f.bijective && f.involutive) ++involutive;
  });

  InvolutiveDimAudit a = audit_involutive_dim(2);
  CHECK(a.checked == bijective);
  CHECK(a.max_dim == 3);  // recorded from the run; equals the flip's C(3,2)
  CHECK(a.involutive == involutive);
  CHECK(a.maximizers == involutive);
  CHECK(a.maximizers_are_involutive);
}
