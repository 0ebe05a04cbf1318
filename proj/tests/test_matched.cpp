#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "ybst/matched.hpp"

using namespace ybst;
using support::cyclic_table;
using support::flip;
using support::rotation_system;
using support::trivial_brace;

static MatchedSystemST identity_system(const SemiTruss& a1, const SemiTruss& a2) {
  MatchedSystemST sys;
  sys.a1 = a1;
  sys.a2 = a2;
  sys.alpha.assign(a2.m, Perm::identity(a1.m));
  sys.beta.assign(a1.m, Perm::identity(a2.m));
  return sys;
}

TEST_CASE("the rotation action on the right-zero semitruss is a matched system") {
  SystemReport rep = validate_system_semitruss(rotation_system(3));
  CHECK(rep.valid);
  CHECK(rep.violations.empty());
}

TEST_CASE("identity actions between trivial braces form a matched system") {
  MatchedSystemST sys = identity_system(trivial_brace(cyclic_table(2)), trivial_brace(cyclic_table(2)));
  CHECK(validate_system_semitruss(sys).valid);
}

TEST_CASE("a non-homomorphic alpha is rejected with a witness") {
  MatchedSystemST sys = rotation_system(3);
  sys.alpha[1] = Perm(3, {1, 0, 2});  // a transposition breaks alpha_{u o v} = alpha_u alpha_v
  SystemReport rep = validate_system_semitruss(sys);
  CHECK(!rep.valid);
  bool found = false;
  for (const SystemViolation& v : rep.violations)
    if (v.cond == "alpha-homomorphism") found = true;
  CHECK(found);
}

TEST_CASE("matched product of trivial braces is the direct product with flip solution") {
  MatchedSystemST sys = identity_system(trivial_brace(cyclic_table(2)), trivial_brace(cyclic_table(2)));
  SemiTruss prod = matched_product_semitruss(sys);
  CHECK(prod.m == 4);
  REQUIRE(prod.unit.has_value());
  CHECK(*prod.unit == 0);
  Solution r = associated_solution(prod);
  CHECK(r.lam == flip(4).lam);
  CHECK(r.rho == flip(4).rho);
}

TEST_CASE("matched product of the rotation system is a nine-element semitruss") {
  SemiTruss prod = matched_product_semitruss(rotation_system(3));
  CHECK(prod.m == 9);
  CHECK(verify_semitruss(prod).core_pass());
  CHECK(!prod.unit.has_value());
}

TEST_CASE("solution of the product equals the matched product of the solutions") {
  for (const MatchedSystemST& sys :
       {rotation_system(3),
        identity_system(trivial_brace(cyclic_table(2)), trivial_brace(cyclic_table(2)))}) {
    Solution via_semitruss = associated_solution(matched_product_semitruss(sys));
    MatchedSystemSol induced = induced_solution_system(sys);
    CHECK(validate_system_solutions(induced).valid);
    Solution via_solutions = matched_product_solutions(induced);
    REQUIRE(via_semitruss.n == via_solutions.n);
    for (int a = 0; a < via_semitruss.n; ++a)
      for (int b = 0; b < via_semitruss.n; ++b)
        CHECK(via_semitruss.apply(a, b) == via_solutions.apply(a, b));
  }
}

TEST_CASE("trivial actions between two flips give the flip on the product") {
  MatchedSystemSol sys;
  sys.rs = flip(2);
  sys.rt = flip(2);
  sys.alpha.assign(2, Perm::identity(2));
  sys.beta.assign(2, Perm::identity(2));
  CHECK(validate_system_solutions(sys).valid);
  Solution r = matched_product_solutions(sys);
  CHECK(r.lam == flip(4).lam);
  CHECK(r.rho == flip(4).rho);
}

TEST_CASE("non-commuting alpha between flips violates (s1)") {
  MatchedSystemSol sys;
  sys.rs = flip(3);
  sys.rt = flip(2);
  sys.alpha = {Perm(3, {1, 0, 2}), Perm(3, {0, 2, 1})};  // (01) and (12) do not commute
  sys.beta.assign(3, Perm::identity(2));
  SystemReport rep = validate_system_solutions(sys);
  CHECK(!rep.valid);
  bool found = false;
  for (const SystemViolation& v : rep.violations)
    if (v.cond == "s1") found = true;
  CHECK(found);
  CHECK_THROWS_AS(matched_product_solutions(sys), precondition_error);
}

TEST_CASE("identity actions couple the four-point example with a trivial brace") {
  // The validator is the oracle: identity actions satisfy every condition
  // here, so the eight-point product must verify.
  MatchedSystemST sys = identity_system(support::circnotgroup(), trivial_brace(cyclic_table(2)));
  REQUIRE(validate_system_semitruss(sys).valid);
  SemiTruss prod = matched_product_semitruss(sys);
  CHECK(prod.m == 8);
  CHECK(!prod.unit.has_value());
  Solution a = associated_solution(prod);
  Solution b = matched_product_solutions(induced_solution_system(sys));
  CHECK(a.lam == b.lam);
  CHECK(a.rho == b.rho);
}

TEST_CASE("product with a one-point factor is isomorphic to the other factor") {
  SemiTruss point = trivial_brace(cyclic_table(1));
  SemiTruss a = trivial_brace(cyclic_table(2));
  MatchedSystemST sys = identity_system(a, point);
  SemiTruss prod = matched_product_semitruss(sys);
  CHECK(prod.m == a.m);
  auto w = are_isomorphic(associated_solution(prod), associated_solution(a));
  CHECK(w.has_value());
}

TEST_CASE("system shape validation") {
  MatchedSystemST sys = rotation_system(3);
  sys.alpha.pop_back();
  CHECK_THROWS_AS(validate_system_shape(sys.a1.m, sys.a2.m, sys.alpha, sys.beta), input_error);
}
