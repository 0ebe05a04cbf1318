#include <catch2/catch_amalgamated.hpp>

#include "ybst/fin_map.hpp"

using ybst::FinMap;
using ybst::Perm;

TEST_CASE("FinMap construction validates entries") {
  CHECK_THROWS_AS(FinMap(2, {0, 2}), ybst::input_error);
  CHECK_THROWS_AS(FinMap(3, {0, 1}), ybst::input_error);
  CHECK_NOTHROW(FinMap(3, {2, 2, 2}));
}

TEST_CASE("composition is associative and identity is neutral") {
  FinMap f(3, {1, 2, 0});
  FinMap g(3, {0, 0, 1});
  FinMap h(3, {2, 1, 1});
  CHECK(f.after(g).after(h) == f.after(g.after(h)));
  CHECK(f.after(FinMap::identity(3)) == f);
  CHECK(FinMap::identity(3).after(f) == f);
}

TEST_CASE("permutation inverse composes to identity") {
  Perm p(4, {2, 0, 3, 1});
  CHECK(p.after(p.inverse()).is_identity());
  CHECK(p.inverse().after(p).is_identity());
  CHECK_THROWS_AS(Perm(3, {0, 0, 1}), ybst::input_error);
}

TEST_CASE("idempotency and powers") {
  FinMap c = FinMap::constant(3, 1);
  CHECK(c.is_idempotent());
  FinMap tau(2, {1, 0});
  CHECK(!tau.is_idempotent());
  CHECK(tau.power(2).is_identity());
  CHECK(tau.power(0).is_identity());
  CHECK(tau.power(3) == tau);
}
