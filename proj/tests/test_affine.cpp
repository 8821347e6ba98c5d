// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "paramcat/affine.hpp"

#include <cmath>
#include <vector>

using namespace paramcat;

TEST_CASE("affine evaluation") {
  auto t0 = AffineExpr::param(0);
  CHECK(t0.eval(std::vector<double>{M_PI / 2, 0.0}) == M_PI / 2);

  auto two_t1 = AffineExpr::param(1, 2.0);
  CHECK(two_t1.eval(std::vector<double>{M_PI / 2, 0.0}) == 0.0);

  AffineExpr e(1.5);
  e.add_term(0, -0.5);
  e.add_term(1, 2.0);
  CHECK(e.eval(std::vector<double>{2.0, 1.0}) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("out-of-range parameter index raises") {
  auto t1 = AffineExpr::param(1);
  CHECK_THROWS_AS(t1.eval(std::vector<double>{0.5}), ArityError);
}

TEST_CASE("terms stay sorted and deduplicated") {
  AffineExpr e;
  e.add_term(3, 1.0);
  e.add_term(1, 2.0);
  e.add_term(3, 0.5);
  REQUIRE(e.terms().size() == 2);
  CHECK(e.terms()[0].first == 1);
  CHECK(e.terms()[1].first == 3);
  CHECK(e.terms()[1].second == 1.5);

  e.add_term(1, -2.0);  // cancels to zero, term removed
  CHECK(e.terms().size() == 1);
}

TEST_CASE("arithmetic combines expressions") {
  auto a = AffineExpr::param(0) + AffineExpr::param(1, 2.0);
  auto b = AffineExpr::constant(1.0) - AffineExpr::param(0, 0.5);
  auto c = a + b;
  CHECK(c.eval(std::vector<double>{2.0, 3.0}) == doctest::Approx(2.0 + 6.0 + 1.0 - 1.0));
  CHECK(c.min_arity() == 2);
}
