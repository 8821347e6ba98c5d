// Copyright 2026 The paramcat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "paramcat/gates.hpp"
#include "paramcat/matrix_backend.hpp"
#include "paramcat/param.hpp"

using namespace paramcat;

namespace {

const MatrixBackend bk;
const ParamSpace space2(2);

ParamMor<MatrixBackend> rx_of(const AffineExpr& e) {
  return gate(bk, "rx", e);
}

CMatrix ix_matrix() {
  const cplx i(0.0, 1.0);
  return CMatrix(2, 2, {0, i, i, 0});
}

}  // namespace

TEST_CASE("make_param wraps an evaluation map") {
  auto constant = make_param<MatrixBackend>(
      2, 2, [](const ParamPoint&) { return CMatrix::identity(2); });
  CHECK(max_deviation(eval_at(constant, space2.sample(1)),
                      CMatrix::identity(2)) == 0.0);

  auto family = rx_of(AffineExpr::param(0));
  CHECK(max_deviation(eval_at(family, ParamPoint{{M_PI / 2, 0.0}}),
                      ix_matrix()) < 1e-12);

  // State preparation: dim 1 -> 2 column, theta0 = 0 gives the basis column.
  auto prep = make_param<MatrixBackend>(1, 2, [](const ParamPoint& th) {
    CMatrix m(2, 1);
    m.at(0, 0) = std::cos(th.coords[0]);
    m.at(1, 0) = std::sin(th.coords[0]);
    return m;
  });
  CMatrix basis(2, 1);
  basis.at(0, 0) = 1.0;
  CHECK(max_deviation(eval_at(prep, ParamPoint{{0.0, 0.0}}), basis) == 0.0);
}

TEST_CASE("composition of rotations adds affine angles") {
  auto f = rx_of(AffineExpr::param(0));
  auto g = rx_of(AffineExpr::param(1, 2.0));
  auto fg = compose(bk, g, f);
  auto sum = rx_of(AffineExpr::param(0) + AffineExpr::param(1, 2.0));
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(fg, th), eval_at(sum, th)) < 1e-12);
  }
  CHECK(max_deviation(eval_at(fg, ParamPoint{{M_PI / 2, 0.0}}), ix_matrix()) <
        1e-12);
}

TEST_CASE("composition with identity is the identity of composition") {
  auto f = rx_of(AffineExpr::param(0));
  auto left = compose(bk, identity(bk, 2), f);
  auto right = compose(bk, f, identity(bk, 2));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(left, th), eval_at(f, th)) == 0.0);
    CHECK(max_deviation(eval_at(right, th), eval_at(f, th)) == 0.0);
  }
}

TEST_CASE("composition is associative pointwise") {
  std::mt19937_64 rng(5);
  auto f = rx_of(AffineExpr::param(0));
  auto g = gate(bk, "rz", AffineExpr::param(1));
  auto h = gate(bk, "h", std::nullopt);
  auto lhs = compose(bk, compose(bk, h, g), f);
  auto rhs = compose(bk, h, compose(bk, g, f));
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(lhs, th), eval_at(rhs, th)) <= 1e-10);
  }
}

TEST_CASE("composition rejects object mismatches") {
  auto f = rx_of(AffineExpr::param(0));
  CHECK_THROWS_AS(compose(bk, identity(bk, 4), f), CompositionError);
}

TEST_CASE("identities are constant families") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(identity(bk, 2), th), CMatrix::identity(2)) ==
          0.0);
    CHECK(max_deviation(eval_at(identity(bk, 1), th), CMatrix::identity(1)) ==
          0.0);
    CHECK(max_deviation(eval_at(identity(bk, 4), th), CMatrix::identity(4)) ==
          0.0);
  }
}

TEST_CASE("tensor acts pointwise") {
  auto f = rx_of(AffineExpr::param(0));
  auto g = rx_of(AffineExpr::param(1, 2.0));
  auto fg = tensor(bk, f, g);
  CHECK(fg.dom == 4);
  CHECK(fg.cod == 4);

  auto at = eval_at(fg, ParamPoint{{M_PI / 2, 0.0}});
  CHECK(max_deviation(at, mat_tensor(ix_matrix(), CMatrix::identity(2))) <
        1e-12);

  auto ids = tensor(bk, identity(bk, 2), identity(bk, 3));
  for (std::uint64_t s = 0; s < 10; ++s)
    CHECK(max_deviation(eval_at(ids, space2.sample(s)),
                        CMatrix::identity(6)) == 0.0);
}

TEST_CASE("interchange holds pointwise") {
  auto f = rx_of(AffineExpr::param(0));
  auto g = gate(bk, "rz", AffineExpr::param(1));
  auto f2 = gate(bk, "h", std::nullopt);
  auto g2 = rx_of(AffineExpr::param(1, -1.0));
  auto lhs = compose(bk, tensor(bk, g, g2), tensor(bk, f, f2));
  auto rhs = tensor(bk, compose(bk, g, f), compose(bk, g2, f2));
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(lhs, th), eval_at(rhs, th)) <= 1e-10);
  }
}

TEST_CASE("structural morphisms are constant invertible families") {
  auto a = associator(bk, 2, 2, 2);
  CHECK(max_deviation(eval_at(a, space2.sample(9)), CMatrix::identity(8)) ==
        0.0);

  auto l = left_unitor(bk, 3);
  auto l_inv = include(bk, 3, 3, CMatrix::identity(3));
  auto round = compose(bk, l_inv, l);
  CHECK(max_deviation(eval_at(round, space2.sample(2)),
                      CMatrix::identity(3)) == 0.0);

  // Pentagon on dims (2,2,2,2).
  auto lhs = compose(bk, associator(bk, 2, 2, 4), associator(bk, 4, 2, 2));
  auto rhs = compose(
      bk,
      compose(bk, tensor(bk, identity(bk, 2), associator(bk, 2, 2, 2)),
              associator(bk, 2, 4, 2)),
      tensor(bk, associator(bk, 2, 2, 2), identity(bk, 2)));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(lhs, th), eval_at(rhs, th)) <= 1e-10);
  }
}

TEST_CASE("braiding commutes Kronecker factors and is self-inverse") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto b = braiding(bk, 2, 2);
  auto k = eval_at(b, space2.sample(0));
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix a(2, 2), c(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a.at(i, j) = {dist(rng), dist(rng)};
        c.at(i, j) = {dist(rng), dist(rng)};
      }
    auto conj = mat_compose(k, mat_compose(mat_tensor(a, c), k.dagger()));
    CHECK(max_deviation(conj, mat_tensor(c, a)) < 1e-12);
  }

  auto round = compose(bk, braiding(bk, 3, 2), braiding(bk, 2, 3));
  CHECK(max_deviation(eval_at(round, space2.sample(4)),
                      CMatrix::identity(6)) == 0.0);
}

TEST_CASE("conjugating the R_Z family by the basis swap negates the angle") {
  auto sigma = include(bk, 2, 2, pauli_x());
  auto rz = gate(bk, "rz", AffineExpr::param(0));
  auto conj = compose(bk, sigma, compose(bk, rz, sigma));
  auto neg = gate(bk, "rz", AffineExpr::param(0, -1.0));
  for (std::uint64_t s = 0; s < 30; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(conj, th), eval_at(neg, th)) < 1e-12);
  }
}

TEST_CASE("evaluation distributes and rejects bad points") {
  auto f = rx_of(AffineExpr::param(0));
  CHECK(max_deviation(eval_at(f, ParamPoint{{0.0, 0.0}}),
                      CMatrix::identity(2)) < 1e-15);
  CHECK_THROWS_AS(
      eval_at(f, ParamPoint{{std::numeric_limits<double>::infinity()}}),
      EvaluationError);
  CHECK_THROWS_AS(f.eval(ParamPoint{{}}), ArityError);
}

TEST_CASE("inclusion is a section of every evaluation") {
  auto h = include(bk, 2, 2, hadamard());
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(max_deviation(eval_at(h, space2.sample(s)), hadamard()) == 0.0);

  // Functoriality of the inclusion.
  auto prod = include(bk, 2, 2, mat_compose(hadamard(), pauli_x()));
  auto composed = compose(bk, h, include(bk, 2, 2, pauli_x()));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto th = space2.sample(s);
    CHECK(max_deviation(eval_at(prod, th), eval_at(composed, th)) == 0.0);
  }

  // Included braiding equals the braiding family.
  auto inc_b = include(bk, 6, 6, commutation_matrix(2, 3));
  auto b = braiding(bk, 2, 3);
  CHECK(max_deviation(eval_at(inc_b, space2.sample(3)),
                      eval_at(b, space2.sample(3))) == 0.0);
}

TEST_CASE("const_at freezes a family at a point") {
  auto f = rx_of(AffineExpr::param(0));
  auto frozen = const_at(f, ParamPoint{{M_PI / 2, 0.0}});
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(max_deviation(eval_at(frozen, space2.sample(s)), ix_matrix()) <
          1e-12);

  // Fixed point on constant families.
  auto h = include(bk, 2, 2, hadamard());
  auto frozen_h = const_at(h, space2.sample(0));
  CHECK(max_deviation(eval_at(frozen_h, space2.sample(5)), hadamard()) == 0.0);

  // Idempotence, probed at 20 points.
  auto twice = const_at(frozen, space2.sample(1));
  for (std::uint64_t s = 0; s < 20; ++s)
    CHECK(max_deviation(eval_at(twice, space2.sample(s)),
                        eval_at(frozen, space2.sample(s))) == 0.0);
}

TEST_CASE("invert_included checks the inverse claim") {
  auto [x1, x2] = invert_included(bk, 2, 2, pauli_x(), pauli_x(), 1e-12);
  auto round = compose(bk, x2, x1);
  CHECK(max_deviation(eval_at(round, space2.sample(0)),
                      CMatrix::identity(2)) == 0.0);

  CHECK_NOTHROW(invert_included(bk, 2, 2, hadamard(), hadamard(), 1e-12));
  CHECK_NOTHROW(
      invert_included(bk, 2, 2, rx_matrix(0.8), rx_matrix(-0.8), 1e-12));
  CHECK_THROWS_AS(invert_included(bk, 2, 2, pauli_x(), hadamard(), 1e-12),
                  InversionError);
}

TEST_CASE("check_equiv: affine rotation fusion") {
  auto fused = compose(bk, rx_of(AffineExpr::param(1, 2.0)),
                       rx_of(AffineExpr::param(0)));
  auto direct = rx_of(AffineExpr::param(0) + AffineExpr::param(1, 2.0));
  auto v = check_equiv(bk, space2, fused, direct, 100, 42, 1e-10);
  CHECK(v.status == EquivVerdict::Status::equivalent);
  CHECK(v.samples_used == 101);  // includes the all-zeros point
}

TEST_CASE("check_equiv: reflexivity and counterexamples") {
  auto f = rx_of(AffineExpr::param(0));
  CHECK(check_equiv(bk, space2, f, f, 1, 0, 1e-12).status ==
        EquivVerdict::Status::equivalent);

  auto rz = gate(bk, "rz", AffineExpr::param(0));
  auto rz_neg = gate(bk, "rz", AffineExpr::param(0, -1.0));
  auto v = check_equiv(bk, space2, rz, rz_neg, 100, 7, 1e-10);
  REQUIRE(v.status == EquivVerdict::Status::inequivalent);
  REQUIRE(v.counterexample.has_value());
  const auto& [pt, dev] = *v.counterexample;
  CHECK(dev ==
        doctest::Approx(2.0 * std::abs(std::sin(pt.coords[0]))).epsilon(1e-9));

  auto wide = tensor(bk, f, f);
  CHECK(check_equiv(bk, space2, f, wide, 10, 0, 1e-10).status ==
        EquivVerdict::Status::dimension_mismatch);
}

TEST_CASE("check_equiv is seed-deterministic and scheduling-independent") {
  auto rz = gate(bk, "rz", AffineExpr::param(0));
  auto rz_neg = gate(bk, "rz", AffineExpr::param(0, -1.0));
  auto a = check_equiv(bk, space2, rz, rz_neg, 50, 9, 1e-10, false, true);
  auto b = check_equiv(bk, space2, rz, rz_neg, 50, 9, 1e-10, false, false);
  REQUIRE(a.counterexample.has_value());
  REQUIRE(b.counterexample.has_value());
  CHECK(a.counterexample->first.coords == b.counterexample->first.coords);
  CHECK(a.counterexample->second == b.counterexample->second);
}

TEST_CASE("zero-arity spaces reduce to the base semantics") {
  ParamSpace space0(0);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> dims(1, 4);
  const ParamPoint empty = space0.zeros();
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t d0 = dims(rng), d1 = dims(rng), d2 = dims(rng);
    CMatrix mf(d1, d0), mg(d2, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d0; ++j) mf.at(i, j) = {dist(rng), dist(rng)};
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d1; ++j) mg.at(i, j) = {dist(rng), dist(rng)};
    auto jf = include(bk, d0, d1, mf);
    auto jg = include(bk, d1, d2, mg);
    CHECK(max_deviation(eval_at(compose(bk, jg, jf), empty),
                        bk.compose(mg, mf)) == 0.0);
    CHECK(max_deviation(eval_at(tensor(bk, jf, jg), empty),
                        bk.tensor(mf, mg)) == 0.0);
    CHECK(max_deviation(eval_at(identity(bk, d0), empty), bk.identity(d0)) ==
          0.0);
  }
}
