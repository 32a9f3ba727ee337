// Copyright 2026 The mfcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "mfcat/error.hpp"
#include "mfcat/homotopy.hpp"
#include "mfcat/mf.hpp"

using namespace mfcat;

namespace {

Ring weighted_z() {
  return make_ring(Field::rationals(), {"z"}, std::vector<std::int64_t>{1});
}

MatrixFactorization pair(const Ring& r, int n, int mu) {
  const Poly z = Poly::variable(r, "z");
  return MatrixFactorization::create(r, z.pow(n), PolyMatrix::of(z.pow(mu)),
                                     PolyMatrix::of(z.pow(n - mu)));
}

}  // namespace

TEST_CASE("factorization validation") {
  const Ring r = weighted_z();
  const Poly z = Poly::variable(r, "z");
  CHECK(pair(r, 5, 2).is_valid());
  try {
    MatrixFactorization::create(r, z.pow(5), PolyMatrix::of(z.pow(2)), PolyMatrix::of(z.pow(2)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAFactorization);
  }
  try {
    MatrixFactorization::create(r, Poly(r), PolyMatrix::of(Poly(r)), PolyMatrix::of(Poly(r)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroSuperpotential);
  }
}

TEST_CASE("shift is a strict involution and cone of id is contractible") {
  const Ring r = weighted_z();
  for (int n = 2; n <= 5; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      const auto X = pair(r, n, mu);
      CHECK(shift(shift(X)) == X);
      const auto id = MFMorphism::identity(X);
      CHECK(shift(shift(id)) == id);
      const auto c = cone(id);
      const auto res = find_null_homotopy(MFMorphism::identity(c.C), SearchPolicy::graded());
      REQUIRE(res.found());
      CHECK(is_null_homotopy(MFMorphism::identity(c.C), *res.homotopy));
    }
  }
}

TEST_CASE("W = z^2 - 1: identity of (z-1, z+1) is null-homotopic") {
  const Ring r = make_ring(Field::rationals(), {"z"});
  const Poly z = Poly::variable(r, "z");
  const Poly one(r, 1L);
  const auto X = MatrixFactorization::create(r, z * z - one, PolyMatrix::of(z - one),
                                             PolyMatrix::of(z + one));
  const auto id = MFMorphism::identity(X);
  const Homotopy h{PolyMatrix::of(Poly(r, Scalar(Field::rationals(), mpq_class(-1, 2)))),
                   PolyMatrix::of(Poly(r, Scalar(Field::rationals(), mpq_class(1, 2))))};
  CHECK(is_null_homotopy(id, h));
  const auto found = find_null_homotopy(id, SearchPolicy::bounded(2));
  REQUIRE(found.found());
  CHECK(is_null_homotopy(id, *found.homotopy));
}

TEST_CASE("identity of (z, z) over z^2 is not null-homotopic") {
  const Ring r = weighted_z();
  const auto X = pair(r, 2, 1);
  const auto res = find_null_homotopy(MFMorphism::identity(X), SearchPolicy::graded());
  CHECK(res.status == NullHomotopyResult::Status::ProvenNone);
  CHECK(graded_stable_hom_dim(X, X) == 1);
}

TEST_CASE("graded Hom dimensions on the univariate catalogue") {
  const Ring r = weighted_z();
  for (int n = 2; n <= 5; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto d = [n](int m) { return std::min(m, n - m); };
        CHECK(graded_stable_hom_dim(pair(r, n, mu), pair(r, n, nu)) ==
              static_cast<std::size_t>(std::min(d(mu), d(nu))));
      }
    }
  }
}

TEST_CASE("contractible objects") {
  const Ring r = weighted_z();
  const Poly z = Poly::variable(r, "z");
  const auto T = MatrixFactorization::create(r, z.pow(4), PolyMatrix::of(Poly(r, 1L)),
                                             PolyMatrix::of(z.pow(4)));
  CHECK(graded_stable_hom_dim(pair(r, 4, 2), T) == 0);
  CHECK(graded_stable_hom_dim(T, T) == 0);
}

TEST_CASE("derivative homotopy") {
  const Ring r = make_ring(Field::rationals(), {"z"});
  const Poly z = Poly::variable(r, "z");
  const auto X = MatrixFactorization::create(r, z.pow(5), PolyMatrix::of(z.pow(2)),
                                             PolyMatrix::of(z.pow(3)));
  const auto K = knorrer(X, "x", "y");
  for (const auto* Y : {&X, &K}) {
    for (const auto& var : Y->ring()->vars()) {
      const auto h = derivative_homotopy(*Y, var);
      const auto m = MFMorphism::multiplication(*Y, Y->W().derivative(var));
      CHECK(is_null_homotopy(m, h));
    }
  }
  CHECK_THROWS_AS(knorrer(X, "z", "y"), Error);
}

TEST_CASE("hom differential squares to zero") {
  const Ring r = weighted_z();
  const auto X = pair(r, 5, 2);
  const auto Y = pair(r, 5, 1);
  const Poly z = Poly::variable(r, "z");
  HomElement g{0, PolyMatrix::of(z), PolyMatrix::of(z.pow(3) + z)};
  const auto dg = hom_differential(g, X, Y);
  CHECK(dg.parity == 1);
  const auto ddg = hom_differential(dg, X, Y);
  CHECK(ddg.first.is_zero());
  CHECK(ddg.second.is_zero());
}

TEST_CASE("triangle certification for the standard triangle") {
  const Ring r = weighted_z();
  const auto X = pair(r, 5, 1);
  const auto Y = pair(r, 5, 2);
  const Poly z = Poly::variable(r, "z");
  const auto f = MFMorphism::create(X, Y, PolyMatrix::of(Poly(r, 1L)), PolyMatrix::of(z));
  const auto c = cone(f);
  CHECK(compose(c.g, f).is_zero() == false);
  CHECK(find_null_homotopy(compose(c.g, f), SearchPolicy::graded()).found());
  const auto cert = certify_triangle(f, c.g, c.h, SearchPolicy::graded());
  CHECK(cert.exact);
}

TEST_CASE("isomorphism in DB") {
  const Ring r = weighted_z();
  const auto X = pair(r, 5, 2);
  CHECK(is_iso_in_db(X, shift(pair(r, 5, 3)), SearchPolicy::graded()).isomorphic());
  CHECK(is_iso_in_db(X, pair(r, 5, 1), SearchPolicy::graded()).status ==
        IsoResult::Status::NotIsomorphic);
}
