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

#include <random>

#include "mfcat/andyn.hpp"
#include "mfcat/error.hpp"
#include "mfcat/homotopy.hpp"
#include "mfcat/quotmod.hpp"

using namespace mfcat;

namespace {

const Field Q = Field::rationals();

MatrixFactorization contractible(const Ring& r, int n) {
  const Poly W = Poly::variable(r, "z").pow(static_cast<std::uint32_t>(n));
  return MatrixFactorization::create(r, W, PolyMatrix::of(Poly(r, 1L)), PolyMatrix::of(W));
}

}  // namespace

TEST_CASE("morphism validation examples") {
  const Ring r = an_ring(Q);
  const Poly z = Poly::variable(r, "z");
  for (int n = 2; n <= 6; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto X = an_mf(r, n, mu);
        const auto Y = an_mf(r, n, nu);
        if (mu >= nu) {
          CHECK_NOTHROW(MFMorphism::create(X, Y, PolyMatrix::of(z.pow(mu - nu)),
                                           PolyMatrix::of(Poly(r, 1L))));
        } else {
          CHECK_NOTHROW(MFMorphism::create(X, Y, PolyMatrix::of(Poly(r, 1L)),
                                           PolyMatrix::of(z.pow(nu - mu))));
        }
      }
    }
  }
  try {
    MFMorphism::create(an_mf(r, 5, 2), an_mf(r, 5, 1), PolyMatrix::of(Poly(r, 1L)),
                       PolyMatrix::of(Poly(r)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMorphism);
  }
}

TEST_CASE("cone of the zero map splits") {
  const Ring r = an_ring(Q);
  const auto X = an_mf(r, 5, 2);
  const auto Y = an_mf(r, 5, 1);
  const auto c = cone(MFMorphism::zero(X, Y));
  CHECK(c.C == direct_sum(Y, shift(X)));
  CHECK(c.C.rank() == 2);
}

TEST_CASE("cone of a generator has the expected cokernel") {
  const Ring r = an_ring(Q);
  const auto f = an_lift(r, AnMorphism::alpha(Q, 5, 2, 1));
  auto jordan = decompose(cok(cone(f).C));
  jordan.erase(5);
  CHECK(jordan == std::map<std::uint32_t, std::size_t>{{1, 1}});
}

TEST_CASE("Hom dimensions are invariant under shift") {
  const Ring r = an_ring(Q);
  for (int n = 2; n <= 5; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto X = an_mf(r, n, mu);
        const auto Y = an_mf(r, n, nu);
        CHECK(graded_stable_hom_dim(X, Y) == graded_stable_hom_dim(shift(X), shift(Y)));
      }
    }
  }
  const auto A = an_mf(r, 3, 1);
  const auto B = an_mf(r, 3, 2);
  CHECK(graded_stable_hom_dim(A, B) == 1);
}

TEST_CASE("homotopy is compatible with composition") {
  const Ring r = an_ring(Q);
  const int n = 6;
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> idx(1, n - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = idx(rng), b = idx(rng), c = idx(rng);
    const auto X = an_mf(r, n, a);
    const auto Y = an_mf(r, n, b);
    const auto Z = an_mf(r, n, c);
    const auto f = an_lift(r, AnMorphism::alpha(Q, n, b, a));
    const auto g = an_lift(r, AnMorphism::alpha(Q, n, c, b));
    // Perturb f by a boundary; the composite changes only by a boundary.
    const Poly z = Poly::variable(r, "z");
    const Homotopy h{PolyMatrix::of(z.pow(2) + Poly(r, 1L)), PolyMatrix::of(z)};
    const auto f2 = f + boundary(X, Y, h);
    CHECK(homotopy_equal(f, f2, SearchPolicy::graded()).found() == true);
    CHECK(homotopy_equal(compose(g, f), compose(g, f2), SearchPolicy::bounded()).found());
    CHECK(homotopy_equal(f2, f, SearchPolicy::bounded()).found());
    (void)Z;
  }
}

TEST_CASE("contractible summands vanish in DB") {
  const Ring r = an_ring(Q);
  const auto X = an_mf(r, 5, 2);
  const auto T = contractible(r, 5);
  const auto res = is_iso_in_db(direct_sum(X, T), X, SearchPolicy::graded());
  CHECK(res.isomorphic());
  CHECK(find_null_homotopy(MFMorphism::identity(T), SearchPolicy::graded()).found());
  CHECK(is_iso_in_db(an_mf(r, 5, 2), an_mf(r, 5, 1), SearchPolicy::graded()).status ==
        IsoResult::Status::NotIsomorphic);
}

TEST_CASE("stabilize ignores free summands up to isomorphism") {
  const Ring r = an_ring(Q);
  const Poly W = Poly::variable(r, "z").pow(4);
  const auto M = module_from_partition(W, {2, 1});
  const auto MA = direct_sum(M, free_module(W));
  CHECK(is_iso_in_db(stabilize(M), stabilize(MA), SearchPolicy::graded()).isomorphic());
}

TEST_CASE("module examples") {
  const Ring r = make_ring(Q, {"z"});
  const Poly z = Poly::variable(r, "z");
  Mat swap(Q, 2, 2);
  swap(0, 1) = Scalar::one(Q);
  swap(1, 0) = Scalar::one(Q);
  CHECK_NOTHROW(QuotModule::create(z * z - Poly(r, 1L), swap));
  CHECK_THROWS_AS(QuotModule::create(parse_poly("z*x", make_ring(Q, {"z", "x"})), swap), Error);

  const Poly W3 = z.pow(3);
  CHECK(decompose(module_from_partition(W3, {2, 1})) ==
        std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 1}});
  CHECK(decompose(free_module(W3)) == std::map<std::uint32_t, std::size_t>{{3, 1}});

  const Poly W4 = z.pow(4);
  const auto J = module_from_partition(W4, {2, 2});
  Mat C = Mat::identity(Q, 4);
  C(0, 3) = Scalar(Q, 2L);
  C(2, 1) = Scalar(Q, -1L);
  C(1, 0) = Scalar(Q, 3L);
  const auto Ci = C.inverse();
  REQUIRE(Ci.has_value());
  CHECK(decompose(QuotModule::create(W4, C * J.Z() * *Ci)) ==
        std::map<std::uint32_t, std::size_t>{{2, 2}});
  CHECK_THROWS_AS(decompose(free_module(z * z - Poly(r, 1L))), Error);

  // Hom(A, M) has dimension dim M.
  const auto M = module_from_partition(W4, {3, 1});
  CHECK(hom_space(free_module(W4), M).size() == M.dim());
  CHECK(hom_space(M, module_from_partition(W4, {})).empty());
}

TEST_CASE("cok examples") {
  const Ring r = make_ring(Q, {"z"});
  const Poly z = Poly::variable(r, "z");
  const Poly W = z.pow(3);
  const auto X = MatrixFactorization::create(
      r, W, PolyMatrix::diagonal_sum(PolyMatrix::of(z), PolyMatrix::of(z * z)),
      PolyMatrix::diagonal_sum(PolyMatrix::of(z * z), PolyMatrix::of(z)));
  CHECK(decompose(cok(X)) == std::map<std::uint32_t, std::size_t>{{1, 1}, {2, 1}});
  const auto T = MatrixFactorization::create(r, W, PolyMatrix::of(Poly(r, 1L)), PolyMatrix::of(W));
  CHECK(cok(T).dim() == 0);
  CHECK(critical_values(z.pow(5)).rational == std::vector<Scalar>{Scalar(Q, 0L)});
  CHECK(critical_values(z * z - Poly(r, 1L)).rational == std::vector<Scalar>{Scalar(Q, -1L)});
}

TEST_CASE("smith form and periodic resolution on random factorizations") {
  const Ring r = make_ring(Q, {"z"});
  const Poly z = Poly::variable(r, "z");
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> root(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> factors;
    for (int i = 0; i < 4; ++i) factors.push_back(z - Poly(r, root(rng)));
    Poly W(r, 1L);
    for (const auto& f : factors) W = W * f;
    PolyMatrix p1(r, 0, 0), p0(r, 0, 0);
    for (int b = 0; b < 2; ++b) {
      Poly a(r, 1L), c(r, 1L);
      for (const auto& f : factors) (rng() % 2 ? a : c) = (rng() % 2 ? a : c) * f;
      // keep a * c = W
      c = divmod(W, a).first;
      p1 = PolyMatrix::diagonal_sum(p1, PolyMatrix::of(a));
      p0 = PolyMatrix::diagonal_sum(p0, PolyMatrix::of(c));
    }
    PolyMatrix A = PolyMatrix::identity(r, 2), Ai = A;
    A(1, 0) = z + Poly(r, root(rng));
    Ai(1, 0) = -A(1, 0);
    const auto X = MatrixFactorization::create(r, W, A * p1, p0 * Ai);
    const auto s = smith_normal_form(X.p1());
    CHECK(s.U * X.p1() * s.V == s.D);
    CHECK(s.U * s.U_inv == PolyMatrix::identity(r, 2));
    CHECK(check_periodic_resolution(X).exact);
    // Cok is functorial on multiplication maps.
    const auto m = cok(MFMorphism::multiplication(X, z));
    CHECK(m.F() == cok(X).Z());
  }
}

TEST_CASE("Knorrer examples") {
  const Ring r = make_ring(Q, {"z"});
  const Poly z = Poly::variable(r, "z");
  const auto X = MatrixFactorization::create(r, z.pow(5), PolyMatrix::of(z.pow(2)),
                                             PolyMatrix::of(z.pow(3)));
  const auto K = knorrer(X, "x", "y");
  CHECK(K.rank() == 2);
  CHECK(K.is_valid());
  CHECK(K.W() == parse_poly("z^5 + x*y", K.ring()));
  CHECK_FALSE(K.ring()->weights().has_value());

  const Ring w = an_ring(Q);
  const auto K3 = knorrer(an_mf(w, 3, 1), "x", "y");
  CHECK(*K3.ring()->weights() == std::vector<std::int64_t>{2, 3, 3});
  CHECK(graded_stable_hom_dim(K3, K3) == 1);
}

TEST_CASE("policy errors") {
  const Ring r = make_ring(Q, {"z"});
  const Poly z = Poly::variable(r, "z");
  const auto X = MatrixFactorization::create(r, z.pow(2), PolyMatrix::of(z), PolyMatrix::of(z));
  CHECK_THROWS_AS(graded_stable_hom_dim(X, X), Error);
  CHECK_THROWS_AS(find_null_homotopy(MFMorphism::identity(X), SearchPolicy::graded()), Error);
  CHECK(find_null_homotopy(MFMorphism::identity(X), SearchPolicy::bounded()).status ==
        NullHomotopyResult::Status::NoneUpToBound);
  CHECK(bounded_stable_hom(X, X, 3).dim == 1);
}
