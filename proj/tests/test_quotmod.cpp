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
#include "mfcat/quotmod.hpp"

using namespace mfcat;

namespace {

Ring qz() { return make_ring(Field::rationals(), {"z"}); }

std::size_t depth(int n, int mu) { return static_cast<std::size_t>(std::min(mu, n - mu)); }

// Independent count of Hom(k[z]/z^a, k[z]/z^b) = min(a, b).
std::size_t hom_count(std::uint32_t a, std::uint32_t b) { return std::min(a, b); }

}  // namespace

TEST_CASE("companion and evaluate") {
  const Ring r = qz();
  const Poly W = parse_poly("z^3 - 3*z", r);
  const Mat C = companion(W);
  CHECK(evaluate(W, C).is_zero());
  CHECK(C.rows() == 3);
  CHECK(jordan_block(Field::rationals(), 3) == companion(parse_poly("z^3", r)));
}

TEST_CASE("module relation is enforced") {
  const Ring r = qz();
  try {
    QuotModule::create(parse_poly("z^2", r), jordan_block(Field::rationals(), 3));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationViolated);
  }
}

TEST_CASE("hom spaces between cyclic modules") {
  const Ring r = qz();
  const Poly W = parse_poly("z^5", r);
  for (std::uint32_t a = 1; a <= 5; ++a) {
    for (std::uint32_t b = 1; b <= 5; ++b) {
      CHECK(hom_space(module_from_partition(W, {a}), module_from_partition(W, {b})).size() ==
            hom_count(a, b));
    }
  }
}

TEST_CASE("stable Hom over z^n") {
  const Ring r = qz();
  for (int n = 2; n <= 6; ++n) {
    const Poly W = parse_poly("z^" + std::to_string(n), r);
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto s = stable_hom(module_from_partition(W, {std::uint32_t(mu)}),
                                  module_from_partition(W, {std::uint32_t(nu)}));
        CHECK(s.stable_dim == std::min(depth(n, mu), depth(n, nu)));
      }
    }
    const auto A = free_module(W);
    CHECK(stable_hom(A, A).stable_dim == 0);
  }
}

TEST_CASE("smith normal form") {
  const Ring r = qz();
  const Poly z = Poly::variable(r, "z");
  const Poly one(r, 1L);
  PolyMatrix A(r, 2, 2, {z * z, z, z + one, z.pow(3)});
  const auto s = smith_normal_form(A);
  CHECK(s.U * A * s.V == s.D);
  CHECK(s.U * s.U_inv == PolyMatrix::identity(r, 2));
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
    if (!s.diagonal[i].is_zero()) CHECK(divmod(s.diagonal[i + 1], s.diagonal[i]).second.is_zero());
  }
  CHECK(s.diagonal[0].to_string() == "1");
}

TEST_CASE("cok and stabilize round trip") {
  const Ring r = qz();
  const Poly W = parse_poly("z^4", r);
  const auto M = module_from_partition(W, {1, 3, 2, 4});
  const auto X = stabilize(M);
  CHECK(X.is_valid());
  const auto dec = decompose(cok(X));
  CHECK(dec.at(1) == 1);
  CHECK(dec.at(2) == 1);
  CHECK(dec.at(3) == 1);
  CHECK(dec.at(4) == 1);
  CHECK(check_periodic_resolution(X).exact);
}

TEST_CASE("cok of (z^2, z^3)") {
  const Ring r = qz();
  const Poly z = Poly::variable(r, "z");
  const auto X = MatrixFactorization::create(r, z.pow(5), PolyMatrix::of(z.pow(2)),
                                             PolyMatrix::of(z.pow(3)));
  const auto M = cok(X);
  CHECK(M.dim() == 2);
  CHECK(decompose(M).at(2) == 1);
  const auto f = cok(MFMorphism::multiplication(X, z));
  CHECK(f.F() == M.Z());
}

TEST_CASE("critical values") {
  const Ring r = qz();
  const auto cv = critical_values(parse_poly("z^3 - 3*z", r));
  REQUIRE(cv.rational.size() == 2);
  CHECK(cv.rational[0].to_string() == "-2");
  CHECK(cv.rational[1].to_string() == "2");
  CHECK_FALSE(cv.has_irrational);
  const auto cv2 = critical_values(parse_poly("z^4", r));
  REQUIRE(cv2.rational.size() == 1);
  CHECK(cv2.rational[0].is_zero());
  CHECK(critical_values(parse_poly("z^3 - z", r)).has_irrational);
  CHECK_THROWS_AS(critical_values(parse_poly("5", r)), Error);
}

TEST_CASE("smooth fibre has trivial stable category") {
  const Ring r = qz();
  const Poly W = parse_poly("z^3 - 3*z", r);
  const auto S0 = cyclic_module(W, parse_poly("z", r));
  const auto S1 = cyclic_module(W, parse_poly("z^2 - 3", r));
  CHECK(stable_hom(S0, S0).stable_dim == 0);
  CHECK(stable_hom(S1, S1).stable_dim == 0);
  CHECK(stable_hom(direct_sum(S0, S1), S0).stable_dim == 0);
}
