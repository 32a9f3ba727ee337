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

#include "mfcat/error.hpp"
#include "mfcat/poly.hpp"

using namespace mfcat;

namespace {

Ring qz() { return make_ring(Field::rationals(), {"z"}); }

Poly random_poly(const Ring& r, std::mt19937& rng, int terms, int maxdeg) {
  Poly p(r);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  for (int i = 0; i < terms; ++i) {
    Exponents e(r->nvars());
    for (auto& x : e) x = static_cast<std::uint32_t>(deg(rng));
    p.add_term(e, Scalar(r->field(), coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("field arithmetic mod p") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, 2L).inverse() == Scalar(f7, 4L));
  CHECK(Scalar::parse(f7, "3/2") == Scalar(f7, 5L));
  CHECK(Scalar(f7, -1L).to_string() == "6");
  CHECK_THROWS_AS(Scalar::parse(f7, "1/7"), Error);
  CHECK_THROWS_AS(Field::prime(9), Error);
  CHECK_THROWS_AS(Scalar(f7, 1L) + Scalar(Field::rationals(), 1L), Error);
}

TEST_CASE("parser examples") {
  const Ring r = qz();
  CHECK(parse_poly("z^2", r).to_string() == "z^2");
  CHECK(parse_poly("(z-1)*(z+1)", r).to_string() == "z^2 - 1");
  CHECK(parse_poly(" - z + 3/2 ", r).to_string() == "-z + 3/2");

  const Ring r7 = make_ring(Field::prime(7), {"z", "x"});
  CHECK(parse_poly("3/2*z*x - 1", r7).to_string() == "5*z*x + 6");

  const Ring r2 = make_ring(Field::prime(2), {"z", "x"});
  try {
    parse_poly("3/2*z*x - 1", r2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonInvertibleDenominator);
  }
  try {
    parse_poly("z^-1", r);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedExponent);
  }
  try {
    parse_poly("z*w", r);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
  CHECK_THROWS_AS(parse_poly("z +* 1", r), ParseError);
  CHECK_THROWS_AS(parse_poly("(z", r), ParseError);
}

TEST_CASE("ring contexts") {
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"z", "z"}), Error);
  CHECK_THROWS_AS(make_ring(Field::rationals(), {"z"}, std::vector<std::int64_t>{0}), Error);
  const Ring w = make_ring(Field::rationals(), {"z", "x", "y"}, std::vector<std::int64_t>{2, 3, 3});
  CHECK(*parse_poly("z^3 + x*y", w).weighted_degree() == 6);
  CHECK_FALSE(parse_poly("z^3 + x", w).weighted_degree().has_value());
  CHECK_THROWS_AS(parse_poly("z", qz()).weighted_degree(), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  const Ring r = make_ring(Field::rationals(), {"z", "x"});
  std::mt19937 rng(17);
  for (int i = 0; i < 60; ++i) {
    const Poly a = random_poly(r, rng, 4, 3);
    const Poly b = random_poly(r, rng, 4, 3);
    const Poly c = random_poly(r, rng, 3, 2);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a - a == Poly(r));
    CHECK(parse_poly(a.to_string(), r) == a);
    // Leibniz rule
    CHECK((a * b).derivative("x") == a.derivative("x") * b + a * b.derivative("x"));
  }
}

TEST_CASE("univariate division and gcd") {
  const Ring r = qz();
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Poly a = random_poly(r, rng, 5, 6);
    Poly b = random_poly(r, rng, 3, 3);
    if (b.is_zero()) continue;
    auto [q, rem] = divmod(a, b);
    CHECK(q * b + rem == a);
    if (!rem.is_zero()) CHECK(rem.degree_univariate() < b.degree_univariate());
  }
  const Poly g = gcd(parse_poly("z^3 - z", r), parse_poly("z^2 + 2*z + 1", r));
  CHECK(g.to_string() == "z + 1");
}

TEST_CASE("embedding into a larger ring") {
  const Ring small = qz();
  const Ring big = make_ring(Field::rationals(), {"z", "x", "y"});
  const Poly p = parse_poly("z^2 - 3", small);
  CHECK(p.embed(big) == parse_poly("z^2 - 3", big));
}
