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

using namespace mfcat;

namespace {

const Field Q = Field::rationals();

std::size_t brute_dim(int n, int mu, int nu) {
  return stable_hom(an_module(Q, n, mu), an_module(Q, n, nu)).stable_dim;
}

// Composition of the underlying module maps, compared in the stable category.
bool stably_equal(const AnMorphism& a, const Mat& F) {
  const auto s = stable_hom(an_module(Q, a.n(), a.source()), an_module(Q, a.n(), a.target()));
  return s.is_stably_zero(an_module_map(a).F() - F);
}

}  // namespace

TEST_CASE("depth and Hom dimension against brute force") {
  CHECK(an_hom_dim(4, 2, 2) == 2);
  CHECK(an_hom_dim(4, 1, 3) == 1);
  CHECK(an_hom_dim(2, 1, 1) == 1);
  for (int n = 2; n <= 7; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto b = an_hom_basis(n, mu, nu);
        CHECK(b.size() == static_cast<std::size_t>(an_hom_dim(n, mu, nu)));
        CHECK(b.size() == brute_dim(n, mu, nu));
      }
    }
  }
  CHECK_THROWS_AS(an_depth(4, 0), Error);
  CHECK_THROWS_AS(an_hom_dim(4, 1, 4), Error);
}

TEST_CASE("basis ranges") {
  CHECK(an_hom_basis(5, 2, 2) == std::vector<int>{2, 3});
  CHECK(an_hom_basis(5, 2, 4) == std::vector<int>{4});
  CHECK(an_hom_basis(3, 1, 1) == std::vector<int>{1});
}

TEST_CASE("composition examples") {
  // n = 3: the loop through V_2 on V_1 vanishes since End(V_1) = k.
  const auto up = AnMorphism::alpha(Q, 3, 2, 1);
  const auto down = AnMorphism::alpha(Q, 3, 1, 2);
  CHECK(an_compose(down, up).is_zero());
  CHECK(stably_equal(an_compose(down, up), an_module_map(down).F() * an_module_map(up).F()));

  // Monotone composites collapse.
  const auto a = AnMorphism::alpha(Q, 6, 2, 4);
  const auto b = AnMorphism::alpha(Q, 6, 4, 5);
  CHECK(an_compose(a, b) == AnMorphism::alpha(Q, 6, 2, 5));

  // Through V_4 = V_n for n = 4 the composite is zero.
  CHECK(an_compose(AnMorphism::alpha(Q, 4, 1, 3), AnMorphism::alpha(Q, 4, 3, 1)).is_zero());

  // Valley to peak: V_2 -> V_1 -> V_2 in n = 5 is b[3].
  CHECK(an_compose(AnMorphism::alpha(Q, 5, 2, 1), AnMorphism::alpha(Q, 5, 1, 2)) ==
        AnMorphism::basis(Q, 5, 2, 2, 3));

  CHECK_THROWS_AS(an_compose(a, a), Error);
}

TEST_CASE("composition agrees with module maps on all basis pairs") {
  for (int n = 2; n <= 6; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int la = 1; la < n; ++la) {
        for (int nu = 1; nu < n; ++nu) {
          for (int l1 : an_hom_basis(n, mu, la)) {
            for (int l2 : an_hom_basis(n, la, nu)) {
              const auto b = AnMorphism::basis(Q, n, mu, la, l1);
              const auto a = AnMorphism::basis(Q, n, la, nu, l2);
              CHECK(stably_equal(an_compose(a, b),
                                 an_module_map(a).F() * an_module_map(b).F()));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 8)(rng);
    std::uniform_int_distribution<int> idx(1, n - 1);
    const int v[4] = {idx(rng), idx(rng), idx(rng), idx(rng)};
    auto random_map = [&](int s, int t) {
      AnMorphism f(Q, n, s, t);
      for (auto& c : f.coefficients()) c = Scalar(Q, std::uniform_int_distribution<long>(-3, 3)(rng));
      return f;
    };
    const auto x = random_map(v[0], v[1]);
    const auto y = random_map(v[1], v[2]);
    const auto w = random_map(v[2], v[3]);
    CHECK(an_compose(w, an_compose(y, x)) == an_compose(an_compose(w, y), x));
  }
}

TEST_CASE("translation") {
  CHECK(an_translate(5, 2) == 3);
  const auto x = AnObject::indecomposable(5, 2);
  CHECK(an_translate(an_translate(x)) == x);
  CHECK(an_translate(x) == AnObject::indecomposable(5, 3));
  for (int n = 2; n <= 7; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        for (int l : an_hom_basis(n, mu, nu)) {
          const auto b = AnMorphism::basis(Q, n, mu, nu, l);
          const auto t = an_translate(b);
          CHECK(t == AnMorphism::basis(Q, n, n - mu, n - nu, n + l - mu - nu));
          CHECK(an_translate(t) == b);
        }
      }
    }
  }
}

TEST_CASE("End rings are truncated polynomial rings") {
  const auto e52 = an_end_ring(5, 2);
  CHECK(e52.depth == 2);
  CHECK(e52.nilpotency_exact);
  CHECK(e52.commutative);
  const auto e21 = an_end_ring(2, 1);
  CHECK(e21.depth == 1);
  CHECK(e21.basis.size() == 1);
  const auto e73 = an_end_ring(7, 3);
  CHECK(e73.depth == 3);
  CHECK(e73.basis == std::vector<int>{3, 4, 5});
  CHECK(e73.nilpotency_exact);
  // x * x = x^2 in coordinates.
  CHECK(e73.table[1][1] == Vec{Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, 1L)});
}

TEST_CASE("triangle shapes") {
  const auto id = an_triangle(AnMorphism::identity(Q, 4, 2));
  CHECK(id.third.empty());
  CHECK(id.kind() == "fst");

  const auto t = an_triangle(AnMorphism::alpha(Q, 5, 2, 1));
  CHECK(t.third == std::vector<int>{1});
  CHECK(t.h[0].target() == 4);
  CHECK(an_certify_triangle(t).exact);

  // nu < mu picks up the sign.
  const auto s = an_triangle(AnMorphism::alpha(Q, 5, 1, 3));
  CHECK(s.third == std::vector<int>{3});
  CHECK(s.h[0] == Scalar(Q, -1L) * AnMorphism::alpha(Q, 5, 2, 3));

  CHECK_THROWS_AS(an_triangle(AnMorphism(Q, 5, 2, 2)), Error);
  CHECK_THROWS_AS(an_triangle(Scalar(Q, 2L) * AnMorphism::identity(Q, 5, 2)), Error);
}

TEST_CASE("two-step triangle over n = 5 has third term V_1 + V_4") {
  const auto f = AnMorphism::basis(Q, 5, 2, 2, 3);
  const auto t = an_triangle(f);
  CHECK(t.kind() == "lst");
  CHECK(t.third == std::vector<int>{1, 4});
  CHECK(an_certify_triangle(t).exact);

  // Independent check: the cone of the lift is V_1 + V_4, not V_1 + V_1.
  const Ring r = an_ring(Q);
  const auto C = cone(an_lift(r, f)).C;
  const auto E14 = direct_sum(an_mf(r, 5, 1), an_mf(r, 5, 4));
  CHECK(is_iso_in_db(C, E14, SearchPolicy::graded()).isomorphic());
  auto jordan = decompose(cok(C));
  jordan.erase(5);  // free summands
  CHECK(jordan == std::map<std::uint32_t, std::size_t>{{1, 1}, {4, 1}});
}

TEST_CASE("flipped signs are rejected") {
  auto t = an_triangle(AnMorphism::alpha(Q, 5, 1, 3));
  t.h[0] = Scalar(Q, -1L) * t.h[0];
  CHECK_FALSE(an_certify_triangle(t).exact);
  auto u = an_triangle(AnMorphism::basis(Q, 5, 2, 2, 3));
  u.h[1] = Scalar(Q, -1L) * u.h[1];
  CHECK_FALSE(an_certify_triangle(u).exact);
}

TEST_CASE("the two-step shape at lambda = max is the one-step triangle") {
  for (int n = 2; n <= 6; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto a = an_triangle(AnMorphism::alpha(Q, n, nu, mu));
        const auto b = an_triangle_lst(Q, n, mu, nu, std::max(mu, nu));
        CHECK(a.third == b.third);
        CHECK(a.g == b.g);
        CHECK(a.h == b.h);
      }
    }
  }
}

TEST_CASE("lifts and cokernels") {
  const Ring r = an_ring(Q);
  for (int n = 2; n <= 6; ++n) {
    for (int mu = 1; mu < n; ++mu) {
      CHECK(decompose(cok(an_mf(r, n, mu))) == std::map<std::uint32_t, std::size_t>{{mu, 1}});
      CHECK(compose(an_sigma(r, n, mu), shift(MFMorphism::identity(an_mf(r, n, mu)))) ==
            an_sigma(r, n, mu));
    }
  }
  CHECK(an_mf(r, 4, 0).rank() == 0);
  CHECK(an_mf(r, 4, 4).rank() == 0);
}

TEST_CASE("an_verify reports") {
  const auto r2 = an_verify(2);
  CHECK(r2.all_pass());
  CHECK(r2.hom_table == std::vector<std::vector<std::size_t>>{{1}});
  const auto r5 = an_verify(5);
  CHECK(r5.all_pass());
  CHECK(r5.hom_table ==
        std::vector<std::vector<std::size_t>>{{1, 1, 1, 1}, {1, 2, 2, 1}, {1, 2, 2, 1}, {1, 1, 1, 1}});
}
