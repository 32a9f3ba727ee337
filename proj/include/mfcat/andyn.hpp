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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/homotopy.hpp"
#include "mfcat/linalg.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/quotmod.hpp"

namespace mfcat {

/// Symbolic model of the stable category of k[z]/(z^n): indecomposables
/// V_1..V_{n-1}, V_mu = k[z]/(z^mu).

/// A direct sum of indecomposables; mult[mu - 1] is the multiplicity of V_mu.
struct AnObject {
  int n = 2;
  std::vector<std::size_t> mult;

  static AnObject indecomposable(int n, int mu);
  friend bool operator==(const AnObject&, const AnObject&) = default;
};

int an_depth(int n, int mu);
int an_hom_dim(int n, int mu, int nu);
/// Intermediate indices lambda, max(mu, nu) <= lambda <= min(mu + nu - 1, n - 1).
std::vector<int> an_hom_basis(int n, int mu, int nu);

/// An element of Hom(V_mu, V_nu) in the basis b_lambda = (nu <- lambda <- mu),
/// coefficients ordered as an_hom_basis.
class AnMorphism {
 public:
  AnMorphism(Field field, int n, int source, int target);

  static AnMorphism basis(Field field, int n, int source, int target, int lambda);
  /// The generator from V_source to V_target (lambda = max of the two).
  static AnMorphism alpha(Field field, int n, int target, int source);
  static AnMorphism identity(Field field, int n, int mu);

  Field field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const Vec& coefficients() const noexcept { return c_; }
  Vec& coefficients() noexcept { return c_; }
  std::vector<int> lambdas() const { return an_hom_basis(n_, source_, target_); }

  bool is_zero() const;
  /// e.g. "2*b[3] - b[4]" or "0".
  std::string to_string() const;

  friend AnMorphism operator+(const AnMorphism& a, const AnMorphism& b);
  friend AnMorphism operator-(const AnMorphism& a, const AnMorphism& b);
  friend AnMorphism operator*(const Scalar& c, const AnMorphism& a);
  friend bool operator==(const AnMorphism&, const AnMorphism&) = default;

 private:
  Field field_;
  int n_;
  int source_;
  int target_;
  Vec c_;
};

/// Normal form of the composite along a path of generators
/// path[0] -> path[1] -> ... ; nullopt when it vanishes, else the basis
/// index lambda of Hom(V_path.front(), V_path.back()).
std::optional<int> an_normalize_path(int n, std::vector<int> path);

/// a after b. Throws NotComposable.
AnMorphism an_compose(const AnMorphism& a, const AnMorphism& b);

AnObject an_translate(const AnObject& x);
int an_translate(int n, int mu);
AnMorphism an_translate(const AnMorphism& f);

/// End(V_mu) = k[x]/x^d with x = b_{mu+1}.
struct AnEndRing {
  int depth = 0;
  std::vector<int> basis;  // lambdas; basis[k] is x^k
  /// table[i][j] = basis[i] o basis[j] in coordinates.
  std::vector<std::vector<Vec>> table;
  bool nilpotency_exact = false;  // x^d = 0 and x^{d-1} != 0
  bool commutative = false;
};

AnEndRing an_end_ring(int n, int mu, Field field = Field::rationals());

/// Triangle V_mu -f-> V_nu -g-> T -h-> V_{-mu} read off the closed
/// formulas. Indices of T are taken mod n; zero summands are dropped.
struct AnTriangle {
  int n = 0;
  int mu = 0;
  int nu = 0;
  std::optional<int> lambda;  // set for the two-step shape
  AnMorphism f;
  std::vector<int> third;      // summands of T
  std::vector<AnMorphism> g;   // V_nu -> third[i]
  std::vector<AnMorphism> h;   // third[i] -> V_{n - mu}

  std::string kind() const { return lambda ? "lst" : "fst"; }
  std::string describe() const;
};

/// f must be a single basis element with coefficient 1. The generator
/// (lambda = max) gives the one-step triangle, otherwise the two-step one.
/// Throws InvalidShape.
AnTriangle an_triangle(const AnMorphism& f);
/// Two-step shape for any lambda in the basis range, including lambda =
/// max(mu, nu).
AnTriangle an_triangle_lst(Field field, int n, int mu, int nu, int lambda);

// --- Realization on matrix factorizations and modules of k[z]/(z^n).

/// Q[z] or F_p[z] with z of weight 1.
Ring an_ring(Field field);
/// E_mu = (z^mu, z^{n-mu}); rank 0 when mu = 0 mod n.
MatrixFactorization an_mf(const Ring& ring, int n, int mu);
MatrixFactorization an_mf(const Ring& ring, const AnObject& x);
/// (f1, f0) = (z^{lambda-nu}, z^{lambda-mu}) on basis elements.
MFMorphism an_lift(const Ring& ring, const AnMorphism& f);
/// E_mu[1] -> E_{n-mu}, (-1, 1). It is its own inverse.
MFMorphism an_sigma(const Ring& ring, int n, int mu);

QuotModule an_module(Field field, int n, int mu);
ModuleMorphism an_module_map(const AnMorphism& f);

struct AnTriangleLift {
  MFMorphism f;
  MFMorphism g;
  MFMorphism h;  // into E_mu[1], through sigma
};

AnTriangleLift an_lift_triangle(const Ring& ring, const AnTriangle& t);
TriangleCertificate an_certify_triangle(const AnTriangle& t,
                                        const SearchPolicy& policy = SearchPolicy::graded());

// --- Verification report.

struct AnCheck {
  std::string name;
  std::string params;
  bool pass = false;
  std::string detail;
  std::optional<MFMorphism> witness;
};

struct AnReport {
  int n = 0;
  Field field;
  std::vector<std::vector<std::size_t>> hom_table;  // stable dims, (mu-1, nu-1)
  std::vector<AnCheck> checks;

  bool all_pass() const;
};

struct AnVerifyOptions {
  bool triangles = true;
  /// Certify every k-th two-step triangle (1 = all).
  std::size_t lst_stride = 1;
};

AnReport an_verify(int n, Field field = Field::rationals(), const AnVerifyOptions& opts = {});

}  // namespace mfcat
