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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mfcat/mf.hpp"

namespace mfcat {

/// How homotopy and isomorphism searches pick their ansatz.
///
/// DegreeBounded solves for homotopy entries of total degree <= bound (the
/// default bound is max entry degree of the data plus deg W, overridable via
/// MFCAT_DEFAULT_BOUND); it can find witnesses but never proves absence.
/// GradedExhaustive needs ring weights and quasi-homogeneous data; it splits
/// the Hom complex by internal degree and decides each degree exactly.
struct SearchPolicy {
  enum class Mode { DegreeBounded, GradedExhaustive };
  Mode mode = Mode::GradedExhaustive;
  std::optional<std::uint32_t> bound;
  std::uint32_t window = 3;

  static SearchPolicy graded(std::uint32_t window = 3) {
    return SearchPolicy{Mode::GradedExhaustive, std::nullopt, window};
  }
  static SearchPolicy bounded(std::optional<std::uint32_t> bound = std::nullopt) {
    return SearchPolicy{Mode::DegreeBounded, bound, 3};
  }
};

/// Degrees of the basis elements of P1 and P0 making p1 homogeneous of degree
/// 0 and p0 homogeneous of degree deg W.
struct MFGrading {
  std::vector<std::int64_t> deg1;
  std::vector<std::int64_t> deg0;
  std::int64_t W_degree = 0;
};

/// Nullopt when the ring has no weights, W is not quasi-homogeneous, or no
/// consistent basis degrees exist.
std::optional<MFGrading> find_grading(const MatrixFactorization& X);

/// Default bound for degree-bounded searches over the given data.
std::uint32_t default_bound(const std::vector<const PolyMatrix*>& data, const Poly& W);

struct NullHomotopyResult {
  enum class Status { Found, NoneUpToBound, ProvenNone };
  Status status = Status::NoneUpToBound;
  std::optional<Homotopy> homotopy;
  /// Internal degrees decided (graded mode) or the bound used.
  std::vector<std::int64_t> degrees_examined;

  bool found() const noexcept { return status == Status::Found; }
};

/// Throws PolicyInfeasible for graded mode on ungraded data.
NullHomotopyResult find_null_homotopy(const MFMorphism& f, const SearchPolicy& policy);
NullHomotopyResult homotopy_equal(const MFMorphism& f, const MFMorphism& g,
                                  const SearchPolicy& policy);

struct HomDimension {
  std::size_t dim = 0;
  /// (internal degree, dimension of H^0 in that degree) for nonzero pieces.
  std::vector<std::pair<std::int64_t, std::size_t>> by_degree;
  std::vector<std::int64_t> degrees_examined;
  /// Closed representatives of a basis of H^0.
  std::vector<MFMorphism> basis;
};

/// dim_k H^0(Hom(X, Y)) computed degree by degree. Scanning stops once every
/// degree up to the Jacobian socle bound has been decided and `window`
/// consecutive degrees contributed nothing. Throws PolicyInfeasible or
/// NonQuasiHomogeneous.
HomDimension graded_stable_hom(const MatrixFactorization& X, const MatrixFactorization& Y,
                               const SearchPolicy& policy = SearchPolicy::graded());
std::size_t graded_stable_hom_dim(const MatrixFactorization& X, const MatrixFactorization& Y,
                                  const SearchPolicy& policy = SearchPolicy::graded());

/// The same count restricted to maps and homotopies whose entries have total
/// degree <= bound (default_bound when unset). Usable without weights but not
/// a certified dimension. degrees_examined holds the bound.
HomDimension bounded_stable_hom(const MatrixFactorization& X, const MatrixFactorization& Y,
                                std::optional<std::uint32_t> bound = std::nullopt);

struct IsoResult {
  enum class Status { Isomorphic, NotIsomorphic, NotFound };
  Status status = Status::NotFound;
  std::optional<MFMorphism> u;  // X -> Y
  std::optional<MFMorphism> v;  // Y -> X
  std::optional<Homotopy> vu_homotopy;  // v*u - id_X = D(.)
  std::optional<Homotopy> uv_homotopy;  // u*v - id_Y = D(.)
  std::string note;

  bool isomorphic() const noexcept { return status == Status::Isomorphic; }
};

/// Searches for mutually inverse maps in DB. A negative answer is certified
/// (NotIsomorphic) only in graded mode, when Hom dimensions rule it out.
IsoResult is_iso_in_db(const MatrixFactorization& X, const MatrixFactorization& Y,
                       const SearchPolicy& policy);

/// Result of comparing X -f-> Y -g-> T -h-> X[1] with the standard triangle
/// on f.
struct TriangleCertificate {
  bool exact = false;
  std::optional<MFMorphism> phi;  // T -> C(f), an isomorphism in DB
  std::optional<MFMorphism> psi;  // its inverse
  std::string note;
};

/// Looks for phi: T -> C(f) with phi*g ~ g_std and h_std*phi ~ h, then
/// certifies phi is invertible in DB.
TriangleCertificate certify_triangle(const MFMorphism& f, const MFMorphism& g,
                                     const MFMorphism& h, const SearchPolicy& policy);

}  // namespace mfcat
