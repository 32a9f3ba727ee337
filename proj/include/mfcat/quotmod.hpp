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
#include <map>
#include <vector>

#include "mfcat/linalg.hpp"
#include "mfcat/matrix.hpp"
#include "mfcat/mf.hpp"

namespace mfcat {

/// A finite-dimensional module over k[z]/(W): a vector space k^m with the
/// action Z of z, subject to W(Z) = 0.
class QuotModule {
 public:
  /// Throws WrongArity (W not univariate), ZeroSuperpotential, ShapeMismatch
  /// or RelationViolated (W(Z) != 0).
  static QuotModule create(Poly W, Mat Z);

  const Poly& W() const noexcept { return W_; }
  const Ring& ring() const noexcept { return W_.ring(); }
  Field field() const noexcept { return W_.field(); }
  std::size_t dim() const noexcept { return Z_.rows(); }
  const Mat& Z() const noexcept { return Z_; }

  friend bool operator==(const QuotModule&, const QuotModule&) = default;

 private:
  QuotModule(Poly W, Mat Z) : W_(std::move(W)), Z_(std::move(Z)) {}

  Poly W_;
  Mat Z_;
};

/// A k-linear map F: M -> N with F Z_M = Z_N F.
class ModuleMorphism {
 public:
  static ModuleMorphism create(QuotModule source, QuotModule target, Mat F);

  const QuotModule& source() const noexcept { return source_; }
  const QuotModule& target() const noexcept { return target_; }
  const Mat& F() const noexcept { return F_; }

 private:
  ModuleMorphism(QuotModule s, QuotModule t, Mat F)
      : source_(std::move(s)), target_(std::move(t)), F_(std::move(F)) {}

  QuotModule source_;
  QuotModule target_;
  Mat F_;
};

/// p(A) by Horner's rule; p univariate.
Mat evaluate(const Poly& p, const Mat& A);
/// Companion matrix of a monic univariate polynomial: z^j -> z^{j+1}, the
/// last basis vector maps to minus the lower coefficients. For z^m this is
/// the nilpotent Jordan block with ones below the diagonal.
Mat companion(const Poly& monic);
Mat jordan_block(Field field, std::size_t size);

/// k[z]/(d) for a divisor d of W.
QuotModule cyclic_module(const Poly& W, const Poly& d);
/// The free module of rank one, k[z]/(W).
QuotModule free_module(const Poly& W);
QuotModule direct_sum(const QuotModule& a, const QuotModule& b);
/// Direct sum of k[z]/(z^{part}) over the parts of a partition.
QuotModule module_from_partition(const Poly& W, const std::vector<std::uint32_t>& parts);

/// U * A * V = D with unimodular U, V over k[z]; D diagonal with monic
/// d_1 | d_2 | ... (zeros last).
struct SmithForm {
  PolyMatrix U;
  PolyMatrix U_inv;
  PolyMatrix V;
  PolyMatrix D;
  std::vector<Poly> diagonal;
};

/// Pivot = nonzero entry of least degree (row-major tie-break), cleared by
/// Euclidean division. Throws NotUnivariate.
SmithForm smith_normal_form(const PolyMatrix& A);

/// Cokernel of p1 as a module over k[z]/(W): a sum of companion blocks of
/// the non-unit invariant factors. Throws NotUnivariate.
QuotModule cok(const MatrixFactorization& X);
/// The map coker(p1) -> coker(q1) induced by f0.
ModuleMorphism cok(const MFMorphism& f);

/// Basis of Hom_A(M, N). Throws SuperpotentialMismatch.
std::vector<Mat> hom_space(const QuotModule& M, const QuotModule& N);

/// Hom_A(M, N) together with the subspace of maps that factor through a
/// free module.
///
/// A map factors through some projective iff it factors through a fixed
/// epimorphism pi: A^g -> N (lift the projective leg along pi). With the
/// k-basis of N as generators, the subspace is the image of
/// Hom(M, A)^g under composition with pi.
struct StableHomSpace {
  std::vector<Mat> hom_basis;
  std::vector<Mat> factoring_basis;
  std::size_t stable_dim = 0;

  /// True when F lies in the factoring subspace.
  bool is_stably_zero(const Mat& F) const;
};

StableHomSpace stable_hom(const QuotModule& M, const QuotModule& N);

/// Jordan type of a module over k[z]/(u z^n): multiplicity of each
/// k[z]/(z^mu), from m_mu = rk Z^{mu-1} - 2 rk Z^mu + rk Z^{mu+1}.
/// Throws NotNilpotentForm when W is not a monomial.
std::map<std::uint32_t, std::size_t> decompose(const QuotModule& M);

/// p1 = zI - Z presents M over k[z]; p0 = sum_k w_k sum_j z^j Z^{k-1-j}
/// so that p1 p0 = p0 p1 = W I.
MatrixFactorization stabilize(const QuotModule& M);

struct CriticalValues {
  std::vector<Scalar> rational;  // ascending
  bool has_irrational = false;
};

/// Values w with W - w singular: the eigenvalues of W(C), C the companion
/// matrix of W'. Rational ones are reported exactly. Throws
/// ConstantSuperpotential, NotUnivariate, InvalidField (not over Q).
CriticalValues critical_values(const Poly& W);

/// Ranks of p1 and p0 acting on (k[z]/W)^d, and whether
/// 0 -> Cok p1 -> P1/W -> P0/W -> Cok p1 -> 0 is exact.
struct PeriodicResolutionCheck {
  std::size_t dim = 0;  // d * deg W
  std::size_t rank_p1 = 0;
  std::size_t rank_p0 = 0;
  bool exact = false;
};

PeriodicResolutionCheck check_periodic_resolution(const MatrixFactorization& X);

}  // namespace mfcat
