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
#include <string>

#include "mfcat/matrix.hpp"
#include "mfcat/poly.hpp"

namespace mfcat {

/// A pair P1 -p1-> P0 -p0-> P1 of free modules of rank d with
/// p0*p1 = p1*p0 = W*I, where W is already shifted by the ring's w0.
/// Rank 0 is the zero object.
class MatrixFactorization {
 public:
  /// Validates the pair; `W` is the unshifted superpotential, the ring's w0
  /// is subtracted here. Throws ShapeMismatch, ZeroSuperpotential or
  /// NotAFactorization (naming the offending entry).
  static MatrixFactorization create(const Ring& ring, const Poly& W, PolyMatrix p1,
                                    PolyMatrix p0);
  /// Same, with W taken as already shifted.
  static MatrixFactorization from_shifted(const Poly& shifted_W, PolyMatrix p1,
                                          PolyMatrix p0);

  const Ring& ring() const noexcept { return W_.ring(); }
  /// W - w0.
  const Poly& W() const noexcept { return W_; }
  std::size_t rank() const noexcept { return p1_.rows(); }
  const PolyMatrix& p1() const noexcept { return p1_; }
  const PolyMatrix& p0() const noexcept { return p0_; }

  /// Re-checks both product identities.
  bool is_valid() const;

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

 private:
  MatrixFactorization(Poly W, PolyMatrix p1, PolyMatrix p0)
      : W_(std::move(W)), p1_(std::move(p1)), p0_(std::move(p0)) {}

  Poly W_;
  PolyMatrix p1_;
  PolyMatrix p0_;
};

/// A degree-0 closed map: f1: P1 -> Q1 and f0: P0 -> Q0 with
/// f1*p0 = q0*f0 and q1*f1 = f0*p1.
class MFMorphism {
 public:
  /// Throws NotAMorphism naming the failing identity and entry.
  static MFMorphism create(MatrixFactorization source, MatrixFactorization target,
                           PolyMatrix f1, PolyMatrix f0);

  static MFMorphism identity(const MatrixFactorization& X);
  static MFMorphism zero(const MatrixFactorization& X, const MatrixFactorization& Y);
  /// Multiplication by a polynomial on every component.
  static MFMorphism multiplication(const MatrixFactorization& X, const Poly& c);

  const MatrixFactorization& source() const noexcept { return source_; }
  const MatrixFactorization& target() const noexcept { return target_; }
  const PolyMatrix& f1() const noexcept { return f1_; }
  const PolyMatrix& f0() const noexcept { return f0_; }

  bool is_zero() const { return f1_.is_zero() && f0_.is_zero(); }

  friend bool operator==(const MFMorphism&, const MFMorphism&) = default;

 private:
  MFMorphism(MatrixFactorization s, MatrixFactorization t, PolyMatrix f1, PolyMatrix f0)
      : source_(std::move(s)), target_(std::move(t)), f1_(std::move(f1)), f0_(std::move(f0)) {}

  MatrixFactorization source_;
  MatrixFactorization target_;
  PolyMatrix f1_;
  PolyMatrix f0_;
};

/// Witness s: P0 -> Q1, t: P1 -> Q0 of f1 = q0*t + s*p1, f0 = t*p0 + q1*s.
struct Homotopy {
  PolyMatrix s;
  PolyMatrix t;
};

/// True when `h` witnesses that `f` is null-homotopic.
bool is_null_homotopy(const MFMorphism& f, const Homotopy& h);

/// The morphism D(h) = (q0*t + s*p1, t*p0 + q1*s) between X and Y.
MFMorphism boundary(const MatrixFactorization& X, const MatrixFactorization& Y,
                    const Homotopy& h);

MFMorphism compose(const MFMorphism& g, const MFMorphism& f);  // g after f
MFMorphism operator+(const MFMorphism& a, const MFMorphism& b);
MFMorphism operator-(const MFMorphism& a, const MFMorphism& b);
MFMorphism operator*(const Scalar& c, const MFMorphism& f);

/// P[1] = (P0 -(-p0)-> P1 -(-p1)-> P0). Applying it twice returns X exactly.
MatrixFactorization shift(const MatrixFactorization& X);
/// f[1] = (f0, f1) between the shifted objects.
MFMorphism shift(const MFMorphism& f);

MatrixFactorization direct_sum(const MatrixFactorization& X, const MatrixFactorization& Y);
/// Block-diagonal f (+) g.
MFMorphism direct_sum(const MFMorphism& f, const MFMorphism& g);
/// The map into X (+) Y given by the column (f; g).
MFMorphism column(const MFMorphism& f, const MFMorphism& g);
/// The map out of X (+) Y given by the row (f, g).
MFMorphism row(const MFMorphism& f, const MFMorphism& g);

struct Cone {
  MatrixFactorization C;
  MFMorphism g;  // Q -> C(f), (id, 0)
  MFMorphism h;  // C(f) -> P[1], (0, -id)
};

/// Mapping cone with c0 = [[q0, f1], [0, -p1]] and c1 = [[q1, f0], [0, -p0]]
/// on C1 = Q1 (+) P0, C0 = Q0 (+) P1.
Cone cone(const MFMorphism& f);

/// Element of the Z/2-graded Hom complex. Parity 0 holds (f1: P1->Q1,
/// f0: P0->Q0); parity 1 holds (s: P0->Q1, t: P1->Q0).
struct HomElement {
  int parity = 0;
  PolyMatrix first;
  PolyMatrix second;
};

/// D g = q o g - (-1)^k g o p. The result has the opposite parity. Throws
/// ShapeMismatch when the blocks do not fit the source and target ranks.
HomElement hom_differential(const HomElement& g, const MatrixFactorization& source,
                            const MatrixFactorization& target);

/// Homotopy (dp0/dvar, dp1/dvar) for multiplication by dW/dvar.
Homotopy derivative_homotopy(const MatrixFactorization& X, const std::string& var);

/// Tensor with the rank-1 factorization (x, y) of x*y:
///   k1 = [[p1, -y I], [x I, p0]],  k0 = [[p0, y I], [-x I, p1]]
/// over a ring extended by the two fresh variables. When the ring has
/// weights and W is quasi-homogeneous of degree d, the new variables get
/// weight d/2 each (all weights are doubled first when d is odd).
MatrixFactorization knorrer(const MatrixFactorization& X, const std::string& xvar,
                            const std::string& yvar);

/// The ring used by knorrer() for the given base ring and superpotential.
Ring knorrer_ring(const Ring& base, const Poly& shifted_W, const std::string& xvar,
                  const std::string& yvar);

}  // namespace mfcat
