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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/field.hpp"

namespace mfcat {

using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic "greater than": total degree first, then lex with
/// the first variable most significant. Maps keyed by this iterate from the
/// leading term down.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// The ambient ring k[vars] together with optional positive integer weights
/// and the base point w0 of the superpotential.
class RingContext {
 public:
  RingContext(Field field, std::vector<std::string> vars,
              std::optional<std::vector<std::int64_t>> weights = std::nullopt,
              std::optional<Scalar> w0 = std::nullopt);

  Field field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::optional<std::vector<std::int64_t>>& weights() const noexcept {
    return weights_;
  }
  const Scalar& w0() const noexcept { return w0_; }

  /// Index of a variable, or nullopt.
  std::optional<std::size_t> index_of(const std::string& var) const;

  bool same_as(const RingContext& o) const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::optional<std::vector<std::int64_t>> weights_;
  Scalar w0_;
};

using Ring = std::shared_ptr<const RingContext>;

Ring make_ring(Field field, std::vector<std::string> vars,
               std::optional<std::vector<std::int64_t>> weights = std::nullopt,
               std::optional<Scalar> w0 = std::nullopt);

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored.
class Poly {
 public:
  using TermMap = std::map<Exponents, Scalar, GrlexGreater>;

  explicit Poly(Ring ring);
  Poly(Ring ring, const Scalar& constant);
  Poly(Ring ring, long constant);

  static Poly variable(Ring ring, const std::string& name);
  static Poly monomial(Ring ring, Exponents exps, const Scalar& coeff);

  const Ring& ring() const noexcept { return ring_; }
  Field field() const noexcept { return ring_->field(); }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Nullopt for the zero polynomial.
  std::optional<std::uint64_t> total_degree() const;
  /// Constant term (zero if absent).
  Scalar constant_term() const;
  /// Coefficient of the given monomial (zero if absent).
  Scalar coefficient(const Exponents& e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(std::uint32_t e) const;

  /// Formal partial derivative; throws UnknownVariable.
  Poly derivative(const std::string& var) const;

  /// Weighted degree if quasi-homogeneous, nullopt otherwise (and for 0).
  /// Throws NoWeightsConfigured.
  std::optional<std::int64_t> weighted_degree() const;

  /// Re-expresses the polynomial in a ring whose variable list contains all
  /// of ours (matched by name, same field).
  Poly embed(const Ring& target) const;

  /// Canonical text, terms in descending grlex order.
  std::string to_string() const;

  // Univariate helpers; throw NotUnivariate when the ring has != 1 variable.
  std::uint32_t degree_univariate() const;
  Scalar leading_coefficient() const;
  Poly monic() const;
  /// Coefficients c_0..c_deg (dense).
  std::vector<Scalar> dense_coefficients() const;
  static Poly from_dense(const Ring& ring, const std::vector<Scalar>& coeffs);

  void add_term(const Exponents& e, const Scalar& c);

 private:
  void check_ring(const Poly& o) const;

  Ring ring_;
  TermMap terms_;
};

/// Univariate Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd of univariate polynomials (0 if both are 0).
Poly gcd(const Poly& a, const Poly& b);

/// Weighted degree of a single monomial; throws NoWeightsConfigured.
std::int64_t weighted_degree_of(const RingContext& ring, const Exponents& e);

/// Every exponent vector of the given weighted degree (empty when d < 0).
std::vector<Exponents> monomials_of_weighted_degree(const RingContext& ring,
                                                    std::int64_t d);
/// Every exponent vector of total degree <= bound.
std::vector<Exponents> monomials_up_to_degree(std::size_t nvars,
                                              std::uint32_t bound);

/// Parses the polynomial grammar
///   expression := ['-'] term (('+'|'-') term)*
///   term       := factor ('*' factor)*
///   factor     := int ['/' uint] | var ['^' uint] | '(' expression ')' ['^' uint]
/// Throws ParseError with an offset for malformed input.
Poly parse_poly(const std::string& text, const Ring& ring);

}  // namespace mfcat
