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

// Exact linear systems whose unknowns are polynomial matrices with a fixed
// monomial support per entry. An equation block is a sum of terms L*U*R with
// known L, R and unknown U, set equal to a known right-hand side.

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mfcat/linalg.hpp"
#include "mfcat/matrix.hpp"

namespace mfcat::detail {

class AnsatzSystem {
 public:
  using Support = std::vector<std::vector<Exponents>>;  // row-major per entry

  explicit AnsatzSystem(Ring ring) : ring_(std::move(ring)) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols, Support support);
  std::size_t add_equation(std::size_t rows, std::size_t cols);

  /// Adds sign * L * U * R to the equation. Null L or R means identity.
  void add_term(std::size_t eq, const PolyMatrix* L, std::size_t unknown,
                const PolyMatrix* R, const Scalar& sign);
  void add_rhs(std::size_t eq, const PolyMatrix& M);

  std::size_t unknown_count() const noexcept { return columns_.size(); }

  Mat matrix() const;
  Vec rhs() const;
  /// A solution of the full system, or nullopt.
  std::optional<Vec> solve() const;
  /// Basis of solutions with zero right-hand side.
  std::vector<Vec> homogeneous_solutions() const;
  /// Coordinates of a matrix placed in an equation block; extends the row
  /// index with any monomials not seen yet.
  Vec encode(std::size_t eq, const PolyMatrix& M);
  std::size_t row_count() const noexcept { return rows_.size(); }

  PolyMatrix materialize(std::size_t unknown, const Vec& solution) const;

  const Ring& ring() const noexcept { return ring_; }

 private:
  using RowKey = std::tuple<std::size_t, std::size_t, std::size_t, Exponents>;

  struct Unknown {
    std::size_t rows;
    std::size_t cols;
    Support support;
    std::size_t offset;
  };
  struct Block {
    std::size_t rows;
    std::size_t cols;
  };

  std::size_t row_of(const RowKey& key);

  Ring ring_;
  std::vector<Unknown> unknowns_;
  std::vector<Block> equations_;
  std::map<RowKey, std::size_t> rows_;
  std::vector<std::map<std::size_t, Scalar>> columns_;
  std::map<std::size_t, Scalar> rhs_;
};

/// Support where every entry allows every monomial of total degree <= bound.
AnsatzSystem::Support bounded_support(std::size_t rows, std::size_t cols,
                                      std::size_t nvars, std::uint32_t bound);

}  // namespace mfcat::detail
