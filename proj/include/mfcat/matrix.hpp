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
#include <vector>

#include "mfcat/poly.hpp"

namespace mfcat {

/// Row-major matrix of polynomials over a single ring. Zero rows or columns
/// are allowed; they model maps to and from the zero module.
class PolyMatrix {
 public:
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);
  PolyMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMatrix zero(Ring ring, std::size_t rows, std::size_t cols) {
    return PolyMatrix(std::move(ring), rows, cols);
  }
  static PolyMatrix identity(Ring ring, std::size_t n);
  static PolyMatrix scalar(Ring ring, std::size_t n, const Poly& p);
  /// 1x1 matrix.
  static PolyMatrix of(const Poly& p);
  /// Assembles a grid of blocks; blocks in a row share a row count and
  /// blocks in a column share a column count.
  static PolyMatrix block(const std::vector<std::vector<PolyMatrix>>& grid);
  /// Block-diagonal sum.
  static PolyMatrix diagonal_sum(const PolyMatrix& a, const PolyMatrix& b);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Poly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const std::vector<Poly>& entries() const noexcept { return e_; }

  bool is_zero() const;

  PolyMatrix transpose() const;
  PolyMatrix derivative(const std::string& var) const;
  PolyMatrix embed(const Ring& target) const;
  /// Submatrix [r0, r0+nr) x [c0, c0+nc).
  PolyMatrix slice(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& p, const PolyMatrix& m);
  friend PolyMatrix operator*(const Scalar& c, const PolyMatrix& m);
  PolyMatrix operator-() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Maximum total degree over nonzero entries (0 for the zero matrix).
  std::uint64_t max_degree() const;

  std::string to_string() const;

 private:
  void check_same_shape(const PolyMatrix& o, const char* op) const;

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> e_;
};

}  // namespace mfcat
