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

#include "mfcat/field.hpp"

namespace mfcat {

using Vec = std::vector<Scalar>;

/// Dense matrix over a Field with exact Gaussian elimination.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);

  static Mat identity(Field field, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Mat from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  bool is_zero() const;
  Mat transpose() const;
  Vec column(std::size_t c) const;
  /// Column-major flattening, used to treat matrices as vectors.
  Vec flatten() const;

  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& c, const Mat& m);
  friend Vec operator*(const Mat& a, const Vec& v);
  friend bool operator==(const Mat& a, const Mat& b);

  Mat pow(std::size_t e) const;
  /// Block-diagonal sum.
  static Mat diagonal_sum(const Mat& a, const Mat& b);

  /// Reduces to reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : A x = 0}.
  std::vector<Vec> nullspace() const;
  /// Some x with A x = b, or nullopt.
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<Mat> inverse() const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

/// Rank of the span of a list of vectors of equal length.
std::size_t span_rank(Field field, std::size_t length, const std::vector<Vec>& vectors);

}  // namespace mfcat
