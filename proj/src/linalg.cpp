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

#include "mfcat/linalg.hpp"

#include "mfcat/error.hpp"

namespace mfcat {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(field)) {}

Mat Mat::identity(Field field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Mat Mat::from_columns(Field field, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorCode::ShapeMismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Vec Mat::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

Vec Mat::flatten() const {
  Vec v;
  v.reserve(a_.size());
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  }
  return v;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::ShapeMismatch, "Mat add");
  }
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::ShapeMismatch, "Mat sub");
  }
  Mat r = a;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeMismatch, "Mat mul");
  Mat r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    }
  }
  return r;
}

Mat operator*(const Scalar& c, const Mat& m) {
  Mat r = m;
  for (auto& s : r.a_) s *= c;
  return r;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::ShapeMismatch, "Mat-vec mul");
  Vec r(a.rows_, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Mat Mat::pow(std::size_t e) const {
  if (rows_ != cols_) throw Error(ErrorCode::ShapeMismatch, "power of non-square matrix");
  Mat r = identity(field_, rows_);
  for (std::size_t i = 0; i < e; ++i) r = r * *this;
  return r;
}

Mat Mat::diagonal_sum(const Mat& a, const Mat& b) {
  Mat r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) r(a.rows_ + i, a.cols_ + j) = b(i, j);
  }
  return r;
}

std::vector<std::size_t> Mat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
    if (sel == rows_) continue;
    if (sel != row) {
      for (std::size_t j = col; j < cols_; ++j) {
        std::swap((*this)(sel, j), (*this)(row, j));
      }
    }
    const Scalar inv = (*this)(row, col).inverse();
    for (std::size_t j = col; j < cols_; ++j) {
      if (!(*this)(row, j).is_zero()) (*this)(row, j) *= inv;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col).is_zero()) continue;
      const Scalar factor = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= factor * (*this)(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Mat::rank() const {
  Mat copy = *this;
  return copy.rref().size();
}

std::vector<Vec> Mat::nullspace() const {
  Mat r = *this;
  const auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error(ErrorCode::ShapeMismatch, "rhs length");
  Mat aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_, Scalar::zero(field_));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  Mat aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar::one(field_);
  }
  const auto pivots = aug.rref();
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

std::size_t span_rank(Field field, std::size_t length, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  // Vectors as rows keeps elimination on the short dimension when there are
  // many generators.
  Mat m(field, vectors.size(), length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = 0; j < length; ++j) m(i, j) = vectors[i][j];
  }
  return m.rref().size();
}

}  // namespace mfcat
