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

#include "mfcat/matrix.hpp"

#include <algorithm>

#include "mfcat/error.hpp"

namespace mfcat {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Poly(ring_)) {}

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols,
                       std::vector<Poly> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) {
    throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
  }
  for (const auto& p : e_) {
    if (!p.ring()->same_as(*ring_)) {
      throw Error(ErrorCode::ContextMismatch, "matrix entries from different rings");
    }
  }
}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n) {
  return scalar(ring, n, Poly(ring, 1L));
}

PolyMatrix PolyMatrix::scalar(Ring ring, std::size_t n, const Poly& p) {
  PolyMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = p;
  return m;
}

PolyMatrix PolyMatrix::of(const Poly& p) { return PolyMatrix(p.ring(), 1, 1, {p}); }

PolyMatrix PolyMatrix::block(const std::vector<std::vector<PolyMatrix>>& grid) {
  if (grid.empty() || grid[0].empty()) {
    throw Error(ErrorCode::ShapeMismatch, "empty block grid");
  }
  const Ring& ring = grid[0][0].ring();
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> col_sizes;
  for (const auto& b : grid[0]) col_sizes.push_back(b.cols());
  for (const auto& row : grid) {
    if (row.size() != col_sizes.size()) {
      throw Error(ErrorCode::ShapeMismatch, "ragged block grid");
    }
    row_sizes.push_back(row[0].rows());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j].rows() != row_sizes.back() || row[j].cols() != col_sizes[j]) {
        throw Error(ErrorCode::ShapeMismatch, "incompatible block shapes");
      }
    }
  }
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (auto r : row_sizes) total_rows += r;
  for (auto c : col_sizes) total_cols += c;
  PolyMatrix out(ring, total_rows, total_cols);
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < grid.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < col_sizes.size(); ++bj) {
      const auto& b = grid[bi][bj];
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out(r0 + i, c0 + j) = b(i, j);
      }
      c0 += col_sizes[bj];
    }
    r0 += row_sizes[bi];
  }
  return out;
}

PolyMatrix PolyMatrix::diagonal_sum(const PolyMatrix& a, const PolyMatrix& b) {
  return block({{a, zero(a.ring(), a.rows(), b.cols())},
                {zero(a.ring(), b.rows(), a.cols()), b}});
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::derivative(const std::string& var) const {
  PolyMatrix d(ring_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) d.e_[i] = e_[i].derivative(var);
  return d;
}

PolyMatrix PolyMatrix::embed(const Ring& target) const {
  PolyMatrix d(target, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) d.e_[i] = e_[i].embed(target);
  return d;
}

PolyMatrix PolyMatrix::slice(std::size_t r0, std::size_t nr, std::size_t c0,
                             std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw Error(ErrorCode::ShapeMismatch, "slice out of range");
  }
  PolyMatrix s(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  }
  return s;
}

void PolyMatrix::check_same_shape(const PolyMatrix& o, const char* op) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw Error(ErrorCode::ShapeMismatch,
                std::string(op) + ": " + std::to_string(rows_) + "x" +
                    std::to_string(cols_) + " vs " + std::to_string(o.rows_) + "x" +
                    std::to_string(o.cols_));
  }
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  check_same_shape(o, "matrix add");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  check_same_shape(o, "matrix sub");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::ShapeMismatch,
                "matrix mul: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                    " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  PolyMatrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

PolyMatrix operator*(const Poly& p, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& e : out.e_) e = p * e;
  return out;
}

PolyMatrix operator*(const Scalar& c, const PolyMatrix& m) {
  PolyMatrix out = m;
  for (auto& e : out.e_) e *= c;
  return out;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix out = *this;
  for (auto& e : out.e_) e = -e;
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::uint64_t PolyMatrix::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& p : e_) {
    if (auto pd = p.total_degree()) d = std::max(d, *pd);
  }
  return d;
}

std::string PolyMatrix::to_string() const {
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

}  // namespace mfcat
