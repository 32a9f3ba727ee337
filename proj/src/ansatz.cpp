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

#include "ansatz.hpp"

#include "mfcat/error.hpp"

namespace mfcat::detail {

std::size_t AnsatzSystem::add_unknown(std::size_t rows, std::size_t cols, Support support) {
  if (support.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "support size does not match unknown shape");
  }
  std::size_t count = 0;
  for (const auto& s : support) count += s.size();
  unknowns_.push_back(Unknown{rows, cols, std::move(support), columns_.size()});
  columns_.resize(columns_.size() + count);
  return unknowns_.size() - 1;
}

std::size_t AnsatzSystem::add_equation(std::size_t rows, std::size_t cols) {
  equations_.push_back(Block{rows, cols});
  return equations_.size() - 1;
}

std::size_t AnsatzSystem::row_of(const RowKey& key) {
  auto [it, inserted] = rows_.try_emplace(key, rows_.size());
  return it->second;
}

void AnsatzSystem::add_term(std::size_t eq, const PolyMatrix* L, std::size_t unknown,
                            const PolyMatrix* R, const Scalar& sign) {
  const auto& u = unknowns_.at(unknown);
  const auto& block = equations_.at(eq);
  const std::size_t lrows = L ? L->rows() : u.rows;
  const std::size_t rcols = R ? R->cols() : u.cols;
  if ((L && L->cols() != u.rows) || (R && R->rows() != u.cols) || lrows != block.rows ||
      rcols != block.cols) {
    throw Error(ErrorCode::ShapeMismatch, "ansatz term does not fit its equation block");
  }
  const std::size_t n = ring_->nvars();
  std::size_t col = u.offset;
  for (std::size_t a = 0; a < u.rows; ++a) {
    for (std::size_t b = 0; b < u.cols; ++b) {
      const auto& monos = u.support[a * u.cols + b];
      if (monos.empty()) continue;
      // Products L(i,a) * R(b,j) for this entry.
      std::vector<std::tuple<std::size_t, std::size_t, Poly>> coeffs;
      for (std::size_t i = 0; i < lrows; ++i) {
        if (L && (*L)(i, a).is_zero()) continue;
        if (!L && i != a) continue;
        for (std::size_t j = 0; j < rcols; ++j) {
          if (R && (*R)(b, j).is_zero()) continue;
          if (!R && j != b) continue;
          Poly c(ring_, sign);
          if (L) c = (*L)(i, a) * c;
          if (R) c = c * (*R)(b, j);
          coeffs.emplace_back(i, j, std::move(c));
        }
      }
      for (std::size_t m = 0; m < monos.size(); ++m, ++col) {
        auto& column = columns_[col];
        for (const auto& [i, j, c] : coeffs) {
          for (const auto& [e, v] : c.terms()) {
            Exponents sum(n);
            for (std::size_t k = 0; k < n; ++k) sum[k] = e[k] + monos[m][k];
            const std::size_t r = row_of(RowKey{eq, i, j, std::move(sum)});
            auto [it, inserted] = column.try_emplace(r, v);
            if (!inserted) {
              it->second += v;
              if (it->second.is_zero()) column.erase(it);
            }
          }
        }
      }
    }
  }
}

void AnsatzSystem::add_rhs(std::size_t eq, const PolyMatrix& M) {
  const auto& block = equations_.at(eq);
  if (M.rows() != block.rows || M.cols() != block.cols) {
    throw Error(ErrorCode::ShapeMismatch, "right-hand side does not fit its equation block");
  }
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      for (const auto& [e, v] : M(i, j).terms()) {
        const std::size_t r = row_of(RowKey{eq, i, j, e});
        auto [it, inserted] = rhs_.try_emplace(r, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) rhs_.erase(it);
        }
      }
    }
  }
}

Vec AnsatzSystem::encode(std::size_t eq, const PolyMatrix& M) {
  std::vector<std::pair<std::size_t, Scalar>> entries;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) {
      for (const auto& [e, v] : M(i, j).terms()) {
        entries.emplace_back(row_of(RowKey{eq, i, j, e}), v);
      }
    }
  }
  Vec out(rows_.size(), Scalar::zero(ring_->field()));
  for (const auto& [r, v] : entries) out[r] += v;
  return out;
}

Mat AnsatzSystem::matrix() const {
  Mat m(ring_->field(), rows_.size(), columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  }
  return m;
}

Vec AnsatzSystem::rhs() const {
  Vec b(rows_.size(), Scalar::zero(ring_->field()));
  for (const auto& [r, v] : rhs_) b[r] = v;
  return b;
}

std::optional<Vec> AnsatzSystem::solve() const {
  if (columns_.empty()) {
    if (rhs_.empty()) return Vec{};
    return std::nullopt;
  }
  return matrix().solve(rhs());
}

std::vector<Vec> AnsatzSystem::homogeneous_solutions() const {
  if (columns_.empty()) return {};
  return matrix().nullspace();
}

PolyMatrix AnsatzSystem::materialize(std::size_t unknown, const Vec& solution) const {
  const auto& u = unknowns_.at(unknown);
  PolyMatrix out(ring_, u.rows, u.cols);
  std::size_t col = u.offset;
  for (std::size_t a = 0; a < u.rows; ++a) {
    for (std::size_t b = 0; b < u.cols; ++b) {
      for (const auto& mono : u.support[a * u.cols + b]) {
        out(a, b).add_term(mono, solution.at(col++));
      }
    }
  }
  return out;
}

AnsatzSystem::Support bounded_support(std::size_t rows, std::size_t cols, std::size_t nvars,
                                      std::uint32_t bound) {
  const auto monos = monomials_up_to_degree(nvars, bound);
  return AnsatzSystem::Support(rows * cols, monos);
}

}  // namespace mfcat::detail
