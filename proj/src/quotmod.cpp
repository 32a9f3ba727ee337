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

#include "mfcat/quotmod.hpp"

#include <algorithm>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

void require_univariate(const Poly& W) {
  if (W.ring()->nvars() != 1) {
    throw Error(ErrorCode::WrongArity, "module relations need a univariate W, got " +
                                           std::to_string(W.ring()->nvars()) + " variables");
  }
}

void require_same_W(const QuotModule& M, const QuotModule& N) {
  if (!(M.W() == N.W())) {
    throw Error(ErrorCode::SuperpotentialMismatch,
                "modules over different rings: " + M.W().to_string() + " vs " +
                    N.W().to_string());
  }
}

// Row-major flattening (the layout used for spans of maps).
Vec flat(const Mat& F) {
  Vec v;
  v.reserve(F.rows() * F.cols());
  for (std::size_t i = 0; i < F.rows(); ++i) {
    for (std::size_t j = 0; j < F.cols(); ++j) v.push_back(F(i, j));
  }
  return v;
}

Mat unflat(Field f, std::size_t rows, std::size_t cols, const Vec& v) {
  Mat F(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) F(i, j) = v[i * cols + j];
  }
  return F;
}

// Coefficients of r (deg r < size) as a vector of the given length.
Vec coefficients(const Poly& r, std::size_t size) {
  Vec v(size, Scalar::zero(r.field()));
  for (const auto& [e, c] : r.terms()) v.at(e[0]) = c;
  return v;
}

}  // namespace

QuotModule QuotModule::create(Poly W, Mat Z) {
  require_univariate(W);
  if (W.is_zero()) throw Error(ErrorCode::ZeroSuperpotential, "W is zero");
  if (Z.rows() != Z.cols()) throw Error(ErrorCode::ShapeMismatch, "Z must be square");
  if (Z.field() != W.field()) {
    throw Error(ErrorCode::ContextMismatch, "Z and W over different fields");
  }
  if (!evaluate(W, Z).is_zero()) {
    throw Error(ErrorCode::RelationViolated, "W(Z) != 0 for W = " + W.to_string());
  }
  return QuotModule(std::move(W), std::move(Z));
}

ModuleMorphism ModuleMorphism::create(QuotModule source, QuotModule target, Mat F) {
  require_same_W(source, target);
  if (F.rows() != target.dim() || F.cols() != source.dim()) {
    throw Error(ErrorCode::ShapeMismatch, "module map has the wrong shape");
  }
  if (!(F * source.Z() == target.Z() * F)) {
    throw Error(ErrorCode::NotAMorphism, "F Z_M != Z_N F");
  }
  return ModuleMorphism(std::move(source), std::move(target), std::move(F));
}

Mat evaluate(const Poly& p, const Mat& A) {
  const Field f = A.field();
  Mat result(f, A.rows(), A.cols());
  if (p.is_zero()) return result;
  const auto coeffs = p.dense_coefficients();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * A;
    for (std::size_t i = 0; i < A.rows(); ++i) result(i, i) += coeffs[k];
  }
  return result;
}

Mat companion(const Poly& monic) {
  const auto c = monic.dense_coefficients();
  if (c.empty() || !c.back().is_one()) {
    throw Error(ErrorCode::ShapeMismatch, "companion matrix needs a monic polynomial");
  }
  const std::size_t m = c.size() - 1;
  Mat C(monic.field(), m, m);
  for (std::size_t j = 0; j + 1 < m; ++j) C(j + 1, j) = Scalar::one(monic.field());
  for (std::size_t i = 0; i < m; ++i) C(i, m - 1) = -c[i];
  return C;
}

Mat jordan_block(Field field, std::size_t size) {
  Mat J(field, size, size);
  for (std::size_t j = 0; j + 1 < size; ++j) J(j + 1, j) = Scalar::one(field);
  return J;
}

QuotModule cyclic_module(const Poly& W, const Poly& d) {
  return QuotModule::create(W, companion(d.monic()));
}

QuotModule free_module(const Poly& W) { return cyclic_module(W, W); }

QuotModule direct_sum(const QuotModule& a, const QuotModule& b) {
  require_same_W(a, b);
  return QuotModule::create(a.W(), Mat::diagonal_sum(a.Z(), b.Z()));
}

QuotModule module_from_partition(const Poly& W, const std::vector<std::uint32_t>& parts) {
  Mat Z(W.field(), 0, 0);
  for (auto p : parts) Z = Mat::diagonal_sum(Z, jordan_block(W.field(), p));
  return QuotModule::create(W, std::move(Z));
}

// ---------------------------------------------------------------------------
// Smith normal form over k[z].

namespace {

class SmithWorker {
 public:
  explicit SmithWorker(const PolyMatrix& A)
      : A_(A),
        U_(PolyMatrix::identity(A.ring(), A.rows())),
        Uinv_(PolyMatrix::identity(A.ring(), A.rows())),
        V_(PolyMatrix::identity(A.ring(), A.cols())) {}

  SmithForm run() {
    const std::size_t r = std::min(A_.rows(), A_.cols());
    for (std::size_t t = 0; t < r; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm out{U_, Uinv_, V_, A_, {}};
    for (std::size_t t = 0; t < r; ++t) out.diagonal.push_back(A_(t, t));
    return out;
  }

 private:
  // Row op: row_i += c * row_t (U likewise; U_inv gets column_t -= c * column_i).
  void add_row(std::size_t i, std::size_t t, const Poly& c) {
    for (std::size_t j = 0; j < A_.cols(); ++j) {
      if (!A_(t, j).is_zero()) A_(i, j) += c * A_(t, j);
    }
    for (std::size_t j = 0; j < U_.cols(); ++j) {
      if (!U_(t, j).is_zero()) U_(i, j) += c * U_(t, j);
    }
    for (std::size_t k = 0; k < Uinv_.rows(); ++k) {
      if (!Uinv_(k, i).is_zero()) Uinv_(k, t) -= c * Uinv_(k, i);
    }
  }

  // Column op: col_j += c * col_t.
  void add_col(std::size_t j, std::size_t t, const Poly& c) {
    for (std::size_t i = 0; i < A_.rows(); ++i) {
      if (!A_(i, t).is_zero()) A_(i, j) += c * A_(i, t);
    }
    for (std::size_t i = 0; i < V_.rows(); ++i) {
      if (!V_(i, t).is_zero()) V_(i, j) += c * V_(i, t);
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A_.cols(); ++j) std::swap(A_(a, j), A_(b, j));
    for (std::size_t j = 0; j < U_.cols(); ++j) std::swap(U_(a, j), U_(b, j));
    for (std::size_t k = 0; k < Uinv_.rows(); ++k) std::swap(Uinv_(k, a), Uinv_(k, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < A_.rows(); ++i) std::swap(A_(i, a), A_(i, b));
    for (std::size_t i = 0; i < V_.rows(); ++i) std::swap(V_(i, a), V_(i, b));
  }

  void scale_row(std::size_t t, const Scalar& c) {
    for (std::size_t j = 0; j < A_.cols(); ++j) A_(t, j) *= c;
    for (std::size_t j = 0; j < U_.cols(); ++j) U_(t, j) *= c;
    const Scalar inv = c.inverse();
    for (std::size_t k = 0; k < Uinv_.rows(); ++k) Uinv_(k, t) *= inv;
  }

  // Returns false when the remaining block is zero.
  bool reduce_at(std::size_t t) {
    while (true) {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      std::uint32_t best_deg = 0;
      for (std::size_t i = t; i < A_.rows(); ++i) {
        for (std::size_t j = t; j < A_.cols(); ++j) {
          if (A_(i, j).is_zero()) continue;
          const auto d = A_(i, j).degree_univariate();
          if (!best || d < best_deg) {
            best = {i, j};
            best_deg = d;
          }
        }
      }
      if (!best) return false;
      swap_rows(t, best->first);
      swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < A_.rows(); ++i) {
        if (A_(i, t).is_zero()) continue;
        auto [q, rem] = divmod(A_(i, t), A_(t, t));
        add_row(i, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < A_.cols(); ++j) {
        if (A_(t, j).is_zero()) continue;
        auto [q, rem] = divmod(A_(t, j), A_(t, t));
        add_col(j, t, -q);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < A_.rows() && divides; ++i) {
        for (std::size_t j = t + 1; j < A_.cols(); ++j) {
          if (!divmod(A_(i, j), A_(t, t)).second.is_zero()) {
            add_row(t, i, Poly(A_.ring(), 1L));
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;

      scale_row(t, A_(t, t).leading_coefficient().inverse());
      return true;
    }
  }

  PolyMatrix A_;
  PolyMatrix U_;
  PolyMatrix Uinv_;
  PolyMatrix V_;
};

struct CokData {
  QuotModule module;
  SmithForm smith;
  std::vector<std::size_t> blocks;  // indices of non-unit invariant factors
  std::vector<std::size_t> offsets;
};

CokData cok_data(const MatrixFactorization& X) {
  if (X.ring()->nvars() != 1) {
    throw Error(ErrorCode::NotUnivariate, "Cok needs a univariate factorization");
  }
  auto smith = smith_normal_form(X.p1());
  Mat Z(X.ring()->field(), 0, 0);
  std::vector<std::size_t> blocks;
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < smith.diagonal.size(); ++i) {
    const Poly& d = smith.diagonal[i];
    if (d.is_zero()) {
      throw Error(ErrorCode::NotAFactorization, "p1 is singular");
    }
    if (d.degree_univariate() == 0) continue;
    blocks.push_back(i);
    offsets.push_back(Z.rows());
    Z = Mat::diagonal_sum(Z, companion(d));
  }
  return CokData{QuotModule::create(X.W(), std::move(Z)), std::move(smith), std::move(blocks),
                 std::move(offsets)};
}

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& A) {
  if (A.ring()->nvars() != 1) {
    throw Error(ErrorCode::NotUnivariate, "Smith normal form needs k[z]");
  }
  return SmithWorker(A).run();
}

QuotModule cok(const MatrixFactorization& X) { return cok_data(X).module; }

ModuleMorphism cok(const MFMorphism& f) {
  const auto src = cok_data(f.source());
  const auto tgt = cok_data(f.target());
  const Field field = f.source().ring()->field();
  // Basis vector z^j e_i of coker(D_P) corresponds to U_P^{-1} z^j e_i in P0.
  const PolyMatrix M = tgt.smith.U * f.f0() * src.smith.U_inv;
  Mat F(field, tgt.module.dim(), src.module.dim());
  const Poly z = Poly::variable(f.source().ring(), f.source().ring()->vars()[0]);
  for (std::size_t bi = 0; bi < src.blocks.size(); ++bi) {
    const std::size_t i = src.blocks[bi];
    const std::uint32_t deg_i = src.smith.diagonal[i].degree_univariate();
    for (std::uint32_t j = 0; j < deg_i; ++j) {
      const std::size_t col = src.offsets[bi] + j;
      for (std::size_t bk = 0; bk < tgt.blocks.size(); ++bk) {
        const std::size_t k = tgt.blocks[bk];
        const Poly& dk = tgt.smith.diagonal[k];
        const Poly r = divmod(M(k, i) * z.pow(j), dk).second;
        const Vec c = coefficients(r, dk.degree_univariate());
        for (std::size_t m = 0; m < c.size(); ++m) F(tgt.offsets[bk] + m, col) = c[m];
      }
    }
  }
  return ModuleMorphism::create(src.module, tgt.module, std::move(F));
}

// ---------------------------------------------------------------------------

std::vector<Mat> hom_space(const QuotModule& M, const QuotModule& N) {
  require_same_W(M, N);
  const Field f = M.field();
  const std::size_t m = M.dim();
  const std::size_t n = N.dim();
  if (m == 0 || n == 0) return {};
  // Unknown F(a, b) at column a*m + b; equation (F Z_M - Z_N F)(i, j) at row i*m + j.
  Mat A(f, n * m, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t row = i * m + j;
      for (std::size_t b = 0; b < m; ++b) {
        if (!M.Z()(b, j).is_zero()) A(row, i * m + b) += M.Z()(b, j);
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (!N.Z()(i, a).is_zero()) A(row, a * m + j) -= N.Z()(i, a);
      }
    }
  }
  std::vector<Mat> basis;
  for (const auto& v : A.nullspace()) basis.push_back(unflat(f, n, m, v));
  return basis;
}

bool StableHomSpace::is_stably_zero(const Mat& F) const {
  std::vector<Vec> vs;
  for (const auto& B : factoring_basis) vs.push_back(flat(B));
  const auto base = vs.size();
  vs.push_back(flat(F));
  return span_rank(F.field(), F.rows() * F.cols(), vs) == base;
}

StableHomSpace stable_hom(const QuotModule& M, const QuotModule& N) {
  require_same_W(M, N);
  StableHomSpace out;
  out.hom_basis = hom_space(M, N);
  if (out.hom_basis.empty()) return out;
  const Field f = M.field();
  const QuotModule A = free_module(M.W());
  const auto to_free = hom_space(M, A);
  // pi_i: A -> N sends z^j to Z_N^j b_i.
  std::vector<Vec> image;
  Mat Zpow = Mat::identity(f, N.dim());
  std::vector<Mat> powers;
  for (std::size_t j = 0; j < A.dim(); ++j) {
    powers.push_back(Zpow);
    Zpow = Zpow * N.Z();
  }
  for (std::size_t i = 0; i < N.dim(); ++i) {
    Mat pi(f, N.dim(), A.dim());
    for (std::size_t j = 0; j < A.dim(); ++j) {
      for (std::size_t r = 0; r < N.dim(); ++r) pi(r, j) = powers[j](r, i);
    }
    for (const auto& phi : to_free) image.push_back(flat(pi * phi));
  }
  // Independent subset of the image.
  const std::size_t len = N.dim() * M.dim();
  std::vector<Vec> chosen;
  for (auto& v : image) {
    chosen.push_back(v);
    if (span_rank(f, len, chosen) < chosen.size()) chosen.pop_back();
  }
  for (const auto& v : chosen) out.factoring_basis.push_back(unflat(f, N.dim(), M.dim(), v));
  out.stable_dim = out.hom_basis.size() - chosen.size();
  return out;
}

std::map<std::uint32_t, std::size_t> decompose(const QuotModule& M) {
  const auto& terms = M.W().terms();
  if (terms.size() != 1) {
    throw Error(ErrorCode::NotNilpotentForm,
                "decomposition needs W = u*z^n, got " + M.W().to_string());
  }
  const std::uint32_t n = terms.begin()->first[0];
  std::vector<std::size_t> ranks;  // ranks[k] = rk Z^k, k = 0..n+1
  Mat P = Mat::identity(M.field(), M.dim());
  for (std::uint32_t k = 0; k <= n + 1; ++k) {
    ranks.push_back(P.rank());
    P = P * M.Z();
  }
  std::map<std::uint32_t, std::size_t> out;
  for (std::uint32_t mu = 1; mu <= n; ++mu) {
    const auto m = static_cast<long>(ranks[mu - 1]) - 2 * static_cast<long>(ranks[mu]) +
                   static_cast<long>(ranks[mu + 1]);
    if (m > 0) out[mu] = static_cast<std::size_t>(m);
  }
  return out;
}

MatrixFactorization stabilize(const QuotModule& M) {
  const Ring& ring = M.ring();
  const std::size_t m = M.dim();
  const Poly z = Poly::variable(ring, ring->vars()[0]);
  PolyMatrix p1(ring, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      p1(i, j) = Poly(ring, -M.Z()(i, j));
      if (i == j) p1(i, j) += z;
    }
  }
  const auto w = M.W().dense_coefficients();
  std::vector<Mat> powers{Mat::identity(M.field(), m)};
  for (std::size_t k = 1; k < w.size(); ++k) powers.push_back(powers.back() * M.Z());
  PolyMatrix p0(ring, m, m);
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w[k].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) {
      const Mat& Zp = powers[k - 1 - j];
      const Poly zj = z.pow(static_cast<std::uint32_t>(j)) * w[k];
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (!Zp(a, b).is_zero()) p0(a, b) += zj * Zp(a, b);
        }
      }
    }
  }
  return MatrixFactorization::from_shifted(M.W(), std::move(p1), std::move(p0));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t size = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Characteristic polynomial det(wI - A) by Faddeev-LeVerrier (char 0).
std::vector<mpq_class> charpoly(const Mat& A) {
  const std::size_t n = A.rows();
  const Field f = A.field();
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Mat Mk(f, n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next = A * Mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += Scalar(f, c[n - k + 1]);
    Mk = std::move(next);
    const Mat AM = A * Mk;
    mpq_class tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i).value();
    c[n - k] = -tr / static_cast<long>(k);
  }
  return c;
}

mpq_class eval(const std::vector<mpq_class>& c, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

// Synthetic division by (w - r).
std::vector<mpq_class> deflate(const std::vector<mpq_class>& c, const mpq_class& r) {
  std::vector<mpq_class> q(c.size() - 1);
  mpq_class carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = carry * r + c[k];
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

CriticalValues critical_values(const Poly& W) {
  if (W.ring()->nvars() != 1) throw Error(ErrorCode::NotUnivariate, "critical values need k[z]");
  if (!W.field().is_rational()) {
    throw Error(ErrorCode::InvalidField, "critical values are computed over Q");
  }
  if (W.is_constant()) throw Error(ErrorCode::ConstantSuperpotential, "W is constant");
  CriticalValues out;
  const Poly dW = W.derivative(W.ring()->vars()[0]);
  if (dW.is_constant()) return out;
  std::vector<mpq_class> c = charpoly(evaluate(W, companion(dW.monic())));

  std::vector<mpq_class> roots;
  while (c.size() > 1 && c[0] == 0) {
    roots.push_back(0);
    c.erase(c.begin());
  }
  bool progress = true;
  while (c.size() > 1 && progress) {
    progress = false;
    mpz_class lcm = 1;
    for (const auto& x : c) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
    const mpz_class a0 = mpz_class(c.front() * lcm);
    const mpz_class am = mpz_class(c.back() * lcm);
    for (const auto& p : divisors(a0)) {
      for (const auto& q : divisors(am)) {
        for (int s : {1, -1}) {
          mpq_class r(s * p, q);
          r.canonicalize();
          if (eval(c, r) == 0) {
            roots.push_back(r);
            c = deflate(c, r);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  out.has_irrational = c.size() > 1;
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots) out.rational.push_back(Scalar(W.field(), r));
  return out;
}

PeriodicResolutionCheck check_periodic_resolution(const MatrixFactorization& X) {
  if (X.ring()->nvars() != 1) {
    throw Error(ErrorCode::NotUnivariate, "periodic resolution check needs k[z]");
  }
  const Mat C = companion(X.W().monic());
  const std::size_t n = C.rows();
  const std::size_t d = X.rank();
  auto lift = [&](const PolyMatrix& p) {
    Mat out(X.ring()->field(), d * n, d * n);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Mat b = evaluate(p(i, j), C);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t c = 0; c < n; ++c) out(i * n + a, j * n + c) = b(a, c);
        }
      }
    }
    return out;
  };
  const Mat P1 = lift(X.p1());
  const Mat P0 = lift(X.p0());
  PeriodicResolutionCheck r;
  r.dim = d * n;
  r.rank_p1 = P1.rank();
  r.rank_p0 = P0.rank();
  r.exact = (P1 * P0).is_zero() && (P0 * P1).is_zero() && r.rank_p1 + r.rank_p0 == r.dim;
  return r;
}

}  // namespace mfcat
