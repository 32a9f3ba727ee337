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

#include "mfcat/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "ansatz.hpp"
#include "mfcat/error.hpp"

namespace mfcat {

using detail::AnsatzSystem;

namespace {

// Row-echelon accumulator used to pick representatives independent of a
// given subspace.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  // Returns true if v was independent of the vectors added so far.
  bool add(Vec v) {
    for (const auto& [pivot, row] : rows_) {
      if (pivot < v.size() && !v[pivot].is_zero()) {
        const Scalar c = v[pivot];
        for (std::size_t k = 0; k < row.size() && k < v.size(); ++k) {
          if (!row[k].is_zero()) v[k] -= c * row[k];
        }
      }
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      const Scalar inv = v[k].inverse();
      for (auto& x : v) x *= inv;
      // Keep stored rows reduced at the new pivot.
      for (auto& [p, row] : rows_) {
        if (k < row.size() && !row[k].is_zero()) {
          const Scalar c = row[k];
          for (std::size_t j = 0; j < row.size() && j < v.size(); ++j) {
            if (!v[j].is_zero()) row[j] -= c * v[j];
          }
        }
      }
      rows_.emplace_back(k, std::move(v));
      return true;
    }
    return false;
  }

  std::size_t size() const noexcept { return rows_.size(); }

 private:
  Field field_;
  std::vector<std::pair<std::size_t, Vec>> rows_;
};

Scalar sign(Field f, long s) { return Scalar(f, s); }

void pad(Vec& v, std::size_t n, Field f) {
  if (v.size() < n) v.resize(n, Scalar::zero(f));
}

void require_same_W(const MatrixFactorization& X, const MatrixFactorization& Y) {
  if (!(X.W() == Y.W())) {
    throw Error(ErrorCode::SuperpotentialMismatch, "factorizations of different superpotentials");
  }
}

MFGrading require_grading(const MatrixFactorization& X) {
  if (!X.ring()->weights()) {
    throw Error(ErrorCode::PolicyInfeasible, "graded search needs variable weights");
  }
  if (!X.W().weighted_degree()) {
    throw Error(ErrorCode::PolicyInfeasible,
                "graded search needs a quasi-homogeneous W, got " + X.W().to_string());
  }
  auto g = find_grading(X);
  if (!g) {
    throw Error(ErrorCode::PolicyInfeasible,
                "factorization admits no consistent grading for the given weights");
  }
  return *g;
}

using DegreeFn = std::function<std::int64_t(std::size_t, std::size_t)>;

AnsatzSystem::Support graded_support(const RingContext& ring, std::size_t rows,
                                     std::size_t cols, const DegreeFn& degree) {
  AnsatzSystem::Support s(rows * cols);
  for (std::size_t a = 0; a < rows; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      s[a * cols + b] = monomials_of_weighted_degree(ring, degree(a, b));
    }
  }
  return s;
}

// The odd part of Hom(X, Y) in internal degree delta, with D applied:
// unknowns s, t; equation blocks F1 = q0 t + s p1 and F2 = t p0 + q1 s.
struct OddSystem {
  AnsatzSystem sys;
  std::size_t s, t, F1, F2;
};

OddSystem make_odd_system(const MatrixFactorization& X, const MatrixFactorization& Y,
                          AnsatzSystem::Support s_support, AnsatzSystem::Support t_support) {
  const std::size_t rp = X.rank();
  const std::size_t rq = Y.rank();
  const Field f = X.ring()->field();
  OddSystem o{AnsatzSystem(X.ring()), 0, 0, 0, 0};
  o.s = o.sys.add_unknown(rq, rp, std::move(s_support));
  o.t = o.sys.add_unknown(rq, rp, std::move(t_support));
  o.F1 = o.sys.add_equation(rq, rp);
  o.F2 = o.sys.add_equation(rq, rp);
  o.sys.add_term(o.F1, &Y.p0(), o.t, nullptr, sign(f, 1));
  o.sys.add_term(o.F1, nullptr, o.s, &X.p1(), sign(f, 1));
  o.sys.add_term(o.F2, nullptr, o.t, &X.p0(), sign(f, 1));
  o.sys.add_term(o.F2, &Y.p1(), o.s, nullptr, sign(f, 1));
  return o;
}

OddSystem graded_odd_system(const MatrixFactorization& X, const MFGrading& gx,
                            const MatrixFactorization& Y, const MFGrading& gy,
                            std::int64_t delta) {
  const auto& ring = *X.ring();
  const std::int64_t d = gx.W_degree;
  auto s_sup = graded_support(ring, Y.rank(), X.rank(), [&](std::size_t k, std::size_t j) {
    return gx.deg0[j] - gy.deg1[k] + delta;
  });
  auto t_sup = graded_support(ring, Y.rank(), X.rank(), [&](std::size_t l, std::size_t i) {
    return gx.deg1[i] - gy.deg0[l] + delta - d;
  });
  return make_odd_system(X, Y, std::move(s_sup), std::move(t_sup));
}

// Closed degree-0 maps X -> Y with the given supports.
struct EvenSystem {
  AnsatzSystem sys;
  std::size_t f1, f0;
};

EvenSystem make_cycle_system(const MatrixFactorization& X, const MatrixFactorization& Y,
                             AnsatzSystem::Support f1_support,
                             AnsatzSystem::Support f0_support) {
  const std::size_t rp = X.rank();
  const std::size_t rq = Y.rank();
  const Field f = X.ring()->field();
  EvenSystem e{AnsatzSystem(X.ring()), 0, 0};
  e.f1 = e.sys.add_unknown(rq, rp, std::move(f1_support));
  e.f0 = e.sys.add_unknown(rq, rp, std::move(f0_support));
  const auto E1 = e.sys.add_equation(rq, rp);
  const auto E2 = e.sys.add_equation(rq, rp);
  e.sys.add_term(E1, &Y.p1(), e.f1, nullptr, sign(f, 1));
  e.sys.add_term(E1, nullptr, e.f0, &X.p1(), sign(f, -1));
  e.sys.add_term(E2, &Y.p0(), e.f0, nullptr, sign(f, 1));
  e.sys.add_term(E2, nullptr, e.f1, &X.p0(), sign(f, -1));
  return e;
}

EvenSystem graded_cycle_system(const MatrixFactorization& X, const MFGrading& gx,
                               const MatrixFactorization& Y, const MFGrading& gy,
                               std::int64_t delta) {
  const auto& ring = *X.ring();
  auto f1_sup = graded_support(ring, Y.rank(), X.rank(), [&](std::size_t k, std::size_t i) {
    return gx.deg1[i] - gy.deg1[k] + delta;
  });
  auto f0_sup = graded_support(ring, Y.rank(), X.rank(), [&](std::size_t k, std::size_t j) {
    return gx.deg0[j] - gy.deg0[k] + delta;
  });
  return make_cycle_system(X, Y, std::move(f1_sup), std::move(f0_sup));
}

// Splits a degree-0 map into its internal-degree components.
std::map<std::int64_t, std::pair<PolyMatrix, PolyMatrix>> split_by_degree(
    const MFMorphism& f, const MFGrading& gx, const MFGrading& gy) {
  std::map<std::int64_t, std::pair<PolyMatrix, PolyMatrix>> out;
  const auto& ring = f.source().ring();
  const std::size_t rq = f.target().rank();
  const std::size_t rp = f.source().rank();
  auto slot = [&](std::int64_t delta) -> std::pair<PolyMatrix, PolyMatrix>& {
    auto it = out.find(delta);
    if (it == out.end()) {
      it = out.emplace(delta, std::make_pair(PolyMatrix(ring, rq, rp), PolyMatrix(ring, rq, rp)))
               .first;
    }
    return it->second;
  };
  for (std::size_t k = 0; k < rq; ++k) {
    for (std::size_t i = 0; i < rp; ++i) {
      for (const auto& [e, c] : f.f1()(k, i).terms()) {
        const auto delta = weighted_degree_of(*ring, e) - gx.deg1[i] + gy.deg1[k];
        slot(delta).first(k, i).add_term(e, c);
      }
      for (const auto& [e, c] : f.f0()(k, i).terms()) {
        const auto delta = weighted_degree_of(*ring, e) - gx.deg0[i] + gy.deg0[k];
        slot(delta).second(k, i).add_term(e, c);
      }
    }
  }
  return out;
}

std::optional<Homotopy> solve_homotopy(OddSystem& o, const PolyMatrix& f1,
                                       const PolyMatrix& f0) {
  o.sys.add_rhs(o.F1, f1);
  o.sys.add_rhs(o.F2, f0);
  auto sol = o.sys.solve();
  if (!sol) return std::nullopt;
  return Homotopy{o.sys.materialize(o.s, *sol), o.sys.materialize(o.t, *sol)};
}

bool graded_available(const SearchPolicy& policy,
                      std::initializer_list<const MatrixFactorization*> objects) {
  if (policy.mode != SearchPolicy::Mode::GradedExhaustive) return false;
  for (const auto* X : objects) {
    if (!X->ring()->weights() || !X->W().weighted_degree() || !find_grading(*X)) return false;
  }
  return true;
}

std::int64_t jacobian_socle_degree(const Poly& W, std::int64_t d) {
  const auto& w = *W.ring()->weights();
  std::int64_t s = 0;
  for (auto wi : w) s += d - 2 * wi;
  return std::max<std::int64_t>(s, 0);
}

// Left inverse in DB: v: Y -> X with v*u - id_X = D(s, t), all entries of
// total degree <= bound.
std::optional<std::pair<MFMorphism, Homotopy>> solve_left_inverse(const MFMorphism& u,
                                                                  std::uint32_t bound) {
  const auto& X = u.source();
  const auto& Y = u.target();
  const Ring& ring = X.ring();
  const Field f = ring->field();
  const std::size_t rx = X.rank();
  const std::size_t ry = Y.rank();
  const std::size_t n = ring->nvars();
  AnsatzSystem sys(ring);
  const auto v1 = sys.add_unknown(rx, ry, detail::bounded_support(rx, ry, n, bound));
  const auto v0 = sys.add_unknown(rx, ry, detail::bounded_support(rx, ry, n, bound));
  const auto s = sys.add_unknown(rx, rx, detail::bounded_support(rx, rx, n, bound));
  const auto t = sys.add_unknown(rx, rx, detail::bounded_support(rx, rx, n, bound));
  const auto C1 = sys.add_equation(rx, ry);
  const auto C2 = sys.add_equation(rx, ry);
  const auto H1 = sys.add_equation(rx, rx);
  const auto H2 = sys.add_equation(rx, rx);
  sys.add_term(C1, &X.p1(), v1, nullptr, sign(f, 1));
  sys.add_term(C1, nullptr, v0, &Y.p1(), sign(f, -1));
  sys.add_term(C2, &X.p0(), v0, nullptr, sign(f, 1));
  sys.add_term(C2, nullptr, v1, &Y.p0(), sign(f, -1));
  sys.add_term(H1, nullptr, v1, &u.f1(), sign(f, 1));
  sys.add_term(H1, &X.p0(), t, nullptr, sign(f, -1));
  sys.add_term(H1, nullptr, s, &X.p1(), sign(f, -1));
  sys.add_term(H2, nullptr, v0, &u.f0(), sign(f, 1));
  sys.add_term(H2, nullptr, t, &X.p0(), sign(f, -1));
  sys.add_term(H2, &X.p1(), s, nullptr, sign(f, -1));
  const auto I = PolyMatrix::identity(ring, rx);
  sys.add_rhs(H1, I);
  sys.add_rhs(H2, I);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  auto v = MFMorphism::create(Y, X, sys.materialize(v1, *sol), sys.materialize(v0, *sol));
  return std::make_pair(std::move(v),
                        Homotopy{sys.materialize(s, *sol), sys.materialize(t, *sol)});
}

Scalar random_scalar(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(1, 9);
  std::bernoulli_distribution neg(0.5);
  long v = dist(rng);
  if (neg(rng)) v = -v;
  Scalar s(f, v);
  if (s.is_zero()) s = Scalar::one(f);
  return s;
}

MFMorphism random_combination(const std::vector<MFMorphism>& basis,
                              const MatrixFactorization& X, const MatrixFactorization& Y,
                              std::mt19937& rng) {
  PolyMatrix f1(X.ring(), Y.rank(), X.rank());
  PolyMatrix f0(X.ring(), Y.rank(), X.rank());
  for (const auto& b : basis) {
    const Scalar c = random_scalar(X.ring()->field(), rng);
    f1 += c * b.f1();
    f0 += c * b.f0();
  }
  return MFMorphism::create(X, Y, std::move(f1), std::move(f0));
}

// Closed maps X -> Y of total degree <= bound.
std::vector<MFMorphism> bounded_cycles(const MatrixFactorization& X,
                                       const MatrixFactorization& Y, std::uint32_t bound) {
  const std::size_t n = X.ring()->nvars();
  auto e = make_cycle_system(X, Y, detail::bounded_support(Y.rank(), X.rank(), n, bound),
                             detail::bounded_support(Y.rank(), X.rank(), n, bound));
  std::vector<MFMorphism> out;
  for (const auto& v : e.sys.homogeneous_solutions()) {
    out.push_back(
        MFMorphism::create(X, Y, e.sys.materialize(e.f1, v), e.sys.materialize(e.f0, v)));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<MFGrading> find_grading(const MatrixFactorization& X) {
  const auto& ring = *X.ring();
  if (!ring.weights()) return std::nullopt;
  const auto d = X.W().weighted_degree();
  if (!d) return std::nullopt;
  const std::size_t r = X.rank();
  // Nodes 0..r-1 are P1 basis elements, r..2r-1 are P0 basis elements.
  // Edge (u, v, c) demands deg[u] - deg[v] = c.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(2 * r);
  auto add_edge = [&](std::size_t u, std::size_t v, std::int64_t c) {
    adj[u].emplace_back(v, c);
    adj[v].emplace_back(u, -c);
  };
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      const auto& a = X.p1()(j, i);  // P1_i -> P0_j, degree 0
      if (!a.is_zero()) {
        auto e = a.weighted_degree();
        if (!e) return std::nullopt;
        add_edge(i, r + j, *e);
      }
      const auto& b = X.p0()(i, j);  // P0_j -> P1_i, degree d
      if (!b.is_zero()) {
        auto e = b.weighted_degree();
        if (!e) return std::nullopt;
        add_edge(r + j, i, *e - *d);
      }
    }
  }
  std::vector<std::optional<std::int64_t>> deg(2 * r);
  for (std::size_t root = 0; root < 2 * r; ++root) {
    if (deg[root]) continue;
    deg[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (const auto& [v, c] : adj[u]) {
        const std::int64_t want = *deg[u] - c;
        if (!deg[v]) {
          deg[v] = want;
          queue.push_back(v);
        } else if (*deg[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  MFGrading g;
  g.W_degree = *d;
  for (std::size_t i = 0; i < r; ++i) g.deg1.push_back(*deg[i]);
  for (std::size_t j = 0; j < r; ++j) g.deg0.push_back(*deg[r + j]);
  return g;
}

std::uint32_t default_bound(const std::vector<const PolyMatrix*>& data, const Poly& W) {
  if (const char* env = std::getenv("MFCAT_DEFAULT_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<std::uint32_t>(v);
  }
  std::uint64_t m = 0;
  for (const auto* p : data) m = std::max(m, p->max_degree());
  return static_cast<std::uint32_t>(m + W.total_degree().value_or(0));
}

NullHomotopyResult find_null_homotopy(const MFMorphism& f, const SearchPolicy& policy) {
  const auto& X = f.source();
  const auto& Y = f.target();
  NullHomotopyResult result;
  if (policy.mode == SearchPolicy::Mode::GradedExhaustive) {
    const auto gx = require_grading(X);
    const auto gy = require_grading(Y);
    PolyMatrix s(X.ring(), Y.rank(), X.rank());
    PolyMatrix t(X.ring(), Y.rank(), X.rank());
    for (const auto& [delta, parts] : split_by_degree(f, gx, gy)) {
      result.degrees_examined.push_back(delta);
      auto odd = graded_odd_system(X, gx, Y, gy, delta);
      auto h = solve_homotopy(odd, parts.first, parts.second);
      if (!h) {
        result.status = NullHomotopyResult::Status::ProvenNone;
        return result;
      }
      s += h->s;
      t += h->t;
    }
    result.status = NullHomotopyResult::Status::Found;
    result.homotopy = Homotopy{std::move(s), std::move(t)};
    return result;
  }
  const std::uint32_t bound =
      policy.bound ? *policy.bound
                   : default_bound({&X.p1(), &X.p0(), &Y.p1(), &Y.p0(), &f.f1(), &f.f0()}, X.W());
  result.degrees_examined.push_back(bound);
  const std::size_t n = X.ring()->nvars();
  auto odd = make_odd_system(X, Y, detail::bounded_support(Y.rank(), X.rank(), n, bound),
                             detail::bounded_support(Y.rank(), X.rank(), n, bound));
  auto h = solve_homotopy(odd, f.f1(), f.f0());
  if (h) {
    result.status = NullHomotopyResult::Status::Found;
    result.homotopy = std::move(h);
  } else {
    result.status = NullHomotopyResult::Status::NoneUpToBound;
  }
  return result;
}

NullHomotopyResult homotopy_equal(const MFMorphism& f, const MFMorphism& g,
                                  const SearchPolicy& policy) {
  return find_null_homotopy(f - g, policy);
}

HomDimension graded_stable_hom(const MatrixFactorization& X, const MatrixFactorization& Y,
                               const SearchPolicy& policy) {
  require_same_W(X, Y);
  if (policy.mode != SearchPolicy::Mode::GradedExhaustive) {
    throw Error(ErrorCode::PolicyInfeasible, "Hom dimension requires the graded policy");
  }
  if (policy.window < 1) throw Error(ErrorCode::PolicyInfeasible, "window must be >= 1");
  if (!X.ring()->weights()) {
    throw Error(ErrorCode::PolicyInfeasible, "graded Hom needs variable weights");
  }
  if (!X.W().weighted_degree()) {
    throw Error(ErrorCode::NonQuasiHomogeneous, "W is not quasi-homogeneous: " + X.W().to_string());
  }
  const auto gx = require_grading(X);
  const auto gy = require_grading(Y);
  HomDimension out;
  if (X.rank() == 0 || Y.rank() == 0) return out;

  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (std::size_t k = 0; k < Y.rank(); ++k) {
    for (std::size_t i = 0; i < X.rank(); ++i) {
      for (auto g : {gy.deg1[k] - gx.deg1[i], gy.deg0[k] - gx.deg0[i]}) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
    }
  }
  const std::int64_t floor = hi + jacobian_socle_degree(X.W(), gx.W_degree);
  const Field field = X.ring()->field();

  std::uint32_t quiet = 0;
  for (std::int64_t delta = lo;; ++delta) {
    out.degrees_examined.push_back(delta);
    auto even = graded_cycle_system(X, gx, Y, gy, delta);
    const auto cycles = even.sys.homogeneous_solutions();
    std::size_t contributed = 0;
    if (!cycles.empty()) {
      auto odd = graded_odd_system(X, gx, Y, gy, delta);
      std::vector<Vec> boundary_cols;
      if (odd.sys.unknown_count() > 0) {
        const Mat B = odd.sys.matrix();
        for (std::size_t c = 0; c < B.cols(); ++c) boundary_cols.push_back(B.column(c));
      }
      std::vector<std::pair<MFMorphism, Vec>> encoded;
      for (const auto& z : cycles) {
        auto m = MFMorphism::create(X, Y, even.sys.materialize(even.f1, z),
                                    even.sys.materialize(even.f0, z));
        Vec v = odd.sys.encode(odd.F1, m.f1());
        Vec v0 = odd.sys.encode(odd.F2, m.f0());
        pad(v, v0.size(), field);
        for (std::size_t k = 0; k < v0.size(); ++k) v[k] += v0[k];
        encoded.emplace_back(std::move(m), std::move(v));
      }
      const std::size_t len = odd.sys.row_count();
      EchelonBasis basis(field);
      for (auto& b : boundary_cols) {
        pad(b, len, field);
        basis.add(std::move(b));
      }
      for (auto& [m, v] : encoded) {
        pad(v, len, field);
        if (basis.add(std::move(v))) {
          out.basis.push_back(m);
          ++contributed;
        }
      }
    }
    if (contributed > 0) {
      out.by_degree.emplace_back(delta, contributed);
      out.dim += contributed;
      quiet = 0;
    } else {
      ++quiet;
    }
    if (delta >= floor && quiet >= policy.window) break;
  }
  return out;
}

std::size_t graded_stable_hom_dim(const MatrixFactorization& X, const MatrixFactorization& Y,
                                  const SearchPolicy& policy) {
  return graded_stable_hom(X, Y, policy).dim;
}

HomDimension bounded_stable_hom(const MatrixFactorization& X, const MatrixFactorization& Y,
                                std::optional<std::uint32_t> bound) {
  require_same_W(X, Y);
  HomDimension out;
  const std::uint32_t D =
      bound ? *bound : default_bound({&X.p1(), &X.p0(), &Y.p1(), &Y.p0()}, X.W());
  out.degrees_examined.push_back(D);
  if (X.rank() == 0 || Y.rank() == 0) return out;
  const Field field = X.ring()->field();
  const std::size_t n = X.ring()->nvars();
  auto odd = make_odd_system(X, Y, detail::bounded_support(Y.rank(), X.rank(), n, D),
                             detail::bounded_support(Y.rank(), X.rank(), n, D));
  std::vector<Vec> cols;
  if (odd.sys.unknown_count() > 0) {
    const Mat B = odd.sys.matrix();
    for (std::size_t c = 0; c < B.cols(); ++c) cols.push_back(B.column(c));
  }
  std::vector<std::pair<MFMorphism, Vec>> encoded;
  for (auto& m : bounded_cycles(X, Y, D)) {
    Vec v = odd.sys.encode(odd.F1, m.f1());
    Vec v0 = odd.sys.encode(odd.F2, m.f0());
    pad(v, v0.size(), field);
    for (std::size_t k = 0; k < v0.size(); ++k) v[k] += v0[k];
    encoded.emplace_back(std::move(m), std::move(v));
  }
  const std::size_t len = odd.sys.row_count();
  EchelonBasis basis(field);
  for (auto& b : cols) {
    pad(b, len, field);
    basis.add(std::move(b));
  }
  for (auto& [m, v] : encoded) {
    pad(v, len, field);
    if (basis.add(std::move(v))) {
      out.basis.push_back(m);
      ++out.dim;
    }
  }
  return out;
}

IsoResult is_iso_in_db(const MatrixFactorization& X, const MatrixFactorization& Y,
                       const SearchPolicy& policy) {
  require_same_W(X, Y);
  IsoResult result;
  const bool graded = policy.mode == SearchPolicy::Mode::GradedExhaustive;
  const SearchPolicy& check = policy;

  std::vector<MFMorphism> candidates;
  if (graded) {
    const auto endX = graded_stable_hom(X, X, policy);
    const auto endY = graded_stable_hom(Y, Y, policy);
    const auto homXY = graded_stable_hom(X, Y, policy);
    if (endX.dim != endY.dim || homXY.dim != endX.dim) {
      result.status = IsoResult::Status::NotIsomorphic;
      result.note = "dim End(X)=" + std::to_string(endX.dim) + ", dim End(Y)=" +
                    std::to_string(endY.dim) + ", dim Hom(X,Y)=" + std::to_string(homXY.dim);
      return result;
    }
    candidates = homXY.basis;
  }

  const std::uint32_t bound =
      policy.bound ? *policy.bound
                   : default_bound({&X.p1(), &X.p0(), &Y.p1(), &Y.p0()}, X.W());
  if (!graded) candidates = bounded_cycles(X, Y, bound);

  std::mt19937 rng(0x5eedU);
  constexpr int kAttempts = 12;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto u = random_combination(candidates, X, Y, rng);
    const std::uint32_t vbound =
        policy.bound ? *policy.bound
                     : default_bound({&X.p1(), &X.p0(), &Y.p1(), &Y.p0(), &u.f1(), &u.f0()},
                                     X.W());
    auto left = solve_left_inverse(u, vbound);
    if (!left) continue;
    const auto& v = left->first;
    auto uv = find_null_homotopy(compose(u, v) - MFMorphism::identity(Y), check);
    if (!uv.found()) continue;
    result.status = IsoResult::Status::Isomorphic;
    result.u = u;
    result.v = v;
    result.vu_homotopy = left->second;
    result.uv_homotopy = uv.homotopy;
    return result;
  }
  result.note = "no inverse pair found in " + std::to_string(kAttempts) + " attempts";
  return result;
}

TriangleCertificate certify_triangle(const MFMorphism& f, const MFMorphism& g,
                                     const MFMorphism& h, const SearchPolicy& policy) {
  TriangleCertificate cert;
  const auto& P = f.source();
  const auto& Q = f.target();
  const auto& T = g.target();
  const auto P1 = shift(P);
  if (!(g.source() == Q) || !(h.source() == T) || !(h.target() == P1)) {
    throw Error(ErrorCode::InvalidShape, "maps do not form a triangle X -> Y -> T -> X[1]");
  }
  const auto std_tri = cone(f);
  const auto& C = std_tri.C;
  const Ring& ring = P.ring();
  const Field fld = ring->field();
  const std::size_t n = ring->nvars();
  const std::size_t rc = C.rank();
  const std::size_t rt = T.rank();
  const std::size_t rq = Q.rank();
  const std::size_t rp = P1.rank();
  const std::uint32_t bound =
      policy.bound ? *policy.bound
                   : default_bound({&C.p1(), &C.p0(), &T.p1(), &T.p0(), &g.f1(), &g.f0(),
                                    &h.f1(), &h.f0()},
                                   P.W());
  auto sup = [&](std::size_t r, std::size_t c) { return detail::bounded_support(r, c, n, bound); };

  AnsatzSystem sys(ring);
  const auto phi1 = sys.add_unknown(rc, rt, sup(rc, rt));
  const auto phi0 = sys.add_unknown(rc, rt, sup(rc, rt));
  const auto es = sys.add_unknown(rc, rq, sup(rc, rq));
  const auto et = sys.add_unknown(rc, rq, sup(rc, rq));
  const auto zs = sys.add_unknown(rp, rt, sup(rp, rt));
  const auto zt = sys.add_unknown(rp, rt, sup(rp, rt));
  const Scalar one = sign(fld, 1);
  const Scalar minus = sign(fld, -1);
  // phi closed: c1 phi1 - phi0 t1 = 0, c0 phi0 - phi1 t0 = 0.
  const auto A1 = sys.add_equation(rc, rt);
  const auto A2 = sys.add_equation(rc, rt);
  sys.add_term(A1, &C.p1(), phi1, nullptr, one);
  sys.add_term(A1, nullptr, phi0, &T.p1(), minus);
  sys.add_term(A2, &C.p0(), phi0, nullptr, one);
  sys.add_term(A2, nullptr, phi1, &T.p0(), minus);
  // phi g - g_std = D(es, et).
  const auto B1 = sys.add_equation(rc, rq);
  const auto B2 = sys.add_equation(rc, rq);
  sys.add_term(B1, nullptr, phi1, &g.f1(), one);
  sys.add_term(B1, &C.p0(), et, nullptr, minus);
  sys.add_term(B1, nullptr, es, &Q.p1(), minus);
  sys.add_rhs(B1, std_tri.g.f1());
  sys.add_term(B2, nullptr, phi0, &g.f0(), one);
  sys.add_term(B2, &C.p1(), es, nullptr, minus);
  sys.add_term(B2, nullptr, et, &Q.p0(), minus);
  sys.add_rhs(B2, std_tri.g.f0());
  // h_std phi - h = D(zs, zt).
  const auto E1 = sys.add_equation(rp, rt);
  const auto E2 = sys.add_equation(rp, rt);
  sys.add_term(E1, &std_tri.h.f1(), phi1, nullptr, one);
  sys.add_term(E1, &P1.p0(), zt, nullptr, minus);
  sys.add_term(E1, nullptr, zs, &T.p1(), minus);
  sys.add_rhs(E1, h.f1());
  sys.add_term(E2, &std_tri.h.f0(), phi0, nullptr, one);
  sys.add_term(E2, &P1.p1(), zs, nullptr, minus);
  sys.add_term(E2, nullptr, zt, &T.p0(), minus);
  sys.add_rhs(E2, h.f0());

  auto sol = sys.solve();
  if (!sol) {
    cert.note = "no comparison map T -> C(f) up to degree " + std::to_string(bound);
    return cert;
  }
  auto phi = MFMorphism::create(T, C, sys.materialize(phi1, *sol), sys.materialize(phi0, *sol));
  const SearchPolicy check =
      graded_available(policy, {&T, &C}) ? policy : SearchPolicy::bounded(policy.bound);
  auto left = solve_left_inverse(phi, bound);
  if (!left) {
    cert.note = "comparison map has no inverse up to degree " + std::to_string(bound);
    return cert;
  }
  auto right = find_null_homotopy(compose(phi, left->first) - MFMorphism::identity(C), check);
  if (!right.found()) {
    cert.note = "comparison map is not invertible in DB";
    return cert;
  }
  cert.exact = true;
  cert.phi = std::move(phi);
  cert.psi = left->first;
  return cert;
}

}  // namespace mfcat
