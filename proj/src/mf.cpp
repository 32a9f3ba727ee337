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

#include "mfcat/mf.hpp"

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

std::string shape(const PolyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// Returns an empty string when a == b, else a description of the first
// differing entry.
std::string first_difference(const PolyMatrix& a, const PolyMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) {
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
               a(i, j).to_string() + " != " + b(i, j).to_string();
      }
    }
  }
  return {};
}

void require_same_W(const MatrixFactorization& X, const MatrixFactorization& Y) {
  if (!(X.W() == Y.W())) {
    throw Error(ErrorCode::SuperpotentialMismatch,
                "factorizations of different superpotentials: " + X.W().to_string() +
                    " vs " + Y.W().to_string());
  }
}

}  // namespace

MatrixFactorization MatrixFactorization::create(const Ring& ring, const Poly& W,
                                                PolyMatrix p1, PolyMatrix p0) {
  return from_shifted(W - Poly(ring, ring->w0()), std::move(p1), std::move(p0));
}

MatrixFactorization MatrixFactorization::from_shifted(const Poly& shifted_W, PolyMatrix p1,
                                                      PolyMatrix p0) {
  if (shifted_W.is_zero()) {
    throw Error(ErrorCode::ZeroSuperpotential, "W - w0 is the zero polynomial");
  }
  if (!p1.is_square() || !p0.is_square() || p1.rows() != p0.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "p1 and p0 must be square of equal rank, got " + shape(p1) + " and " + shape(p0));
  }
  const Ring& ring = shifted_W.ring();
  if (!p1.ring()->same_as(*ring) || !p0.ring()->same_as(*ring)) {
    throw Error(ErrorCode::ContextMismatch, "matrices and W live in different rings");
  }
  const auto target = PolyMatrix::scalar(ring, p1.rows(), shifted_W);
  if (auto d = first_difference(p0 * p1, target); !d.empty()) {
    throw Error(ErrorCode::NotAFactorization, "p0*p1 != W*I at " + d);
  }
  if (auto d = first_difference(p1 * p0, target); !d.empty()) {
    throw Error(ErrorCode::NotAFactorization, "p1*p0 != W*I at " + d);
  }
  return MatrixFactorization(shifted_W, std::move(p1), std::move(p0));
}

bool MatrixFactorization::is_valid() const {
  const auto target = PolyMatrix::scalar(ring(), rank(), W_);
  return p0_ * p1_ == target && p1_ * p0_ == target;
}

// ---------------------------------------------------------------------------

MFMorphism MFMorphism::create(MatrixFactorization source, MatrixFactorization target,
                              PolyMatrix f1, PolyMatrix f0) {
  require_same_W(source, target);
  const std::size_t rp = source.rank();
  const std::size_t rq = target.rank();
  if (f1.rows() != rq || f1.cols() != rp || f0.rows() != rq || f0.cols() != rp) {
    throw Error(ErrorCode::ShapeMismatch, "morphism blocks must be " + std::to_string(rq) +
                                              "x" + std::to_string(rp) + ", got " +
                                              shape(f1) + " and " + shape(f0));
  }
  if (auto d = first_difference(f1 * source.p0(), target.p0() * f0); !d.empty()) {
    throw Error(ErrorCode::NotAMorphism, "f1*p0 != q0*f0 at " + d);
  }
  if (auto d = first_difference(target.p1() * f1, f0 * source.p1()); !d.empty()) {
    throw Error(ErrorCode::NotAMorphism, "q1*f1 != f0*p1 at " + d);
  }
  return MFMorphism(std::move(source), std::move(target), std::move(f1), std::move(f0));
}

MFMorphism MFMorphism::identity(const MatrixFactorization& X) {
  const auto I = PolyMatrix::identity(X.ring(), X.rank());
  return MFMorphism(X, X, I, I);
}

MFMorphism MFMorphism::zero(const MatrixFactorization& X, const MatrixFactorization& Y) {
  require_same_W(X, Y);
  const auto Z = PolyMatrix::zero(X.ring(), Y.rank(), X.rank());
  return MFMorphism(X, Y, Z, Z);
}

MFMorphism MFMorphism::multiplication(const MatrixFactorization& X, const Poly& c) {
  const auto M = PolyMatrix::scalar(X.ring(), X.rank(), c);
  return MFMorphism(X, X, M, M);
}

bool is_null_homotopy(const MFMorphism& f, const Homotopy& h) {
  const auto& P = f.source();
  const auto& Q = f.target();
  if (h.s.rows() != Q.rank() || h.s.cols() != P.rank() || h.t.rows() != Q.rank() ||
      h.t.cols() != P.rank()) {
    return false;
  }
  return f.f1() == Q.p0() * h.t + h.s * P.p1() && f.f0() == h.t * P.p0() + Q.p1() * h.s;
}

MFMorphism boundary(const MatrixFactorization& X, const MatrixFactorization& Y,
                    const Homotopy& h) {
  return MFMorphism::create(X, Y, Y.p0() * h.t + h.s * X.p1(), h.t * X.p0() + Y.p1() * h.s);
}

MFMorphism compose(const MFMorphism& g, const MFMorphism& f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorCode::NotComposable, "target of f is not the source of g");
  }
  return MFMorphism::create(f.source(), g.target(), g.f1() * f.f1(), g.f0() * f.f0());
}

MFMorphism operator+(const MFMorphism& a, const MFMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw Error(ErrorCode::ShapeMismatch, "adding morphisms between different objects");
  }
  return MFMorphism::create(a.source(), a.target(), a.f1() + b.f1(), a.f0() + b.f0());
}

MFMorphism operator-(const MFMorphism& a, const MFMorphism& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw Error(ErrorCode::ShapeMismatch, "subtracting morphisms between different objects");
  }
  return MFMorphism::create(a.source(), a.target(), a.f1() - b.f1(), a.f0() - b.f0());
}

MFMorphism operator*(const Scalar& c, const MFMorphism& f) {
  return MFMorphism::create(f.source(), f.target(), c * f.f1(), c * f.f0());
}

// ---------------------------------------------------------------------------

MatrixFactorization shift(const MatrixFactorization& X) {
  return MatrixFactorization::from_shifted(X.W(), -X.p0(), -X.p1());
}

MFMorphism shift(const MFMorphism& f) {
  return MFMorphism::create(shift(f.source()), shift(f.target()), f.f0(), f.f1());
}

MatrixFactorization direct_sum(const MatrixFactorization& X, const MatrixFactorization& Y) {
  require_same_W(X, Y);
  return MatrixFactorization::from_shifted(X.W(), PolyMatrix::diagonal_sum(X.p1(), Y.p1()),
                                           PolyMatrix::diagonal_sum(X.p0(), Y.p0()));
}

MFMorphism direct_sum(const MFMorphism& f, const MFMorphism& g) {
  return MFMorphism::create(direct_sum(f.source(), g.source()),
                            direct_sum(f.target(), g.target()),
                            PolyMatrix::diagonal_sum(f.f1(), g.f1()),
                            PolyMatrix::diagonal_sum(f.f0(), g.f0()));
}

MFMorphism column(const MFMorphism& f, const MFMorphism& g) {
  if (!(f.source() == g.source())) {
    throw Error(ErrorCode::ShapeMismatch, "column of morphisms with different sources");
  }
  return MFMorphism::create(f.source(), direct_sum(f.target(), g.target()),
                            PolyMatrix::block({{f.f1()}, {g.f1()}}),
                            PolyMatrix::block({{f.f0()}, {g.f0()}}));
}

MFMorphism row(const MFMorphism& f, const MFMorphism& g) {
  if (!(f.target() == g.target())) {
    throw Error(ErrorCode::ShapeMismatch, "row of morphisms with different targets");
  }
  return MFMorphism::create(direct_sum(f.source(), g.source()), f.target(),
                            PolyMatrix::block({{f.f1(), g.f1()}}),
                            PolyMatrix::block({{f.f0(), g.f0()}}));
}

Cone cone(const MFMorphism& f) {
  const auto& P = f.source();
  const auto& Q = f.target();
  const Ring& ring = P.ring();
  const std::size_t rp = P.rank();
  const std::size_t rq = Q.rank();
  const auto zqp = PolyMatrix::zero(ring, rp, rq);
  auto c0 = PolyMatrix::block({{Q.p0(), f.f1()}, {zqp, -P.p1()}});
  auto c1 = PolyMatrix::block({{Q.p1(), f.f0()}, {zqp, -P.p0()}});
  auto C = MatrixFactorization::from_shifted(P.W(), std::move(c1), std::move(c0));

  const auto Iq = PolyMatrix::identity(ring, rq);
  const auto Ip = PolyMatrix::identity(ring, rp);
  const auto into = PolyMatrix::block({{Iq}, {PolyMatrix::zero(ring, rp, rq)}});
  auto g = MFMorphism::create(Q, C, into, into);
  const auto out = PolyMatrix::block({{PolyMatrix::zero(ring, rp, rq), -Ip}});
  auto h = MFMorphism::create(C, shift(P), out, out);
  return Cone{std::move(C), std::move(g), std::move(h)};
}

HomElement hom_differential(const HomElement& g, const MatrixFactorization& source,
                            const MatrixFactorization& target) {
  const std::size_t rp = source.rank();
  const std::size_t rq = target.rank();
  for (const auto* m : {&g.first, &g.second}) {
    if (m->rows() != rq || m->cols() != rp) {
      throw Error(ErrorCode::ShapeMismatch, "Hom element block " + shape(*m) +
                                                " does not match " + std::to_string(rq) +
                                                "x" + std::to_string(rp));
    }
  }
  const auto& p1 = source.p1();
  const auto& p0 = source.p0();
  const auto& q1 = target.p1();
  const auto& q0 = target.p0();
  if (g.parity == 0) {
    // (f1, f0) -> (s', t') = (q0 f0 - f1 p0, q1 f1 - f0 p1)
    return HomElement{1, q0 * g.second - g.first * p0, q1 * g.first - g.second * p1};
  }
  // (s, t) -> (q0 t + s p1, q1 s + t p0)
  return HomElement{0, q0 * g.second + g.first * p1, q1 * g.first + g.second * p0};
}

Homotopy derivative_homotopy(const MatrixFactorization& X, const std::string& var) {
  return Homotopy{X.p0().derivative(var), X.p1().derivative(var)};
}

Ring knorrer_ring(const Ring& base, const Poly& shifted_W, const std::string& xvar,
                  const std::string& yvar) {
  if (xvar == yvar || base->index_of(xvar) || base->index_of(yvar)) {
    throw Error(ErrorCode::VariableCollision,
                "Knorrer variables must be fresh and distinct: '" + xvar + "', '" + yvar + "'");
  }
  auto vars = base->vars();
  vars.push_back(xvar);
  vars.push_back(yvar);
  std::optional<std::vector<std::int64_t>> weights;
  if (base->weights()) {
    if (auto d = shifted_W.weighted_degree()) {
      std::vector<std::int64_t> w = *base->weights();
      std::int64_t deg = *d;
      if (deg % 2 != 0) {
        for (auto& wi : w) wi *= 2;
        deg *= 2;
      }
      w.push_back(deg / 2);
      w.push_back(deg / 2);
      weights = std::move(w);
    }
  }
  return make_ring(base->field(), std::move(vars), std::move(weights), base->w0());
}

MatrixFactorization knorrer(const MatrixFactorization& X, const std::string& xvar,
                            const std::string& yvar) {
  const Ring ring = knorrer_ring(X.ring(), X.W(), xvar, yvar);
  const std::size_t d = X.rank();
  const Poly x = Poly::variable(ring, xvar);
  const Poly y = Poly::variable(ring, yvar);
  const auto p1 = X.p1().embed(ring);
  const auto p0 = X.p0().embed(ring);
  const auto xI = PolyMatrix::scalar(ring, d, x);
  const auto yI = PolyMatrix::scalar(ring, d, y);
  auto k1 = PolyMatrix::block({{p1, -yI}, {xI, p0}});
  auto k0 = PolyMatrix::block({{p0, yI}, {-xI, p1}});
  return MatrixFactorization::from_shifted(X.W().embed(ring) + x * y, std::move(k1),
                                           std::move(k0));
}

}  // namespace mfcat
