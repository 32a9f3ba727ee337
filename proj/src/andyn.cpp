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

#include "mfcat/andyn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

void check_n(int n) {
  if (n < 2) throw Error(ErrorCode::IndexOutOfRange, "n must be at least 2, got " + std::to_string(n));
}

void check_index(int n, int mu) {
  check_n(n);
  if (mu < 1 || mu > n - 1) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(mu) + " outside 1.." + std::to_string(n - 1));
  }
}

int pad(int n, int m) { return ((m % n) + n) % n; }

void check_same_space(const AnMorphism& a, const AnMorphism& b) {
  if (a.n() != b.n() || a.source() != b.source() || a.target() != b.target() ||
      a.field() != b.field()) {
    throw Error(ErrorCode::ShapeMismatch, "morphisms live in different Hom spaces");
  }
}

}  // namespace

AnObject AnObject::indecomposable(int n, int mu) {
  check_index(n, mu);
  AnObject x{n, std::vector<std::size_t>(static_cast<std::size_t>(n - 1), 0)};
  x.mult[mu - 1] = 1;
  return x;
}

int an_depth(int n, int mu) {
  check_index(n, mu);
  return std::min(mu, n - mu);
}

int an_hom_dim(int n, int mu, int nu) { return std::min(an_depth(n, mu), an_depth(n, nu)); }

std::vector<int> an_hom_basis(int n, int mu, int nu) {
  check_index(n, mu);
  check_index(n, nu);
  std::vector<int> out;
  for (int l = std::max(mu, nu); l <= std::min(mu + nu - 1, n - 1); ++l) out.push_back(l);
  return out;
}

// ---------------------------------------------------------------------------

AnMorphism::AnMorphism(Field field, int n, int source, int target)
    : field_(field), n_(n), source_(source), target_(target) {
  c_.assign(an_hom_basis(n, source, target).size(), Scalar::zero(field));
}

AnMorphism AnMorphism::basis(Field field, int n, int source, int target, int lambda) {
  AnMorphism f(field, n, source, target);
  const auto ls = f.lambdas();
  const auto it = std::find(ls.begin(), ls.end(), lambda);
  if (it == ls.end()) {
    throw Error(ErrorCode::IndexOutOfRange, "lambda = " + std::to_string(lambda) +
                                                " is not a basis index of Hom(V_" +
                                                std::to_string(source) + ", V_" +
                                                std::to_string(target) + ")");
  }
  f.c_[static_cast<std::size_t>(it - ls.begin())] = Scalar::one(field);
  return f;
}

AnMorphism AnMorphism::alpha(Field field, int n, int target, int source) {
  return basis(field, n, source, target, std::max(source, target));
}

AnMorphism AnMorphism::identity(Field field, int n, int mu) { return alpha(field, n, mu, mu); }

bool AnMorphism::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::string AnMorphism::to_string() const {
  std::ostringstream os;
  const auto ls = lambdas();
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (coef != "1") os << coef << "*";
    os << "b[" << ls[i] << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AnMorphism operator+(const AnMorphism& a, const AnMorphism& b) {
  check_same_space(a, b);
  AnMorphism r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

AnMorphism operator-(const AnMorphism& a, const AnMorphism& b) {
  check_same_space(a, b);
  AnMorphism r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

AnMorphism operator*(const Scalar& c, const AnMorphism& a) {
  AnMorphism r = a;
  for (auto& x : r.c_) x = c * x;
  return r;
}

// ---------------------------------------------------------------------------
// Rewriting on paths of generators.

std::optional<int> an_normalize_path(int n, std::vector<int> p) {
  check_n(n);
  if (p.empty()) throw Error(ErrorCode::InvalidShape, "empty path");
  const int mu = p.front();
  const int nu = p.back();
  for (int v : p) {
    if (v <= 0 || v >= n) return std::nullopt;  // passes through the zero object
  }
  while (true) {
    // Monotone steps compose to a single generator; repeated vertices are identities.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] == p[i + 1]) {
          p.erase(p.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
      if (changed) continue;
      for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        const int a = p[i - 1], b = p[i], c = p[i + 1];
        if ((a <= b && b <= c) || (a >= b && b >= c)) {
          p.erase(p.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    // A peak at or above the sum of its neighbours vanishes.
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] > p[i - 1] && p[i] > p[i + 1] && p[i] >= p[i - 1] + p[i + 1]) {
        return std::nullopt;
      }
    }
    // Turn the first valley into a peak.
    bool valley = false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (p[i] < p[i - 1] && p[i] < p[i + 1]) {
        const int peak = p[i - 1] + p[i + 1] - p[i];
        if (peak >= n) return std::nullopt;
        p[i] = peak;
        valley = true;
        break;
      }
    }
    if (!valley) break;
  }
  int lambda = 0;
  if (p.size() == 1) {
    lambda = p[0];
  } else if (p.size() == 2) {
    lambda = std::max(p[0], p[1]);
  } else {
    lambda = p[1];
  }
  if (lambda < std::max(mu, nu) || lambda > std::min(mu + nu - 1, n - 1)) return std::nullopt;
  return lambda;
}

AnMorphism an_compose(const AnMorphism& a, const AnMorphism& b) {
  if (a.n() != b.n() || a.source() != b.target() || a.field() != b.field()) {
    throw Error(ErrorCode::NotComposable,
                "cannot compose Hom(V_" + std::to_string(a.source()) + ", V_" +
                    std::to_string(a.target()) + ") after Hom(V_" + std::to_string(b.source()) +
                    ", V_" + std::to_string(b.target()) + ")");
  }
  const int n = a.n();
  AnMorphism out(a.field(), n, b.source(), a.target());
  const auto la = a.lambdas();
  const auto lb = b.lambdas();
  const auto lo = out.lambdas();
  for (std::size_t i = 0; i < lb.size(); ++i) {
    if (b.coefficients()[i].is_zero()) continue;
    for (std::size_t j = 0; j < la.size(); ++j) {
      if (a.coefficients()[j].is_zero()) continue;
      const auto r = an_normalize_path(n, {b.source(), lb[i], b.target(), la[j], a.target()});
      if (!r) continue;
      const auto k = static_cast<std::size_t>(std::find(lo.begin(), lo.end(), *r) - lo.begin());
      out.coefficients()[k] += a.coefficients()[j] * b.coefficients()[i];
    }
  }
  return out;
}

AnObject an_translate(const AnObject& x) {
  AnObject y{x.n, std::vector<std::size_t>(x.mult.size(), 0)};
  for (std::size_t i = 0; i < x.mult.size(); ++i) y.mult[x.mult.size() - 1 - i] = x.mult[i];
  return y;
}

int an_translate(int n, int mu) {
  check_index(n, mu);
  return n - mu;
}

AnMorphism an_translate(const AnMorphism& f) {
  const int n = f.n();
  AnMorphism out(f.field(), n, n - f.source(), n - f.target());
  const auto lf = f.lambdas();
  const auto lo = out.lambdas();
  for (std::size_t i = 0; i < lf.size(); ++i) {
    if (f.coefficients()[i].is_zero()) continue;
    // Generators are sent to generators, so a peak becomes a valley.
    const auto r = an_normalize_path(n, {n - f.source(), n - lf[i], n - f.target()});
    if (!r) continue;
    const auto k = static_cast<std::size_t>(std::find(lo.begin(), lo.end(), *r) - lo.begin());
    out.coefficients()[k] += f.coefficients()[i];
  }
  return out;
}

AnEndRing an_end_ring(int n, int mu, Field field) {
  AnEndRing r;
  r.depth = an_depth(n, mu);
  r.basis = an_hom_basis(n, mu, mu);
  std::vector<AnMorphism> elems;
  for (int l : r.basis) elems.push_back(AnMorphism::basis(field, n, mu, mu, l));
  r.commutative = true;
  for (const auto& a : elems) {
    std::vector<Vec> row;
    for (const auto& b : elems) {
      const auto ab = an_compose(a, b);
      row.push_back(ab.coefficients());
      if (!(ab == an_compose(b, a))) r.commutative = false;
    }
    r.table.push_back(std::move(row));
  }
  // Powers of x (x = id when the depth is 1, where End = k).
  const AnMorphism id = AnMorphism::identity(field, n, mu);
  if (r.depth == 1) {
    r.nilpotency_exact = r.basis.size() == 1;
    return r;
  }
  const AnMorphism x = AnMorphism::basis(field, n, mu, mu, mu + 1);
  AnMorphism p = id;
  bool powers_are_basis = true;
  for (int k = 1; k < r.depth; ++k) {
    p = an_compose(x, p);
    if (!(p == AnMorphism::basis(field, n, mu, mu, mu + k))) powers_are_basis = false;
  }
  const AnMorphism top = an_compose(x, p);
  r.nilpotency_exact = powers_are_basis && !p.is_zero() && top.is_zero();
  return r;
}

// ---------------------------------------------------------------------------

std::string AnTriangle::describe() const {
  std::ostringstream os;
  os << kind() << " n=" << n << ": V_" << mu << " -> V_" << nu << " -> ";
  if (third.empty()) os << "0";
  for (std::size_t i = 0; i < third.size(); ++i) os << (i ? " + " : "") << "V_" << third[i];
  os << " -> V_" << (n - mu) << "; f = " << f.to_string() << "; g = (";
  for (std::size_t i = 0; i < g.size(); ++i) os << (i ? ", " : "") << g[i].to_string();
  os << "); h = (";
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? ", " : "") << h[i].to_string();
  os << ")";
  return os.str();
}

namespace {

AnTriangle fst(Field field, int n, int mu, int nu) {
  AnTriangle t{n, mu, nu, std::nullopt, AnMorphism::alpha(field, n, nu, mu), {}, {}, {}};
  const int third = pad(n, nu - mu);
  if (third != 0) {
    t.third.push_back(third);
    t.g.push_back(AnMorphism::alpha(field, n, third, nu));
    AnMorphism h = AnMorphism::alpha(field, n, n - mu, third);
    if (nu - mu < 0) h = Scalar(field, -1L) * h;
    t.h.push_back(h);
  }
  return t;
}

}  // namespace

AnTriangle an_triangle_lst(Field field, int n, int mu, int nu, int lambda) {
  AnTriangle t{n, mu, nu, lambda, AnMorphism::basis(field, n, mu, nu, lambda), {}, {}, {}};
  const int a = pad(n, lambda - mu);
  const int b = pad(n, nu - lambda);
  if (a != 0) {
    t.third.push_back(a);
    t.g.push_back(AnMorphism::alpha(field, n, a, nu));
    t.h.push_back(AnMorphism::alpha(field, n, n - mu, a));
  }
  if (b != 0) {
    t.third.push_back(b);
    t.g.push_back(AnMorphism::alpha(field, n, b, nu));
    t.h.push_back(Scalar(field, -1L) * AnMorphism::alpha(field, n, n - mu, b));
  }
  return t;
}

AnTriangle an_triangle(const AnMorphism& f) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    if (f.coefficients()[i].is_zero()) continue;
    if (at || !f.coefficients()[i].is_one()) {
      throw Error(ErrorCode::InvalidShape,
                  "triangles are tabulated for single basis elements, got " + f.to_string());
    }
    at = i;
  }
  if (!at) throw Error(ErrorCode::InvalidShape, "triangle of the zero map is not tabulated");
  const int lambda = f.lambdas()[*at];
  if (lambda == std::max(f.source(), f.target())) {
    return fst(f.field(), f.n(), f.source(), f.target());
  }
  return an_triangle_lst(f.field(), f.n(), f.source(), f.target(), lambda);
}

// ---------------------------------------------------------------------------

Ring an_ring(Field field) { return make_ring(field, {"z"}, std::vector<std::int64_t>{1}); }

MatrixFactorization an_mf(const Ring& ring, int n, int mu) {
  check_n(n);
  const Poly z = Poly::variable(ring, ring->vars()[0]);
  const int m = pad(n, mu);
  if (m == 0) {
    return MatrixFactorization::create(ring, z.pow(n), PolyMatrix(ring, 0, 0),
                                       PolyMatrix(ring, 0, 0));
  }
  return MatrixFactorization::create(ring, z.pow(n), PolyMatrix::of(z.pow(m)),
                                     PolyMatrix::of(z.pow(n - m)));
}

MatrixFactorization an_mf(const Ring& ring, const AnObject& x) {
  MatrixFactorization out = an_mf(ring, x.n, 0);
  for (std::size_t i = 0; i < x.mult.size(); ++i) {
    for (std::size_t k = 0; k < x.mult[i]; ++k) {
      out = direct_sum(out, an_mf(ring, x.n, static_cast<int>(i) + 1));
    }
  }
  return out;
}

MFMorphism an_lift(const Ring& ring, const AnMorphism& f) {
  const Poly z = Poly::variable(ring, ring->vars()[0]);
  Poly f1(ring), f0(ring);
  const auto ls = f.lambdas();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const Scalar c = f.coefficients()[i].reduce_to(ring->field());
    f1 += c * z.pow(static_cast<std::uint32_t>(ls[i] - f.target()));
    f0 += c * z.pow(static_cast<std::uint32_t>(ls[i] - f.source()));
  }
  return MFMorphism::create(an_mf(ring, f.n(), f.source()), an_mf(ring, f.n(), f.target()),
                            PolyMatrix::of(f1), PolyMatrix::of(f0));
}

MFMorphism an_sigma(const Ring& ring, int n, int mu) {
  check_index(n, mu);
  return MFMorphism::create(shift(an_mf(ring, n, mu)), an_mf(ring, n, n - mu),
                            PolyMatrix::of(Poly(ring, -1L)), PolyMatrix::of(Poly(ring, 1L)));
}

namespace {

MFMorphism sigma_inverse(const Ring& ring, int n, int mu) {
  return MFMorphism::create(an_mf(ring, n, n - mu), shift(an_mf(ring, n, mu)),
                            PolyMatrix::of(Poly(ring, -1L)), PolyMatrix::of(Poly(ring, 1L)));
}

}  // namespace

QuotModule an_module(Field field, int n, int mu) {
  check_index(n, mu);
  const Ring ring = make_ring(field, {"z"});
  return module_from_partition(Poly::variable(ring, "z").pow(static_cast<std::uint32_t>(n)),
                               {static_cast<std::uint32_t>(mu)});
}

ModuleMorphism an_module_map(const AnMorphism& f) {
  const auto M = an_module(f.field(), f.n(), f.source());
  const auto N = an_module(f.field(), f.n(), f.target());
  Mat F(f.field(), N.dim(), M.dim());
  const auto ls = f.lambdas();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    // z^j -> z^{j + lambda - mu}, then truncate mod z^nu.
    for (int j = 0; j < f.source(); ++j) {
      const int k = j + ls[i] - f.source();
      if (k < f.target()) F(k, j) += f.coefficients()[i];
    }
  }
  return ModuleMorphism::create(M, N, std::move(F));
}

AnTriangleLift an_lift_triangle(const Ring& ring, const AnTriangle& t) {
  const int n = t.n;
  const auto X = an_mf(ring, n, t.mu);
  const auto Y = an_mf(ring, n, t.nu);
  const auto f = an_lift(ring, t.f);
  if (t.third.empty()) {
    const auto T = an_mf(ring, n, 0);
    return {f, MFMorphism::zero(Y, T), MFMorphism::zero(T, shift(X))};
  }
  std::optional<MFMorphism> g;
  std::optional<MFMorphism> h;
  for (std::size_t i = 0; i < t.third.size(); ++i) {
    const auto gi = an_lift(ring, t.g[i]);
    const auto hi = an_lift(ring, t.h[i]);
    g = g ? column(*g, gi) : gi;
    h = h ? row(*h, hi) : hi;
  }
  return {f, *g, compose(sigma_inverse(ring, n, t.mu), *h)};
}

TriangleCertificate an_certify_triangle(const AnTriangle& t, const SearchPolicy& policy) {
  const auto lift = an_lift_triangle(an_ring(t.f.field()), t);
  return certify_triangle(lift.f, lift.g, lift.h, policy);
}

// ---------------------------------------------------------------------------

bool AnReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AnCheck& c) { return c.pass; });
}

namespace {

std::string pair_params(int mu, int nu) {
  return "mu=" + std::to_string(mu) + " nu=" + std::to_string(nu);
}

std::vector<AnMorphism> basis_of(Field field, int n, int mu, int nu) {
  std::vector<AnMorphism> out;
  for (int l : an_hom_basis(n, mu, nu)) out.push_back(AnMorphism::basis(field, n, mu, nu, l));
  return out;
}

}  // namespace

AnReport an_verify(int n, Field field, const AnVerifyOptions& opts) {
  check_n(n);
  AnReport rep;
  rep.n = n;
  rep.field = field;
  const Ring ring = an_ring(field);
  const SearchPolicy policy = SearchPolicy::graded();
  std::map<std::pair<int, int>, StableHomSpace> stable;

  rep.hom_table.assign(static_cast<std::size_t>(n - 1),
                       std::vector<std::size_t>(static_cast<std::size_t>(n - 1), 0));
  for (int mu = 1; mu < n; ++mu) {
    for (int nu = 1; nu < n; ++nu) {
      auto s = stable_hom(an_module(field, n, mu), an_module(field, n, nu));
      const auto formula = static_cast<std::size_t>(an_hom_dim(n, mu, nu));
      const auto basis = basis_of(field, n, mu, nu);
      rep.hom_table[mu - 1][nu - 1] = s.stable_dim;
      rep.checks.push_back({"hom-dim", pair_params(mu, nu),
                            s.stable_dim == formula && basis.size() == formula,
                            "formula " + std::to_string(formula) + ", basis " +
                                std::to_string(basis.size()) + ", stable " +
                                std::to_string(s.stable_dim),
                            std::nullopt});

      // The basis maps are independent modulo maps through free modules,
      // and each agrees with Cok of its lift.
      std::vector<Vec> vs;
      for (const auto& B : s.factoring_basis) vs.push_back(B.flatten());
      const std::size_t base = span_rank(field, static_cast<std::size_t>(mu * nu), vs);
      bool lift_ok = true;
      for (const auto& b : basis) {
        const auto F = an_module_map(b).F();
        vs.push_back(F.flatten());
        if (!(cok(an_lift(ring, b)).F() == F)) lift_ok = false;
      }
      const bool indep =
          span_rank(field, static_cast<std::size_t>(mu * nu), vs) == base + basis.size();
      rep.checks.push_back({"basis-independent", pair_params(mu, nu), indep, "", std::nullopt});
      rep.checks.push_back({"lift-cok", pair_params(mu, nu), lift_ok, "", std::nullopt});
      stable.emplace(std::make_pair(mu, nu), std::move(s));
    }
  }

  // Composition against module maps in the stable category.
  for (int mu = 1; mu < n; ++mu) {
    for (int la = 1; la < n; ++la) {
      for (int nu = 1; nu < n; ++nu) {
        bool ok = true;
        std::string detail;
        const auto& s = stable.at({mu, nu});
        for (const auto& b : basis_of(field, n, mu, la)) {
          for (const auto& a : basis_of(field, n, la, nu)) {
            const auto ab = an_compose(a, b);
            const Mat diff = an_module_map(a).F() * an_module_map(b).F() - an_module_map(ab).F();
            if (!s.is_stably_zero(diff)) {
              ok = false;
              detail = a.to_string() + " o " + b.to_string() + " -> " + ab.to_string();
            }
          }
        }
        rep.checks.push_back({"compose", "mu=" + std::to_string(mu) + " via=" +
                                             std::to_string(la) + " nu=" + std::to_string(nu),
                              ok, detail, std::nullopt});
      }
    }
  }

  // Associativity on all triples of basis elements.
  {
    bool ok = true;
    std::string detail;
    for (int a = 1; a < n && ok; ++a) {
      for (int b = 1; b < n && ok; ++b) {
        for (int c = 1; c < n && ok; ++c) {
          for (int d = 1; d < n && ok; ++d) {
            for (const auto& x : basis_of(field, n, a, b)) {
              for (const auto& y : basis_of(field, n, b, c)) {
                for (const auto& w : basis_of(field, n, c, d)) {
                  if (!(an_compose(w, an_compose(y, x)) == an_compose(an_compose(w, y), x))) {
                    ok = false;
                    detail = w.to_string() + ", " + y.to_string() + ", " + x.to_string();
                  }
                }
              }
            }
          }
        }
      }
    }
    rep.checks.push_back({"associativity", "n=" + std::to_string(n), ok, detail, std::nullopt});
  }

  // Translation against the shift of factorizations.
  for (int mu = 1; mu < n; ++mu) {
    const auto M = cok(shift(an_mf(ring, n, mu)));
    const auto dec = decompose(M);
    const bool ok = dec.size() == 1 && dec.begin()->first == static_cast<std::uint32_t>(n - mu) &&
                    dec.begin()->second == 1;
    rep.checks.push_back(
        {"translate-object", "mu=" + std::to_string(mu), ok, "", std::nullopt});
  }
  for (int mu = 1; mu < n; ++mu) {
    for (int nu = 1; nu < n; ++nu) {
      bool ok = true;
      std::string detail;
      for (const auto& b : basis_of(field, n, mu, nu)) {
        const auto tb = an_translate(b);
        if (!(an_translate(tb) == b)) {
          ok = false;
          detail = "not an involution on " + b.to_string();
          continue;
        }
        const auto via_shift =
            compose(an_sigma(ring, n, nu),
                    compose(shift(an_lift(ring, b)), sigma_inverse(ring, n, mu)));
        if (!homotopy_equal(an_lift(ring, tb), via_shift, policy).found()) {
          ok = false;
          detail = "shift disagrees on " + b.to_string();
        }
        for (int la = 1; la < n; ++la) {
          for (const auto& a : basis_of(field, n, nu, la)) {
            if (!(an_translate(an_compose(a, b)) == an_compose(an_translate(a), tb))) {
              ok = false;
              detail = "does not commute with " + a.to_string() + " o " + b.to_string();
            }
          }
        }
      }
      rep.checks.push_back({"translate-morphism", pair_params(mu, nu), ok, detail, std::nullopt});
    }
  }

  for (int mu = 1; mu < n; ++mu) {
    const auto e = an_end_ring(n, mu, field);
    rep.checks.push_back({"end-ring", "mu=" + std::to_string(mu),
                          e.nilpotency_exact && e.commutative &&
                              static_cast<int>(e.basis.size()) == e.depth,
                          "depth " + std::to_string(e.depth), std::nullopt});
  }

  if (opts.triangles) {
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        const auto t = an_triangle(AnMorphism::alpha(field, n, nu, mu));
        const auto cert = an_certify_triangle(t, policy);
        rep.checks.push_back({"triangle-fst", pair_params(mu, nu), cert.exact,
                              cert.exact ? t.describe() : cert.note, cert.phi});

        const auto r = an_triangle_lst(field, n, mu, nu, std::max(mu, nu));
        const bool same = r.third == t.third && r.g == t.g && r.h == t.h;
        rep.checks.push_back({"lst-recovers-fst", pair_params(mu, nu), same, "", std::nullopt});
      }
    }
    std::size_t counter = 0;
    for (int mu = 1; mu < n; ++mu) {
      for (int nu = 1; nu < n; ++nu) {
        for (int la : an_hom_basis(n, mu, nu)) {
          if (la == std::max(mu, nu)) continue;
          if (counter++ % std::max<std::size_t>(opts.lst_stride, 1) != 0) continue;
          const auto t = an_triangle(AnMorphism::basis(field, n, mu, nu, la));
          const auto cert = an_certify_triangle(t, policy);
          rep.checks.push_back({"triangle-lst", pair_params(mu, nu) + " lambda=" +
                                                    std::to_string(la),
                                cert.exact, cert.exact ? t.describe() : cert.note, cert.phi});
        }
      }
    }
  }
  return rep;
}

}  // namespace mfcat
