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

#include "mfcat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

std::uint64_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw Error(ErrorCode::ExponentOverflow, "exponent overflow");
  }
  return a + b;
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

RingContext::RingContext(Field field, std::vector<std::string> vars,
                         std::optional<std::vector<std::int64_t>> weights,
                         std::optional<Scalar> w0)
    : field_(field),
      vars_(std::move(vars)),
      weights_(std::move(weights)),
      w0_(w0 ? *w0 : Scalar::zero(field)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_')) {
      throw Error(ErrorCode::ParseError, "invalid variable name '" + v + "'");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::VariableCollision, "duplicate variable '" + v + "'");
    }
  }
  if (weights_) {
    if (weights_->size() != vars_.size()) {
      throw Error(ErrorCode::ShapeMismatch, "one weight per variable required");
    }
    for (auto w : *weights_) {
      if (w <= 0) {
        throw Error(ErrorCode::ShapeMismatch, "weights must be positive");
      }
    }
  }
  if (w0_.field() != field_) {
    throw Error(ErrorCode::ContextMismatch, "w0 lies in a different field");
  }
}

std::optional<std::size_t> RingContext::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool RingContext::same_as(const RingContext& o) const {
  return this == &o || (field_ == o.field_ && vars_ == o.vars_ &&
                        weights_ == o.weights_ && w0_ == o.w0_);
}

Ring make_ring(Field field, std::vector<std::string> vars,
               std::optional<std::vector<std::int64_t>> weights,
               std::optional<Scalar> w0) {
  return std::make_shared<const RingContext>(field, std::move(vars),
                                             std::move(weights), std::move(w0));
}

// ---------------------------------------------------------------------------

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly::Poly(Ring ring, const Scalar& constant) : ring_(std::move(ring)) {
  add_term(Exponents(ring_->nvars(), 0), constant);
}

Poly::Poly(Ring ring, long constant)
    : Poly(ring, Scalar(ring->field(), constant)) {}

Poly Poly::variable(Ring ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
  Exponents e(ring->nvars(), 0);
  e[*idx] = 1;
  return monomial(ring, std::move(e), Scalar::one(ring->field()));
}

Poly Poly::monomial(Ring ring, Exponents exps, const Scalar& coeff) {
  if (exps.size() != ring->nvars()) {
    throw Error(ErrorCode::ShapeMismatch, "exponent vector length mismatch");
  }
  Poly p(std::move(ring));
  p.add_term(exps, coeff);
  return p;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_ring(const Poly& o) const {
  if (!ring_->same_as(*o.ring_)) {
    throw Error(ErrorCode::ContextMismatch, "polynomials from different rings");
  }
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::optional<std::uint64_t> Poly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.begin()->first);
}

Scalar Poly::constant_term() const {
  return coefficient(Exponents(ring_->nvars(), 0));
}

Scalar Poly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field()) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.ring_);
  const std::size_t n = a.ring_->nvars();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = checked_add(ea[i], eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result(ring_, 1L);
  Poly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(const std::string& var) const {
  auto idx = ring_->index_of(var);
  if (!idx) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + var + "'");
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents d = e;
    d[*idx] -= 1;
    r.add_term(d, c * Scalar(field(), static_cast<long>(e[*idx])));
  }
  return r;
}

std::int64_t weighted_degree_of(const RingContext& ring, const Exponents& e) {
  if (!ring.weights()) {
    throw Error(ErrorCode::NoWeightsConfigured, "ring carries no weights");
  }
  const auto& w = *ring.weights();
  std::int64_t d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * static_cast<std::int64_t>(e[i]);
  return d;
}

std::optional<std::int64_t> Poly::weighted_degree() const {
  if (!ring_->weights()) {
    throw Error(ErrorCode::NoWeightsConfigured, "ring carries no weights");
  }
  std::optional<std::int64_t> d;
  for (const auto& [e, c] : terms_) {
    const auto de = weighted_degree_of(*ring_, e);
    if (d && *d != de) return std::nullopt;
    d = de;
  }
  return d;
}

Poly Poly::embed(const Ring& target) const {
  if (target->field() != field()) {
    throw Error(ErrorCode::ContextMismatch, "embedding into a different field");
  }
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto idx = target->index_of(ring_->vars()[i]);
    if (!idx) {
      throw Error(ErrorCode::UnknownVariable,
                  "variable '" + ring_->vars()[i] + "' missing in target ring");
    }
    map[i] = *idx;
  }
  Poly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents t(target->nvars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) t[map[i]] = e[i];
    r.add_term(t, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = sgn(c.value()) < 0;
    const mpq_class mag = negative ? mpq_class(-c.value()) : c.value();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->vars()[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << '*' << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Univariate helpers.

namespace {

void require_univariate(const Poly& p) {
  if (p.ring()->nvars() != 1) {
    throw Error(ErrorCode::NotUnivariate, "operation requires a univariate ring");
  }
}

}  // namespace

std::uint32_t Poly::degree_univariate() const {
  require_univariate(*this);
  if (terms_.empty()) throw Error(ErrorCode::DivisionByZero, "degree of zero polynomial");
  return terms_.begin()->first[0];
}

Scalar Poly::leading_coefficient() const {
  if (terms_.empty()) return Scalar::zero(field());
  return terms_.begin()->second;
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coefficient().inverse();
}

std::vector<Scalar> Poly::dense_coefficients() const {
  require_univariate(*this);
  if (terms_.empty()) return {};
  std::vector<Scalar> out(degree_univariate() + 1, Scalar::zero(field()));
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

Poly Poly::from_dense(const Ring& ring, const std::vector<Scalar>& coeffs) {
  if (ring->nvars() != 1) {
    throw Error(ErrorCode::NotUnivariate, "operation requires a univariate ring");
  }
  Poly p(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(Exponents{static_cast<std::uint32_t>(i)}, coeffs[i]);
  }
  return p;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_univariate(a);
  require_univariate(b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
  Poly q(a.ring());
  Poly r = a;
  const std::uint32_t db = b.degree_univariate();
  const Scalar lead_inv = b.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree_univariate() >= db) {
    const std::uint32_t shift = r.degree_univariate() - db;
    const Scalar c = r.leading_coefficient() * lead_inv;
    Poly t = Poly::monomial(a.ring(), Exponents{shift}, c);
    q += t;
    r -= t * b;
  }
  return {std::move(q), std::move(r)};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------

std::vector<Exponents> monomials_of_weighted_degree(const RingContext& ring,
                                                    std::int64_t d) {
  if (!ring.weights()) {
    throw Error(ErrorCode::NoWeightsConfigured, "ring carries no weights");
  }
  std::vector<Exponents> out;
  if (d < 0) return out;
  const auto& w = *ring.weights();
  const std::size_t n = ring.nvars();
  Exponents e(n, 0);
  // Depth-first over variables, last variable absorbs the remainder.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == n) {
      if (left % w[i] == 0) {
        e[i] = static_cast<std::uint32_t>(left / w[i]);
        out.push_back(e);
      }
      return;
    }
    for (std::int64_t k = 0; k * w[i] <= left; ++k) {
      e[i] = static_cast<std::uint32_t>(k);
      self(self, i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

std::vector<Exponents> monomials_up_to_degree(std::size_t nvars,
                                              std::uint32_t bound) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const Ring& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg,
                         ErrorCode code = ErrorCode::ParseError) const {
    throw ParseError(code, msg + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly expression() {
    bool negate = false;
    if (peek('-')) {
      ++pos_;
      negate = true;
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (peek('*')) {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::uint32_t exponent() {
    skip_ws();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      fail("exponent must be a non-negative integer", ErrorCode::MalformedExponent);
    }
    const std::string d = digits();
    if (d.empty()) fail("missing exponent", ErrorCode::MalformedExponent);
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
      fail("exponent must be an integer", ErrorCode::MalformedExponent);
    }
    if (d.size() > 9) fail("exponent too large", ErrorCode::ExponentOverflow);
    return static_cast<std::uint32_t>(std::stoul(d));
  }

  Poly factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    Poly base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        const std::string den = digits();
        if (den.empty()) fail("missing denominator");
        if (mpz_class(den) == 0) fail("zero denominator", ErrorCode::DivisionByZero);
        num += "/" + den;
      }
      mpq_class q(num);
      q.canonicalize();
      try {
        return Poly(ring_, Scalar(ring_->field(), q));
      } catch (const Error& e) {
        fail(e.what(), e.code());
      }
    }
    if (c == '(') {
      ++pos_;
      base = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = s_.substr(start, pos_ - start);
      if (!ring_->index_of(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'", ErrorCode::UnknownVariable);
      }
      base = Poly::variable(ring_, name);
    } else {
      fail("unexpected character '" + std::string(1, c) + "'");
    }
    if (peek('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  const std::string& s_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const Ring& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace mfcat
