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

#include "mfcat/field.hpp"

#include <cctype>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField,
                "field modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value) {
  normalize();
}

Scalar::Scalar(Field field, const mpq_class& value)
    : field_(field), value_(value) {
  value_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (field_.is_rational()) return;
  const mpz_class p(field_.modulus());
  mpz_class num = value_.get_num() % p;
  mpz_class den = value_.get_den() % p;
  if (den == 0) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                "denominator " + value_.get_den().get_str() +
                    " is not invertible in " + field_.name());
  }
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  value_ = mpq_class(num);
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw Error(ErrorCode::ContextMismatch, "scalars from " + field_.name() +
                                                " and " + o.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
  } else {
    mpz_class inv;
    const mpz_class p(field_.modulus());
    mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
    r.value_ = mpq_class(inv);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  value_ += o.value_;
  if (!field_.is_rational() && value_ >= field_.modulus()) {
    value_ -= field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  value_ -= o.value_;
  if (!field_.is_rational() && value_ < 0) value_ += field_.modulus();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    value_ *= o.value_;
  } else {
    mpz_class prod = value_.get_num() * o.value_.get_num();
    prod %= field_.modulus();
    value_ = mpq_class(prod);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = -value_;
  } else if (!is_zero()) {
    r.value_ = field_.modulus() - value_;
  }
  return r;
}

std::string Scalar::to_string() const { return value_.get_str(); }

Scalar Scalar::parse(Field field, const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  bool ok = i > digits_start;
  if (ok && i < t.size() && t[i] == '/') {
    const std::size_t den_start = ++i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    ok = i > den_start;
  }
  if (!ok || i != t.size()) {
    throw ParseError(ErrorCode::ParseError, "malformed scalar '" + text + "'",
                     i);
  }
  mpq_class q;
  if (q.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0 || q.get_den() == 0) {
    throw ParseError(ErrorCode::ParseError, "malformed scalar '" + text + "'",
                     0);
  }
  return Scalar(field, q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace mfcat
