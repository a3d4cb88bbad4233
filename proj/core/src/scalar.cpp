// Copyright 2026 The deflate-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deflate/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "deflate/error.hpp"

namespace deflate {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) : v_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_.canonicalize();
}

Scalar::Scalar(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw Error(ErrorCode::MalformedDocument, "bad scalar '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    d = mpz_class(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::MalformedDocument, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::str() const { return v_.get_str(10); }

Scalar Scalar::abs() const { return Scalar(mpq_class(::abs(v_))); }

double Scalar::approx() const {
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, v_.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, v_.get_den_mpz_t());
  return std::ldexp(num / den, static_cast<int>(num_exp - den_exp));
}

Scalar Scalar::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Scalar(mpq_class(f));
}

Scalar& Scalar::operator+=(const Scalar& o) { v_ += o.v_; return *this; }
Scalar& Scalar::operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
Scalar& Scalar::operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.v_) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-v_)); }

std::size_t Scalar::hash() const {
  const std::string s = str();
  return std::hash<std::string>{}(s);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace deflate
