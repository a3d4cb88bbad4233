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

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace deflate {

/// Exact rational coordinate. Always kept in canonical form (positive
/// denominator, reduced fraction); no operation ever rounds.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(mpq_class value);

  /// Parses "7", "-3/2", "+12". Throws Error(MalformedDocument) otherwise.
  static Scalar parse(std::string_view text);

  std::string str() const;
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Nearby double (relative error below 2^-50). Display and predicate
  /// filters only; never stored back as a coordinate.
  double approx() const;
  const mpq_class& raw() const { return v_; }

  Scalar abs() const;
  /// Largest integer not above the value.
  Scalar floor() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace deflate

template <>
struct std::hash<deflate::Scalar> {
  std::size_t operator()(const deflate::Scalar& s) const noexcept { return s.hash(); }
};
