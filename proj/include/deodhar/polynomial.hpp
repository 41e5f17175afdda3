// Copyright 2026 The deodhar-kl Authors.
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

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace deodhar {

/// Polynomial in q with integer coefficients, stored densely by exponent.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// an empty coefficient vector and degree() == kZeroDegree. Arithmetic checks
/// for signed overflow and throws std::overflow_error instead of wrapping.
class QPolynomial {
 public:
  using Coefficient = std::int64_t;
  static constexpr int kZeroDegree = -1;

  QPolynomial() = default;
  QPolynomial(std::initializer_list<Coefficient> coefficients);
  explicit QPolynomial(std::vector<Coefficient> coefficients);

  static QPolynomial constant(Coefficient c);
  /// c * q^k
  static QPolynomial monomial(Coefficient c, int k);

  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Coefficient coefficient(int k) const;
  const std::vector<Coefficient>& coefficients() const { return coefficients_; }

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  /// Adds c * q^shift * other.
  QPolynomial& add_scaled(const QPolynomial& other, Coefficient c, int shift);
  QPolynomial shifted(int k) const;

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
  friend auto operator<=>(const QPolynomial&, const QPolynomial&) = default;

  /// Ascending powers, e.g. "1 + q + 2q^2"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Coefficient> coefficients_;
};

/// Overflow-checked helpers shared with the dense accumulators in kl.cpp.
QPolynomial::Coefficient checked_add(QPolynomial::Coefficient a, QPolynomial::Coefficient b);
QPolynomial::Coefficient checked_mul(QPolynomial::Coefficient a, QPolynomial::Coefficient b);

}  // namespace deodhar
