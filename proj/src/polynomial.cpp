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

#include "deodhar/polynomial.hpp"

#include <stdexcept>

namespace deodhar {

QPolynomial::Coefficient checked_add(QPolynomial::Coefficient a, QPolynomial::Coefficient b) {
  QPolynomial::Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("QPolynomial: coefficient overflow");
  return r;
}

QPolynomial::Coefficient checked_mul(QPolynomial::Coefficient a, QPolynomial::Coefficient b) {
  QPolynomial::Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("QPolynomial: coefficient overflow");
  return r;
}

QPolynomial::QPolynomial(std::initializer_list<Coefficient> coefficients)
    : coefficients_(coefficients) {
  trim();
}

QPolynomial::QPolynomial(std::vector<Coefficient> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

QPolynomial QPolynomial::constant(Coefficient c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(Coefficient c, int k) {
  if (k < 0) throw std::invalid_argument("QPolynomial::monomial: negative exponent");
  std::vector<Coefficient> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return QPolynomial(std::move(v));
}

QPolynomial::Coefficient QPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

void QPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

QPolynomial& QPolynomial::add_scaled(const QPolynomial& other, Coefficient c, int shift) {
  if (other.is_zero() || c == 0) return *this;
  if (shift < 0) throw std::invalid_argument("QPolynomial::add_scaled: negative shift");
  std::size_t need = other.coefficients_.size() + static_cast<std::size_t>(shift);
  if (coefficients_.size() < need) coefficients_.resize(need, 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    auto& slot = coefficients_[i + static_cast<std::size_t>(shift)];
    slot = checked_add(slot, checked_mul(c, other.coefficients_[i]));
  }
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) { return add_scaled(other, 1, 0); }

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) { return add_scaled(other, -1, 0); }

QPolynomial QPolynomial::shifted(int k) const {
  QPolynomial r;
  return r.add_scaled(*this, 1, k);
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPolynomial::Coefficient> v(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
  return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    Coefficient c = coefficients_[k];
    if (c == 0) continue;
    // Magnitude as unsigned so INT64_MIN prints correctly.
    unsigned long long mag = c < 0 ? 0ULL - static_cast<unsigned long long>(c)
                                   : static_cast<unsigned long long>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace deodhar
