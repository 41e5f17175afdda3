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

// Mask calculus on a fixed reduced word. Bit j of a mask belongs to the j-th
// letter counted from the left.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deodhar/coxeter.hpp"
#include "deodhar/polynomial.hpp"

namespace deodhar {

struct Mask {
  std::vector<std::uint8_t> bits;

  Mask() = default;
  Mask(std::initializer_list<int> b);
  explicit Mask(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  /// "1000" or "1 0 0 0".
  static Mask parse(std::string_view text);
  static Mask ones(std::size_t k) { return Mask(std::vector<std::uint8_t>(k, 1)); }
  static Mask zeros(std::size_t k) { return Mask(std::vector<std::uint8_t>(k, 0)); }

  std::size_t size() const { return bits.size(); }
  int operator[](std::size_t j) const { return bits[j]; }
  /// Not all-ones.
  bool is_proper() const;
  std::string to_string() const;

  friend bool operator==(const Mask&, const Mask&) = default;
  friend auto operator<=>(const Mask&, const Mask&) = default;
};

enum class DefectStatus { PlainZero, ZeroDefect, PlainOne, OneDefect };

inline bool is_defect(DefectStatus s) { return s == DefectStatus::ZeroDefect || s == DefectStatus::OneDefect; }
inline int mask_value(DefectStatus s) { return s == DefectStatus::PlainOne || s == DefectStatus::OneDefect; }
const char* status_name(DefectStatus s);

struct DefectProfile {
  std::vector<DefectStatus> statuses;
  int defect_count = 0;
  /// #plain-zeros - #zero-defects
  int deodhar_statistic = 0;
  Element subexpression;

  int count(DefectStatus s) const;
};

/// Product of the letters whose bit is 1. Throws PreconditionError on a
/// length mismatch.
Element subexpression(const CoxeterSystem& system, const Word& word, const Mask& mask);

/// Throws PreconditionError unless the word is reduced and the lengths match.
DefectProfile defect_profile(const CoxeterSystem& system, const Word& word, const Mask& mask);

/// Smallest D over proper masks; empty for the empty word.
std::optional<int> min_proper_statistic(const CoxeterSystem& system, const Word& word);
/// Every proper mask has D > 0.
bool is_bounded(const CoxeterSystem& system, const Word& word);
bool is_deodhar(const Element& w);

/// Masks with subexpression x, in lexicographic order of bits.
void for_each_mask_evaluating_to(const CoxeterSystem& system, const Word& word, const Element& x,
                                 const std::function<void(const Mask&, const DefectProfile&)>& visit);
std::vector<std::pair<Mask, DefectProfile>> masks_evaluating_to(const CoxeterSystem& system, const Word& word,
                                                                const Element& x);

/// Proper masks with subexpression x and D = 1. Throws UnsupportedError when
/// the word is not bounded.
std::vector<Mask> mu_masks(const CoxeterSystem& system, const Word& word, const Element& x);

/// Sum of q^{d(sigma)} over all masks, grouped by subexpression.
std::map<Element, QPolynomial> deodhar_polynomials(const CoxeterSystem& system, const Word& word);

}  // namespace deodhar
