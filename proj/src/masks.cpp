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

#include "deodhar/masks.hpp"

#include <algorithm>
#include <unordered_set>

#include "deodhar/errors.hpp"
#include "prefix_dp.hpp"

namespace deodhar {

namespace {

void require_reduced(const CoxeterSystem& system, const Word& word) {
  system.check_word(word);
  if (!element_from_word(system, word).second)
    throw PreconditionError("word " + system.format_word(word) + " is not reduced");
}

void require_size(const Word& word, const Mask& mask) {
  if (word.size() != mask.size())
    throw PreconditionError("mask has " + std::to_string(mask.size()) + " bits but the word has " +
                            std::to_string(word.size()) + " letters");
}

DefectStatus classify(bool bit, bool defect) {
  if (bit) return defect ? DefectStatus::OneDefect : DefectStatus::PlainOne;
  return defect ? DefectStatus::ZeroDefect : DefectStatus::PlainZero;
}

}  // namespace

Mask::Mask(std::initializer_list<int> b) {
  for (int v : b) {
    if (v != 0 && v != 1) throw ConfigurationError("mask bits must be 0 or 1");
    bits.push_back(static_cast<std::uint8_t>(v));
  }
}

Mask Mask::parse(std::string_view text) {
  Mask m;
  for (char c : text) {
    if (c == '0' || c == '1') m.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c != ' ' && c != ',') throw ConfigurationError("malformed mask '" + std::string(text) + "'");
  }
  return m;
}

bool Mask::is_proper() const {
  return std::any_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

std::string Mask::to_string() const {
  std::string out;
  for (auto b : bits) out += static_cast<char>('0' + b);
  return out;
}

const char* status_name(DefectStatus s) {
  switch (s) {
    case DefectStatus::PlainZero: return "plain-zero";
    case DefectStatus::ZeroDefect: return "zero-defect";
    case DefectStatus::PlainOne: return "plain-one";
    case DefectStatus::OneDefect: return "one-defect";
  }
  return "?";
}

int DefectProfile::count(DefectStatus s) const {
  return static_cast<int>(std::count(statuses.begin(), statuses.end(), s));
}

Element subexpression(const CoxeterSystem& system, const Word& word, const Mask& mask) {
  require_size(word, mask);
  system.check_word(word);
  Element x = system.identity();
  for (std::size_t j = 0; j < word.size(); ++j)
    if (mask[j]) x = x.right_multiply(word[j]);
  return x;
}

DefectProfile defect_profile(const CoxeterSystem& system, const Word& word, const Mask& mask) {
  require_size(word, mask);
  require_reduced(system, word);
  DefectProfile out;
  Element p = system.identity();
  for (std::size_t j = 0; j < word.size(); ++j) {
    bool defect = p.is_right_descent(word[j]);
    DefectStatus st = classify(mask[j], defect);
    out.statuses.push_back(st);
    if (defect) ++out.defect_count;
    if (st == DefectStatus::PlainZero) ++out.deodhar_statistic;
    if (st == DefectStatus::ZeroDefect) --out.deodhar_statistic;
    if (mask[j]) p = p.right_multiply(word[j]);
  }
  out.subexpression = p;
  return out;
}

std::optional<int> min_proper_statistic(const CoxeterSystem& system, const Word& word) {
  require_reduced(system, word);
  return detail::min_proper_statistic(detail::ElementOps{}, word, system.identity());
}

bool is_bounded(const CoxeterSystem& system, const Word& word) {
  auto best = min_proper_statistic(system, word);
  return !best || *best > 0;
}

bool is_deodhar(const Element& w) { return is_bounded(w.system(), canonical_reduced_word(w)); }

void for_each_mask_evaluating_to(const CoxeterSystem& system, const Word& word, const Element& x,
                                 const std::function<void(const Mask&, const DefectProfile&)>& visit) {
  require_reduced(system, word);
  const std::size_t k = word.size();
  // reach[j]: products of subexpressions of the suffix word[j..k).
  std::vector<std::unordered_set<Element, ElementHash>> reach(k + 1);
  reach[k].insert(system.identity());
  for (std::size_t j = k; j-- > 0;) {
    reach[j] = reach[j + 1];
    for (const auto& y : reach[j + 1]) reach[j].insert(y.left_multiply(word[j]));
  }
  if (!reach[0].contains(x)) return;

  Mask mask = Mask::zeros(k);
  DefectProfile prof;
  prof.statuses.resize(k);
  // Depth-first, bit 0 before bit 1.
  std::function<void(std::size_t, const Element&)> dfs = [&](std::size_t j, const Element& p) {
    if (j == k) {
      prof.subexpression = p;
      prof.defect_count = 0;
      prof.deodhar_statistic = 0;
      for (auto st : prof.statuses) {
        if (is_defect(st)) ++prof.defect_count;
        if (st == DefectStatus::PlainZero) ++prof.deodhar_statistic;
        if (st == DefectStatus::ZeroDefect) --prof.deodhar_statistic;
      }
      visit(mask, prof);
      return;
    }
    bool defect = p.is_right_descent(word[j]);
    for (std::uint8_t bit = 0; bit <= 1; ++bit) {
      Element q = bit ? p.right_multiply(word[j]) : p;
      if (!reach[j + 1].contains(q.inverse() * x)) continue;
      mask.bits[j] = bit;
      prof.statuses[j] = classify(bit, defect);
      dfs(j + 1, q);
    }
    mask.bits[j] = 0;
  };
  dfs(0, system.identity());
}

std::vector<std::pair<Mask, DefectProfile>> masks_evaluating_to(const CoxeterSystem& system, const Word& word,
                                                                const Element& x) {
  std::vector<std::pair<Mask, DefectProfile>> out;
  for_each_mask_evaluating_to(system, word, x, [&](const Mask& m, const DefectProfile& p) { out.emplace_back(m, p); });
  return out;
}

std::vector<Mask> mu_masks(const CoxeterSystem& system, const Word& word, const Element& x) {
  if (!is_bounded(system, word))
    throw UnsupportedError("mu-masks count mu only for Deodhar elements; " + system.format_word(word) +
                           " is not bounded");
  std::vector<Mask> out;
  for_each_mask_evaluating_to(system, word, x, [&](const Mask& m, const DefectProfile& p) {
    if (m.is_proper() && p.deodhar_statistic == 1) out.push_back(m);
  });
  return out;
}

std::map<Element, QPolynomial> deodhar_polynomials(const CoxeterSystem& system, const Word& word) {
  require_reduced(system, word);
  std::map<Element, QPolynomial> out;
  for (auto& [x, coeffs] : detail::defect_generating_functions(detail::ElementOps{}, word, system.identity()))
    out.emplace(x, QPolynomial(std::move(coeffs)));
  return out;
}

}  // namespace deodhar
