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

// Dynamic programs over the prefixes of a word. Ops supplies
//   State, multiply(State, s), descent(State, s)
// and State must be hashable with std::hash.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar::detail {

template <class Ops>
std::optional<int> min_proper_statistic(const Ops& ops, const Word& word, typename Ops::State identity) {
  using State = typename Ops::State;
  std::unordered_map<State, int> proper;
  State full = identity;
  for (int s : word) {
    std::unordered_map<State, int> next;
    next.reserve(proper.size() * 2 + 1);
    auto relax = [&next](const State& p, int value) {
      auto [it, inserted] = next.try_emplace(p, value);
      if (!inserted) it->second = std::min(it->second, value);
    };
    for (const auto& [p, value] : proper) {
      bool desc = ops.descent(p, s);
      relax(p, value + (desc ? -1 : 1));
      relax(ops.multiply(p, s), value);
    }
    relax(full, ops.descent(full, s) ? -1 : 1);
    full = ops.multiply(full, s);
    proper = std::move(next);
  }
  if (proper.empty()) return std::nullopt;
  int best = std::numeric_limits<int>::max();
  for (const auto& [p, value] : proper) best = std::min(best, value);
  return best;
}

/// Coefficient vectors (index = number of defects) keyed by subexpression.
template <class Ops>
std::unordered_map<typename Ops::State, std::vector<std::int64_t>> defect_generating_functions(
    const Ops& ops, const Word& word, typename Ops::State identity) {
  using State = typename Ops::State;
  std::unordered_map<State, std::vector<std::int64_t>> cur;
  cur[identity] = {1};
  for (int s : word) {
    std::unordered_map<State, std::vector<std::int64_t>> next;
    next.reserve(cur.size() * 2);
    auto add = [&next](const State& p, const std::vector<std::int64_t>& poly, std::size_t shift) {
      auto& dst = next[p];
      if (dst.size() < poly.size() + shift) dst.resize(poly.size() + shift, 0);
      for (std::size_t i = 0; i < poly.size(); ++i)
        if (__builtin_add_overflow(dst[i + shift], poly[i], &dst[i + shift]))
          throw std::overflow_error("defect generating function: coefficient overflow");
    };
    for (const auto& [p, poly] : cur) {
      std::size_t shift = ops.descent(p, s) ? 1 : 0;
      add(p, poly, shift);
      add(ops.multiply(p, s), poly, shift);
    }
    cur = std::move(next);
  }
  return cur;
}

struct ElementOps {
  using State = Element;
  Element multiply(const Element& p, int s) const { return p.right_multiply(s); }
  bool descent(const Element& p, int s) const { return p.is_right_descent(s); }
};

}  // namespace deodhar::detail
