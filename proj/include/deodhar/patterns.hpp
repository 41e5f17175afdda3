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

#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar {

/// Classical pattern: distinct signed integers whose absolute values are 1..k.
struct Pattern {
  std::vector<int> entries;

  Pattern() = default;
  Pattern(std::initializer_list<int> e);
  explicit Pattern(std::vector<int> e);

  bool is_signed() const;
};

/// True iff some subsequence of w's 1-line notation is order-isomorphic to p.
/// Only unsigned patterns in type A; anything else throws UnsupportedError.
bool contains_pattern(const Element& w, const Pattern& p);

/// Avoids both [3,4,1,2] and [4,2,3,1].
bool is_smooth_typeA(const Element& w);

}  // namespace deodhar
