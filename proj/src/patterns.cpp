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

#include "deodhar/patterns.hpp"

#include <algorithm>
#include <cstdlib>

#include "deodhar/errors.hpp"

namespace deodhar {

namespace {

void validate(const std::vector<int>& entries) {
  std::vector<bool> seen(entries.size() + 1, false);
  for (int v : entries) {
    auto a = static_cast<std::size_t>(std::abs(v));
    if (a < 1 || a > entries.size() || seen[a]) throw ConfigurationError("pattern entries must be a signed permutation");
    seen[a] = true;
  }
}

// Extends the partial embedding chosen[0..depth) one pattern entry at a time.
bool embed(const std::vector<int>& text, const std::vector<int>& pat, std::size_t depth, std::size_t start,
           std::vector<int>& chosen) {
  if (depth == pat.size()) return true;
  if (text.size() - start < pat.size() - depth) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    int v = text[i];
    bool ok = true;
    for (std::size_t j = 0; j < depth && ok; ++j)
      ok = (pat[j] < pat[depth]) == (chosen[j] < v);
    if (!ok) continue;
    chosen[depth] = v;
    if (embed(text, pat, depth + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

Pattern::Pattern(std::initializer_list<int> e) : entries(e) { validate(entries); }

Pattern::Pattern(std::vector<int> e) : entries(std::move(e)) { validate(entries); }

bool Pattern::is_signed() const {
  return std::any_of(entries.begin(), entries.end(), [](int v) { return v < 0; });
}

bool contains_pattern(const Element& w, const Pattern& p) {
  if (w.system().family() != Family::A) throw UnsupportedError("pattern containment is implemented for type A only");
  if (p.is_signed()) throw UnsupportedError("signed pattern on a type A element");
  std::vector<int> text = w.one_line();
  std::vector<int> chosen(p.entries.size());
  return embed(text, p.entries, 0, 0, chosen);
}

bool is_smooth_typeA(const Element& w) {
  static const Pattern p3412{3, 4, 1, 2};
  static const Pattern p4231{4, 2, 3, 1};
  return !contains_pattern(w, p3412) && !contains_pattern(w, p4231);
}

}  // namespace deodhar
