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

#include "deodhar/group_table.hpp"

#include "deodhar/errors.hpp"

namespace deodhar {

GroupTable::GroupTable(std::shared_ptr<const CoxeterSystem> system)
    : system_(std::move(system)), rank_(static_cast<std::size_t>(system_->rank())) {
  elements_ = enumerate_elements(*system_);
  const std::size_t n = elements_.size();
  index_.reserve(n);
  lengths_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    index_.emplace(elements_[i], static_cast<Index>(i));
    lengths_[i] = elements_[i].length();
  }
  right_.resize(n * rank_);
  left_.resize(n * rank_);
  inverse_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < rank_; ++s) {
      right_[i * rank_ + s] = index_of(elements_[i].right_multiply(static_cast<int>(s)));
      left_[i * rank_ + s] = index_of(elements_[i].left_multiply(static_cast<int>(s)));
    }
  // Walk a reduced word: inverse(x s) = s inverse(x).
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t s = 0; s < rank_; ++s) {
      Index down = right_[i * rank_ + s];
      if (lengths_[down] < lengths_[i]) {
        inverse_[i] = left(inverse_[down], static_cast<int>(s));
        break;
      }
    }
  }
}

GroupTable::Index GroupTable::index_of(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw ConfigurationError("element " + x.to_string() + " not in group table");
  return it->second;
}

std::optional<GroupTable::Index> GroupTable::find(const Element& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupTable::Index GroupTable::product(const Word& w) const {
  Index i = 0;
  for (int s : w) {
    system_->check_generator(s);
    i = right(i, s);
  }
  return i;
}

}  // namespace deodhar
