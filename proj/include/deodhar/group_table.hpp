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

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "deodhar/coxeter.hpp"

namespace deodhar {

/// Dense numbering of a whole finite group with precomputed multiplication
/// by generators on both sides. Index 0 is the identity and indices are in
/// the order of enumerate_elements (nondecreasing length).
class GroupTable {
 public:
  using Index = std::uint32_t;

  explicit GroupTable(std::shared_ptr<const CoxeterSystem> system);

  const CoxeterSystem& system() const { return *system_; }
  const std::shared_ptr<const CoxeterSystem>& system_ptr() const { return system_; }
  std::size_t size() const { return elements_.size(); }

  const Element& element(Index i) const { return elements_[i]; }
  Index index_of(const Element& x) const;
  std::optional<Index> find(const Element& x) const;

  int length(Index i) const { return lengths_[i]; }
  Index right(Index i, int s) const { return right_[i * rank_ + static_cast<std::size_t>(s)]; }
  Index left(Index i, int s) const { return left_[i * rank_ + static_cast<std::size_t>(s)]; }
  bool is_right_descent(Index i, int s) const { return lengths_[right(i, s)] < lengths_[i]; }
  Index inverse(Index i) const { return inverse_[i]; }
  Index product(const Word& w) const;

 private:
  std::shared_ptr<const CoxeterSystem> system_;
  std::size_t rank_;
  std::vector<Element> elements_;
  std::unordered_map<Element, Index, ElementHash> index_;
  std::vector<int> lengths_;
  std::vector<Index> right_;
  std::vector<Index> left_;
  std::vector<Index> inverse_;
};

}  // namespace deodhar
