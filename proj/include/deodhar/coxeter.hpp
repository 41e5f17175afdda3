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

// Finite Weyl groups of types A, B, D, E6-E8, F4 and G2.
//
// Classical elements are stored as signed permutations in 1-line notation and
// generators act on the right by permuting positions:
//
//   A_n  generators s_1..s_n     (labels "1".."n"),   s_i swaps positions i, i+1
//   B_n  generators s_0..s_{n-1} (labels "0".."n-1"), s_0 negates position 1
//   D_n  generators s_1~, s_1..s_{n-1} (labels "1~","1",...), s_1~ swaps and
//        negates positions 1, 2
//
// Exceptional elements are stored as the integer matrix whose column j holds
// the image of the j-th simple root in simple-root coordinates. All arithmetic
// is exact.
//
// Generators are addressed internally by a dense index 0..rank-1. For D_n the
// index 0 is s_1~ and index i is s_i; for B_n the index equals the label; for
// A_n the index is label - 1.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace deodhar {

enum class Family { A, B, D, E, F, G };

enum class Side { Left, Right };

char family_letter(Family f);
Family parse_family(std::string_view s);

class Element;

/// Sequence of dense generator indices.
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> l) : letters(l) {}
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int operator[](std::size_t i) const { return letters[i]; }
  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }
  Word reversed() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

using RootVector = std::vector<int>;

class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  /// Builds the system; throws ConfigurationError for unsupported family/rank.
  static std::shared_ptr<const CoxeterSystem> build(Family family, int rank);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool is_classical() const {
    return family_ == Family::A || family_ == Family::B || family_ == Family::D;
  }
  /// Length of the 1-line notation (classical types); 0 for exceptional types.
  int degree() const { return degree_; }

  /// Coxeter matrix entry m(s,t).
  int order(int s, int t) const { return coxeter_[index(s, t)]; }
  bool commute(int s, int t) const { return order(s, t) <= 2; }
  /// Cartan integer <alpha_i^vee, alpha_j>, so s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i.
  int cartan(int i, int j) const { return cartan_[index(i, j)]; }

  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string_view label(int s) const { return labels_.at(static_cast<std::size_t>(s)); }
  /// Dense index for a display label; throws ConfigurationError.
  int generator(std::string_view label) const;
  void check_generator(int s) const;
  void check_word(const Word& w) const;

  /// Number of elements (exact for all supported systems).
  std::uint64_t group_order() const { return group_order_; }
  /// Length of the longest element (= number of positive roots).
  int longest_length() const { return static_cast<int>(positive_roots_.size()); }

  Element identity() const;
  Element generator_element(int s) const;
  /// Classical types only; validates the signed-permutation constraints.
  Element from_one_line(std::span<const int> one_line) const;
  /// Product of the letters, left to right.
  Element product(const Word& w) const;

  std::string format_word(const Word& w) const;
  /// Space-separated generator labels.
  Word parse_word(std::string_view text) const;
  /// Space-separated signed integers, or "id".
  Element parse_element(std::string_view text) const;

 private:
  CoxeterSystem(Family family, int rank);
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j);
  }

  Family family_;
  int rank_;
  int degree_ = 0;
  std::uint64_t group_order_ = 0;
  std::vector<int> coxeter_;
  std::vector<int> cartan_;
  std::vector<RootVector> positive_roots_;
  std::vector<std::string> labels_;
};

/// Free-function form of CoxeterSystem::build.
std::shared_ptr<const CoxeterSystem> build_system(Family family, int rank);

/// Group element with canonical representation. The element refers to its
/// system by pointer; the system must outlive every element built from it.
class Element {
 public:
  static constexpr std::size_t kCapacity = 64;

  /// Placeholder without a system; only assignment and destruction are valid.
  Element() = default;

  const CoxeterSystem& system() const { return *system_; }
  std::span<const std::int8_t> repr() const { return {data_.data(), size_}; }
  /// 1-line notation; classical types only.
  std::vector<int> one_line() const;

  Element right_multiply(int s) const;
  Element left_multiply(int s) const;
  Element operator*(const Element& other) const;
  Element inverse() const;

  /// Number of positive roots sent to negative roots.
  int length() const;
  bool is_right_descent(int s) const;
  bool is_left_descent(int s) const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.system_ == b.system_ && a.size_ == b.size_ &&
           std::equal(a.data_.begin(), a.data_.begin() + a.size_, b.data_.begin());
  }
  /// Lexicographic on the representation (same system assumed).
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

  std::size_t hash() const;

 private:
  friend class CoxeterSystem;
  Element(const CoxeterSystem* system, std::size_t size) : system_(system), size_(static_cast<std::uint8_t>(size)) {}

  std::int8_t& at(std::size_t i) { return data_[i]; }
  std::int8_t at(std::size_t i) const { return data_[i]; }
  // Exceptional storage: column j of the rank x rank matrix, row i.
  int cell(int row, int col) const { return data_[static_cast<std::size_t>(row * system_->rank() + col)]; }
  bool root_image_negative(std::span<const int> root) const;

  const CoxeterSystem* system_ = nullptr;
  std::uint8_t size_ = 0;
  std::array<std::int8_t, kCapacity> data_{};
};

struct ElementHash {
  std::size_t operator()(const Element& x) const { return x.hash(); }
};

// ---- Operations ---------------------------------------------------------

Element apply_generator(const Element& x, int s, Side side);
inline int length(const Element& x) { return x.length(); }
inline bool is_right_descent(const Element& x, int s) { return x.is_right_descent(s); }
inline Element inverse(const Element& x) { return x.inverse(); }

/// Product of the word and whether the word is reduced.
std::pair<Element, bool> element_from_word(const CoxeterSystem& system, const Word& word);

/// Reduced words in lexicographic order of dense letters; all of them when
/// limit is empty.
std::vector<Word> reduced_words(const Element& x, std::optional<std::size_t> limit = std::nullopt);
/// Lexicographically first reduced word.
Word canonical_reduced_word(const Element& x);

/// Subword-property test against one fixed reduced word of w.
bool bruhat_leq(const Element& x, const Element& w);
/// Every element below w in Bruhat order, sorted by (length, repr).
std::vector<Element> lower_interval(const Element& w);

/// Elements in nondecreasing length; within one length, sorted by repr.
std::vector<Element> enumerate_elements(const CoxeterSystem& system,
                                        std::optional<int> max_length = std::nullopt);
/// Streaming form: calls visit(x) for every element, level by level.
void for_each_element(const CoxeterSystem& system, std::optional<int> max_length,
                      const std::function<void(const Element&)>& visit);

/// No reduced word contains s t s with s, t non-commuting.
bool is_short_braid_avoiding(const Element& x);

/// Simple-root image matrix (row-major, rank x rank, column j = x(alpha_j))
/// computed by the generic reflection action from a reduced word. Works for
/// every family, so classical elements can be cross-checked against it.
std::vector<int> root_image_matrix(const Element& x);
/// Number of positive roots sent negative by a root image matrix.
int root_matrix_length(const CoxeterSystem& system, std::span<const int> matrix);

}  // namespace deodhar

template <>
struct std::hash<deodhar::Element> {
  std::size_t operator()(const deodhar::Element& x) const { return x.hash(); }
};
