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

#include "deodhar/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>
#include <unordered_set>

#include "deodhar/errors.hpp"

namespace deodhar {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Cartan matrices, row-major, entry (i,j) = <alpha_i^vee, alpha_j>.
std::vector<int> cartan_matrix(Family family, int rank) {
  std::vector<int> a(static_cast<std::size_t>(rank * rank), 0);
  auto set = [&](int i, int j, int v) { a[static_cast<std::size_t>(i * rank + j)] = v; };
  for (int i = 0; i < rank; ++i) set(i, i, 2);
  auto chain = [&](int from, int to) {
    for (int i = from; i + 1 <= to; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  switch (family) {
    case Family::A:
      chain(0, rank - 1);
      break;
    case Family::B:
      chain(1, rank - 1);
      if (rank >= 2) {
        // alpha_0 = e_1 is short, alpha_1 = e_2 - e_1 is long.
        set(0, 1, -2);
        set(1, 0, -1);
      }
      break;
    case Family::D:
      chain(1, rank - 1);
      if (rank >= 3) {
        set(0, 2, -1);
        set(2, 0, -1);
      }
      break;
    case Family::E: {
      // Bourbaki labels 1..rank, dense index = label - 1.
      auto edge = [&](int i, int j) {
        set(i - 1, j - 1, -1);
        set(j - 1, i - 1, -1);
      };
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < rank; ++i) edge(i, i + 1);
      break;
    }
    case Family::F:
      set(0, 1, -1);
      set(1, 0, -1);
      set(1, 2, -1);
      set(2, 1, -2);
      set(2, 3, -1);
      set(3, 2, -1);
      break;
    case Family::G:
      set(0, 1, -3);
      set(1, 0, -1);
      break;
  }
  return a;
}

int coxeter_order_from_cartan(int aij, int aji) {
  switch (aij * aji) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("unexpected Cartan product");
  }
}

bool root_is_negative(std::span<const int> v) {
  for (int c : v) {
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return false;
}

}  // namespace

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
      default: break;
    }
  }
  throw ConfigurationError("unknown Coxeter family '" + std::string(s) + "'");
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

// ---- CoxeterSystem ------------------------------------------------------

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(Family family, int rank) {
  return std::shared_ptr<const CoxeterSystem>(new CoxeterSystem(family, rank));
}

std::shared_ptr<const CoxeterSystem> build_system(Family family, int rank) {
  return CoxeterSystem::build(family, rank);
}

CoxeterSystem::CoxeterSystem(Family family, int rank) : family_(family), rank_(rank) {
  auto unsupported = [&] {
    throw ConfigurationError("unsupported Coxeter system " + std::string(1, family_letter(family)) +
                             std::to_string(rank));
  };
  switch (family) {
    case Family::A:
      if (rank < 1 || rank + 1 > static_cast<int>(Element::kCapacity)) unsupported();
      degree_ = rank + 1;
      group_order_ = rank + 1 <= 20 ? factorial(rank + 1) : 0;
      for (int i = 1; i <= rank; ++i) labels_.push_back(std::to_string(i));
      break;
    case Family::B:
      if (rank < 1 || rank > static_cast<int>(Element::kCapacity)) unsupported();
      degree_ = rank;
      group_order_ = rank <= 16 ? (std::uint64_t{1} << rank) * factorial(rank) : 0;
      for (int i = 0; i < rank; ++i) labels_.push_back(std::to_string(i));
      break;
    case Family::D:
      if (rank < 2 || rank > static_cast<int>(Element::kCapacity)) unsupported();
      degree_ = rank;
      group_order_ = rank <= 16 ? (std::uint64_t{1} << (rank - 1)) * factorial(rank) : 0;
      labels_.push_back("1~");
      for (int i = 1; i < rank; ++i) labels_.push_back(std::to_string(i));
      break;
    case Family::E:
      if (rank < 6 || rank > 8) unsupported();
      group_order_ = rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
      for (int i = 1; i <= rank; ++i) labels_.push_back(std::to_string(i));
      break;
    case Family::F:
      if (rank != 4) unsupported();
      group_order_ = 1152;
      for (int i = 1; i <= rank; ++i) labels_.push_back(std::to_string(i));
      break;
    case Family::G:
      if (rank != 2) unsupported();
      group_order_ = 12;
      for (int i = 1; i <= rank; ++i) labels_.push_back(std::to_string(i));
      break;
  }

  cartan_ = cartan_matrix(family, rank);
  coxeter_.assign(static_cast<std::size_t>(rank * rank), 1);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (i != j) coxeter_[index(i, j)] = coxeter_order_from_cartan(cartan(i, j), cartan(j, i));

  // Positive roots by closure of the simple roots under simple reflections.
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (int i = 0; i < rank; ++i) {
    RootVector r(static_cast<std::size_t>(rank), 0);
    r[static_cast<std::size_t>(i)] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank; ++i) {
        int pairing = 0;
        for (int j = 0; j < rank; ++j) pairing += cartan(i, j) * beta[static_cast<std::size_t>(j)];
        if (pairing == 0) continue;
        RootVector gamma = beta;
        gamma[static_cast<std::size_t>(i)] -= pairing;
        if (root_is_negative(gamma)) continue;
        if (seen.insert(gamma).second) next.push_back(std::move(gamma));
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::stable_sort(positive_roots_.begin(), positive_roots_.end(), [](const RootVector& a, const RootVector& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    return ha < hb;
  });
}

std::string CoxeterSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

int CoxeterSystem::generator(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw ConfigurationError("unknown generator '" + std::string(label) + "' for " + name());
}

void CoxeterSystem::check_generator(int s) const {
  if (s < 0 || s >= rank_)
    throw ConfigurationError("generator index " + std::to_string(s) + " out of range for " + name());
}

void CoxeterSystem::check_word(const Word& w) const {
  for (int s : w) check_generator(s);
}

Element CoxeterSystem::identity() const {
  if (is_classical()) {
    Element e(this, static_cast<std::size_t>(degree_));
    for (int i = 0; i < degree_; ++i) e.at(static_cast<std::size_t>(i)) = static_cast<std::int8_t>(i + 1);
    return e;
  }
  Element e(this, static_cast<std::size_t>(rank_ * rank_));
  for (int i = 0; i < rank_; ++i) e.at(static_cast<std::size_t>(i * rank_ + i)) = 1;
  return e;
}

Element CoxeterSystem::generator_element(int s) const {
  check_generator(s);
  return identity().right_multiply(s);
}

Element CoxeterSystem::from_one_line(std::span<const int> one_line) const {
  if (!is_classical()) throw ConfigurationError("1-line notation is only defined for types A, B, D");
  if (static_cast<int>(one_line.size()) != degree_)
    throw ConfigurationError("1-line notation for " + name() + " needs " + std::to_string(degree_) + " entries");
  std::vector<bool> used(static_cast<std::size_t>(degree_) + 1, false);
  int negatives = 0;
  Element x(this, static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) {
    int v = one_line[static_cast<std::size_t>(i)];
    int a = std::abs(v);
    if (a < 1 || a > degree_ || used[static_cast<std::size_t>(a)])
      throw ConfigurationError("not a signed permutation of 1.." + std::to_string(degree_));
    used[static_cast<std::size_t>(a)] = true;
    if (v < 0) ++negatives;
    x.at(static_cast<std::size_t>(i)) = static_cast<std::int8_t>(v);
  }
  if (family_ == Family::A && negatives > 0) throw ConfigurationError("type A elements have no barred entries");
  if (family_ == Family::D && negatives % 2 != 0)
    throw ConfigurationError("type D elements have an even number of barred entries");
  return x;
}

Element CoxeterSystem::product(const Word& w) const {
  Element x = identity();
  for (int s : w) {
    check_generator(s);
    x = x.right_multiply(s);
  }
  return x;
}

std::string CoxeterSystem::format_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += label(w[i]);
  }
  return out;
}

Word CoxeterSystem::parse_word(std::string_view text) const {
  Word w;
  for (const auto& tok : split_tokens(text)) {
    if (tok == "id" || tok == "e") continue;
    w.letters.push_back(generator(tok));
  }
  return w;
}

Element CoxeterSystem::parse_element(std::string_view text) const {
  auto tokens = split_tokens(text);
  if (tokens.size() == 1 && (tokens[0] == "id" || tokens[0] == "e")) return identity();
  if (!is_classical())
    throw ConfigurationError("exceptional-type elements must be given as words");
  std::vector<int> values;
  for (const auto& tok : tokens) {
    int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && tok[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) throw ConfigurationError("malformed 1-line entry '" + tok + "'");
    values.push_back(v);
  }
  return from_one_line(values);
}

// ---- Element ------------------------------------------------------------

std::vector<int> Element::one_line() const {
  if (!system_->is_classical()) throw ConfigurationError("1-line notation is only defined for types A, B, D");
  return std::vector<int>(data_.begin(), data_.begin() + size_);
}

Element Element::right_multiply(int s) const {
  system_->check_generator(s);
  Element y = *this;
  const std::size_t u = static_cast<std::size_t>(s);
  switch (system_->family()) {
    case Family::A:
      std::swap(y.data_[u], y.data_[u + 1]);
      return y;
    case Family::B:
      if (s == 0) {
        y.data_[0] = static_cast<std::int8_t>(-y.data_[0]);
      } else {
        std::swap(y.data_[u - 1], y.data_[u]);
      }
      return y;
    case Family::D:
      if (s == 0) {
        y.data_[0] = static_cast<std::int8_t>(-data_[1]);
        y.data_[1] = static_cast<std::int8_t>(-data_[0]);
      } else {
        std::swap(y.data_[u - 1], y.data_[u]);
      }
      return y;
    default:
      break;
  }
  // (x s)(alpha_j) = x(alpha_j) - cartan(s, j) x(alpha_s).
  const int r = system_->rank();
  for (int j = 0; j < r; ++j) {
    int c = system_->cartan(s, j);
    if (j == s || c == 0) continue;
    for (int i = 0; i < r; ++i)
      y.data_[static_cast<std::size_t>(i * r + j)] =
          static_cast<std::int8_t>(cell(i, j) - c * cell(i, s));
  }
  for (int i = 0; i < r; ++i)
    y.data_[static_cast<std::size_t>(i * r + s)] = static_cast<std::int8_t>(-cell(i, s));
  return y;
}

Element Element::left_multiply(int s) const {
  system_->check_generator(s);
  Element y = *this;
  switch (system_->family()) {
    case Family::A:
      for (std::size_t i = 0; i < size_; ++i) {
        if (data_[i] == s + 1) y.data_[i] = static_cast<std::int8_t>(s + 2);
        else if (data_[i] == s + 2) y.data_[i] = static_cast<std::int8_t>(s + 1);
      }
      return y;
    case Family::B:
    case Family::D:
      for (std::size_t i = 0; i < size_; ++i) {
        int v = data_[i];
        int a = std::abs(v);
        int sign = v < 0 ? -1 : 1;
        int out = v;
        if (s == 0 && system_->family() == Family::B) {
          if (a == 1) out = -v;
        } else if (s == 0) {
          if (a == 1) out = -sign * 2;
          else if (a == 2) out = -sign * 1;
        } else {
          if (a == s) out = sign * (s + 1);
          else if (a == s + 1) out = sign * s;
        }
        y.data_[i] = static_cast<std::int8_t>(out);
      }
      return y;
    default:
      break;
  }
  // s(v) = v - <alpha_s^vee, v> alpha_s applied to every column.
  const int r = system_->rank();
  for (int j = 0; j < r; ++j) {
    int pairing = 0;
    for (int k = 0; k < r; ++k) pairing += system_->cartan(s, k) * cell(k, j);
    y.data_[static_cast<std::size_t>(s * r + j)] = static_cast<std::int8_t>(cell(s, j) - pairing);
  }
  return y;
}

Element Element::operator*(const Element& other) const {
  if (system_ != other.system_) throw ConfigurationError("elements from different systems");
  Element y = *this;
  if (system_->is_classical()) {
    for (std::size_t i = 0; i < size_; ++i) {
      int v = other.data_[i];
      int img = data_[static_cast<std::size_t>(std::abs(v) - 1)];
      y.data_[i] = static_cast<std::int8_t>(v < 0 ? -img : img);
    }
    return y;
  }
  const int r = system_->rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int acc = 0;
      for (int k = 0; k < r; ++k) acc += cell(i, k) * other.cell(k, j);
      y.data_[static_cast<std::size_t>(i * r + j)] = static_cast<std::int8_t>(acc);
    }
  return y;
}

Element Element::inverse() const {
  if (system_->is_classical()) {
    Element y = *this;
    for (std::size_t i = 0; i < size_; ++i) {
      int v = data_[i];
      int pos = std::abs(v) - 1;
      y.data_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(v < 0 ? -static_cast<int>(i + 1)
                                                                              : static_cast<int>(i + 1));
    }
    return y;
  }
  Word w;
  Element cur = *this;
  while (!cur.is_identity()) {
    for (int s = 0; s < system_->rank(); ++s) {
      if (cur.is_right_descent(s)) {
        cur = cur.right_multiply(s);
        w.letters.push_back(s);
        break;
      }
    }
  }
  // w lists x's letters from the right end: x = w_k ... w_1, so x^{-1} = w_1 ... w_k.
  return system_->product(w);
}

bool Element::root_image_negative(std::span<const int> root) const {
  const int r = system_->rank();
  for (int i = 0; i < r; ++i) {
    int acc = 0;
    for (int j = 0; j < r; ++j) acc += cell(i, j) * root[static_cast<std::size_t>(j)];
    if (acc < 0) return true;
    if (acc > 0) return false;
  }
  return false;
}

int Element::length() const {
  const auto n = static_cast<std::size_t>(size_);
  switch (system_->family()) {
    case Family::A: {
      int inv = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (data_[i] > data_[j]) ++inv;
      return inv;
    }
    case Family::B:
    case Family::D: {
      // Positive roots e_j - e_i, e_j + e_i (i < j), and e_i for type B.
      int count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (system_->family() == Family::B && data_[i] < 0) ++count;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (data_[i] > data_[j]) ++count;
          if (data_[i] + data_[j] < 0) ++count;
        }
      }
      return count;
    }
    default:
      break;
  }
  int count = 0;
  for (const auto& beta : system_->positive_roots())
    if (root_image_negative(beta)) ++count;
  return count;
}

bool Element::is_right_descent(int s) const {
  system_->check_generator(s);
  const auto u = static_cast<std::size_t>(s);
  switch (system_->family()) {
    case Family::A:
      return data_[u] > data_[u + 1];
    case Family::B:
      return s == 0 ? data_[0] < 0 : data_[u - 1] > data_[u];
    case Family::D:
      return s == 0 ? data_[0] + data_[1] < 0 : data_[u - 1] > data_[u];
    default:
      break;
  }
  // x(alpha_s) is column s.
  const int r = system_->rank();
  for (int i = 0; i < r; ++i) {
    int c = cell(i, s);
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return false;
}

bool Element::is_left_descent(int s) const {
  if (system_->is_classical()) return inverse().is_right_descent(s);
  return left_multiply(s).length() < length();
}

bool Element::is_identity() const { return *this == system_->identity(); }

std::string Element::to_string() const {
  if (system_->is_classical()) {
    std::string out = "[";
    for (std::size_t i = 0; i < size_; ++i) {
      if (i) out += ',';
      out += std::to_string(static_cast<int>(data_[i]));
    }
    return out + "]";
  }
  if (is_identity()) return "id";
  return "(" + system_->format_word(canonical_reduced_word(*this)) + ")";
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.begin() + a.size_, b.data_.begin(),
                                                b.data_.begin() + b.size_);
}

std::size_t Element::hash() const {
  // FNV-1a over the representation bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint8_t>(data_[i]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

// ---- Operations ---------------------------------------------------------

Element apply_generator(const Element& x, int s, Side side) {
  return side == Side::Right ? x.right_multiply(s) : x.left_multiply(s);
}

std::pair<Element, bool> element_from_word(const CoxeterSystem& system, const Word& word) {
  Element x = system.product(word);
  return {x, x.length() == static_cast<int>(word.size())};
}

namespace {

void collect_reduced_words(const Element& x, Word& prefix, std::vector<Word>& out, std::optional<std::size_t> limit) {
  if (limit && out.size() >= *limit) return;
  if (x.is_identity()) {
    out.push_back(prefix);
    return;
  }
  Element xinv = x.inverse();
  for (int s = 0; s < x.system().rank(); ++s) {
    if (!xinv.is_right_descent(s)) continue;
    prefix.letters.push_back(s);
    collect_reduced_words(x.left_multiply(s), prefix, out, limit);
    prefix.letters.pop_back();
    if (limit && out.size() >= *limit) return;
  }
}

}  // namespace

std::vector<Word> reduced_words(const Element& x, std::optional<std::size_t> limit) {
  std::vector<Word> out;
  if (limit && *limit == 0) return out;
  Word prefix;
  collect_reduced_words(x, prefix, out, limit);
  return out;
}

Word canonical_reduced_word(const Element& x) {
  Word w;
  Element cur = x;
  const int r = x.system().rank();
  while (!cur.is_identity()) {
    Element inv = cur.inverse();
    for (int s = 0; s < r; ++s) {
      if (inv.is_right_descent(s)) {
        w.letters.push_back(s);
        cur = cur.left_multiply(s);
        break;
      }
    }
  }
  return w;
}

namespace {

std::unordered_set<Element, ElementHash> subword_products(const Element& w) {
  std::unordered_set<Element, ElementHash> reach{w.system().identity()};
  for (int s : canonical_reduced_word(w)) {
    std::vector<Element> add;
    add.reserve(reach.size());
    for (const auto& y : reach) add.push_back(y.right_multiply(s));
    for (auto& y : add) reach.insert(std::move(y));
  }
  return reach;
}

}  // namespace

bool bruhat_leq(const Element& x, const Element& w) {
  if (&x.system() != &w.system()) throw ConfigurationError("bruhat_leq: elements from different systems");
  if (x.length() > w.length()) return false;
  return subword_products(w).contains(x);
}

std::vector<Element> lower_interval(const Element& w) {
  auto reach = subword_products(w);
  std::vector<std::pair<int, Element>> keyed;
  keyed.reserve(reach.size());
  for (const auto& y : reach) keyed.emplace_back(y.length(), y);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [l, y] : keyed) out.push_back(y);
  return out;
}

void for_each_element(const CoxeterSystem& system, std::optional<int> max_length,
                      const std::function<void(const Element&)>& visit) {
  std::vector<Element> level{system.identity()};
  int len = 0;
  while (!level.empty()) {
    if (max_length && len > *max_length) break;
    for (const auto& x : level) visit(x);
    std::unordered_set<Element, ElementHash> next;
    for (const auto& x : level)
      for (int s = 0; s < system.rank(); ++s)
        if (!x.is_right_descent(s)) next.insert(x.right_multiply(s));
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    ++len;
  }
}

std::vector<Element> enumerate_elements(const CoxeterSystem& system, std::optional<int> max_length) {
  std::vector<Element> out;
  for_each_element(system, max_length, [&](const Element& x) { out.push_back(x); });
  return out;
}

bool is_short_braid_avoiding(const Element& x) {
  // Some reduced word has a factor s t s iff, in the heap of any one reduced
  // word, two s-entries have exactly one entry strictly between them.
  const CoxeterSystem& sys = x.system();
  Word w = canonical_reduced_word(x);
  const std::size_t k = w.size();
  std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));  // below[i][j]: i < j in the heap
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = j; i-- > 0;) {
      if (below[i][j]) continue;
      if (!sys.commute(w[i], w[j]) || w[i] == w[j]) {
        below[i][j] = true;
        for (std::size_t h = 0; h < i; ++h)
          if (below[h][i]) below[h][j] = true;
      }
    }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t c = a + 1; c < k; ++c) {
      if (w[a] != w[c]) continue;
      int between = 0;
      std::size_t mid = 0;
      for (std::size_t b = a + 1; b < c; ++b)
        if (below[a][b] && below[b][c]) {
          ++between;
          mid = b;
        }
      if (between == 1 && sys.order(w[a], w[mid]) >= 3) return false;
    }
  return true;
}

std::vector<int> root_image_matrix(const Element& x) {
  const CoxeterSystem& sys = x.system();
  const int r = sys.rank();
  std::vector<int> m(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i * r + i)] = 1;
  for (int s : canonical_reduced_word(x)) {
    std::vector<int> next = m;
    for (int j = 0; j < r; ++j) {
      int c = j == s ? 2 : sys.cartan(s, j);
      if (c == 0) continue;
      for (int i = 0; i < r; ++i)
        next[static_cast<std::size_t>(i * r + j)] -= c * m[static_cast<std::size_t>(i * r + s)];
    }
    m = std::move(next);
  }
  return m;
}

int root_matrix_length(const CoxeterSystem& system, std::span<const int> matrix) {
  const int r = system.rank();
  int count = 0;
  std::vector<int> img(static_cast<std::size_t>(r));
  for (const auto& beta : system.positive_roots()) {
    for (int i = 0; i < r; ++i) {
      int acc = 0;
      for (int j = 0; j < r; ++j) acc += matrix[static_cast<std::size_t>(i * r + j)] * beta[static_cast<std::size_t>(j)];
      img[static_cast<std::size_t>(i)] = acc;
    }
    if (root_is_negative(img)) ++count;
  }
  return count;
}

}  // namespace deodhar
