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

#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "deodhar/coxeter.hpp"
#include "deodhar/errors.hpp"
#include "oracles.hpp"

using namespace deodhar;

namespace {

Element el(const CoxeterSystem& sys, std::vector<int> v) { return sys.from_one_line(v); }

}  // namespace

TEST_CASE("system construction") {
  auto a2 = build_system(Family::A, 2);
  CHECK(a2->positive_roots().size() == 3);
  CHECK(a2->group_order() == 6);

  auto b4 = build_system(Family::B, 4);
  CHECK(b4->labels() == std::vector<std::string>{"0", "1", "2", "3"});
  CHECK(b4->order(b4->generator("0"), b4->generator("1")) == 4);
  CHECK(b4->order(b4->generator("1"), b4->generator("2")) == 3);

  auto d4 = build_system(Family::D, 4);
  CHECK(d4->labels() == std::vector<std::string>{"1~", "1", "2", "3"});
  CHECK(d4->order(d4->generator("1~"), d4->generator("1")) == 2);
  CHECK(d4->order(d4->generator("1~"), d4->generator("2")) == 3);

  CHECK(build_system(Family::E, 8)->positive_roots().size() == 120);
  CHECK(build_system(Family::F, 4)->positive_roots().size() == 24);
  CHECK(build_system(Family::G, 2)->order(0, 1) == 6);

  CHECK_THROWS_AS(build_system(Family::A, 0), ConfigurationError);
  CHECK_THROWS_AS(build_system(Family::E, 5), ConfigurationError);
  CHECK_THROWS_AS(build_system(Family::G, 3), ConfigurationError);
  CHECK_THROWS_AS(parse_family("Q"), ConfigurationError);
  CHECK_THROWS_AS(d4->generator("4"), ConfigurationError);
}

TEST_CASE("generators act on positions from the right") {
  auto b4 = build_system(Family::B, 4);
  Element w = el(*b4, {-4, 2, -3, 1});
  CHECK(apply_generator(w, 0, Side::Right) == el(*b4, {4, 2, -3, 1}));
  CHECK(apply_generator(w, 1, Side::Right) == el(*b4, {2, -4, -3, 1}));

  auto d4 = build_system(Family::D, 4);
  CHECK(apply_generator(el(*d4, {-4, 2, -3, 1}), 0, Side::Right) == el(*d4, {-2, 4, -3, 1}));

  auto a3 = build_system(Family::A, 3);
  Element x = el(*a3, {3, 1, 4, 2});
  for (int s = 0; s < 3; ++s) {
    CHECK(apply_generator(x, s, Side::Left) == a3->generator_element(s) * x);
    CHECK(apply_generator(x, s, Side::Right) == x * a3->generator_element(s));
  }
}

TEST_CASE("length examples") {
  auto a3 = build_system(Family::A, 3);
  CHECK(a3->identity().length() == 0);
  CHECK(el(*a3, {3, 2, 1, 4}).length() == 3);
  auto d4 = build_system(Family::D, 4);
  Element w = el(*d4, {-3, -4, -2, -1});
  CHECK(w.length() == 7);
  auto [x, reduced] = element_from_word(*d4, d4->parse_word("1~ 2 3 1 2 1~ 1"));
  CHECK(x == w);
  CHECK(reduced);
}

TEST_CASE("lengths and descents agree with breadth-first search") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4},
                      {Family::B, 2}, {Family::D, 3}}) {
    auto sys = build_system(f, n);
    oracle::Lengths len(*sys);
    CAPTURE(sys->name());
    CHECK(len.size() == sys->group_order());
    CHECK(enumerate_elements(*sys).size() == sys->group_order());
    int longest = 0;
    for (const auto& x : len.elements()) {
      REQUIRE(x.length() == len(x));
      longest = std::max(longest, len(x));
      CHECK(root_matrix_length(*sys, root_image_matrix(x)) == len(x));
      CHECK((x * x.inverse()).is_identity());
      CHECK(len(x.inverse()) == len(x));
      for (int s = 0; s < sys->rank(); ++s) {
        CHECK(x.is_right_descent(s) == (len(x.right_multiply(s)) < len(x)));
        CHECK(x.is_left_descent(s) == (len(x.left_multiply(s)) < len(x)));
      }
    }
    CHECK(longest == sys->longest_length());
  }
}

TEST_CASE("descent examples") {
  auto a3 = build_system(Family::A, 3);
  for (int s = 0; s < 3; ++s) CHECK_FALSE(a3->identity().is_right_descent(s));
  CHECK(el(*a3, {3, 2, 1, 4}).is_right_descent(a3->generator("1")));
  auto a2 = build_system(Family::A, 2);
  CHECK_FALSE(el(*a2, {2, 1, 3}).is_right_descent(a2->generator("2")));
}

TEST_CASE("words and elements") {
  auto a3 = build_system(Family::A, 3);
  auto [x, r] = element_from_word(*a3, a3->parse_word("1 2 1"));
  CHECK(x == el(*a3, {3, 2, 1, 4}));
  CHECK(r);
  auto a5 = build_system(Family::A, 5);
  auto [y, ry] = element_from_word(*a5, a5->parse_word("1 4 2 3 5"));
  CHECK(y == el(*a5, {2, 3, 5, 1, 6, 4}));
  CHECK(ry);
  auto a2 = build_system(Family::A, 2);
  auto [z, rz] = element_from_word(*a2, a2->parse_word("1 1"));
  CHECK(z.is_identity());
  CHECK_FALSE(rz);

  auto d4 = build_system(Family::D, 4);
  Word w = d4->parse_word("1~ 2 3 1 2 1~ 1");
  CHECK(d4->format_word(w) == "1~ 2 3 1 2 1~ 1");
  CHECK(w.letters == std::vector<int>{0, 2, 3, 1, 2, 0, 1});
  CHECK(d4->parse_element("id").is_identity());
  CHECK_THROWS_AS(d4->parse_element("1 2 3"), ConfigurationError);
  CHECK_THROWS_AS(d4->parse_element("-1 2 3 4"), ConfigurationError);
  CHECK_THROWS_AS(a3->parse_element("1 1 2 3"), ConfigurationError);
  CHECK_THROWS_AS(a3->parse_element("1 2 x 3"), ConfigurationError);
  CHECK_THROWS_AS(a3->parse_word("1 7"), ConfigurationError);
  CHECK_THROWS_AS(build_system(Family::G, 2)->parse_element("1 2"), ConfigurationError);
  CHECK(el(*a3, {2, 1, 4, 3}).to_string() == "[2,1,4,3]");
  CHECK_THROWS_AS(el(*a3, {2, 1, 4, 3}) * build_system(Family::A, 3)->identity(), ConfigurationError);
}

TEST_CASE("inverse examples") {
  auto a2 = build_system(Family::A, 2);
  CHECK(a2->identity().inverse().is_identity());
  CHECK(el(*a2, {2, 3, 1}).inverse() == el(*a2, {3, 1, 2}));
}

TEST_CASE("reduced word examples") {
  auto a3 = build_system(Family::A, 3);
  auto words = reduced_words(a3->identity());
  REQUIRE(words.size() == 1);
  CHECK(words[0].empty());
  CHECK(reduced_words(el(*a3, {3, 2, 1, 4})) == std::vector<Word>{Word{0, 1, 0}, Word{1, 0, 1}});
  CHECK(reduced_words(el(*a3, {2, 1, 4, 3})) == std::vector<Word>{Word{0, 2}, Word{2, 0}});
  CHECK(reduced_words(el(*a3, {4, 3, 2, 1}), 3).size() == 3);
  CHECK(canonical_reduced_word(el(*a3, {3, 4, 1, 2})) == Word{1, 0, 2, 1});
}

TEST_CASE("reduced words agree with the exhaustive word scan") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::D, 3}, {Family::G, 2}}) {
    auto sys = build_system(f, n);
    oracle::Lengths len(*sys);
    CAPTURE(sys->name());
    for (const auto& x : len.elements()) {
      auto expected = oracle::reduced_words(len, x);
      REQUIRE(reduced_words(x) == expected);
      CHECK(canonical_reduced_word(x) == expected.front());
    }
  }
}

TEST_CASE("bruhat order examples") {
  auto a3 = build_system(Family::A, 3);
  Element w0 = el(*a3, {4, 3, 2, 1});
  for (const auto& x : enumerate_elements(*a3)) CHECK(bruhat_leq(a3->identity(), x));
  CHECK(bruhat_leq(a3->generator_element(a3->generator("2")), el(*a3, {3, 2, 1, 4})));
  CHECK(bruhat_leq(el(*a3, {3, 4, 1, 2}), w0));
  CHECK_FALSE(bruhat_leq(el(*a3, {3, 4, 1, 2}), el(*a3, {4, 2, 3, 1})));
}

TEST_CASE("bruhat order agrees with subword products of the oracle") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::G, 2}, {Family::D, 4}}) {
    auto sys = build_system(f, n);
    oracle::KL ref(*sys);
    CAPTURE(sys->name());
    const auto& els = ref.lengths().elements();
    for (const auto& w : els) {
      auto interval = lower_interval(w);
      std::size_t count = 0;
      for (const auto& x : els) {
        bool leq = ref.leq(x, w);
        REQUIRE(bruhat_leq(x, w) == leq);
        count += leq;
      }
      CHECK(interval.size() == count);
      CHECK(std::is_sorted(interval.begin(), interval.end(), [](const Element& a, const Element& b) {
        return a.length() != b.length() ? a.length() < b.length() : a < b;
      }));
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_elements(*build_system(Family::A, 2)).size() == 6);
  CHECK(enumerate_elements(*build_system(Family::B, 2)).size() == 8);
  CHECK(enumerate_elements(*build_system(Family::D, 3)).size() == 24);
  auto a4 = build_system(Family::A, 4);
  auto els = enumerate_elements(*a4, 2);
  CHECK(els.size() == 1 + 4 + 9);
  CHECK(std::is_sorted(els.begin(), els.end(), [](const Element& a, const Element& b) {
    return a.length() != b.length() ? a.length() < b.length() : a < b;
  }));
  std::size_t streamed = 0;
  for_each_element(*build_system(Family::E, 6), std::nullopt, [&](const Element&) { ++streamed; });
  CHECK(streamed == 51840);
}

TEST_CASE("short-braid avoidance against every reduced word") {
  for (auto [f, n] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::D, 3}}) {
    auto sys = build_system(f, n);
    oracle::Lengths len(*sys);
    std::size_t count = 0;
    for (const auto& x : len.elements()) {
      bool braid = false;
      for (const auto& word : reduced_words(x))
        for (std::size_t i = 0; i + 2 < word.size(); ++i)
          braid |= word[i] == word[i + 2] && !sys->commute(word[i], word[i + 1]);
      CHECK(is_short_braid_avoiding(x) == !braid);
      count += !braid;
    }
    if (f != Family::B) CHECK(count == 14);
  }
}
