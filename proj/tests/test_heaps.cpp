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
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "deodhar/coxeter.hpp"
#include "deodhar/errors.hpp"
#include "deodhar/heaps.hpp"
#include "deodhar/masks.hpp"
#include "oracles.hpp"

using namespace deodhar;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(DEODHAR_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> levels(const Heap& h) {
  std::vector<int> out;
  for (const auto& e : h.entries) out.push_back(e.level);
  return out;
}

DecoratedHeap decorated(const CoxeterSystem& sys, const std::string& word, const std::string& mask) {
  Word w = sys.parse_word(word);
  return decorate(coalesce(heap_from_word(sys, w)), mask.empty() ? Mask::ones(w.size()) : Mask::parse(mask));
}

// Positions of Example 3.1's labelled zero-defects (0-based).
constexpr int kA = 15, kB = 12, kC = 7, kD = 13, kE = 14;
const char* const kExampleWord = "5 4 6 3 5 7 2 4 6 8 1 3 5 7 2 4 3";
const char* const kExampleMask = "11001110000000001";

}  // namespace

TEST_CASE("gravity placement") {
  auto a5 = build_system(Family::A, 5);
  Heap h = heap_from_word(*a5, a5->parse_word("1 4 2 3 5"));
  CHECK(levels(h) == std::vector{1, 1, 2, 3, 2});
  CHECK(levels(heap_from_word(*a5, Word{2})) == std::vector{1});
  Heap chain = heap_from_word(*a5, a5->parse_word("2 1 2"));
  CHECK(levels(chain) == std::vector{1, 2, 3});
  CHECK(chain.entries[1].column == 1);
  CHECK(chain.precedes(0, 2));
  CHECK(chain.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(heap_from_word(*a5, Word{}).empty());
}

TEST_CASE("coalescing") {
  auto a5 = build_system(Family::A, 5);
  Heap h = coalesce(heap_from_word(*a5, a5->parse_word("1 4 2 3 5")));
  CHECK(levels(h) == std::vector{1, 2, 2, 3, 3});
  CHECK(levels(coalesce(h)) == levels(h));
  CHECK(levels(coalesce(heap_from_word(*a5, a5->parse_word("1 3")))) == std::vector{1, 1});
}

TEST_CASE("heap order is the closure of non-commuting precedence") {
  std::mt19937 rng(7);
  for (auto [f, n] : {std::pair{Family::A, 6}, {Family::D, 5}, {Family::B, 4}, {Family::E, 6}}) {
    auto sys = build_system(f, n);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> letters(12);
      for (auto& s : letters) s = static_cast<int>(rng() % static_cast<unsigned>(sys->rank()));
      Word word(letters);
      Heap raw = heap_from_word(*sys, word);
      Heap h = coalesce(raw);
      std::size_t k = word.size();
      std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) rel[i][j] = word[i] == word[j] || !sys->commute(word[i], word[j]);
      for (std::size_t m = 0; m < k; ++m)
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (rel[i][m] && rel[m][j]) rel[i][j] = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          REQUIRE(raw.precedes(static_cast<int>(i), static_cast<int>(j)) == rel[i][j]);
          REQUIRE(h.precedes(static_cast<int>(i), static_cast<int>(j)) == rel[i][j]);
          if (rel[i][j]) CHECK(h.entries[i].level < h.entries[j].level);
        }
      CHECK(levels(coalesce(h)) == levels(h));
      for (std::size_t i = 0; i < k; ++i) CHECK(h.entries[i].level >= raw.entries[i].level);
    }
  }
}

TEST_CASE("decoration") {
  auto a3 = build_system(Family::A, 3);
  auto all = decorated(*a3, "2 1 3 2", "");
  for (auto d : all.decorations) CHECK(d == Decoration::MaskOne);
  auto one = decorated(*a3, "2 1 3 2", "1000");
  CHECK(one.decorations ==
        std::vector{Decoration::MaskOne, Decoration::PlainZero, Decoration::PlainZero, Decoration::ZeroDefect});
  CHECK(one.deodhar_statistic == 1);
  CHECK_THROWS_AS(decorated(*a3, "1 2 1", "11"), PreconditionError);
  CHECK_THROWS_AS(decorated(*a3, "1 1", "11"), PreconditionError);
}

TEST_CASE("rendering") {
  auto a5 = build_system(Family::A, 5);
  CHECK(render_ascii(decorated(*a5, "1 4 2 3 5", "")) == read_file("heap_a5_14235.txt"));
  CHECK(render_ascii(decorate(heap_from_word(*a5, Word{}), Mask{})) == "");
  auto a3 = build_system(Family::A, 3);
  std::string grid = render_ascii(decorated(*a3, "2 1 3 2", "1000"));
  CHECK(std::count(grid.begin(), grid.end(), 'D') == 1);
  CHECK(std::count(grid.begin(), grid.end(), 'o') == 2);
  auto d4 = build_system(Family::D, 4);
  CHECK(render_ascii(decorated(*d4, "1~ 2 3 1 2 1~ 1", "")) == read_file("heap_d4_strings.txt"));
}

TEST_CASE("string overlays reproduce the figures") {
  auto a3 = build_system(Family::A, 3);
  CHECK(strings(decorated(*a3, "1 2 1", "")).top_assignment == std::vector{3, 2, 1, 4});
  auto a5 = build_system(Family::A, 5);
  auto sd = strings(decorated(*a5, "1 4 2 3 5", ""));
  CHECK(sd.top_assignment == std::vector{2, 3, 5, 1, 6, 4});
  CHECK(sd.bottom_labels == std::vector{1, 2, 3, 4, 5, 6});
  auto d4 = build_system(Family::D, 4);
  CHECK(strings(decorated(*d4, "1~ 2 3 1 2 1~ 1", "")).top_assignment == std::vector{-3, -4, -2, -1});
  auto g2 = build_system(Family::G, 2);
  CHECK_THROWS_AS(strings(decorated(*g2, "1 2", "")), UnsupportedError);
}

TEST_CASE("top labels are the subexpression") {
  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::D, 4}}) {
    auto sys = build_system(f, n);
    std::mt19937 rng(11);
    for (const auto& w : enumerate_elements(*sys)) {
      Word word = oracle::random_reduced_word(w, rng);
      Heap h = coalesce(heap_from_word(*sys, word));
      for (int trial = 0; trial < 8; ++trial) {
        Mask m = oracle::mask_from_bits(rng(), word.size());
        REQUIRE(strings(decorate(h, m)).top_assignment == subexpression(*sys, word, m).one_line());
      }
    }
  }
}

TEST_CASE("defects from string parity") {
  auto a3 = build_system(Family::A, 3);
  CHECK(defect_by_string_parity(decorated(*a3, "2 1 3 2", "1000"), 3));
  CHECK(defect_by_string_parity(decorated(*a3, "2 1 3 2", "1001"), 3));
  auto full = decorated(*a3, "1 3", "");
  CHECK_FALSE(defect_by_string_parity(full, 0));
  CHECK_FALSE(defect_by_string_parity(full, 1));

  for (auto [f, n] : {std::pair{Family::A, 4}, {Family::B, 3}, {Family::D, 4}}) {
    auto sys = build_system(f, n);
    CAPTURE(sys->name());
    for (const auto& w : enumerate_elements(*sys)) {
      if (!is_deodhar(w)) continue;
      Word word = canonical_reduced_word(w);
      Heap h = coalesce(heap_from_word(*sys, word));
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << word.size()); ++b) {
        auto dh = decorate(h, oracle::mask_from_bits(b, word.size()));
        for (std::size_t j = 0; j < word.size(); ++j) {
          if (f == Family::D && word[j] == 0) continue;
          REQUIRE(defect_by_string_parity(dh, static_cast<int>(j)) == is_defect(dh.statuses[j]));
        }
      }
    }
  }
}

TEST_CASE("critical zeros") {
  auto a3 = build_system(Family::A, 3);
  auto dh = decorated(*a3, "2 1 3 2", "1000");
  auto cz = critical_zeros(dh, 3);
  CHECK(cz.lcz == 1);
  CHECK(cz.rcz == 2);
  CHECK(cz.self_included);
  CHECK_THROWS_AS(critical_zeros(dh, 0), PreconditionError);

  auto a8 = build_system(Family::A, 8);
  auto ex = decorated(*a8, kExampleWord, kExampleMask);
  auto b = critical_zeros(ex, kB);
  CHECK(b.lcz == kC);
  CHECK(b.rcz == 8);
  auto a = critical_zeros(ex, kA);
  CHECK(a.lcz == 11);
  CHECK(a.rcz == kB);
}

TEST_CASE("defect graph of the typical mu-mask") {
  auto a8 = build_system(Family::A, 8);
  auto ex = decorated(*a8, kExampleWord, kExampleMask);
  CHECK(ex.deodhar_statistic == 1);
  CHECK(std::count(ex.decorations.begin(), ex.decorations.end(), Decoration::ZeroDefect) == 5);
  CHECK(std::count(ex.decorations.begin(), ex.decorations.end(), Decoration::PlainZero) == 6);
  CHECK(ex.statuses[16] == DefectStatus::PlainOne);
  auto g = defect_graph(ex);
  CHECK(g.vertices == std::vector{kC, kB, kD, kE, kA});
  std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
  auto edge = [](int x, int y) { return std::pair{std::min(x, y), std::max(x, y)}; };
  CHECK(edges == std::set{edge(kE, kA), edge(kA, kB), edge(kB, kC), edge(kB, kD)});
  CHECK(g.is_tree());
  CHECK(g.to_string() == "v={8,13,14,15,16}, e={8-13,13-14,13-16,15-16}");
  auto counts = g.critical_counts(ex.heap.size());
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (ex.statuses[j] == DefectStatus::PlainZero) CHECK(counts[j] >= 1);
}

TEST_CASE("small defect graphs") {
  auto a3 = build_system(Family::A, 3);
  auto none = defect_graph(decorated(*a3, "2 1 3 2", ""));
  CHECK(none.vertices.empty());
  CHECK(none.edges.empty());
  CHECK(none.is_forest());
  auto single = defect_graph(decorated(*a3, "2 1 3 2", "1000"));
  CHECK(single.to_string() == "v={4}, e={}");
  CHECK(single.is_tree());
}

TEST_CASE("defect graphs of Deodhar permutations are forests") {
  auto a5 = build_system(Family::A, 5);
  for (const auto& w : enumerate_elements(*a5)) {
    if (!is_deodhar(w) || w.length() > 9) continue;
    Word word = canonical_reduced_word(w);
    Heap h = coalesce(heap_from_word(*a5, word));
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << word.size()); ++b) {
      auto dh = decorate(h, oracle::mask_from_bits(b, word.size()));
      auto g = defect_graph(dh);
      REQUIRE(g.is_forest());
      for (int c : g.critical_counts(h.size())) REQUIRE(c <= 2);
    }
  }
}

TEST_CASE("shapes") {
  auto a3 = build_system(Family::A, 3);
  auto heap = [&](const std::string& w) { return coalesce(heap_from_word(*a3, a3->parse_word(w))); };
  CHECK(detect_shape(heap("2 1 3 2 1 3 2 1 3 2"), Shape::FourStack));
  CHECK(detect_shape(heap("2 1 3 2 1 3 2 1 3 2"), Shape::ThreeStack));
  CHECK_FALSE(detect_shape(heap("2 1 3 2"), Shape::ThreeStack));
  for (auto s : {Shape::IShape, Shape::ThreeStack, Shape::FourStack}) {
    CHECK_FALSE(detect_shape(heap(""), s));
    CHECK_FALSE(detect_shape(heap("2"), s));
  }
  auto a5 = build_system(Family::A, 5);
  CHECK_FALSE(detect_shape(coalesce(heap_from_word(*a5, a5->parse_word("2 4 3 1 5 2 4 3"))), Shape::IShape));
  CHECK(detect_shape(coalesce(heap_from_word(*a5, a5->parse_word("2 4 1 3 5 2 4 1 3 5 2 4"))), Shape::IShape));
}

TEST_CASE("minimal pairs and convexity") {
  auto a3 = build_system(Family::A, 3);
  auto rep = minimal_pairs_and_convexity(a3->from_one_line(std::vector{3, 4, 1, 2}));
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].column == 2);
  CHECK(rep.pairs[0].kind == ResolutionClass::Distinct);
  CHECK(rep.is_convex);
  auto plain = minimal_pairs_and_convexity(a3->from_one_line(std::vector{2, 3, 4, 1}));
  CHECK(plain.pairs.empty());
  CHECK(plain.is_convex);

  auto d3 = build_system(Family::D, 3);
  Element w = d3->product(d3->parse_word("2 1 1~ 2"));
  auto drep = minimal_pairs_and_convexity(w);
  REQUIRE(drep.pairs.size() == 1);
  CHECK(drep.pairs[0].column == 2);
  CHECK(drep.pairs[0].kind == ResolutionClass::Left);
  CHECK_FALSE(drep.is_convex);
  CHECK(strip_nonconvex_prefix(w).is_identity());
  CHECK_THROWS_AS(strip_nonconvex_prefix(d3->product(d3->parse_word("1~ 2 1"))), PreconditionError);
  CHECK_THROWS_AS(strip_nonconvex_prefix(a3->from_one_line(std::vector{3, 4, 1, 2})), UnsupportedError);
  CHECK_THROWS_AS(minimal_pairs_and_convexity(a3->from_one_line(std::vector{4, 3, 2, 1})), PreconditionError);
}

TEST_CASE("projection hypotheses") {
  auto d4 = build_system(Family::D, 4);
  CHECK_THROWS_AS(pi_project(*d4, d4->parse_word("1~ 2 1"), Mask::ones(3)), PreconditionError);
  auto d3 = build_system(Family::D, 3);
  CHECK_THROWS_AS(pi_project(*d3, d3->parse_word("1 2 1~ 2 1"), Mask::ones(5)), PreconditionError);
  auto a3 = build_system(Family::A, 3);
  CHECK_THROWS_AS(pi_project(*a3, Word{0}, Mask{1}), PreconditionError);
}

TEST_CASE("projection of a plain-one top entry") {
  auto d4 = build_system(Family::D, 4);
  Word word = d4->parse_word("1~ 2 1 3 2 1~");
  Element w = d4->product(word);
  CHECK(w == d4->from_one_line(std::vector{-4, -3, -2, -1}));
  auto p = pi_project(*d4, word, Mask::ones(word.size()));
  CHECK(p.system->name() == "A5");
  CHECK(p.case_label == "d plain-one");
  for (int pos : p.added) CHECK(p.mask[static_cast<std::size_t>(pos)] == 1);
  Element image = p.system->product(p.word);
  CHECK(is_deodhar(image));
  CHECK(defect_profile(*p.system, p.word, p.mask).deodhar_statistic ==
        defect_profile(*d4, word, Mask::ones(word.size())).deodhar_statistic);
}
