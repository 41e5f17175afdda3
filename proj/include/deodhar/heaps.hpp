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

// Heaps of reduced words on the integer lattice: gravity placement,
// coalescing, decorations, string overlays, critical zeros and defect graphs,
// shape and convexity detectors, and the column-1 projection from type D to
// type A.
//
// Entries are identified by their 0-based position in the word. Columns:
// type A s_i and the exceptional generators sit in column label, type B s_i in
// column i, and type D s_1~ shares column 1 with s_1.

#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deodhar/coxeter.hpp"
#include "deodhar/masks.hpp"

namespace deodhar {

int heap_column(const CoxeterSystem& system, int s);

struct HeapEntry {
  int position = 0;
  int generator = 0;
  int column = 0;
  int level = 0;
};

struct Heap {
  const CoxeterSystem* system = nullptr;
  Word word;
  std::vector<HeapEntry> entries;
  /// Cover relations (i, j) of the heap order, sorted.
  std::vector<std::pair<int, int>> covers;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  int max_level() const;
  /// Strict heap order i < j.
  bool precedes(int i, int j) const { return order[static_cast<std::size_t>(i) * size() + static_cast<std::size_t>(j)]; }

  /// Row-major strict order matrix.
  std::vector<std::uint8_t> order;
};

/// Entries dropped left to right, each falling to one above the highest
/// earlier entry it does not commute with. Reducedness is not required.
Heap heap_from_word(const CoxeterSystem& system, const Word& word);

/// Repeatedly lifts a connected component until it is blocked from above.
/// Only levels change.
Heap coalesce(const Heap& heap);

enum class Decoration { MaskOne, PlainZero, ZeroDefect };

struct DecoratedHeap {
  Heap heap;
  Mask mask;
  std::vector<DefectStatus> statuses;
  std::vector<Decoration> decorations;
  int deodhar_statistic = 0;
};

/// Throws PreconditionError on a non-reduced word or a mask length mismatch.
DecoratedHeap decorate(const Heap& heap, const Mask& mask);

struct StringDiagram {
  /// System the strings live in; type B heaps are drawn in type A.
  std::shared_ptr<const CoxeterSystem> system;
  std::vector<int> bottom_labels;
  std::vector<int> top_assignment;
  /// Per string (indexed by starting position), the entries it meets.
  std::vector<std::vector<int>> paths;
  /// Per entry, the strings entering from below at its left/right position.
  std::vector<std::array<int, 2>> strings_at;
  /// Per entry, their signed labels at that point.
  std::vector<std::array<int, 2>> labels_at;
};

/// Throws UnsupportedError for exceptional types.
StringDiagram strings(const DecoratedHeap& decorated);

/// Odd number of crossings of the entry's two strings below it (type A and
/// transported type B), or the signed comparison of the entering labels (type
/// D away from s_1~).
bool defect_by_string_parity(const DecoratedHeap& decorated, int entry);

struct CriticalZeros {
  int lcz = -1;
  int rcz = -1;
  bool self_included = true;
};

/// Last mask-0 entry on each string of the zero-defect d after the strings'
/// most recent crossing below d. Type A only; -1 when no such entry exists.
CriticalZeros critical_zeros(const DecoratedHeap& decorated, int entry);

struct DefectGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, CriticalZeros>> critical;

  bool is_forest() const;
  bool is_tree() const;
  /// For every entry, how many zero-defects it is a critical zero of.
  std::vector<int> critical_counts(std::size_t entries) const;
  /// 1-based positions, e.g. "v={4}, e={}".
  std::string to_string() const;
};

DefectGraph defect_graph(const DecoratedHeap& decorated);

enum class Shape { IShape, ThreeStack, FourStack };
const char* shape_name(Shape s);

/// Translation-invariant match of the shape's lattice points in a coalesced heap.
bool detect_shape(const Heap& heap, Shape shape);

enum class ResolutionClass { Left, Right, Distinct };
const char* resolution_name(ResolutionClass c);

struct MinimalPair {
  int first = 0;
  int second = 0;
  int column = 0;
  std::vector<int> resolution;
  ResolutionClass kind = ResolutionClass::Distinct;
};

struct ConvexityReport {
  Word word;
  std::vector<MinimalPair> pairs;
  bool is_convex = true;
};

/// Consecutive same-generator entries of the heap of the lexicographically
/// first reduced word. Type D convexity ignores column-1 pairs. Types A and D
/// only; throws PreconditionError unless w is short-braid avoiding.
ConvexityReport minimal_pairs_and_convexity(const Element& w);

/// Deletes columns 1..i, i the leftmost column >= 2 with a non-distinct
/// resolution, and returns the product of the remaining letters.
Element strip_nonconvex_prefix(const Element& w);

struct PiProjection {
  std::shared_ptr<const CoxeterSystem> system;
  Word word;
  Mask mask;
  /// Old position -> position in the projected word.
  std::vector<int> position_map;
  /// Positions of the added lower s_2, s_1 and upper s_2.
  std::array<int, 3> added{};
  std::string case_label;
};

/// Type D word of a convex Deodhar element whose coalesced heap has exactly
/// three column-1 entries on three levels and nothing directly northeast of
/// the top one. Throws PreconditionError naming the failed hypothesis.
PiProjection pi_project(const CoxeterSystem& system, const Word& word, const Mask& mask);
PiProjection pi_project(const Element& w, const Mask& mask);

/// One row per level, top first; '#' mask-1, 'o' plain-zero, 'D' zero-defect,
/// '~' after an s_1~ glyph, '.' empty.
std::string render_ascii(const DecoratedHeap& decorated);

}  // namespace deodhar
