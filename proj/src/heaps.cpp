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

#include "deodhar/heaps.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "deodhar/errors.hpp"

namespace deodhar {

namespace {

bool related(const CoxeterSystem& sys, int s, int t) { return s == t || !sys.commute(s, t); }

// Distinct non-commuting generators on adjacent levels.
bool connected(const Heap& h, const std::vector<int>& level, std::size_t i, std::size_t j) {
  int s = h.entries[i].generator, t = h.entries[j].generator;
  return s != t && !h.system->commute(s, t) && std::abs(level[i] - level[j]) == 1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

std::pair<int, int> column_range(const CoxeterSystem& sys) {
  int lo = INT_MAX, hi = INT_MIN;
  for (int s = 0; s < sys.rank(); ++s) {
    lo = std::min(lo, heap_column(sys, s));
    hi = std::max(hi, heap_column(sys, s));
  }
  return {lo, hi};
}

// Positions (0-based) of the 1-line notation an entry acts on.
std::pair<std::size_t, std::size_t> string_positions(Family f, int s) {
  if (f == Family::D) {
    if (s == 0) return {0, 1};
    return {static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s)};
  }
  return {static_cast<std::size_t>(s), static_cast<std::size_t>(s + 1)};
}

std::shared_ptr<const CoxeterSystem> string_system(const CoxeterSystem& sys) {
  switch (sys.family()) {
    case Family::A:
    case Family::D:
      return sys.shared_from_this();
    case Family::B:
      // Transport s_i -> s_{i+1}: the dense indices coincide.
      return build_system(Family::A, sys.rank());
    default:
      throw UnsupportedError("strings are defined for types A, B and D only");
  }
}

bool same_pair(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  return (a[0] == b[0] && a[1] == b[1]) || (a[0] == b[1] && a[1] == b[0]);
}

}  // namespace

int heap_column(const CoxeterSystem& system, int s) {
  system.check_generator(s);
  switch (system.family()) {
    case Family::B: return s;
    case Family::D: return s == 0 ? 1 : s;
    default: return s + 1;
  }
}

int Heap::max_level() const {
  int m = 0;
  for (const auto& e : entries) m = std::max(m, e.level);
  return m;
}

Heap heap_from_word(const CoxeterSystem& system, const Word& word) {
  system.check_word(word);
  Heap h;
  h.system = &system;
  h.word = word;
  const std::size_t k = word.size();
  h.order.assign(k * k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    int level = 1;
    for (std::size_t i = 0; i < j; ++i) {
      if (!related(system, word[i], word[j])) continue;
      level = std::max(level, h.entries[i].level + 1);
      h.order[i * k + j] = 1;
      for (std::size_t g = 0; g < i; ++g)
        if (h.order[g * k + i]) h.order[g * k + j] = 1;
    }
    h.entries.push_back({static_cast<int>(j), word[j], heap_column(system, word[j]), level});
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!h.order[i * k + j]) continue;
      bool cover = true;
      for (std::size_t g = i + 1; g < j && cover; ++g)
        if (h.order[i * k + g] && h.order[g * k + j]) cover = false;
      if (cover) h.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return h;
}

Heap coalesce(const Heap& heap) {
  Heap h = heap;
  const std::size_t k = h.size();
  std::vector<int> level(k);
  for (std::size_t i = 0; i < k; ++i) level[i] = h.entries[i].level;
  for (;;) {
    UnionFind uf(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (connected(h, level, i, j)) uf.unite(static_cast<int>(i), static_cast<int>(j));
    // Components ordered by lowest level, then lowest position.
    std::map<int, std::pair<int, int>> key;  // root -> (min level, min position)
    for (std::size_t i = 0; i < k; ++i) {
      int r = uf.find(static_cast<int>(i));
      auto [it, fresh] = key.try_emplace(r, level[i], static_cast<int>(i));
      if (!fresh) it->second = std::min(it->second, std::pair<int, int>{level[i], static_cast<int>(i)});
    }
    std::vector<std::pair<std::pair<int, int>, int>> comps;
    for (auto [r, kv] : key) comps.push_back({kv, r});
    std::sort(comps.begin(), comps.end());
    bool moved = false;
    for (auto [kv, r] : comps) {
      int delta = INT_MAX;
      for (auto [a, b] : h.covers)
        if (uf.find(a) == r && uf.find(b) != r)
          delta = std::min(delta, level[static_cast<std::size_t>(b)] - level[static_cast<std::size_t>(a)] - 1);
      if (delta == INT_MAX || delta < 1) continue;
      for (std::size_t i = 0; i < k; ++i)
        if (uf.find(static_cast<int>(i)) == r) level[i] += delta;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  for (std::size_t i = 0; i < k; ++i) h.entries[i].level = level[i];
  return h;
}

DecoratedHeap decorate(const Heap& heap, const Mask& mask) {
  DecoratedHeap d;
  d.heap = heap;
  d.mask = mask;
  DefectProfile p = defect_profile(*heap.system, heap.word, mask);
  d.statuses = p.statuses;
  d.deodhar_statistic = p.deodhar_statistic;
  for (auto st : p.statuses) {
    switch (st) {
      case DefectStatus::PlainZero: d.decorations.push_back(Decoration::PlainZero); break;
      case DefectStatus::ZeroDefect: d.decorations.push_back(Decoration::ZeroDefect); break;
      default: d.decorations.push_back(Decoration::MaskOne); break;
    }
  }
  return d;
}

StringDiagram strings(const DecoratedHeap& decorated) {
  const Heap& h = decorated.heap;
  auto sys = string_system(*h.system);
  const Family f = sys->family();
  const auto n = static_cast<std::size_t>(sys->degree());
  StringDiagram out;
  out.system = sys;
  std::vector<int> at(n), sign(n, 1);
  std::iota(at.begin(), at.end(), 0);
  for (std::size_t p = 0; p < n; ++p) out.bottom_labels.push_back(static_cast<int>(p) + 1);
  out.paths.resize(n);
  for (std::size_t j = 0; j < h.size(); ++j) {
    int s = h.word[j];
    auto [p, q] = string_positions(f, s);
    out.strings_at.push_back({at[p], at[q]});
    out.labels_at.push_back({sign[p] * (at[p] + 1), sign[q] * (at[q] + 1)});
    out.paths[static_cast<std::size_t>(at[p])].push_back(static_cast<int>(j));
    out.paths[static_cast<std::size_t>(at[q])].push_back(static_cast<int>(j));
    if (decorated.mask[j]) {
      std::swap(at[p], at[q]);
      std::swap(sign[p], sign[q]);
      if (f == Family::D && s == 0) {
        sign[p] = -sign[p];
        sign[q] = -sign[q];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) out.top_assignment.push_back(sign[p] * (at[p] + 1));
  return out;
}

bool defect_by_string_parity(const DecoratedHeap& decorated, int entry) {
  const Heap& h = decorated.heap;
  if (entry < 0 || static_cast<std::size_t>(entry) >= h.size()) throw ConfigurationError("entry out of range");
  const Family f = h.system->family();
  if (f == Family::D && h.word[static_cast<std::size_t>(entry)] == 0)
    throw UnsupportedError("string parity is not defined at s1~ entries; use the length test");
  StringDiagram sd = strings(decorated);
  const auto e = static_cast<std::size_t>(entry);
  if (f == Family::D) return sd.labels_at[e][0] > sd.labels_at[e][1];
  int crossings = 0;
  for (std::size_t j = 0; j < e; ++j)
    if (decorated.mask[j] && same_pair(sd.strings_at[j], sd.strings_at[e])) ++crossings;
  return crossings % 2 == 1;
}

CriticalZeros critical_zeros(const DecoratedHeap& decorated, int entry) {
  const Heap& h = decorated.heap;
  if (h.system->family() != Family::A) throw UnsupportedError("critical zeros are defined for type A heaps");
  if (entry < 0 || static_cast<std::size_t>(entry) >= h.size()) throw ConfigurationError("entry out of range");
  const auto d = static_cast<std::size_t>(entry);
  if (decorated.statuses[d] != DefectStatus::ZeroDefect)
    throw PreconditionError("entry " + std::to_string(entry + 1) + " is not a zero-defect");
  StringDiagram sd = strings(decorated);
  const auto& pair = sd.strings_at[d];
  int crossing = -1;
  for (std::size_t j = 0; j < d; ++j)
    if (decorated.mask[j] && same_pair(sd.strings_at[j], pair)) crossing = static_cast<int>(j);
  auto last_zero = [&](int string) {
    int found = -1;
    for (int e : sd.paths[static_cast<std::size_t>(string)])
      if (e > crossing && e < entry && !decorated.mask[static_cast<std::size_t>(e)]) found = e;
    return found;
  };
  CriticalZeros cz;
  if (crossing >= 0) {
    cz.lcz = last_zero(pair[0]);
    cz.rcz = last_zero(pair[1]);
  }
  cz.self_included = true;
  return cz;
}

DefectGraph defect_graph(const DecoratedHeap& decorated) {
  DefectGraph g;
  std::vector<std::set<int>> crit;
  for (std::size_t j = 0; j < decorated.statuses.size(); ++j) {
    if (decorated.statuses[j] != DefectStatus::ZeroDefect) continue;
    CriticalZeros cz = critical_zeros(decorated, static_cast<int>(j));
    g.vertices.push_back(static_cast<int>(j));
    g.critical.emplace_back(static_cast<int>(j), cz);
    std::set<int> c{static_cast<int>(j)};
    if (cz.lcz >= 0) c.insert(cz.lcz);
    if (cz.rcz >= 0) c.insert(cz.rcz);
    crit.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < crit.size(); ++a)
    for (std::size_t b = a + 1; b < crit.size(); ++b)
      if (std::any_of(crit[a].begin(), crit[a].end(), [&](int v) { return crit[b].contains(v); }))
        g.edges.emplace_back(g.vertices[a], g.vertices[b]);
  return g;
}

bool DefectGraph::is_forest() const {
  std::map<int, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  UnionFind uf(vertices.size());
  for (auto [a, b] : edges)
    if (!uf.unite(index[a], index[b])) return false;
  return true;
}

bool DefectGraph::is_tree() const {
  return !vertices.empty() && is_forest() && edges.size() + 1 == vertices.size();
}

std::vector<int> DefectGraph::critical_counts(std::size_t entries) const {
  std::vector<int> counts(entries, 0);
  for (const auto& [d, cz] : critical) {
    std::set<int> c{d};
    if (cz.lcz >= 0) c.insert(cz.lcz);
    if (cz.rcz >= 0) c.insert(cz.rcz);
    for (int v : c) ++counts[static_cast<std::size_t>(v)];
  }
  return counts;
}

std::string DefectGraph::to_string() const {
  std::string out = "v={";
  for (std::size_t i = 0; i < vertices.size(); ++i) out += (i ? "," : "") + std::to_string(vertices[i] + 1);
  out += "}, e={";
  for (std::size_t i = 0; i < edges.size(); ++i)
    out += (i ? "," : "") + std::to_string(edges[i].first + 1) + "-" + std::to_string(edges[i].second + 1);
  return out + "}";
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::IShape: return "I-shape";
    case Shape::ThreeStack: return "3-stack";
    case Shape::FourStack: return "4-stack";
  }
  return "?";
}

bool detect_shape(const Heap& heap, Shape shape) {
  static const std::vector<std::pair<int, int>> ishape{{-1, 0}, {1, 0}, {0, 1}, {0, 3}, {-1, 4}, {1, 4}};
  static const std::vector<std::pair<int, int>> three{{0, 0}, {0, 2}, {0, 4}};
  static const std::vector<std::pair<int, int>> four{{0, 0}, {0, 2}, {0, 4}, {0, 6}};
  const auto& offsets = shape == Shape::IShape ? ishape : shape == Shape::ThreeStack ? three : four;
  std::set<std::pair<int, int>> occupied;
  for (const auto& e : heap.entries) occupied.emplace(e.column, e.level);
  for (const auto& e : heap.entries) {
    int c = e.column - offsets[0].first, y = e.level - offsets[0].second;
    if (std::all_of(offsets.begin(), offsets.end(),
                    [&](auto off) { return occupied.contains({c + off.first, y + off.second}); }))
      return true;
  }
  return false;
}

const char* resolution_name(ResolutionClass c) {
  switch (c) {
    case ResolutionClass::Left: return "left";
    case ResolutionClass::Right: return "right";
    case ResolutionClass::Distinct: return "distinct";
  }
  return "?";
}

ConvexityReport minimal_pairs_and_convexity(const Element& w) {
  const CoxeterSystem& sys = w.system();
  if (sys.family() != Family::A && sys.family() != Family::D)
    throw UnsupportedError("minimal pairs and convexity are defined for types A and D");
  if (!is_short_braid_avoiding(w)) throw PreconditionError(w.to_string() + " is not short-braid avoiding");
  ConvexityReport out;
  out.word = canonical_reduced_word(w);
  Heap h = heap_from_word(sys, out.word);
  const auto k = static_cast<int>(h.size());
  for (int a = 0; a < k; ++a) {
    int s = h.word[static_cast<std::size_t>(a)];
    int c = a + 1;
    while (c < k && h.word[static_cast<std::size_t>(c)] != s) ++c;
    if (c == k) continue;
    MinimalPair mp{a, c, heap_column(sys, s), {}, ResolutionClass::Distinct};
    std::set<int> cols;
    for (int b = a + 1; b < c; ++b)
      if (h.precedes(a, b) && h.precedes(b, c) && !sys.commute(s, h.word[static_cast<std::size_t>(b)])) {
        mp.resolution.push_back(b);
        cols.insert(h.entries[static_cast<std::size_t>(b)].column);
      }
    if (cols.size() == 1 && *cols.begin() == mp.column - 1) mp.kind = ResolutionClass::Left;
    else if (cols.size() == 1 && *cols.begin() == mp.column + 1) mp.kind = ResolutionClass::Right;
    bool counts = sys.family() == Family::A || mp.column >= 2;
    if (counts && mp.kind != ResolutionClass::Distinct) out.is_convex = false;
    out.pairs.push_back(std::move(mp));
  }
  return out;
}

Element strip_nonconvex_prefix(const Element& w) {
  if (w.system().family() != Family::D) throw UnsupportedError("strip_nonconvex_prefix expects a type D element");
  ConvexityReport rep = minimal_pairs_and_convexity(w);
  if (rep.is_convex) throw PreconditionError(w.to_string() + " is convex");
  int col = INT_MAX;
  for (const auto& mp : rep.pairs)
    if (mp.column >= 2 && mp.kind != ResolutionClass::Distinct) col = std::min(col, mp.column);
  const CoxeterSystem& sys = w.system();
  Heap h = heap_from_word(sys, rep.word);
  for (int c = 1; c <= col; ++c) {
    auto n = std::count_if(h.entries.begin(), h.entries.end(), [&](const HeapEntry& e) { return e.column == c; });
    if (n != 2)
      throw PreconditionError("column " + std::to_string(c) + " holds " + std::to_string(n) +
                              " entries; every stripped column must hold exactly two");
  }
  Element out = sys.identity();
  for (const auto& e : h.entries)
    if (e.column > col) out = out.right_multiply(e.generator);
  return out;
}

// ---- Column-1 projection ------------------------------------------------

namespace {

struct PiRule {
  std::array<int, 3> bits;  // lower s_2, s_1, upper s_2
  bool flip_z;
  const char* label;
};

PiRule pi_rule(DefectStatus d, int z_bit, bool meet) {
  switch (d) {
    case DefectStatus::PlainOne:
      return {{1, 1, 1}, false, "d plain-one"};
    case DefectStatus::ZeroDefect:
      if (z_bit) return {{1, 0, 0}, false, "d zero-defect, z mask 1"};
      if (meet) return {{0, 1, 0}, false, "d zero-defect, z mask 0, strings meet at z"};
      return {{1, 0, 1}, true, "d zero-defect, z mask 0, strings do not meet at z"};
    case DefectStatus::PlainZero:
      return {{1, 1, 1}, false, "d plain-zero"};
    case DefectStatus::OneDefect:
      return {{1, 1, 1}, false, "d one-defect"};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PiProjection pi_project(const CoxeterSystem& system, const Word& word, const Mask& mask) {
  if (system.family() != Family::D) throw PreconditionError("pi projection expects a type D word");
  if (word.size() != mask.size()) throw PreconditionError("mask length does not match the word");
  auto [w, reduced] = element_from_word(system, word);
  if (!reduced) throw PreconditionError("word is not reduced");
  if (!is_deodhar(w)) throw PreconditionError("element is not Deodhar");
  if (!minimal_pairs_and_convexity(w).is_convex) throw PreconditionError("element is not convex");
  Heap h = coalesce(heap_from_word(system, word));
  std::vector<int> col1;
  for (const auto& e : h.entries)
    if (e.column == 1) col1.push_back(e.position);
  if (col1.size() != 3) throw PreconditionError("column 1 must hold exactly three entries");
  auto lvl = [&](int e) { return h.entries[static_cast<std::size_t>(e)].level; };
  std::sort(col1.begin(), col1.end(), [&](int a, int b) { return std::pair{lvl(a), a} < std::pair{lvl(b), b}; });
  if (lvl(col1[0]) == lvl(col1[1]) || lvl(col1[1]) == lvl(col1[2]))
    throw PreconditionError("column-1 entries must lie on three distinct levels");
  const int bottom = col1[0], z = col1[1], d = col1[2];
  for (const auto& e : h.entries)
    if (e.column == 2 && e.level == lvl(d) + 1)
      throw PreconditionError("an entry lies directly northeast of the top column-1 entry");

  DecoratedHeap dec = decorate(h, mask);
  StringDiagram sd = strings(dec);
  const bool meet = same_pair(sd.strings_at[static_cast<std::size_t>(d)], sd.strings_at[static_cast<std::size_t>(z)]);
  const int z_bit = mask[static_cast<std::size_t>(z)];
  const PiRule rule = pi_rule(dec.statuses[static_cast<std::size_t>(d)], z_bit, meet);

  PiProjection out;
  out.system = build_system(Family::A, system.rank() + 1);
  out.case_label = rule.label;
  // (key, new-entry rank, old position or -1 - added slot, letter, bit)
  std::vector<std::tuple<int, int, int, int, int>> items;
  for (const auto& e : h.entries) {
    int bit = mask[static_cast<std::size_t>(e.position)];
    if (e.position == z && rule.flip_z) bit = 1 - bit;
    items.emplace_back(2 * e.level, 1, e.position, e.column + 1, bit);
  }
  items.emplace_back(lvl(bottom) + lvl(z), 0, -1, 1, rule.bits[0]);
  items.emplace_back(2 * lvl(z), 0, -2, 0, rule.bits[1]);
  items.emplace_back(lvl(z) + lvl(d), 0, -3, 1, rule.bits[2]);
  std::sort(items.begin(), items.end());
  out.position_map.assign(word.size(), -1);
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [key, rank, old, letter, bit] = items[i];
    out.word.letters.push_back(letter);
    out.mask.bits.push_back(static_cast<std::uint8_t>(bit));
    if (old >= 0) out.position_map[static_cast<std::size_t>(old)] = static_cast<int>(i);
    else out.added[static_cast<std::size_t>(-1 - old)] = static_cast<int>(i);
  }
  return out;
}

PiProjection pi_project(const Element& w, const Mask& mask) {
  return pi_project(w.system(), canonical_reduced_word(w), mask);
}

std::string render_ascii(const DecoratedHeap& decorated) {
  const Heap& h = decorated.heap;
  if (h.empty()) return "";
  auto [lo, hi] = column_range(*h.system);
  const int top = h.max_level();
  const auto ncols = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(top), std::vector<std::string>(ncols));
  for (std::size_t j = 0; j < h.size(); ++j) {
    const auto& e = h.entries[j];
    char glyph = decorated.decorations[j] == Decoration::MaskOne ? '#'
                 : decorated.decorations[j] == Decoration::PlainZero ? 'o' : 'D';
    auto& cell = grid[static_cast<std::size_t>(e.level - 1)][static_cast<std::size_t>(e.column - lo)];
    cell += glyph;
    if (h.system->family() == Family::D && e.generator == 0) cell += '~';
  }
  std::size_t width = 1;
  for (const auto& row : grid)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::string out;
  for (int y = top; y >= 1; --y) {
    const auto& row = grid[static_cast<std::size_t>(y - 1)];
    std::size_t last = 0;
    for (std::size_t c = 0; c < ncols; ++c)
      if (!row[c].empty()) last = c + 1;
    std::string line;
    for (std::size_t c = 0; c < last; ++c) {
      std::string cell = row[c].empty() ? "." : row[c];
      cell.resize(width, ' ');
      if (c) line += ' ';
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace deodhar
