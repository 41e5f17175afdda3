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

// Kazhdan-Lusztig polynomials by the standard recursion and by Deodhar's
// mask generating function, mu-coefficients, and the whole-group 0-1 sweep.

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "deodhar/coxeter.hpp"
#include "deodhar/group_table.hpp"
#include "deodhar/polynomial.hpp"

namespace deodhar {

/// Memoized P_{x,w} for one finite group. Rows P_{.,w} are computed on demand
/// and never change once published; all public members are thread-safe.
class KLTable {
 public:
  using Index = GroupTable::Index;

  explicit KLTable(std::shared_ptr<const CoxeterSystem> system);

  const GroupTable& group() const { return group_; }

  QPolynomial polynomial(Index x, Index w);
  QPolynomial polynomial(const Element& x, const Element& w);
  /// Coefficient of q^{(l(w)-l(x)-1)/2}; 0 unless x < w with odd length gap.
  std::int64_t mu(Index x, Index w);

  /// Every (x, P_{x,w}) with x <= w, sorted by x.
  std::vector<std::pair<Index, QPolynomial>> row(Index w);
  std::size_t rows_computed() const;

 private:
  struct Row {
    std::vector<Index> xs;
    std::vector<std::uint32_t> polys;
    std::vector<std::pair<Index, std::int64_t>> mus;
  };

  void ensure_row(Index w);
  bool has_row(Index w) const;
  // P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v} - sum mu(z,v) q^{(l(w)-l(z))/2} P_{x,z},
  // v = ws, c = [xs < x], over z < v with zs < z.
  void compute_row(Index w, int s, Index v);
  void publish(Index w, Row row, std::vector<QPolynomial> values);
  std::uint32_t intern(QPolynomial p);

  GroupTable group_;
  int max_degree_;
  mutable std::shared_mutex mutex_;
  std::vector<std::unique_ptr<Row>> rows_;
  std::deque<QPolynomial> pool_;
  std::map<QPolynomial, std::uint32_t> pool_index_;
  std::size_t computed_ = 0;
};

/// Shared table for x's system, built on first use and kept for the process.
KLTable& kl_table(const CoxeterSystem& system);

/// P_{x,w} by recursion on the smallest right descent of w.
QPolynomial kl_recursive(const Element& x, const Element& w);

/// Sum of q^{d(sigma)} over masks on the lexicographically first reduced word
/// of w with subexpression x. Throws UnsupportedError unless w is Deodhar.
QPolynomial kl_deodhar(const Element& x, const Element& w);

enum class MuRoute { Deodhar, Recursion };
const char* route_name(MuRoute r);

struct MuValue {
  std::int64_t value = 0;
  MuRoute route = MuRoute::Recursion;
};

/// Deodhar route for Deodhar w, recursion otherwise.
MuValue mu_with_route(const Element& x, const Element& w);
std::int64_t mu(const Element& x, const Element& w);

struct VerifyOptions {
  bool deodhar_only = true;
  std::optional<int> max_length;
  unsigned jobs = 1;
};

struct MuViolation {
  Element x;
  Element w;
  std::int64_t mu = 0;
};

/// Pair where the mask generating function and the recursion differ.
struct MuDisagreement {
  Element x;
  Element w;
  QPolynomial by_masks;
  QPolynomial by_recursion;
};

struct MuReport {
  std::string system;
  bool deodhar_only = true;
  std::optional<int> max_length;
  std::size_t elements_checked = 0;
  std::size_t deodhar_count = 0;
  std::size_t pairs_checked = 0;
  std::map<std::int64_t, std::size_t> mu_histogram;
  std::size_t deodhar_route = 0;
  std::size_t recursion_route = 0;
  std::vector<MuViolation> violations;
  std::vector<MuDisagreement> disagreements;
  double elapsed_seconds = 0;

  bool passed() const { return violations.empty() && disagreements.empty(); }
  /// Key/value lines; the final line carries the elapsed time.
  std::string to_text() const;
  std::string to_json() const;
};

/// For every w (Deodhar only by default) and every x < w, computes mu both
/// from the masks of w and from the recursion and records values above 1 and
/// any disagreement. Output is independent of jobs.
MuReport verify_zero_one(const std::shared_ptr<const CoxeterSystem>& system, const VerifyOptions& options = {});

}  // namespace deodhar
