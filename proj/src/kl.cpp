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

#include "deodhar/kl.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "deodhar/errors.hpp"
#include "deodhar/masks.hpp"
#include "prefix_dp.hpp"

namespace deodhar {

namespace {

struct IndexOps {
  using State = GroupTable::Index;
  const GroupTable* table;
  State multiply(State p, int s) const { return table->right(p, s); }
  bool descent(State p, int s) const { return table->is_right_descent(p, s); }
};

Word canonical_word(const GroupTable& g, GroupTable::Index w) { return canonical_reduced_word(g.element(w)); }

std::int64_t mu_coefficient(const QPolynomial& p, int gap) {
  if (gap <= 0 || gap % 2 == 0) return 0;
  return p.coefficient((gap - 1) / 2);
}

// Dense accumulator reused across rows on one thread.
struct Scratch {
  std::vector<std::int64_t> coeffs;
  std::vector<std::uint8_t> touched_flag;
  std::vector<GroupTable::Index> touched;
  std::size_t width = 0;

  void prepare(std::size_t n, std::size_t w) {
    if (touched_flag.size() != n || width != w) {
      width = w;
      coeffs.assign(n * w, 0);
      touched_flag.assign(n, 0);
      touched.clear();
    }
  }
  std::int64_t* slot(GroupTable::Index x) {
    if (!touched_flag[x]) {
      touched_flag[x] = 1;
      touched.push_back(x);
    }
    return &coeffs[static_cast<std::size_t>(x) * width];
  }
};

}  // namespace

// ---- KLTable ------------------------------------------------------------

KLTable::KLTable(std::shared_ptr<const CoxeterSystem> system)
    : group_(std::move(system)), max_degree_(group_.system().longest_length() / 2 + 2), rows_(group_.size()) {
  intern(QPolynomial::constant(1));
}

std::uint32_t KLTable::intern(QPolynomial p) {
  auto it = pool_index_.find(p);
  if (it != pool_index_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(pool_.size());
  pool_.push_back(p);
  pool_index_.emplace(std::move(p), id);
  return id;
}

bool KLTable::has_row(Index w) const {
  std::shared_lock lock(mutex_);
  return rows_[w] != nullptr;
}

std::size_t KLTable::rows_computed() const {
  std::shared_lock lock(mutex_);
  return computed_;
}

void KLTable::ensure_row(Index w) {
  if (has_row(w)) return;
  std::vector<Index> stack{w};
  while (!stack.empty()) {
    Index t = stack.back();
    if (has_row(t)) {
      stack.pop_back();
      continue;
    }
    if (t == 0) {
      Row r;
      r.xs = {0};
      r.polys = {0};
      publish(0, std::move(r), {});
      stack.pop_back();
      continue;
    }
    int s = 0;
    while (!group_.is_right_descent(t, s)) ++s;
    Index v = group_.right(t, s);
    if (!has_row(v)) {
      stack.push_back(v);
      continue;
    }
    std::vector<Index> missing;
    {
      std::shared_lock lock(mutex_);
      for (auto [z, m] : rows_[v]->mus)
        if (group_.is_right_descent(z, s) && !rows_[z]) missing.push_back(z);
    }
    if (!missing.empty()) {
      stack.insert(stack.end(), missing.begin(), missing.end());
      continue;
    }
    compute_row(t, s, v);
    stack.pop_back();
  }
}

void KLTable::compute_row(Index w, int s, Index v) {
  thread_local Scratch scratch;
  const auto width = static_cast<std::size_t>(max_degree_ + 1);
  scratch.prepare(group_.size(), width);
  const int lw = group_.length(w);

  std::vector<QPolynomial> values;
  Row out;
  {
    std::shared_lock lock(mutex_);
    auto add = [&](Index x, const QPolynomial& p, std::size_t shift, std::int64_t c) {
      std::int64_t* dst = scratch.slot(x);
      const auto& cs = p.coefficients();
      if (cs.size() + shift > width) throw std::logic_error("KL accumulator degree bound exceeded");
      for (std::size_t i = 0; i < cs.size(); ++i)
        dst[i + shift] = checked_add(dst[i + shift], checked_mul(c, cs[i]));
    };
    const Row& rv = *rows_[v];
    for (std::size_t i = 0; i < rv.xs.size(); ++i) {
      Index y = rv.xs[i];
      const QPolynomial& p = pool_[rv.polys[i]];
      Index ys = group_.right(y, s);
      std::size_t shift = group_.length(ys) < group_.length(y) ? 1 : 0;
      add(y, p, shift, 1);
      add(ys, p, shift, 1);
    }
    for (auto [z, m] : rv.mus) {
      if (!group_.is_right_descent(z, s)) continue;
      const Row& rz = *rows_[z];
      auto k = static_cast<std::size_t>((lw - group_.length(z)) / 2);
      for (std::size_t i = 0; i < rz.xs.size(); ++i) add(rz.xs[i], pool_[rz.polys[i]], k, -m);
    }
  }

  std::sort(scratch.touched.begin(), scratch.touched.end());
  for (Index x : scratch.touched) {
    std::int64_t* c = &scratch.coeffs[static_cast<std::size_t>(x) * width];
    std::vector<std::int64_t> coeffs(c, c + width);
    std::fill(c, c + width, 0);
    scratch.touched_flag[x] = 0;
    QPolynomial p(std::move(coeffs));
    if (p.is_zero()) continue;
    out.xs.push_back(x);
    if (x != w) {
      std::int64_t m = mu_coefficient(p, lw - group_.length(x));
      if (m != 0) out.mus.emplace_back(x, m);
    }
    values.push_back(std::move(p));
  }
  scratch.touched.clear();
  publish(w, std::move(out), std::move(values));
}

void KLTable::publish(Index w, Row row, std::vector<QPolynomial> values) {
  std::unique_lock lock(mutex_);
  if (rows_[w]) return;
  if (!values.empty()) {
    row.polys.clear();
    row.polys.reserve(values.size());
    for (auto& p : values) row.polys.push_back(intern(std::move(p)));
  }
  rows_[w] = std::make_unique<Row>(std::move(row));
  ++computed_;
}

QPolynomial KLTable::polynomial(Index x, Index w) {
  ensure_row(w);
  std::shared_lock lock(mutex_);
  const Row& r = *rows_[w];
  auto it = std::lower_bound(r.xs.begin(), r.xs.end(), x);
  if (it == r.xs.end() || *it != x) return {};
  return pool_[r.polys[static_cast<std::size_t>(it - r.xs.begin())]];
}

QPolynomial KLTable::polynomial(const Element& x, const Element& w) {
  return polynomial(group_.index_of(x), group_.index_of(w));
}

std::int64_t KLTable::mu(Index x, Index w) {
  return mu_coefficient(polynomial(x, w), group_.length(w) - group_.length(x));
}

std::vector<std::pair<KLTable::Index, QPolynomial>> KLTable::row(Index w) {
  ensure_row(w);
  std::shared_lock lock(mutex_);
  const Row& r = *rows_[w];
  std::vector<std::pair<Index, QPolynomial>> out;
  out.reserve(r.xs.size());
  for (std::size_t i = 0; i < r.xs.size(); ++i) out.emplace_back(r.xs[i], pool_[r.polys[i]]);
  return out;
}

KLTable& kl_table(const CoxeterSystem& system) {
  static std::mutex cache_mutex;
  static std::map<const CoxeterSystem*, std::unique_ptr<KLTable>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[&system];
  // The table holds a reference to the system, so the address is never reused.
  if (!slot) slot = std::make_unique<KLTable>(system.shared_from_this());
  return *slot;
}

QPolynomial kl_recursive(const Element& x, const Element& w) {
  if (&x.system() != &w.system()) throw ConfigurationError("kl_recursive: elements from different systems");
  return kl_table(w.system()).polynomial(x, w);
}

QPolynomial kl_deodhar(const Element& x, const Element& w) {
  if (&x.system() != &w.system()) throw ConfigurationError("kl_deodhar: elements from different systems");
  if (!is_deodhar(w)) throw UnsupportedError("kl_deodhar: " + w.to_string() + " is not a Deodhar element");
  auto polys = deodhar_polynomials(w.system(), canonical_reduced_word(w));
  auto it = polys.find(x);
  return it == polys.end() ? QPolynomial{} : it->second;
}

const char* route_name(MuRoute r) { return r == MuRoute::Deodhar ? "deodhar" : "recursion"; }

MuValue mu_with_route(const Element& x, const Element& w) {
  const int gap = w.length() - x.length();
  if (is_deodhar(w)) return {mu_coefficient(kl_deodhar(x, w), gap), MuRoute::Deodhar};
  return {mu_coefficient(kl_recursive(x, w), gap), MuRoute::Recursion};
}

std::int64_t mu(const Element& x, const Element& w) { return mu_with_route(x, w).value; }

// ---- Verification -------------------------------------------------------

namespace {

struct PerElement {
  bool examined = false;
  bool deodhar = false;
  std::size_t pairs = 0;
  std::size_t by_masks = 0;
  std::size_t by_recursion = 0;
  std::map<std::int64_t, std::size_t> histogram;
  std::vector<MuViolation> violations;
  std::vector<MuDisagreement> disagreements;
};

PerElement check_element(KLTable& table, GroupTable::Index w, bool deodhar_only) {
  const GroupTable& g = table.group();
  PerElement out;
  Word word = canonical_word(g, w);
  IndexOps ops{&g};
  auto best = detail::min_proper_statistic(ops, word, GroupTable::Index{0});
  out.deodhar = !best || *best > 0;
  if (deodhar_only && !out.deodhar) return out;
  out.examined = true;

  auto row = table.row(w);
  std::unordered_map<GroupTable::Index, std::vector<std::int64_t>> masks;
  if (out.deodhar) masks = detail::defect_generating_functions(ops, word, GroupTable::Index{0});

  const int lw = g.length(w);
  for (auto& [x, p] : row) {
    if (x == w) continue;
    ++out.pairs;
    std::int64_t m = mu_coefficient(p, lw - g.length(x));
    if (out.deodhar) {
      ++out.by_masks;
      auto it = masks.find(x);
      QPolynomial by_masks = it == masks.end() ? QPolynomial{} : QPolynomial(it->second);
      if (by_masks != p) out.disagreements.push_back({g.element(x), g.element(w), by_masks, p});
      m = mu_coefficient(by_masks, lw - g.length(x));
    } else {
      ++out.by_recursion;
    }
    ++out.histogram[m];
    if (m > 1) out.violations.push_back({g.element(x), g.element(w), m});
  }
  // Masks reaching elements outside the Bruhat interval would also disagree.
  if (out.deodhar && masks.size() != row.size()) {
    for (auto& [x, coeffs] : masks) {
      bool present = std::binary_search(row.begin(), row.end(), std::pair<GroupTable::Index, QPolynomial>{x, {}},
                                        [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!present) out.disagreements.push_back({g.element(x), g.element(w), QPolynomial(coeffs), {}});
    }
  }
  return out;
}

}  // namespace

MuReport verify_zero_one(const std::shared_ptr<const CoxeterSystem>& system, const VerifyOptions& options) {
  auto start = std::chrono::steady_clock::now();
  KLTable& table = kl_table(*system);
  const GroupTable& g = table.group();

  std::vector<GroupTable::Index> targets;
  for (GroupTable::Index w = 0; w < g.size(); ++w)
    if (!options.max_length || g.length(w) <= *options.max_length) targets.push_back(w);

  std::vector<PerElement> results(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++)
      results[i] = check_element(table, targets[i], options.deodhar_only);
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  MuReport report;
  report.system = system->name();
  report.deodhar_only = options.deodhar_only;
  report.max_length = options.max_length;
  for (auto& r : results) {
    if (r.deodhar) ++report.deodhar_count;
    if (!r.examined) continue;
    ++report.elements_checked;
    report.pairs_checked += r.pairs;
    report.deodhar_route += r.by_masks;
    report.recursion_route += r.by_recursion;
    for (auto [k, n] : r.histogram) report.mu_histogram[k] += n;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
    for (auto& d : r.disagreements) report.disagreements.push_back(std::move(d));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string MuReport::to_text() const {
  std::string out;
  out += "system=" + system + " deodhar_only=" + (deodhar_only ? "true" : "false") +
         " max_length=" + (max_length ? std::to_string(*max_length) : "none") + "\n";
  out += "elements_checked=" + std::to_string(elements_checked) + " pairs_checked=" + std::to_string(pairs_checked) +
         "\n";
  out += "mu_histogram:";
  for (auto [k, n] : mu_histogram) out += " " + std::to_string(k) + "=" + std::to_string(n);
  out += "\n";
  out += "routes: deodhar=" + std::to_string(deodhar_route) + " recursion=" + std::to_string(recursion_route) + "\n";
  for (const auto& v : violations)
    out += "violation: x=" + v.x.to_string() + " w=" + v.w.to_string() + " mu=" + std::to_string(v.mu) + "\n";
  for (const auto& d : disagreements)
    out += "disagreement: x=" + d.x.to_string() + " w=" + d.w.to_string() + " masks=" + d.by_masks.to_string() +
           " recursion=" + d.by_recursion.to_string() + "\n";
  out += "deodhar=" + std::to_string(deodhar_count) + " violations=" + std::to_string(violations.size());
  if (!disagreements.empty()) out += " disagreements=" + std::to_string(disagreements.size());
  out += passed() ? " PASS\n" : " FAIL\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "elapsed=%.3fs\n", elapsed_seconds);
  out += buf;
  return out;
}

std::string MuReport::to_json() const {
  nlohmann::ordered_json j;
  j["system"] = system;
  j["deodhar_only"] = deodhar_only;
  j["max_length"] = max_length ? nlohmann::ordered_json(*max_length) : nlohmann::ordered_json(nullptr);
  j["elements_checked"] = elements_checked;
  j["deodhar_count"] = deodhar_count;
  j["pairs_checked"] = pairs_checked;
  auto& hist = j["mu_histogram"] = nlohmann::ordered_json::object();
  for (auto [k, n] : mu_histogram) hist[std::to_string(k)] = n;
  j["routes"] = {{"deodhar", deodhar_route}, {"recursion", recursion_route}};
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations) vs.push_back({{"x", v.x.to_string()}, {"w", v.w.to_string()}, {"mu", v.mu}});
  auto& ds = j["disagreements"] = nlohmann::ordered_json::array();
  for (const auto& d : disagreements)
    ds.push_back({{"x", d.x.to_string()},
                  {"w", d.w.to_string()},
                  {"masks", d.by_masks.to_string()},
                  {"recursion", d.by_recursion.to_string()}});
  j["result"] = passed() ? "PASS" : "FAIL";
  j["elapsed_seconds"] = elapsed_seconds;
  return j.dump(2);
}

}  // namespace deodhar
