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

#include "deodhar/cli.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deodhar/coxeter.hpp"
#include "deodhar/errors.hpp"
#include "deodhar/heaps.hpp"
#include "deodhar/kl.hpp"
#include "deodhar/masks.hpp"

namespace deodhar {
namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string type = "A";
  std::optional<int> rank;
  std::string format = "text";
  std::optional<std::string> w;
  std::optional<std::string> w_word;
  std::optional<std::string> x;
  std::optional<std::string> x_word;
  std::optional<std::string> word;
  std::optional<std::string> mask;
  bool strings = false;
  bool defect_graph = false;
  bool deodhar_only = true;
  std::optional<int> max_length;
  unsigned jobs = 1;
  bool force_long = false;
};

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int max_abs_token(const std::string& text) {
  int best = 0;
  for (auto t : tokens(text)) {
    std::erase(t, '~');
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.erase(0, 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw ConfigurationError("malformed token '" + t + "'");
    best = std::max(best, v);
  }
  return best;
}

// Rank from the inputs when --rank is omitted (classical types only).
int infer_rank(const Options& o, Family family) {
  if (o.rank) return *o.rank;
  if (family != Family::A && family != Family::B && family != Family::D)
    throw ConfigurationError("--rank is required for exceptional types");
  for (const auto* one_line : {&o.w, &o.x}) {
    if (!*one_line || **one_line == "id") continue;
    int n = static_cast<int>(tokens(**one_line).size());
    return family == Family::A ? n - 1 : n;
  }
  int label = 0;
  for (const auto* word : {&o.word, &o.w_word, &o.x_word})
    if (*word) label = std::max(label, max_abs_token(**word));
  if (label == 0) throw ConfigurationError("--rank is required");
  return family == Family::A ? label : label + 1;
}

std::shared_ptr<const CoxeterSystem> make_system(const Options& o) {
  return CoxeterSystem::build(parse_family(o.type), infer_rank(o, parse_family(o.type)));
}

bool is_long(const CoxeterSystem& system) {
  return system.family() == Family::E && system.rank() >= 7;
}

void guard_long(const CoxeterSystem& system, const Options& o) {
  if (is_long(system) && !o.force_long)
    throw ConfigurationError(system.name() + " is beyond desk scale; pass --force-long to run anyway");
}

std::optional<Element> element_input(const CoxeterSystem& system, const std::optional<std::string>& one_line,
                                     const std::optional<std::string>& word, const char* name) {
  if (one_line && word) throw ConfigurationError(std::string("give either --") + name + " or --" + name + "-word");
  if (one_line) return system.parse_element(*one_line);
  if (word) return system.product(system.parse_word(*word));
  return std::nullopt;
}

Element require_element(const CoxeterSystem& system, const std::optional<std::string>& one_line,
                        const std::optional<std::string>& word, const char* name) {
  auto e = element_input(system, one_line, word, name);
  if (!e) throw ConfigurationError(std::string("--") + name + " is required");
  return *e;
}

// Reduced word for commands working on a fixed word: --word, else the
// canonical word of --w.
Word word_input(const CoxeterSystem& system, const Options& o) {
  if (o.word) {
    if (o.w || o.w_word) throw ConfigurationError("give either --word or --w");
    Word word = system.parse_word(*o.word);
    if (!element_from_word(system, word).second) throw PreconditionError("word is not reduced");
    return word;
  }
  return canonical_reduced_word(require_element(system, o.w, o.w_word, "w"));
}

Mask mask_input(const Options& o, std::size_t length) {
  Mask mask = o.mask ? Mask::parse(*o.mask) : Mask::ones(length);
  if (mask.size() != length)
    throw PreconditionError("mask has " + std::to_string(mask.size()) + " bits but the word has " +
                            std::to_string(length) + " letters");
  return mask;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json polynomial_json(const QPolynomial& p) {
  return {{"polynomial", p.to_string()}, {"coefficients", p.coefficients()}};
}

int run_kl(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  guard_long(*system, o);
  Element w = require_element(*system, o.w, o.w_word, "w");
  Element x = require_element(*system, o.x, o.x_word, "x");
  QPolynomial p = kl_recursive(x, w);
  if (o.format == "json") {
    json j{{"command", "kl"}, {"system", system->name()}, {"x", x.to_string()}, {"w", w.to_string()}};
    j.update(polynomial_json(p));
    emit(out, j);
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int run_mu(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  guard_long(*system, o);
  Element w = require_element(*system, o.w, o.w_word, "w");
  Element x = require_element(*system, o.x, o.x_word, "x");
  MuValue m = mu_with_route(x, w);
  if (o.format == "json") {
    emit(out, {{"command", "mu"},
               {"system", system->name()},
               {"x", x.to_string()},
               {"w", w.to_string()},
               {"mu", m.value},
               {"route", route_name(m.route)}});
  } else {
    out << "mu=" << m.value << " route=" << route_name(m.route) << "\n";
  }
  return 0;
}

int run_deodhar(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  Word word = word_input(*system, o);
  Element w = system->product(word);
  bool deodhar = is_deodhar(w);
  bool bounded = is_bounded(*system, word);
  auto min_d = min_proper_statistic(*system, word);
  bool fc = is_short_braid_avoiding(w);
  if (o.format == "json") {
    emit(out, {{"command", "deodhar"},
               {"system", system->name()},
               {"w", w.to_string()},
               {"word", system->format_word(word)},
               {"length", w.length()},
               {"short_braid_avoiding", fc},
               {"word_bounded", bounded},
               {"min_proper_statistic", min_d ? json(*min_d) : json(nullptr)},
               {"deodhar", deodhar}});
  } else {
    out << "w=" << w.to_string() << " length=" << w.length() << "\n";
    out << "word=" << system->format_word(word) << " bounded=" << (bounded ? "true" : "false")
        << " min_proper_D=" << (min_d ? std::to_string(*min_d) : "none") << "\n";
    out << "short_braid_avoiding=" << (fc ? "true" : "false") << "\n";
    out << "deodhar=" << (deodhar ? "true" : "false") << "\n";
  }
  return 0;
}

int run_verify01(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  guard_long(*system, o);
  VerifyOptions options;
  options.deodhar_only = o.deodhar_only;
  options.max_length = o.max_length;
  options.jobs = std::max(1u, o.jobs);
  MuReport report = verify_zero_one(system, options);
  out << (o.format == "json" ? report.to_json() + "\n" : report.to_text());
  return report.passed() ? 0 : 1;
}

const char* decoration_name(Decoration d) {
  switch (d) {
    case Decoration::MaskOne: return "one";
    case Decoration::PlainZero: return "plain-zero";
    case Decoration::ZeroDefect: return "zero-defect";
  }
  return "?";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

int run_heap(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  Word word = word_input(*system, o);
  Mask mask = mask_input(o, word.size());
  DecoratedHeap decorated = decorate(coalesce(heap_from_word(*system, word)), mask);
  std::string picture = render_ascii(decorated);
  std::optional<StringDiagram> diagram;
  if (o.strings) diagram = strings(decorated);
  std::optional<DefectGraph> graph;
  if (o.defect_graph) graph = defect_graph(decorated);

  if (o.format == "json") {
    json j{{"command", "heap"},
           {"system", system->name()},
           {"word", system->format_word(word)},
           {"mask", mask.to_string()},
           {"deodhar_statistic", decorated.deodhar_statistic}};
    json entries = json::array();
    for (std::size_t i = 0; i < decorated.heap.size(); ++i) {
      const auto& e = decorated.heap.entries[i];
      entries.push_back({{"position", e.position + 1},
                         {"generator", std::string(system->label(e.generator))},
                         {"column", e.column},
                         {"level", e.level},
                         {"status", status_name(decorated.statuses[i])},
                         {"decoration", decoration_name(decorated.decorations[i])}});
    }
    j["entries"] = entries;
    json rows = json::array();
    std::istringstream lines(picture);
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    j["render"] = rows;
    if (diagram) j["strings"] = {{"top", diagram->top_assignment}, {"bottom", diagram->bottom_labels}};
    if (graph) {
      json vs = json::array();
      for (int v : graph->vertices) vs.push_back(v + 1);
      json es = json::array();
      for (auto [a, b] : graph->edges) es.push_back({a + 1, b + 1});
      j["defect_graph"] = {{"vertices", vs}, {"edges", es}, {"forest", graph->is_forest()},
                           {"tree", !graph->vertices.empty() && graph->is_tree()}};
    }
    emit(out, j);
    return 0;
  }
  out << picture;
  if (!picture.empty() && picture.back() != '\n') out << "\n";
  if (diagram) {
    out << "top: " << join(diagram->top_assignment) << "\n";
    out << "bottom: " << join(diagram->bottom_labels) << "\n";
  }
  if (graph) out << graph->to_string() << "\n";
  return 0;
}

int run_mumasks(const Options& o, std::ostream& out) {
  auto system = make_system(o);
  Word word = word_input(*system, o);
  Element x = require_element(*system, o.x, o.x_word, "x");
  std::vector<Mask> masks = mu_masks(*system, word, x);
  if (o.format == "json") {
    json ms = json::array();
    for (const auto& m : masks) ms.push_back(m.to_string());
    emit(out, {{"command", "mumasks"},
               {"system", system->name()},
               {"word", system->format_word(word)},
               {"x", x.to_string()},
               {"masks", ms},
               {"mu", masks.size()}});
  } else {
    for (const auto& m : masks) out << m.to_string() << "\n";
    out << "mu=" << masks.size() << "\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Family: A, B, D, E, F or G")->capture_default_str();
  cmd->add_option("--rank", o.rank, "Rank (inferred for classical types when omitted)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void add_w(CLI::App* cmd, Options& o) {
  cmd->add_option("--w", o.w, "Element in 1-line notation, or \"id\"");
  cmd->add_option("--w-word", o.w_word, "Element as a word of generator labels");
}

void add_x(CLI::App* cmd, Options& o) {
  cmd->add_option("--x", o.x, "Element in 1-line notation, or \"id\"");
  cmd->add_option("--x-word", o.x_word, "Element as a word of generator labels");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Kazhdan-Lusztig polynomials and mu-coefficients of Deodhar elements", "deodhar"};
  app.require_subcommand(1);

  auto* kl = app.add_subcommand("kl", "Print P_{x,w}");
  add_common(kl, o);
  add_w(kl, o);
  add_x(kl, o);
  kl->add_flag("--force-long", o.force_long, "Allow E7 and E8");

  auto* mu_cmd = app.add_subcommand("mu", "Print mu(x,w) and the route used");
  add_common(mu_cmd, o);
  add_w(mu_cmd, o);
  add_x(mu_cmd, o);
  mu_cmd->add_flag("--force-long", o.force_long, "Allow E7 and E8");

  auto* deodhar_cmd = app.add_subcommand("deodhar", "Classify an element");
  add_common(deodhar_cmd, o);
  add_w(deodhar_cmd, o);
  deodhar_cmd->add_option("--word", o.word, "Reduced word of generator labels");

  auto* verify = app.add_subcommand("verify01", "Check mu in {0,1} over a whole group");
  add_common(verify, o);
  verify->add_option("--deodhar-only", o.deodhar_only, "Restrict w to Deodhar elements")->capture_default_str();
  verify->add_option("--max-length", o.max_length, "Only w up to this length");
  verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--force-long", o.force_long, "Allow E7 and E8");

  auto* heap = app.add_subcommand("heap", "Draw the coalesced decorated heap");
  add_common(heap, o);
  add_w(heap, o);
  heap->add_option("--word", o.word, "Reduced word of generator labels");
  heap->add_option("--mask", o.mask, "Mask bits, e.g. 1000 (default all ones)");
  heap->add_flag("--strings", o.strings, "Append top and bottom string labels");
  heap->add_flag("--defect-graph", o.defect_graph, "Append the defect graph");

  auto* mumasks = app.add_subcommand("mumasks", "List the masks witnessing mu(x,w)");
  add_common(mumasks, o);
  add_w(mumasks, o);
  add_x(mumasks, o);
  mumasks->add_option("--word", o.word, "Reduced word of generator labels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*kl) return run_kl(o, out);
    if (*mu_cmd) return run_mu(o, out);
    if (*deodhar_cmd) return run_deodhar(o, out);
    if (*verify) return run_verify01(o, out);
    if (*heap) return run_heap(o, out);
    if (*mumasks) return run_mumasks(o, out);
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace deodhar
