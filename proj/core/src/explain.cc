// Copyright 2026 The lexboot Authors.
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

#include "lexboot/explain.h"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "lexboot/errors.h"

namespace lexboot {

SenseSelector ParseSelector(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    parts.push_back(Trim(text.substr(start, slash - start)));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (parts.size() > 3 || parts[0].empty()) {
    throw UnknownSense(std::string(text));
  }
  SenseSelector sel;
  sel.lemma = ToLower(parts[0]);
  if (parts.size() >= 2) {
    if (parts[1] == "n") {
      sel.pos = Pos::kNoun;
    } else if (parts[1] == "v" || parts[1] == "vi" || parts[1] == "vt") {
      sel.pos = Pos::kVerb;
    } else {
      throw UnknownSense(std::string(text));
    }
  }
  if (parts.size() == 3) {
    if (parts[2].empty()) throw UnknownSense(std::string(text));
    sel.sense_label = parts[2];
  }
  return sel;
}

std::vector<const DictEntry *> FindSenses(const Corpus &corpus,
                                          const SenseSelector &selector) {
  std::vector<const DictEntry *> out;
  for (const DictEntry *e : corpus.Lookup(selector.lemma)) {
    if (selector.pos && e->id.pos != *selector.pos) continue;
    if (selector.sense_label && e->id.sense_label != *selector.sense_label) {
      continue;
    }
    out.push_back(e);
  }
  if (out.empty()) {
    std::string text = selector.lemma;
    if (selector.pos) text += "/" + std::string(PosCode(*selector.pos));
    if (selector.sense_label) text += "/" + *selector.sense_label;
    throw UnknownSense(text);
  }
  return out;
}

std::string DescribeDecision(const Sketch &sketch, const Reattachment &r) {
  std::string line = "site " + std::to_string(r.site_id) + " " +
                     std::string(SiteKindName(r.kind)) + ": " +
                     sketch.Label(r.movable) + " " + sketch.Label(r.from) +
                     " -> " + sketch.Label(r.to);
  if (r.kind == SiteKind::kCoordScope) {
    line += " (\"" + sketch.Phrase(r.from) + "\" -> \"" +
            sketch.Phrase(r.to) + "\")";
  }
  line += "; evidence: " + r.evidence;
  return line;
}

namespace {

void Indent(std::ostringstream &out, const std::string &block) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out << "  " << line << '\n';
}

void ExplainEntry(const DictEntry &entry, const Corpus &corpus,
                  const LkbSnapshot &lkb, const RunConfig &config,
                  std::ostringstream &out) {
  out << "sense: " << entry.id.ToString() << '\n';
  out << "definition: " << entry.definition << '\n';

  const std::size_t passes = lkb.pass_completed();
  EntryResult last = ProcessEntry(entry, lkb.Truncated(0), corpus, config);
  out << "default sketch:" << (last.default_sketch.fallback() ? " (fallback)" : "")
      << '\n';
  Indent(out, SerializeSketch(last.default_sketch));

  out << "reattachments:\n";
  std::set<std::tuple<std::size_t, std::size_t>> shown;
  bool any = false;
  for (std::size_t k = 2; k <= passes; ++k) {
    last = ProcessEntry(entry, lkb.Truncated(k - 1), corpus, config);
    for (const Reattachment &r : last.decisions) {
      if (!shown.emplace(r.site_id, r.to_index).second) continue;
      out << "  pass " << k << ": "
          << DescribeDecision(last.default_sketch, r) << '\n';
      any = true;
    }
  }
  if (!any) out << "  (none)\n";

  out << "final sketch:\n";
  Indent(out, SerializeSketch(last.final_sketch));

  out << "triples:\n";
  std::map<std::size_t, std::vector<const RelationTriple *>> by_pass;
  for (const RelationTriple *t : lkb.BySource(entry.id.headword)) {
    if (t->source == entry.id) by_pass[t->pass].push_back(t);
  }
  if (by_pass.empty()) out << "  (none)\n";
  for (const auto &[pass, triples] : by_pass) {
    for (const RelationTriple *t : triples) {
      out << "  pass " << pass << ": " << t->Brief() << " [" << t->pattern
          << "]\n";
    }
  }

  out << "unresolved:\n";
  if (last.unresolved.empty()) out << "  (none)\n";
  for (const UnresolvedSite &u : last.unresolved) {
    out << "  " << UnresolvedReasonName(u.reason) << ": " << u.description
        << '\n';
  }
}

}  // namespace

std::string Explain(const Corpus &corpus, const LkbSnapshot &lkb,
                    std::string_view selector, const RunConfig &config) {
  std::vector<const DictEntry *> entries =
      FindSenses(corpus, ParseSelector(selector));
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << '\n';
    ExplainEntry(*entries[i], corpus, lkb, config, out);
  }
  return out.str();
}

}  // namespace lexboot
