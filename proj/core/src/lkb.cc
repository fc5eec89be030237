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

#include "lexboot/lkb.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "lexboot/errors.h"
#include "lexboot/textproc.h"

namespace lexboot {

LkbSnapshot::LkbSnapshot() : LkbSnapshot(0, {}) {}

LkbSnapshot::LkbSnapshot(std::size_t pass_completed,
                         std::map<TripleKey, RelationTriple> triples) {
  auto data = std::make_shared<Data>();
  data->pass_completed = pass_completed;
  data->triples = std::move(triples);
  for (const auto &[key, triple] : data->triples) {
    data->by_source[key.source_lemma].push_back(&triple);
    data->by_target[key.target].push_back(&triple);
  }
  data_ = std::move(data);
}

bool LkbSnapshot::Contains(const TripleKey &key) const {
  return data_->triples.contains(key);
}

std::vector<const RelationTriple *> LkbSnapshot::BySource(
    std::string_view lemma) const {
  auto it = data_->by_source.find(lemma);
  if (it == data_->by_source.end()) return {};
  return it->second;
}

std::vector<const RelationTriple *> LkbSnapshot::ByTarget(
    std::string_view lemma) const {
  auto it = data_->by_target.find(lemma);
  if (it == data_->by_target.end()) return {};
  return it->second;
}

std::vector<std::string> LkbSnapshot::Targets(std::string_view lemma,
                                              RelationLabel label) const {
  std::set<std::string> out;
  for (const RelationTriple *t : BySource(lemma)) {
    if (t->label == label) out.insert(t->target);
  }
  return {out.begin(), out.end()};
}

LkbSnapshot LkbSnapshot::Truncated(std::size_t pass) const {
  std::map<TripleKey, RelationTriple> kept;
  for (const auto &[key, triple] : data_->triples) {
    if (triple.pass <= pass) kept.emplace(key, triple);
  }
  return LkbSnapshot(std::min(pass, pass_completed()), std::move(kept));
}

bool LkbSnapshot::IsSubsetOf(const LkbSnapshot &other) const {
  return std::all_of(data_->triples.begin(), data_->triples.end(),
                     [&](const auto &kv) { return other.Contains(kv.first); });
}

bool LkbSnapshot::operator==(const LkbSnapshot &other) const {
  if (pass_completed() != other.pass_completed()) return false;
  if (size() != other.size()) return false;
  auto a = data_->triples.begin();
  auto b = other.data_->triples.begin();
  for (; a != data_->triples.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    if (a->second.pass != b->second.pass) return false;
    if (a->second.pattern != b->second.pattern) return false;
  }
  return true;
}

LkbSnapshot Merge(const LkbSnapshot &previous,
                  const std::vector<RelationTriple> &new_triples) {
  const std::size_t pass = previous.pass_completed() + 1;
  std::map<TripleKey, RelationTriple> triples = previous.triples();
  for (const RelationTriple &t : new_triples) {
    if (t.pass != pass) throw BadPassStamp(pass, t.pass);
    RelationTriple stored = t;
    stored.site.reset();
    triples.emplace(TripleKey::Of(stored), std::move(stored));
  }
  return LkbSnapshot(pass, std::move(triples));
}

namespace {

using Pair = std::pair<RelationLabel, std::string>;

std::set<Pair> RelationProfile(const LkbSnapshot &snapshot,
                               std::string_view lemma) {
  std::set<Pair> pairs;
  for (const RelationTriple *t : snapshot.BySource(lemma)) {
    pairs.emplace(t->label, t->target);
  }
  for (const RelationTriple *t : snapshot.ByTarget(lemma)) {
    if (t->label == RelationLabel::kPart) {
      pairs.emplace(RelationLabel::kPartOf, t->source_lemma());
    } else if (t->label == RelationLabel::kPartOf) {
      pairs.emplace(RelationLabel::kPart, t->source_lemma());
    }
  }
  return pairs;
}

std::set<std::string> DefinitionLemmas(const Corpus &corpus,
                                       std::string_view lemma) {
  std::set<std::string> lemmas;
  for (const DictEntry *e : corpus.Lookup(lemma)) {
    for (const Token &t : Tokenize(e->definition)) {
      if (IsContentCat(t.cat)) lemmas.insert(t.lemma);
    }
  }
  return lemmas;
}

template <typename T>
int Overlap(const std::set<T> &a, const std::set<T> &b) {
  int n = 0;
  for (const T &x : a) {
    if (b.contains(x)) ++n;
  }
  return n;
}

}  // namespace

int Similarity(const LkbSnapshot &snapshot, const Corpus &corpus,
               std::string_view a, std::string_view b,
               SimilarityWeights weights) {
  int pairs =
      Overlap(RelationProfile(snapshot, a), RelationProfile(snapshot, b));
  int text = Overlap(DefinitionLemmas(corpus, a), DefinitionLemmas(corpus, b));
  return weights.pair * pairs + weights.text * text;
}

std::string SerializeTriple(const RelationTriple &t) {
  std::string line = t.source.headword;
  line += '\t';
  line += PosCode(t.source.pos);
  line += '\t';
  line += t.source.source;
  line += ' ';
  line += t.source.sense_label;
  line += '\t';
  line += LabelName(t.label);
  line += '\t';
  line += t.target;
  line += '\t';
  line += std::to_string(t.pass);
  line += '\t';
  line += t.pattern;
  return line;
}

std::string Serialize(const LkbSnapshot &snapshot) {
  std::string out(kLkbHeader);
  out += '\n';
  if (snapshot.pass_completed() > 0) {
    out += "#passes\t" + std::to_string(snapshot.pass_completed()) + "\n";
  }
  for (const auto &[key, triple] : snapshot.triples()) {
    out += SerializeTriple(triple);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> SplitOn(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t ParseCount(std::string_view s, std::size_t lineno) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(lineno, "bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

LkbSnapshot Deserialize(std::string_view text) {
  std::vector<std::string_view> lines = SplitOn(text, '\n');
  if (lines.empty() || lines[0] != kLkbHeader) {
    throw ParseError(1, "missing header '" + std::string(kLkbHeader) + "'");
  }
  std::size_t passes = 0;
  std::map<TripleKey, RelationTriple> triples;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::vector<std::string_view> f = SplitOn(line, '\t');
      if (f.size() != 2 || f[0] != "#passes") {
        throw ParseError(lineno, "unknown directive");
      }
      passes = ParseCount(f[1], lineno);
      continue;
    }
    std::vector<std::string_view> f = SplitOn(line, '\t');
    if (f.size() != 7) {
      throw ParseError(lineno, "expected 7 tab-separated fields, got " +
                                   std::to_string(f.size()));
    }
    RelationTriple t;
    t.source.headword = std::string(f[0]);
    if (t.source.headword.empty()) throw ParseError(lineno, "empty lemma");
    if (f[1] == "n") {
      t.source.pos = Pos::kNoun;
    } else if (f[1] == "v") {
      t.source.pos = Pos::kVerb;
    } else {
      throw ParseError(lineno, "bad pos '" + std::string(f[1]) + "'");
    }
    std::size_t space = f[2].find(' ');
    if (space == std::string_view::npos || space == 0 ||
        space + 1 == f[2].size()) {
      throw ParseError(lineno, "bad sense field '" + std::string(f[2]) + "'");
    }
    t.source.source = std::string(f[2].substr(0, space));
    t.source.sense_label = std::string(f[2].substr(space + 1));
    std::optional<RelationLabel> label = ParseLabel(f[3]);
    if (!label) {
      throw ParseError(lineno, "unknown relation '" + std::string(f[3]) + "'");
    }
    t.label = *label;
    t.target = std::string(f[4]);
    if (t.target.empty()) throw ParseError(lineno, "empty target");
    t.pass = ParseCount(f[5], lineno);
    if (t.pass == 0) throw ParseError(lineno, "pass must be >= 1");
    if (!pattern::IsKnown(f[6])) {
      throw ParseError(lineno, "unknown pattern '" + std::string(f[6]) + "'");
    }
    t.pattern = std::string(f[6]);
    TripleKey key = TripleKey::Of(t);
    if (!triples.emplace(key, std::move(t)).second) {
      throw ParseError(lineno, "duplicate triple");
    }
  }
  std::size_t max_pass = 0;
  for (const auto &[key, t] : triples) max_pass = std::max(max_pass, t.pass);
  if (passes != 0 && passes < max_pass) {
    throw ParseError(2, "#passes is smaller than a triple's pass stamp");
  }
  return LkbSnapshot(std::max(passes, max_pass), std::move(triples));
}

LkbSnapshot LoadLkbFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open LKB dump '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Deserialize(buf.str());
}

}  // namespace lexboot
