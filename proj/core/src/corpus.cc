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

#include "lexboot/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lexboot/errors.h"
#include "lexboot/textproc.h"

namespace lexboot {

std::string_view PosCode(Pos pos) { return pos == Pos::kNoun ? "n" : "v"; }

std::string SenseId::ToString() const {
  std::string out = headword;
  out += '/';
  out += PosCode(pos);
  out += ' ';
  out += source;
  out += ' ';
  out += sense_label;
  return out;
}

Corpus::Corpus(std::vector<DictEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_[entries_[i].id.headword].push_back(i);
  }
}

std::vector<const DictEntry *> Corpus::Lookup(std::string_view lemma) const {
  std::vector<const DictEntry *> out;
  auto it = index_.find(lemma);
  if (it == index_.end()) return out;
  for (std::size_t i : it->second) out.push_back(&entries_[i]);
  return out;
}

namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

Corpus LoadCorpus(std::istream &in) {
  std::vector<DictEntry> entries;
  std::set<SenseId> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() != 5) {
      throw MalformedLine(lineno, "expected 5 tab-separated fields, got " +
                                      std::to_string(fields.size()));
    }
    for (auto &f : fields) f = Trim(f);

    DictEntry entry;
    entry.id.headword = ToLower(fields[0]);
    entry.pos_code = fields[1];
    entry.id.sense_label = fields[2];
    entry.id.source = fields[3];
    entry.definition = fields[4];

    if (entry.id.headword.empty()) throw MalformedLine(lineno, "empty headword");
    if (entry.pos_code == "n") {
      entry.id.pos = Pos::kNoun;
    } else if (entry.pos_code == "v" || entry.pos_code == "vi" ||
               entry.pos_code == "vt") {
      entry.id.pos = Pos::kVerb;
    } else {
      throw BadPos(lineno, entry.pos_code);
    }
    if (entry.id.sense_label.empty()) {
      throw MalformedLine(lineno, "empty sense label");
    }
    if (entry.id.source.empty() ||
        entry.id.source.find(' ') != std::string::npos) {
      throw MalformedLine(lineno, "source tag must be a single word");
    }
    if (entry.definition.empty()) {
      throw MalformedLine(lineno, "empty definition");
    }
    if (!seen.insert(entry.id).second) {
      throw DuplicateSense(lineno, entry.id.ToString());
    }
    entries.push_back(std::move(entry));
  }
  return Corpus(std::move(entries));
}

Corpus LoadCorpusFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dictionary file '" + path + "'");
  return LoadCorpus(in);
}

std::string WriteCorpus(const Corpus &corpus) {
  std::string out;
  for (const DictEntry &e : corpus.entries()) {
    out += e.id.headword;
    out += '\t';
    out += e.pos_code;
    out += '\t';
    out += e.id.sense_label;
    out += '\t';
    out += e.id.source;
    out += '\t';
    out += e.definition;
    out += '\n';
  }
  return out;
}

}  // namespace lexboot
