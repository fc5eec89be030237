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

#ifndef LEXBOOT_CORPUS_H_
#define LEXBOOT_CORPUS_H_

#include <compare>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lexboot {

enum class Pos { kNoun, kVerb };

// Short code used in dumps and selectors: "n" or "v".
std::string_view PosCode(Pos pos);

// One dictionary sense, e.g. flower (L 1,n,1).
struct SenseId {
  std::string headword;
  Pos pos = Pos::kNoun;
  std::string sense_label;
  std::string source;

  // Citation form used in reports: "flower/n L 1,n,1".
  std::string ToString() const;

  auto operator<=>(const SenseId &) const = default;
  bool operator==(const SenseId &) const = default;
};

struct DictEntry {
  SenseId id;
  // Raw pos code from the input file (n, v, vi, vt); kept for round-trips.
  std::string pos_code;
  std::string definition;
};

// An immutable, validated dictionary. Entries keep file order.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<DictEntry> entries);

  const std::vector<DictEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // All senses of a lemma, in file order.
  std::vector<const DictEntry *> Lookup(std::string_view lemma) const;

 private:
  std::vector<DictEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> index_;
};

// Parses the tab-separated dictionary format:
//   headword<TAB>pos<TAB>sense_label<TAB>source<TAB>definition
// '#' lines and blank lines are skipped. Headwords are lowercased, every
// field is trimmed of surrounding whitespace, definitions are otherwise
// verbatim. Throws MalformedLine, BadPos or DuplicateSense.
Corpus LoadCorpus(std::istream &in);
Corpus LoadCorpusFile(const std::string &path);

// Writes the corpus back in the input format, one "\n"-terminated line per
// entry. Comments and blank lines are not preserved.
std::string WriteCorpus(const Corpus &corpus);

}  // namespace lexboot

#endif  // LEXBOOT_CORPUS_H_
