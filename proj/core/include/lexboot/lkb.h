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

#ifndef LEXBOOT_LKB_H_
#define LEXBOOT_LKB_H_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lexboot/corpus.h"
#include "lexboot/relation.h"

namespace lexboot {

// Immutable state of the lexical knowledge base at the end of a pass.
// Copies share storage; nothing ever mutates a snapshot in place.
class LkbSnapshot {
 public:
  LkbSnapshot();

  // 0 for the empty pre-pass-1 state.
  std::size_t pass_completed() const { return data_->pass_completed; }
  std::size_t size() const { return data_->triples.size(); }
  bool empty() const { return data_->triples.empty(); }

  // All triples in dump order.
  const std::map<TripleKey, RelationTriple> &triples() const {
    return data_->triples;
  }

  bool Contains(const TripleKey &key) const;

  // Triples whose source lemma (resp. target) is `lemma`, in dump order.
  std::vector<const RelationTriple *> BySource(std::string_view lemma) const;
  std::vector<const RelationTriple *> ByTarget(std::string_view lemma) const;

  // Sorted, deduplicated targets of `label` across every sense of `lemma`.
  std::vector<std::string> Targets(std::string_view lemma,
                                   RelationLabel label) const;

  // The snapshot as it stood after pass `pass`: triples stamped <= pass.
  LkbSnapshot Truncated(std::size_t pass) const;

  // Triple-set inclusion (ignores pass_completed).
  bool IsSubsetOf(const LkbSnapshot &other) const;

  bool operator==(const LkbSnapshot &other) const;

 private:
  struct Data {
    std::size_t pass_completed = 0;
    std::map<TripleKey, RelationTriple> triples;
    std::map<std::string, std::vector<const RelationTriple *>, std::less<>>
        by_source;
    std::map<std::string, std::vector<const RelationTriple *>, std::less<>>
        by_target;
  };

  LkbSnapshot(std::size_t pass_completed,
              std::map<TripleKey, RelationTriple> triples);

  std::shared_ptr<const Data> data_;

  friend LkbSnapshot Merge(const LkbSnapshot &previous,
                           const std::vector<RelationTriple> &new_triples);
  friend LkbSnapshot Deserialize(std::string_view text);
};

// Returns the successor snapshot: the union of `previous` and `new_triples`
// with pass_completed incremented. Every new triple must be stamped with
// previous.pass_completed() + 1 (BadPassStamp otherwise). Duplicates keep
// the earliest provenance.
LkbSnapshot Merge(const LkbSnapshot &previous,
                  const std::vector<RelationTriple> &new_triples);

struct SimilarityWeights {
  int pair = 2;
  int text = 1;
};

// Relatedness of two lemmas:
//   pair * |shared (label, target) pairs| + text * |shared definition lemmas|
// A lemma's pairs are its own (label, target) pairs plus the inverse view of
// PART / PART-OF triples that name it as target ("plant PART leaf" gives
// leaf the pair (PART-OF, plant)). Definition lemmas are the content lemmas
// of every corpus sense of the lemma. Symmetric.
int Similarity(const LkbSnapshot &snapshot, const Corpus &corpus,
               std::string_view a, std::string_view b,
               SimilarityWeights weights = {});

// Dump format:
//   #lexboot-lkb v1
//   #passes<TAB>N                     (only when N > 0)
//   source_lemma<TAB>pos<TAB>SRC LABEL<TAB>RELATION<TAB>target<TAB>pass<TAB>pattern
inline constexpr std::string_view kLkbHeader = "#lexboot-lkb v1";

std::string Serialize(const LkbSnapshot &snapshot);
std::string SerializeTriple(const RelationTriple &triple);
// Throws ParseError with the offending line number.
LkbSnapshot Deserialize(std::string_view text);
LkbSnapshot LoadLkbFile(const std::string &path);

}  // namespace lexboot

#endif  // LEXBOOT_LKB_H_
