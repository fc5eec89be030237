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

#ifndef LEXBOOT_PATTERNS_H_
#define LEXBOOT_PATTERNS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexboot/corpus.h"
#include "lexboot/lkb.h"
#include "lexboot/relation.h"
#include "lexboot/sketch.h"

namespace lexboot {

// Word lists the patterns consult. Defaults are the built-in lists.
struct PatternConfig {
  std::vector<std::string> transparent_heads = DefaultTransparentHeads();
  std::vector<std::string> portion_heads = DefaultPortionHeads();
  std::vector<std::string> substance_seeds = DefaultSubstanceSeeds();

  static const std::vector<std::string> &DefaultPortionHeads();
  static const std::vector<std::string> &DefaultSubstanceSeeds();
};

enum class UnresolvedReason {
  // An of-PP none of whose candidate relations could be established.
  kRelationAmbiguous,
  // A with-PP with a verb candidate but no INSTRUMENT evidence in the LKB.
  kNoLkbEvidence,
};

std::string_view UnresolvedReasonName(UnresolvedReason reason);

struct UnresolvedSite {
  SenseId entry;
  NodeId node = 0;  // the PP
  std::optional<std::size_t> site_id;
  UnresolvedReason reason = UnresolvedReason::kRelationAmbiguous;
  std::string description;

  bool operator==(const UnresolvedSite &) const = default;
};

// A change of host for one ambiguity site, with the LKB lookup behind it.
struct Reattachment {
  SenseId entry;
  std::size_t site_id = 0;
  SiteKind kind = SiteKind::kPpAttach;
  NodeId movable = 0;
  NodeId from = 0;  // host (PP site) or partner (coordination site) before
  NodeId to = 0;    // and after
  std::size_t to_index = 0;  // candidate index of `to`
  std::string resolver;      // pattern catalog name
  std::string evidence;      // human-readable lookup, e.g. "hook INSTRUMENT catch"

  bool operator==(const Reattachment &) const = default;
};

struct PatternResult {
  std::vector<RelationTriple> triples;
  std::vector<Reattachment> decisions;
  std::vector<UnresolvedSite> unresolved;
  // The sketch the extractors ran on (after any with-PP reattachment).
  Sketch sketch;
};

// Patterns that read only the sketch: genus-hypernym, part-of-literal,
// that-has-part, with-noun-part, for-gerund-instrument. Triples are stamped
// with `pass`.
std::vector<RelationTriple> ExtractStructural(const Sketch &sketch,
                                              std::size_t pass,
                                              const PatternConfig &config);

// Labels the generic of-PP on the genus: PART-OF by LKB evidence, then
// MATERIAL for portion-of-substance, else unresolved. Of-PPs on "part",
// on a transparent genus or with a gerund complement belong to the
// structural patterns and are skipped here.
void ResolveOfPp(const Sketch &sketch, const LkbSnapshot &lkb, std::size_t pass,
                 const PatternConfig &config, PatternResult &out);

// With-PP sites that have a verb candidate, and with-PPs already on a
// verb: if a complement conjunct is an INSTRUMENT of that verb in the LKB,
// moves the PP to the verb and emits INSTRUMENT for every conjunct.
// Updates out.sketch.
void ResolveWithPp(const LkbSnapshot &lkb, std::size_t pass,
                   PatternResult &out);

// Every pattern applicable on `pass`. Pass 1 runs the structural patterns
// and the of-PP resolver (whose LKB conditions cannot hold yet); later
// passes first resolve with-PPs against `lkb`. Duplicate triples are
// dropped, keeping the first.
PatternResult RunPatterns(const Sketch &sketch, const LkbSnapshot &lkb,
                          std::size_t pass, const PatternConfig &config);

// The conjunct nodes under `node` (the node itself unless it is a
// coordination group).
std::vector<NodeId> Conjuncts(const Sketch &sketch, const TreeView &view,
                              NodeId node);

// True when `lemma` is a seed or its HYPERNYM chain in `lkb` reaches one.
bool IsSubstance(const LkbSnapshot &lkb, std::string_view lemma,
                 const std::vector<std::string> &seeds);

}  // namespace lexboot

#endif  // LEXBOOT_PATTERNS_H_
