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

#ifndef LEXBOOT_BOOTSTRAP_H_
#define LEXBOOT_BOOTSTRAP_H_

#include <cstddef>
#include <vector>

#include "lexboot/corpus.h"
#include "lexboot/lkb.h"
#include "lexboot/patterns.h"
#include "lexboot/sketch.h"

namespace lexboot {

struct RunConfig {
  std::size_t max_passes = 5;
  SimilarityWeights weights;
  PatternConfig patterns;
  bool emit_unresolved = true;

  // Throws Error if max_passes is 0 or a weight is negative.
  void Validate() const;
};

struct PassReport {
  std::size_t pass = 0;
  std::size_t new_triples = 0;
  std::size_t reattachments = 0;
  // Decisions not made, or made differently, on the previous pass.
  std::size_t reattachment_changes = 0;
  std::vector<UnresolvedSite> unresolved;
  std::vector<SenseId> fallback_entries;
  std::vector<Reattachment> decisions;
  // The triples this pass added to the LKB, in dump order.
  std::vector<RelationTriple> delta;
};

struct EntryResult {
  Sketch default_sketch;
  Sketch final_sketch;
  std::vector<RelationTriple> triples;
  std::vector<Reattachment> decisions;
  std::vector<UnresolvedSite> unresolved;
};

// Picks, for each coordination site, the partner whose head is most similar
// to the movable conjunct's head. Only a strictly better score moves the
// site; ties keep the current choice. Applies the decisions to `sketch`.
std::vector<Reattachment> ResolveCoordination(Sketch &sketch,
                                              const LkbSnapshot &snapshot,
                                              const Corpus &corpus,
                                              const RunConfig &config);

// One entry on pass snapshot.pass_completed() + 1.
EntryResult ProcessEntry(const DictEntry &entry, const LkbSnapshot &snapshot,
                         const Corpus &corpus, const RunConfig &config);

struct PassOutcome {
  LkbSnapshot snapshot;
  PassReport report;
};

// Runs pass k = snapshot.pass_completed() + 1 over the whole corpus. Every
// LKB read sees `snapshot` only; new triples are merged at the end.
// `previous` (may be null) is the report of pass k - 1, used to count
// reattachment changes.
PassOutcome RunPass(const Corpus &corpus, const LkbSnapshot &snapshot,
                    const RunConfig &config,
                    const PassReport *previous = nullptr);

struct RunOutcome {
  LkbSnapshot snapshot;
  std::vector<PassReport> reports;
  // False when max_passes ran out before a quiet pass.
  bool converged = false;
};

// Runs exactly `passes` passes.
RunOutcome RunPasses(const Corpus &corpus, std::size_t passes,
                     const RunConfig &config);

// Runs passes until one adds no triples and changes no reattachment, or
// config.max_passes is reached.
RunOutcome RunUntilConverged(const Corpus &corpus, const RunConfig &config);

}  // namespace lexboot

#endif  // LEXBOOT_BOOTSTRAP_H_
