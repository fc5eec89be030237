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

#ifndef LEXBOOT_TESTS_ORACLE_H_
#define LEXBOOT_TESTS_ORACLE_H_

#include <set>
#include <string>
#include <vector>

#include "lexboot/bootstrap.h"
#include "lexboot/corpus.h"
#include "lexboot/lkb.h"
#include "lexboot/sketch.h"

namespace lexboot::testing {

// Brute-force reference for one entry on pass snapshot.pass_completed()+1.
// Enumerates every attachment configuration of the default sketch, keeps
// the one the evidence predicates select (computed by linear scans of the
// snapshot, not through the LKB indexes or the resolvers), and extracts
// triples from it with the sketch-only patterns, the of-PP resolver and an
// independent with-PP INSTRUMENT check.
struct OracleResult {
  std::vector<std::size_t> choices;
  std::set<TripleKey> triples;
  std::size_t configurations = 0;
};

OracleResult OracleEntry(const DictEntry &entry, const LkbSnapshot &snapshot,
                         const Corpus &corpus, const RunConfig &config);

// Similarity by linear scan over the triple set and the corpus.
int ScanSimilarity(const LkbSnapshot &snapshot, const Corpus &corpus,
                   const std::string &a, const std::string &b,
                   SimilarityWeights weights);

// Multi-pass driver built on OracleEntry. Returns the new-triple count of
// each pass until a pass adds nothing (or max_passes).
std::vector<std::size_t> OracleDeltas(const Corpus &corpus,
                                      const RunConfig &config);

}  // namespace lexboot::testing

#endif  // LEXBOOT_TESTS_ORACLE_H_
