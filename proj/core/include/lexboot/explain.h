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

#ifndef LEXBOOT_EXPLAIN_H_
#define LEXBOOT_EXPLAIN_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexboot/bootstrap.h"
#include "lexboot/corpus.h"
#include "lexboot/lkb.h"

namespace lexboot {

// "lemma/pos" or "lemma/pos/sense_label", e.g. "plantain/n", "hook/n/1,n,1".
// The pos part is optional too: "plantain".
struct SenseSelector {
  std::string lemma;
  std::optional<Pos> pos;
  std::optional<std::string> sense_label;
};

// Throws UnknownSense on a malformed selector.
SenseSelector ParseSelector(std::string_view text);

// Matching entries in file order; throws UnknownSense if there are none.
std::vector<const DictEntry *> FindSenses(const Corpus &corpus,
                                          const SenseSelector &selector);

// Derivation trace for every sense matching `selector`: the default sketch,
// each reattachment with the pass that made it and its evidence (replayed
// against the snapshot the pass read), the final sketch, the LKB triples of
// the sense by pass and the sites left unresolved.
std::string Explain(const Corpus &corpus, const LkbSnapshot &lkb,
                    std::string_view selector, const RunConfig &config);

// One trace line, e.g.
//   site 0 pp-attach: PP(with) NP(fish) -> VP(catch); evidence: hook INSTRUMENT catch
std::string DescribeDecision(const Sketch &sketch, const Reattachment &r);

}  // namespace lexboot

#endif  // LEXBOOT_EXPLAIN_H_
