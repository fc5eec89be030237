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

#ifndef LEXBOOT_SKETCH_H_
#define LEXBOOT_SKETCH_H_

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexboot/corpus.h"
#include "lexboot/textproc.h"

namespace lexboot {

enum class NodeKind {
  kNP,
  kPP,
  kVP,
  kRelClause,
  kPartClause,
  kCoordGroup,
  // Opaque material the patterns never look at: asides, truncated tails,
  // parenthesized notes in noun definitions.
  kTail,
};

std::string_view NodeKindName(NodeKind kind);

using NodeId = std::size_t;
inline constexpr std::size_t kNoToken = std::numeric_limits<std::size_t>::max();

struct SketchNode {
  NodeKind kind = NodeKind::kNP;
  // Head token: noun for NP, preposition for PP, verb for VP/PartClause,
  // relative pronoun for RelClause, conjunction for CoordGroup.
  std::size_t head = kNoToken;
  // Unambiguous attachments, in text order. Movable constituents of
  // ambiguity sites are not listed here; see Sketch::Materialize().
  std::vector<NodeId> children;
  std::string prep;      // PP only; may be two words ("close to")
  std::string rel_word;  // RelClause only
  std::string conj;      // CoordGroup only
  bool optional = false;  // parenthesized object
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // inclusive

  bool operator==(const SketchNode &) const = default;
};

enum class SiteKind { kPpAttach, kCoordScope };
std::string_view SiteKindName(SiteKind kind);

// A constituent with more than one possible host. Candidates are ordered
// nearest-first; `chosen` indexes the current host (0 = closest head).
struct AmbiguitySite {
  std::size_t site_id = 0;
  SiteKind kind = SiteKind::kPpAttach;
  // PP for kPpAttach, the right conjunct NP for kCoordScope.
  NodeId movable = 0;
  std::vector<NodeId> candidates;
  std::size_t chosen = 0;
  // kCoordScope: the CoordGroup node that joins the partner and `movable`.
  NodeId group = 0;

  bool operator==(const AmbiguitySite &) const = default;
};

// A concrete tree: every node's children under the current site choices.
struct TreeView {
  NodeId root = 0;
  std::vector<std::vector<NodeId>> children;
  std::vector<std::optional<NodeId>> parent;
};

class Sketch {
 public:
  Sketch() = default;

  const SenseId &entry() const { return entry_; }
  const std::vector<Token> &tokens() const { return tokens_; }
  const std::vector<SketchNode> &nodes() const { return nodes_; }
  const SketchNode &node(NodeId id) const { return nodes_.at(id); }
  NodeId root() const { return root_; }
  // Head NP of a noun definition, main VP of a verb definition.
  NodeId genus() const { return genus_; }
  const std::vector<AmbiguitySite> &sites() const { return sites_; }
  bool fallback() const { return fallback_; }

  // Lemma of a node's head token ("" for headless nodes).
  const std::string &HeadLemma(NodeId id) const;
  // Surface text covered by a node's own tokens, e.g. "the ground".
  std::string Phrase(NodeId id) const;
  // "NP(ground)", "PP(with)", "CoordGroup(and)".
  std::string Label(NodeId id) const;

  // For "a type of X" style definitions (transparent genus), the of-
  // complement X; otherwise the genus itself.
  NodeId EffectiveGenus(const std::vector<std::string> &transparent_heads) const;

  TreeView Materialize() const;

  // Current choice vector, one entry per site.
  std::vector<std::size_t> Choices() const;

  bool operator==(const Sketch &) const = default;

 private:
  friend class SketchBuilder;
  friend Sketch Reattach(const Sketch &, std::size_t, std::size_t);

  SenseId entry_;
  std::vector<Token> tokens_;
  std::vector<SketchNode> nodes_;
  NodeId root_ = 0;
  NodeId genus_ = 0;
  std::vector<AmbiguitySite> sites_;
  bool fallback_ = false;
};

// The transparent genus nouns whose of-complement supplies the real
// hypernym ("a type of plant"). Shared default for parsing and patterns.
const std::vector<std::string> &DefaultTransparentHeads();

// Builds the default sketch of a definition: deterministic chunking with
// every ambiguous constituent attached to its closest head. If the
// definition does not chunk, returns a flat sketch with fallback() set.
Sketch ParseDefinition(const DictEntry &entry, const std::vector<Token> &tokens,
                       const std::vector<std::string> &transparent_heads =
                           DefaultTransparentHeads());

// Cartesian product of candidate indices over all sites, lexicographic.
std::vector<std::vector<std::size_t>> EnumerateAttachments(const Sketch &sketch);

// Copy of `sketch` with one site's choice changed. Throws NoSuchSite or
// NoSuchCandidate.
Sketch Reattach(const Sketch &sketch, std::size_t site_id,
                std::size_t candidate_index);

// Applies a whole choice vector (one entry per site).
Sketch ApplyChoices(const Sketch &sketch,
                    const std::vector<std::size_t> &choices);

// Indented text, one node per line:
//   NP(type)
//     PP(of)
//       NP(plant)
//         PP(with) [site 0: chosen 0 of 1]
std::string SerializeSketch(const Sketch &sketch);

}  // namespace lexboot

#endif  // LEXBOOT_SKETCH_H_
