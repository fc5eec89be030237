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

#ifndef LEXBOOT_RELATION_H_
#define LEXBOOT_RELATION_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "lexboot/corpus.h"

namespace lexboot {

// Declared in name order so that enum order equals dump sort order.
enum class RelationLabel {
  kHypernym,
  kInstrument,
  kMaterial,
  kPart,
  kPartOf,
};

std::string_view LabelName(RelationLabel label);
std::optional<RelationLabel> ParseLabel(std::string_view name);

// Pattern catalog. Every triple records which of these produced it.
namespace pattern {
inline constexpr std::string_view kGenusHypernym = "genus-hypernym";
inline constexpr std::string_view kPartOfLiteral = "part-of-literal";
inline constexpr std::string_view kThatHasPart = "that-has-part";
inline constexpr std::string_view kWithNounPart = "with-noun-part";
inline constexpr std::string_view kForGerundInstrument = "for-gerund-instrument";
inline constexpr std::string_view kOfPpResolver = "of-pp-resolver";
inline constexpr std::string_view kWithPpResolver = "with-pp-resolver";
inline constexpr std::string_view kCoordResolver = "coord-resolver";

bool IsKnown(std::string_view name);
}  // namespace pattern

struct RelationTriple {
  SenseId source;
  RelationLabel label = RelationLabel::kHypernym;
  std::string target;
  std::size_t pass = 1;
  std::string pattern;
  // Ambiguity site of the source sketch the triple depends on, if any.
  // Not part of the triple's identity and not stored in the LKB.
  std::optional<std::size_t> site;

  const std::string &source_lemma() const { return source.headword; }

  // "flower PART-OF plant"
  std::string Brief() const;
};

// Identity of a triple in the LKB: (source sense, label, target), ordered
// for dumps by (source lemma, label, target, sense).
struct TripleKey {
  std::string source_lemma;
  RelationLabel label;
  std::string target;
  Pos pos;
  std::string sense_label;
  std::string source;

  static TripleKey Of(const RelationTriple &t);
  auto operator<=>(const TripleKey &) const = default;
  bool operator==(const TripleKey &) const = default;
};

}  // namespace lexboot

#endif  // LEXBOOT_RELATION_H_
