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

#include "lexboot/relation.h"

#include <array>

namespace lexboot {

namespace {

constexpr std::array<std::pair<RelationLabel, std::string_view>, 5> kLabels = {{
    {RelationLabel::kHypernym, "HYPERNYM"},
    {RelationLabel::kInstrument, "INSTRUMENT"},
    {RelationLabel::kMaterial, "MATERIAL"},
    {RelationLabel::kPart, "PART"},
    {RelationLabel::kPartOf, "PART-OF"},
}};

}  // namespace

std::string_view LabelName(RelationLabel label) {
  for (const auto &[l, name] : kLabels) {
    if (l == label) return name;
  }
  return "?";
}

std::optional<RelationLabel> ParseLabel(std::string_view name) {
  for (const auto &[l, n] : kLabels) {
    if (n == name) return l;
  }
  return std::nullopt;
}

namespace pattern {
bool IsKnown(std::string_view name) {
  return name == kGenusHypernym || name == kPartOfLiteral ||
         name == kThatHasPart || name == kWithNounPart ||
         name == kForGerundInstrument || name == kOfPpResolver ||
         name == kWithPpResolver || name == kCoordResolver;
}
}  // namespace pattern

std::string RelationTriple::Brief() const {
  std::string out = source.headword;
  out += ' ';
  out += LabelName(label);
  out += ' ';
  out += target;
  return out;
}

TripleKey TripleKey::Of(const RelationTriple &t) {
  return {t.source.headword, t.label,          t.target,
          t.source.pos,      t.source.sense_label, t.source.source};
}

}  // namespace lexboot
