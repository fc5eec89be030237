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

#ifndef LEXBOOT_TEXTPROC_H_
#define LEXBOOT_TEXTPROC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexboot {

// Coarse word categories of the definition sublanguage.
enum class Cat {
  kDet,
  kAdj,
  kNoun,
  kVerb,
  kGerund,
  kPrep,
  kConj,
  kRelPron,
  kPunct,
  kOther,
};

std::string_view CatName(Cat cat);

struct Token {
  std::string surface;
  std::string lemma;
  Cat cat = Cat::kOther;
  // Byte offsets [begin, end) into the definition text.
  std::size_t begin = 0;
  std::size_t end = 0;

  bool IsWord() const { return cat != Cat::kPunct; }
  bool operator==(const Token &) const = default;
};

// Splits a definition into tagged, lemmatized tokens. Parentheses, commas,
// semicolons, colons and a final period are separate tokens; "etc." and
// "..." are punctuation tokens; "usu." and similar abbreviations are kept
// whole. Every input tokenizes.
std::vector<Token> Tokenize(std::string_view definition);

// Rule-based reduction to a lemma: plural nouns to singular, -ing/-ed and
// third-person forms to the verb stem. Other categories are lowercased.
// Idempotent for every input and category.
std::string Lemmatize(std::string_view surface, Cat cat);

// Word categories that carry content (used by the similarity text term).
bool IsContentCat(Cat cat);

std::string ToLower(std::string_view s);
std::string Trim(std::string_view s);

}  // namespace lexboot

#endif  // LEXBOOT_TEXTPROC_H_
