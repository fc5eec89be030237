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

#include "lexboot/textproc.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lexboot {

namespace {

using WordSet = std::set<std::string, std::less<>>;
using WordMap = std::map<std::string, std::string, std::less<>>;

const WordSet &Determiners() {
  static const WordSet words = {
      "a",     "an",   "the",   "any",   "some",    "its",  "their",
      "his",   "her",  "this",  "these", "those",   "each", "every",
      "several", "another", "no", "our", "your", "such",
  };
  return words;
}

const WordSet &Prepositions() {
  static const WordSet words = {
      "of",     "with",    "for",    "in",      "on",      "at",
      "by",     "from",    "into",   "onto",    "about",   "as",
      "under",  "over",    "through", "without", "between", "like",
      "to",     "near",    "after",  "before",  "during",  "within",
      "around", "against", "upon",   "across",  "along",   "among",
      "behind", "below",   "beneath", "beside", "beyond",  "inside",
      "outside", "toward", "towards",
  };
  return words;
}

// First words of two-word prepositions ending in "to" ("close to").
const WordSet &PrepositionHeads() {
  static const WordSet words = {"close", "equal", "next", "due", "according",
                                "similar"};
  return words;
}

const WordSet &Conjunctions() {
  static const WordSet words = {"and", "or"};
  return words;
}

const WordSet &RelativePronouns() {
  static const WordSet words = {"that", "which", "who", "whom", "whose"};
  return words;
}

// Adverbs and other words that modify but never head a constituent.
const WordSet &Adverbs() {
  static const WordSet words = {
      "often",  "usually", "usu.",   "especially", "esp.",   "sometimes",
      "very",   "only",    "also",   "not",        "always", "rather",
      "quite",  "mainly",  "generally", "typically", "formerly", "e.g.",
      "i.e.",   "fairly",  "commonly",
  };
  return words;
}

const WordSet &FiniteVerbs() {
  static const WordSet words = {"has", "have", "had", "is",  "are",
                                "was", "were", "be",  "been"};
  return words;
}

const WordSet &Adjectives() {
  static const WordSet words = {
      "common",   "wild",     "wide",    "small",   "green",   "large",
      "hard",     "soft",     "great",   "former",  "basic",   "tropical",
      "asian",    "christian", "beautiful", "living", "monetary", "young",
      "long",     "short",    "flat",    "round",   "thin",    "thick",
      "heavy",    "light",    "white",   "black",   "red",     "yellow",
      "brown",    "sharp",    "hollow",  "outer",   "inner",   "various",
      "big",      "little",   "old",     "new",     "high",    "low",
      "deep",     "narrow",   "broad",   "sweet",   "bitter",  "fresh",
      "dry",      "wet",      "warm",    "cold",    "hot",     "bright",
      "dark",     "pale",     "tiny",    "huge",    "main",    "usual",
      "special",  "natural",  "official", "religious", "precious", "valuable",
  };
  return words;
}

// Words ending in -ing that are not verb forms.
const WordSet &IngNouns() {
  static const WordSet words = {
      "thing",   "something", "nothing",  "anything", "everything",
      "king",    "ring",      "spring",   "string",   "wing",
      "sing",    "bring",     "sting",    "swing",    "ceiling",
      "evening", "morning",   "pudding",  "herring",  "lightning",
      "during",  "cling",     "fling",    "sling",    "offspring",
  };
  return words;
}

// Words ending in -ed that are not participles.
const WordSet &EdNouns() {
  static const WordSet words = {
      "bed",  "red",   "seed",  "need",   "reed",    "speed", "weed",
      "breed", "steed", "shed", "sled",   "hundred", "bred",  "fled",
      "shred", "greed", "tweed", "creed", "bleed",   "feed",  "deed",
  };
  return words;
}

const WordMap &IrregularNouns() {
  static const WordMap words = {
      {"leaves", "leaf"},   {"men", "man"},       {"women", "woman"},
      {"teeth", "tooth"},   {"feet", "foot"},     {"geese", "goose"},
      {"mice", "mouse"},    {"children", "child"}, {"knives", "knife"},
      {"wives", "wife"},    {"halves", "half"},   {"loaves", "loaf"},
      {"people", "person"}, {"oxen", "ox"},       {"calves", "calf"},
      {"shelves", "shelf"}, {"wolves", "wolf"},   {"thieves", "thief"},
  };
  return words;
}

const WordMap &IrregularVerbs() {
  static const WordMap words = {
      {"has", "have"},       {"had", "have"},       {"having", "have"},
      {"is", "be"},          {"are", "be"},         {"was", "be"},
      {"were", "be"},        {"been", "be"},        {"being", "be"},
      {"does", "do"},        {"did", "do"},         {"done", "do"},
      {"made", "make"},      {"making", "make"},    {"grew", "grow"},
      {"grown", "grow"},     {"used", "use"},       {"using", "use"},
      {"living", "live"},    {"giving", "give"},    {"taking", "take"},
      {"coming", "come"},    {"producing", "produce"}, {"moving", "move"},
      {"shaping", "shape"},  {"closing", "close"},  {"writing", "write"},
      {"baking", "bake"},    {"carving", "carve"},  {"changing", "change"},
      {"serving", "serve"},  {"storing", "store"},  {"cured", "cure"},
      {"taken", "take"},     {"given", "give"},     {"written", "write"},
  };
  return words;
}

// Stems whose final consonant doubles before -ing/-ed.
const WordMap &DoubledStems() {
  static const WordMap words = {
      {"runn", "run"},   {"digg", "dig"},     {"swimm", "swim"},
      {"cutt", "cut"},   {"sitt", "sit"},     {"gett", "get"},
      {"putt", "put"},   {"stopp", "stop"},   {"shopp", "shop"},
      {"hitt", "hit"},   {"beginn", "begin"}, {"spinn", "spin"},
      {"trapp", "trap"}, {"knitt", "knit"},   {"wrapp", "wrap"},
  };
  return words;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool HasVowel(std::string_view s) {
  return s.find_first_of("aeiouy") != std::string_view::npos;
}

std::string SingularizeOnce(const std::string &w) {
  const WordMap &irregular = IrregularNouns();
  if (auto it = irregular.find(w); it != irregular.end()) return it->second;
  if (w.size() <= 3) return w;
  if (EndsWith(w, "sses")) return w.substr(0, w.size() - 2);
  if (EndsWith(w, "ies") && w.size() > 4) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "xes") || EndsWith(w, "ches") || EndsWith(w, "shes")) {
    return w.substr(0, w.size() - 2);
  }
  if (EndsWith(w, "ss") || EndsWith(w, "us") || EndsWith(w, "is")) return w;
  if (EndsWith(w, "s")) return w.substr(0, w.size() - 1);
  return w;
}

std::string UndoDoubling(const std::string &stem) {
  const WordMap &doubled = DoubledStems();
  if (auto it = doubled.find(stem); it != doubled.end()) return it->second;
  return stem;
}

std::string VerbStemOnce(const std::string &w) {
  const WordMap &irregular = IrregularVerbs();
  if (auto it = irregular.find(w); it != irregular.end()) return it->second;
  if (EndsWith(w, "ing") && w.size() >= 5 && !IngNouns().contains(w)) {
    std::string stem = w.substr(0, w.size() - 3);
    if (stem.size() >= 3 && HasVowel(stem)) return UndoDoubling(stem);
    return w;
  }
  if (EndsWith(w, "ied") && w.size() >= 5) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "ed") && w.size() >= 5 && !EdNouns().contains(w)) {
    std::string stem = w.substr(0, w.size() - 2);
    if (stem.size() < 3 || !HasVowel(stem)) return w;
    std::string undone = UndoDoubling(stem);
    if (undone != stem) return undone;
    char last = stem.back();
    if (last == 'v' || last == 'c' || last == 'z') stem += 'e';
    return stem;
  }
  return SingularizeOnce(w);
}

template <typename Step>
std::string Fixpoint(std::string w, Step step) {
  // Every rule either shortens the word or maps it to a fixed point, so the
  // loop terminates well before the bound.
  for (int i = 0; i < 64; ++i) {
    std::string next = step(w);
    if (next == w) break;
    w = std::move(next);
  }
  return w;
}

bool IsPunctSurface(std::string_view s) {
  if (s == "etc.") return true;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

// Abbreviations that keep their final period.
bool IsAbbreviation(std::string_view s) {
  static const WordSet abbrevs = {"etc.", "usu.", "esp.", "e.g.", "i.e.",
                                  "cf.",  "approx.", "c."};
  return abbrevs.contains(ToLower(s));
}

struct RawToken {
  std::string surface;
  std::size_t begin;
  std::size_t end;
};

void SplitChunk(std::string_view text, std::size_t begin, std::size_t end,
                std::vector<RawToken> *out) {
  // Leading open parentheses.
  while (begin < end && text[begin] == '(') {
    out->push_back({"(", begin, begin + 1});
    ++begin;
  }
  std::vector<RawToken> trailing;
  while (begin < end) {
    std::string_view rest = text.substr(begin, end - begin);
    if (IsAbbreviation(rest)) break;
    if (rest.size() >= 3 && EndsWith(rest, "...")) {
      trailing.push_back({"...", end - 3, end});
      end -= 3;
      continue;
    }
    char c = text[end - 1];
    if (c == ')' || c == ',' || c == ';' || c == ':' || c == '.') {
      trailing.push_back({std::string(1, c), end - 1, end});
      --end;
      continue;
    }
    break;
  }
  if (begin < end) {
    out->push_back({std::string(text.substr(begin, end - begin)), begin, end});
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    out->push_back(*it);
  }
}

Cat BaseCategory(const std::string &w) {
  if (IsPunctSurface(w)) {
    static const WordSet punct = {"(", ")", ",", ";", ":", ".", "...", "etc."};
    return punct.contains(w) ? Cat::kPunct : Cat::kOther;
  }
  if (Determiners().contains(w)) return Cat::kDet;
  if (Prepositions().contains(w)) return Cat::kPrep;
  if (Conjunctions().contains(w)) return Cat::kConj;
  if (RelativePronouns().contains(w)) return Cat::kRelPron;
  if (Adverbs().contains(w)) return Cat::kOther;
  if (FiniteVerbs().contains(w)) return Cat::kVerb;
  if (Adjectives().contains(w)) return Cat::kAdj;
  if (EndsWith(w, "ing") && w.size() >= 5 && !IngNouns().contains(w)) {
    return Cat::kGerund;
  }
  if (EndsWith(w, "ed") && w.size() >= 4 && !EdNouns().contains(w)) {
    return Cat::kAdj;
  }
  return Cat::kNoun;
}

}  // namespace

std::string_view CatName(Cat cat) {
  switch (cat) {
    case Cat::kDet: return "det";
    case Cat::kAdj: return "adj";
    case Cat::kNoun: return "noun";
    case Cat::kVerb: return "verb";
    case Cat::kGerund: return "gerund";
    case Cat::kPrep: return "prep";
    case Cat::kConj: return "conj";
    case Cat::kRelPron: return "rel-pron";
    case Cat::kPunct: return "punct";
    case Cat::kOther: return "other";
  }
  return "other";
}

bool IsContentCat(Cat cat) {
  return cat == Cat::kNoun || cat == Cat::kAdj || cat == Cat::kVerb ||
         cat == Cat::kGerund;
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string Trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string Lemmatize(std::string_view surface, Cat cat) {
  std::string w = ToLower(surface);
  switch (cat) {
    case Cat::kNoun:
      return Fixpoint(std::move(w), SingularizeOnce);
    case Cat::kVerb:
    case Cat::kGerund:
      return Fixpoint(std::move(w), VerbStemOnce);
    default:
      return w;
  }
}

std::vector<Token> Tokenize(std::string_view definition) {
  std::vector<RawToken> raw;
  std::size_t i = 0;
  while (i < definition.size()) {
    while (i < definition.size() &&
           std::isspace(static_cast<unsigned char>(definition[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < definition.size() &&
           !std::isspace(static_cast<unsigned char>(definition[i]))) {
      ++i;
    }
    if (start < i) SplitChunk(definition, start, i, &raw);
  }

  std::vector<Token> tokens;
  tokens.reserve(raw.size());
  for (const RawToken &r : raw) {
    Token t;
    t.surface = r.surface;
    t.begin = r.begin;
    t.end = r.end;
    t.cat = BaseCategory(ToLower(r.surface));
    tokens.push_back(std::move(t));
  }

  // Positional adjustments.
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    std::string lower = ToLower(tokens[k].surface);
    bool next_is_to = k + 1 < tokens.size() &&
                      ToLower(tokens[k + 1].surface) == "to";
    if (next_is_to && PrepositionHeads().contains(lower)) {
      tokens[k].cat = Cat::kPrep;
      continue;
    }
    if (k > 0 && tokens[k - 1].cat == Cat::kRelPron &&
        (tokens[k].cat == Cat::kNoun || tokens[k].cat == Cat::kAdj ||
         tokens[k].cat == Cat::kGerund)) {
      tokens[k].cat = Cat::kVerb;
    }
  }
  // Verb definitions: "to" + verb at the start.
  if (tokens.size() >= 2 && ToLower(tokens[0].surface) == "to" &&
      tokens[1].cat != Cat::kDet && tokens[1].cat != Cat::kPunct) {
    tokens[1].cat = Cat::kVerb;
  }

  for (Token &t : tokens) t.lemma = Lemmatize(t.surface, t.cat);
  return tokens;
}

}  // namespace lexboot
