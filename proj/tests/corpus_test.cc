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

#include "lexboot/corpus.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "lexboot/errors.h"

namespace lexboot {
namespace {

Corpus Load(const std::string &text) {
  std::istringstream in(text);
  return LoadCorpus(in);
}

TEST(CorpusTest, LoadsFlowerLine) {
  Corpus c = Load(
      "flower\tn\t1,n,1\tL\tthe part of a plant, often beautiful and colored, "
      "that produces seeds or fruit\n");
  ASSERT_EQ(c.size(), 1u);
  const DictEntry &e = c.entries()[0];
  EXPECT_EQ(e.id.headword, "flower");
  EXPECT_EQ(e.id.pos, Pos::kNoun);
  EXPECT_EQ(e.id.sense_label, "1,n,1");
  EXPECT_EQ(e.id.source, "L");
  EXPECT_EQ(e.id.ToString(), "flower/n L 1,n,1");
}

TEST(CorpusTest, EmptyInput) { EXPECT_TRUE(Load("").empty()); }

TEST(CorpusTest, CommentsAndBlankLinesSkipped) {
  EXPECT_EQ(Load("# note\n\nfish\tn\tn\tL\tan animal\n").size(), 1u);
}

TEST(CorpusTest, WrongFieldCount) {
  try {
    Load("a\tn\tx\n");
    FAIL();
  } catch (const MalformedLine &e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(CorpusTest, BadPos) {
  try {
    Load("# c\nrun\tadj\t1\tL\tto go\n");
    FAIL();
  } catch (const BadPos &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(CorpusTest, VerbCodes) {
  Corpus c = Load("a\tv\t1\tL\tto x\nb\tvi\t1\tL\tto y\nc\tvt\t1\tL\tto z\n");
  for (const DictEntry &e : c.entries()) EXPECT_EQ(e.id.pos, Pos::kVerb);
}

TEST(CorpusTest, DuplicateSense) {
  EXPECT_THROW(Load("a\tn\t1\tL\tx\na\tn\t1\tL\ty\n"), DuplicateSense);
  EXPECT_NO_THROW(Load("a\tn\t1\tL\tx\na\tn\t1\tW\ty\n"));
}

TEST(CorpusTest, HeadwordLowercased) {
  EXPECT_EQ(Load("Plant\tn\t1\tL\ta thing\n").entries()[0].id.headword, "plant");
}

TEST(CorpusTest, LookupInFileOrder) {
  Corpus c = Load("a\tn\t2\tL\tsecond\nb\tn\t1\tL\tother\na\tn\t1\tL\tfirst\n");
  auto hits = c.Lookup("a");
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0]->definition, "second");
  EXPECT_EQ(hits[1]->definition, "first");
  EXPECT_TRUE(c.Lookup("zzz").empty());
}

TEST(CorpusTest, SampleLookup) {
  Corpus c = testing::SampleCorpus();
  EXPECT_EQ(c.size(), 14u);
  auto hits = c.Lookup("plant");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0]->id.sense_label, "2,n,1");
}

TEST(CorpusTest, RoundTripsSampleFile) {
  std::string text = testing::ReadFile(testing::DataPath("samples.tsv"));
  Corpus c = testing::SampleCorpus();
  std::string body;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') body += line + "\n";
  }
  EXPECT_EQ(WriteCorpus(c), body);
}

TEST(CorpusTest, MissingFile) {
  EXPECT_THROW(LoadCorpusFile("/nonexistent/x.tsv"), Error);
}

}  // namespace
}  // namespace lexboot
