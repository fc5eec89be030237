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

#include "lexboot/sketch.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "lexboot/errors.h"

namespace lexboot {
namespace {

Sketch Parse(const std::string &lemma) {
  static const Corpus corpus = testing::SampleCorpus();
  const DictEntry *e = corpus.Lookup(lemma).at(0);
  return ParseDefinition(*e, Tokenize(e->definition));
}

Sketch ParseText(const std::string &definition, Pos pos = Pos::kNoun) {
  DictEntry e;
  e.id = {"x", pos, "1", "L"};
  e.definition = definition;
  return ParseDefinition(e, Tokenize(definition));
}

std::vector<std::string> Labels(const Sketch &s, const std::vector<NodeId> &ids) {
  std::vector<std::string> out;
  for (NodeId id : ids) out.push_back(s.Label(id));
  return out;
}

TEST(SketchTest, MinimalNoun) {
  Sketch s = ParseText("a plant");
  EXPECT_FALSE(s.fallback());
  EXPECT_EQ(s.HeadLemma(s.genus()), "plant");
  EXPECT_TRUE(s.sites().empty());
}

TEST(SketchTest, PlantainDefault) {
  Sketch s = Parse("plantain");
  ASSERT_EQ(s.sites().size(), 2u);
  const AmbiguitySite &with = s.sites()[0];
  EXPECT_EQ(with.kind, SiteKind::kPpAttach);
  EXPECT_EQ(Labels(s, with.candidates), std::vector<std::string>{"NP(plant)"});
  const AmbiguitySite &coord = s.sites()[1];
  EXPECT_EQ(coord.kind, SiteKind::kCoordScope);
  EXPECT_EQ(s.Label(coord.movable), "NP(flower)");
  EXPECT_EQ(Labels(s, coord.candidates),
            (std::vector<std::string>{"NP(ground)", "NP(leaf)"}));
  // Figure 1: [ground, flowers] coordinated under "close to".
  TreeView v = s.Materialize();
  NodeId group = *v.parent[coord.movable];
  EXPECT_EQ(s.Label(*v.parent[group]), "PP(close to)");
  EXPECT_EQ(EnumerateAttachments(s).size(), 2u);
  EXPECT_EQ(s.HeadLemma(s.EffectiveGenus(DefaultTransparentHeads())), "plant");
}

TEST(SketchTest, PlantainFigureTwo) {
  Sketch s = Reattach(Parse("plantain"), 1, 1);
  TreeView v = s.Materialize();
  NodeId group = *v.parent[s.sites()[1].movable];
  EXPECT_EQ(Labels(s, v.children[group]),
            (std::vector<std::string>{"NP(leaf)", "NP(flower)"}));
  EXPECT_EQ(s.Label(*v.parent[group]), "PP(with)");
}

TEST(SketchTest, AnglingDefaultAndReattached) {
  Sketch s = Parse("angling");
  ASSERT_EQ(s.sites().size(), 1u);
  EXPECT_EQ(Labels(s, s.sites()[0].candidates),
            (std::vector<std::string>{"NP(fish)", "VP(catch)"}));
  TreeView v = s.Materialize();
  EXPECT_EQ(s.Label(*v.parent[s.sites()[0].movable]), "NP(fish)");
  Sketch r = Reattach(s, 0, 1);
  TreeView rv = r.Materialize();
  EXPECT_EQ(r.Label(*rv.parent[r.sites()[0].movable]), "VP(catch)");
  EXPECT_EQ(EnumerateAttachments(s).size(), 2u);
}

TEST(SketchTest, AttackOptionalObject) {
  Sketch s = Parse("attack");
  EXPECT_EQ(s.Label(s.genus()), "VP(begin)");
  ASSERT_EQ(s.sites().size(), 1u);
  EXPECT_EQ(Labels(s, s.sites()[0].candidates),
            (std::vector<std::string>{"NP(something)", "VP(begin)"}));
  EXPECT_TRUE(s.node(s.sites()[0].candidates[0]).optional);
}

TEST(SketchTest, WithAfterGenusIsFixed) {
  Sketch s = Parse("gourd");
  EXPECT_TRUE(s.sites().empty());
  EXPECT_EQ(Labels(s, s.node(s.genus()).children),
            (std::vector<std::string>{"PP(with)", "PartClause(grow)"}));
}

TEST(SketchTest, CommaListCoordination) {
  Sketch s = Parse("hook");
  TreeView v = s.Materialize();
  NodeId of = v.children[s.genus()][0];
  NodeId group = v.children[of][0];
  EXPECT_EQ(s.Label(group), "CoordGroup(and)");
  EXPECT_EQ(Labels(s, v.children[group]),
            (std::vector<std::string>{"NP(metal)", "NP(plastic)"}));
  EXPECT_EQ(s.Label(v.children[s.genus()][1]), "PP(for)");
}

TEST(SketchTest, RelativeClauseVerbCoordination) {
  Sketch s = Parse("plant");
  TreeView v = s.Materialize();
  NodeId rc = v.children[s.genus()][0];
  EXPECT_EQ(Labels(s, v.children[rc]),
            (std::vector<std::string>{"VP(have)", "VP(grow)"}));
}

TEST(SketchTest, SerializeMarksSites) {
  std::string text = SerializeSketch(Parse("angling"));
  EXPECT_NE(text.find("PP(with) [site 0: chosen 0 of 2]"), std::string::npos);
}

TEST(SketchTest, GoldenSketches) {
  Corpus corpus = testing::SampleCorpus();
  std::string got;
  for (const DictEntry &e : corpus.entries()) {
    got += "# " + e.id.ToString() + "\n" +
           SerializeSketch(ParseDefinition(e, Tokenize(e.definition)));
  }
  EXPECT_EQ(got, testing::ReadFile(testing::DataPath("golden/samples_sketches.txt")));
}

TEST(SketchTest, FallbackOnUnchunkable) {
  Sketch s = ParseText("of or relating to the sea");
  EXPECT_TRUE(s.fallback());
  EXPECT_TRUE(s.sites().empty());
  Sketch v = ParseText("to", Pos::kVerb);
  EXPECT_TRUE(v.fallback());
}

TEST(SketchTest, ReattachErrors) {
  Sketch s = Parse("angling");
  EXPECT_THROW(Reattach(s, 5, 0), NoSuchSite);
  EXPECT_THROW(Reattach(s, 0, 2), NoSuchCandidate);
}

TEST(SketchTest, NoSitesMeansOneConfiguration) {
  auto all = EnumerateAttachments(Parse("flower"));
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].empty());
}

TEST(SketchTest, ApplyChoices) {
  Sketch s = ApplyChoices(Parse("plantain"), {0, 1});
  EXPECT_EQ(s.Choices(), (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(ApplyChoices(s, {0}), Error);
}

}  // namespace
}  // namespace lexboot
