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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "fixtures.h"

namespace lexboot {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lexboot_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    dict_ = testing::DataPath("samples.tsv");
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string &name) { return (dir_ / name).string(); }

  fs::path dir_;
  std::string dict_;
};

TEST_F(CliTest, RunUntilConverged) {
  CommandOutcome o = RunCommand({"run", dict_, "--until-converged", "-o", Path("p.lkb")});
  ASSERT_EQ(o.exit_code(), 0) << o.reason;
  EXPECT_NE(o.rendered.find("pass 3: 0 new triples"), std::string::npos);
  EXPECT_NE(o.rendered.find("converged after 3 passes"), std::string::npos);
  EXPECT_EQ(testing::ReadFile(Path("p.lkb")),
            testing::ReadFile(testing::DataPath("golden/samples_converged.lkb")));
}

TEST_F(CliTest, RunOnePass) {
  CommandOutcome o = RunCommand({"run", dict_, "--passes", "1", "-o", Path("p1.lkb")});
  ASSERT_EQ(o.exit_code(), 0);
  std::string dump = testing::ReadFile(Path("p1.lkb"));
  EXPECT_EQ(dump.find("clove\tn\tL 1,n\tPART-OF\tplant"), std::string::npos);
  EXPECT_NE(dump.find("flower\tn\tL 1,n,1\tPART-OF\tplant"), std::string::npos);
}

TEST_F(CliTest, RepeatedRunsIdentical) {
  RunCommand({"run", dict_, "--passes", "2", "-o", Path("a.lkb")});
  CommandOutcome o = RunCommand({"run", dict_, "--passes", "2", "-o", Path("b.lkb")});
  EXPECT_EQ(testing::ReadFile(Path("a.lkb")), testing::ReadFile(Path("b.lkb")));
}

TEST_F(CliTest, TsvReport) {
  CommandOutcome o = RunCommand({"run", dict_, "--format", "tsv", "-o", Path("p.lkb")});
  ASSERT_EQ(o.exit_code(), 0);
  EXPECT_EQ(o.rendered.rfind("pass\tnew_triples\t", 0), 0u);
  EXPECT_NE(o.rendered.find("\n2\t4\t2\t2\t"), std::string::npos) << o.rendered;
}

TEST_F(CliTest, RunWithoutOutputPrintsDump) {
  CommandOutcome o = RunCommand({"run", dict_, "--passes", "1"});
  EXPECT_NE(o.rendered.find("#lexboot-lkb v1\n"), std::string::npos);
}

TEST_F(CliTest, ConfigOverrides) {
  CommandOutcome o = RunCommand({"run", dict_, "--passes", "1", "--substances",
                                 "gold", "-o", Path("p.lkb")});
  ASSERT_EQ(o.exit_code(), 0);
  std::string dump = testing::ReadFile(Path("p.lkb"));
  EXPECT_EQ(dump.find("MATERIAL\tsilver"), std::string::npos);
  EXPECT_EQ(dump.find("MATERIAL\tgold"), std::string::npos);
  EXPECT_EQ(RunCommand({"run", dict_, "--weights", "2"}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"run", dict_, "--weights", "-1,1"}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"run", dict_, "--weights", "3,1", "-o", Path("w.lkb")})
                .exit_code(),
            0);
}

TEST_F(CliTest, MissingDictionaryIsDataError) {
  CommandOutcome o = RunCommand({"run", Path("missing.tsv")});
  EXPECT_EQ(o.exit_code(), 1);
  EXPECT_NE(o.reason.find("missing.tsv"), std::string::npos);
}

TEST_F(CliTest, MalformedDictionaryNamesFileAndLine) {
  {
    std::FILE *f = std::fopen(Path("bad.tsv").c_str(), "w");
    std::fputs("ok\tn\t1\tL\ta plant\nbad\tn\t1\n", f);
    std::fclose(f);
  }
  CommandOutcome o = RunCommand({"run", Path("bad.tsv")});
  EXPECT_EQ(o.exit_code(), 1);
  EXPECT_NE(o.reason.find("bad.tsv: line 2"), std::string::npos) << o.reason;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCommand({}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"frobnicate"}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"run"}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"run", dict_, "--passes", "2", "--until-converged"})
                .exit_code(),
            2);
  EXPECT_EQ(RunCommand({"run", dict_, "--format", "xml"}).exit_code(), 2);
  EXPECT_EQ(RunCommand({"--help"}).exit_code(), 0);
}

class CliLkbTest : public CliTest {
 protected:
  void SetUp() override {
    CliTest::SetUp();
    lkb_ = Path("samples.lkb");
    ASSERT_EQ(RunCommand({"run", dict_, "-o", lkb_}).exit_code(), 0);
  }
  std::string lkb_;
};

TEST_F(CliLkbTest, Query) {
  CommandOutcome o = RunCommand({"query", lkb_, "angling"});
  ASSERT_EQ(o.exit_code(), 0);
  EXPECT_NE(o.rendered.find("INSTRUMENT\thook"), std::string::npos);
  EXPECT_NE(o.rendered.find("INSTRUMENT\tline"), std::string::npos);

  CommandOutcome none = RunCommand({"query", lkb_, "zzz"});
  EXPECT_EQ(none.exit_code(), 0);
  EXPECT_EQ(none.rendered, "");

  CommandOutcome part = RunCommand({"query", lkb_, "flower", "--label", "PART-OF"});
  EXPECT_EQ(part.rendered,
            "flower\tn\tL 1,n,1\tPART-OF\tplant\t1\tpart-of-literal\n");

  EXPECT_EQ(RunCommand({"query", lkb_, "flower", "--label", "COLOR"}).exit_code(), 2);
}

TEST_F(CliLkbTest, Explain) {
  CommandOutcome o = RunCommand({"explain", dict_, lkb_, "angling/n"});
  ASSERT_EQ(o.exit_code(), 0);
  EXPECT_NE(o.rendered.find("evidence: hook INSTRUMENT catch"), std::string::npos);
  CommandOutcome bad = RunCommand({"explain", dict_, lkb_, "zzz/n"});
  EXPECT_EQ(bad.exit_code(), 1);
  EXPECT_NE(bad.reason.find("zzz"), std::string::npos);
}

TEST_F(CliLkbTest, DumpAndStats) {
  CommandOutcome full = RunCommand({"dump", lkb_});
  EXPECT_EQ(full.rendered, testing::ReadFile(lkb_));
  CommandOutcome first = RunCommand({"dump", lkb_, "--pass", "1"});
  EXPECT_EQ(first.rendered,
            testing::ReadFile(testing::DataPath("golden/samples_pass1.lkb")));
  CommandOutcome stats = RunCommand({"stats", lkb_});
  EXPECT_NE(stats.rendered.find("pass\tHYPERNYM\tINSTRUMENT\tMATERIAL\tPART\tPART-OF\ttotal\n"),
            std::string::npos);
  EXPECT_NE(stats.rendered.find("\n2\t0\t2\t0\t1\t1\t4\n"), std::string::npos)
      << stats.rendered;
}

TEST_F(CliLkbTest, CorruptDumpIsDataError) {
  {
    std::FILE *f = std::fopen(Path("bad.lkb").c_str(), "w");
    std::fputs("#lexboot-lkb v1\nbroken\n", f);
    std::fclose(f);
  }
  CommandOutcome o = RunCommand({"dump", Path("bad.lkb")});
  EXPECT_EQ(o.exit_code(), 1);
  EXPECT_NE(o.reason.find("line 2"), std::string::npos);
}

}  // namespace
}  // namespace lexboot
