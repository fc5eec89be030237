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

// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <regex>
#include <set>
#include <string>

#include "cli.h"
#include "fixtures.h"
#include "lexboot/bootstrap.h"
#include "oracle.h"
#include "properties.h"

namespace lexboot::testing {
namespace {

namespace fs = std::filesystem;

struct Check {
  bool ok = true;
  std::string detail;

  void Require(bool cond, const std::string &what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::set<std::string> Briefs(const LkbSnapshot &s) {
  std::set<std::string> out;
  for (const auto &[key, t] : s.triples()) out.insert(t.Brief());
  return out;
}

Check GoldenPassOne(const fs::path &dir) {
  Check c;
  const std::string out = (dir / "pass1.lkb").string();
  auto start = std::chrono::steady_clock::now();
  CommandOutcome o =
      RunCommand({"run", DataPath("samples.tsv"), "--passes", "1", "-o", out});
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start).count();
  c.Require(o.exit_code() == 0, "run failed: " + o.reason);
  if (!c.ok) return c;
  const std::string dump = ReadFile(out);
  c.Require(dump == ReadFile(DataPath("golden/samples_pass1.lkb")),
            "dump differs from golden/samples_pass1.lkb");
  std::set<std::string> got = Briefs(Deserialize(dump));
  for (const char *want :
       {"flower PART-OF plant", "flower HYPERNYM part", "plant PART leaf",
        "plant PART root", "hook INSTRUMENT catch", "plantain PART leaf",
        "plantain HYPERNYM plant", "angling HYPERNYM sport",
        "angling HYPERNYM catch", "bullion MATERIAL gold",
        "bullion MATERIAL silver", "christening HYPERNYM baptism"}) {
    c.Require(got.count(want) == 1, std::string("missing ") + want);
  }
  c.Require(!got.count("clove PART-OF plant"), "clove PART-OF plant on pass 1");
  for (const std::string &b : got) {
    c.Require(b.rfind("angling INSTRUMENT", 0) != 0, "angling INSTRUMENT on pass 1");
  }
  c.Require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  if (c.ok) {
    c.detail = std::to_string(got.size()) + " triples, " +
               std::to_string(secs).substr(0, 5) + " s";
  }
  return c;
}

Check GoldenPassTwo() {
  Check c;
  RunOutcome run = RunPasses(SampleCorpus(), 2, RunConfig{});
  std::string delta;
  std::set<std::string> briefs;
  for (const RelationTriple &t : run.reports[1].delta) {
    delta += SerializeTriple(t) + "\n";
    briefs.insert(t.Brief());
  }
  c.Require(delta == ReadFile(DataPath("golden/samples_pass2_delta.tsv")),
            "delta differs from golden/samples_pass2_delta.tsv");
  for (const char *want : {"clove PART-OF plant", "angling INSTRUMENT hook",
                           "angling INSTRUMENT line", "plantain PART flower"}) {
    c.Require(briefs.count(want) == 1, std::string("missing ") + want);
  }
  for (const std::string &b : briefs) {
    bool known = b == "clove PART-OF plant" || b == "angling INSTRUMENT hook" ||
                 b == "angling INSTRUMENT line" || b == "plantain PART flower" ||
                 b.find(" MATERIAL ") != std::string::npos;
    c.Require(known, "unexpected pass-2 triple " + b);
  }
  if (c.ok) c.detail = std::to_string(briefs.size()) + " new triples";
  return c;
}

Check Traces(const fs::path &dir) {
  Check c;
  const std::string lkb = (dir / "samples.lkb").string();
  CommandOutcome run = RunCommand({"run", DataPath("samples.tsv"), "-o", lkb});
  c.Require(run.exit_code() == 0, "run failed: " + run.reason);
  if (!c.ok) return c;
  CommandOutcome angling =
      RunCommand({"explain", DataPath("samples.tsv"), lkb, "angling/n"});
  c.Require(angling.rendered.find("PP(with) NP(fish) -> VP(catch)") !=
                std::string::npos,
            "angling trace lacks the fish -> catch move");
  c.Require(angling.rendered.find("evidence: hook INSTRUMENT catch") !=
                std::string::npos,
            "angling trace lacks the hook evidence");
  CommandOutcome plantain =
      RunCommand({"explain", DataPath("samples.tsv"), lkb, "plantain/n"});
  c.Require(plantain.rendered.find("NP(ground) -> NP(leaf)") != std::string::npos,
            "plantain trace lacks the ground -> leaf move");
  std::smatch m;
  std::regex sim(
      R"(similarity\(leaf, flower\) = (\d+) > similarity\(ground, flower\) = (\d+))");
  bool found = std::regex_search(plantain.rendered, m, sim);
  c.Require(found, "plantain trace lacks the similarity comparison");
  if (found) {
    c.Require(std::stoi(m[1]) > std::stoi(m[2]), "similarity order reversed");
    if (c.ok) c.detail = m[0];
  }
  return c;
}

Check Convergence() {
  Check c;
  RunOutcome samples = RunUntilConverged(SampleCorpus(), RunConfig{});
  c.Require(samples.converged && samples.reports.size() == 3 &&
                samples.reports[2].new_triples == 0 &&
                samples.reports[1].new_triples > 0,
            "samples fixture did not converge with a zero-delta pass 3");
  std::vector<std::size_t> oracle = OracleDeltas(SampleCorpus(), RunConfig{});
  c.Require(oracle.size() == samples.reports.size(),
            "brute-force oracle converges at pass " + std::to_string(oracle.size()));
  RunOutcome chain = RunUntilConverged(ChainCorpus(), RunConfig{});
  bool chain_ok = chain.converged && chain.reports.size() == 4 &&
                  chain.reports[3].new_triples == 0;
  for (std::size_t k = 0; chain_ok && k < 3; ++k) {
    chain_ok = chain.reports[k].new_triples > 0;
  }
  c.Require(chain_ok, "chain fixture did not take 3 productive passes + 1");
  if (c.ok) c.detail = "samples: 3 passes, chain: 4 passes";
  return c;
}

Check Properties() {
  Check c;
  std::size_t n = 0;
  for (const PropertyResult &r : CheckAllProperties()) {
    c.Require(r.ok, r.name + ": " + r.detail);
    c.Require(r.cases >= 100, r.name + ": only " + std::to_string(r.cases) + " cases");
    ++n;
  }
  if (c.ok) c.detail = std::to_string(n) + " properties";
  return c;
}

Check OracleEquivalence() {
  Check c;
  Corpus corpus = SampleCorpus();
  LkbSnapshot s1 = RunPasses(corpus, 1, RunConfig{}).snapshot;
  for (const DictEntry &e : corpus.entries()) {
    EntryResult got = ProcessEntry(e, s1, corpus, RunConfig{});
    OracleResult want = OracleEntry(e, s1, corpus, RunConfig{});
    std::set<TripleKey> keys;
    for (const RelationTriple &t : got.triples) keys.insert(TripleKey::Of(t));
    c.Require(keys == want.triples, e.id.ToString() + ": triples differ");
    c.Require(got.final_sketch.Choices() == want.choices,
              e.id.ToString() + ": attachment differs");
  }
  if (c.ok) c.detail = std::to_string(corpus.size()) + " entries";
  return c;
}

}  // namespace
}  // namespace lexboot::testing

int main() {
  using namespace lexboot::testing;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lexboot_acceptance";
  fs::create_directories(dir);

  struct Row {
    int id;
    const char *name;
    Check check;
  };
  Row rows[] = {
      {1, "golden triples, pass 1", GoldenPassOne(dir)},
      {2, "golden delta, pass 2", GoldenPassTwo()},
      {3, "reattachment traces", Traces(dir)},
      {4, "convergence", Convergence()},
      {5, "property suite", Properties()},
      {6, "oracle equivalence", OracleEquivalence()},
  };
  fs::remove_all(dir);

  int failures = 0;
  for (const Row &r : rows) {
    std::cout << (r.check.ok ? "PASS" : "FAIL") << " [PRIMARY] " << r.id << " "
              << r.name;
    if (!r.check.detail.empty()) std::cout << " (" << r.check.detail << ")";
    std::cout << "\n";
    if (!r.check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
