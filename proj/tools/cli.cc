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

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "lexboot/bootstrap.h"
#include "lexboot/corpus.h"
#include "lexboot/errors.h"
#include "lexboot/explain.h"
#include "lexboot/lkb.h"

namespace lexboot {
namespace {

// Raised for bad flag values that CLI11 cannot check on its own.
struct UsageError {
  std::string reason;
};

std::vector<std::string> SplitList(const std::string &text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = ToLower(Trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SimilarityWeights ParseWeights(const std::string &text) {
  std::vector<std::string> parts = SplitList(text);
  SimilarityWeights w;
  try {
    if (parts.size() != 2) throw std::invalid_argument(text);
    std::size_t used = 0;
    w.pair = std::stoi(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(text);
    w.text = std::stoi(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(text);
  } catch (const std::exception &) {
    throw UsageError{"--weights expects two integers, e.g. 2,1"};
  }
  if (w.pair < 0 || w.text < 0) {
    throw UsageError{"--weights must be non-negative"};
  }
  return w;
}

// Loaders that put the file name in front of line-numbered errors.
Corpus LoadDictionary(const std::string &path) {
  try {
    return LoadCorpusFile(path);
  } catch (const MalformedLine &e) {
    throw Error(path + ": " + e.what());
  } catch (const BadPos &e) {
    throw Error(path + ": " + e.what());
  } catch (const DuplicateSense &e) {
    throw Error(path + ": " + e.what());
  }
}

LkbSnapshot LoadDump(const std::string &path) {
  try {
    return LoadLkbFile(path);
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

struct RunFlags {
  std::string dict;
  std::string out;
  std::size_t passes = 0;
  bool until_converged = false;
  std::size_t max_passes = 5;
  std::string transparent_heads;
  std::string portion_heads;
  std::string substances;
  std::string weights;
  std::string format = "text";
  bool hide_unresolved = false;
};

std::string RenderReports(const RunOutcome &run, const std::string &format) {
  std::ostringstream out;
  if (format == "tsv") {
    out << "pass\tnew_triples\treattachments\treattachment_changes\t"
           "unresolved\tfallbacks\n";
    for (const PassReport &r : run.reports) {
      out << r.pass << '\t' << r.new_triples << '\t' << r.reattachments << '\t'
          << r.reattachment_changes << '\t' << r.unresolved.size() << '\t'
          << r.fallback_entries.size() << '\n';
    }
    for (const PassReport &r : run.reports) {
      for (const UnresolvedSite &u : r.unresolved) {
        out << "unresolved\t" << r.pass << '\t' << u.entry.ToString() << '\t'
            << UnresolvedReasonName(u.reason) << '\t' << u.description << '\n';
      }
    }
    return out.str();
  }
  for (const PassReport &r : run.reports) {
    out << "pass " << r.pass << ": " << r.new_triples << " new triples, "
        << r.reattachments << " reattachments (" << r.reattachment_changes
        << " changed), " << r.unresolved.size() << " unresolved, "
        << r.fallback_entries.size() << " fallbacks\n";
    for (const RelationTriple &t : r.delta) {
      out << "  + " << t.Brief() << " [" << t.pattern << "]\n";
    }
    for (const SenseId &id : r.fallback_entries) {
      out << "  fallback " << id.ToString() << '\n';
    }
    for (const UnresolvedSite &u : r.unresolved) {
      out << "  ? " << u.entry.ToString() << ' '
          << UnresolvedReasonName(u.reason) << ": " << u.description << '\n';
    }
  }
  if (run.converged) {
    out << "converged after " << run.reports.size() << " passes\n";
  } else {
    out << "stopped after " << run.reports.size()
        << " passes without a quiet pass\n";
  }
  return out.str();
}

CommandOutcome CmdRun(const RunFlags &f) {
  RunConfig config;
  config.max_passes = f.max_passes;
  if (!f.transparent_heads.empty()) {
    config.patterns.transparent_heads = SplitList(f.transparent_heads);
  }
  if (!f.portion_heads.empty()) {
    config.patterns.portion_heads = SplitList(f.portion_heads);
  }
  if (!f.substances.empty()) {
    config.patterns.substance_seeds = SplitList(f.substances);
  }
  if (!f.weights.empty()) config.weights = ParseWeights(f.weights);
  config.emit_unresolved = !f.hide_unresolved;
  if (config.max_passes == 0) throw UsageError{"--max-passes must be >= 1"};

  Corpus corpus = LoadDictionary(f.dict);
  RunOutcome run = f.passes > 0 ? RunPasses(corpus, f.passes, config)
                                : RunUntilConverged(corpus, config);
  CommandOutcome outcome;
  outcome.rendered = RenderReports(run, f.format);
  std::string dump = Serialize(run.snapshot);
  if (f.out.empty()) {
    outcome.rendered += dump;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    file << dump;
    if (!file) throw Error("cannot write '" + f.out + "'");
  }
  return outcome;
}

CommandOutcome CmdQuery(const std::string &path, const std::string &lemma,
                        const std::string &label_name) {
  std::optional<RelationLabel> label;
  if (!label_name.empty()) {
    label = ParseLabel(label_name);
    if (!label) throw UsageError{"unknown relation label '" + label_name + "'"};
  }
  LkbSnapshot lkb = LoadDump(path);
  CommandOutcome outcome;
  for (const RelationTriple *t : lkb.BySource(ToLower(lemma))) {
    if (label && t->label != *label) continue;
    outcome.rendered += SerializeTriple(*t) + "\n";
  }
  return outcome;
}

CommandOutcome CmdDump(const std::string &path, std::optional<std::size_t> pass) {
  LkbSnapshot lkb = LoadDump(path);
  if (pass) lkb = lkb.Truncated(*pass);
  return {CommandStatus::kOk, Serialize(lkb), ""};
}

CommandOutcome CmdStats(const std::string &path) {
  LkbSnapshot lkb = LoadDump(path);
  const RelationLabel labels[] = {RelationLabel::kHypernym,
                                  RelationLabel::kInstrument,
                                  RelationLabel::kMaterial, RelationLabel::kPart,
                                  RelationLabel::kPartOf};
  std::map<std::size_t, std::map<RelationLabel, std::size_t>> counts;
  for (std::size_t p = 1; p <= lkb.pass_completed(); ++p) counts[p];
  for (const auto &[key, t] : lkb.triples()) ++counts[t.pass][t.label];
  std::ostringstream out;
  out << "pass";
  for (RelationLabel l : labels) out << '\t' << LabelName(l);
  out << "\ttotal\n";
  std::map<RelationLabel, std::size_t> totals;
  for (const auto &[pass, row] : counts) {
    out << pass;
    std::size_t sum = 0;
    for (RelationLabel l : labels) {
      auto it = row.find(l);
      std::size_t n = it == row.end() ? 0 : it->second;
      out << '\t' << n;
      sum += n;
      totals[l] += n;
    }
    out << '\t' << sum << '\n';
  }
  out << "total";
  for (RelationLabel l : labels) out << '\t' << totals[l];
  out << '\t' << lkb.size() << '\n';
  return {CommandStatus::kOk, out.str(), ""};
}

}  // namespace

CommandOutcome RunCommand(const std::vector<std::string> &args) {
  CLI::App app{"Multi-pass extraction of semantic relations from dictionary "
               "definitions",
               "lexboot"};
  app.require_subcommand(1);

  RunFlags run;
  CLI::App *run_cmd = app.add_subcommand("run", "Run extraction passes");
  run_cmd->add_option("dict", run.dict, "Dictionary TSV file")->required();
  run_cmd->add_option("-o,--out", run.out, "Write the LKB dump here");
  auto *passes = run_cmd->add_option("--passes", run.passes,
                                     "Run exactly N passes")
                     ->check(CLI::PositiveNumber);
  auto *until = run_cmd->add_flag("--until-converged", run.until_converged,
                                  "Run until a quiet pass (default)");
  passes->excludes(until);
  run_cmd->add_option("--max-passes", run.max_passes,
                      "Pass budget for --until-converged")
      ->capture_default_str();
  run_cmd->add_option("--transparent-heads", run.transparent_heads,
                      "Comma-separated transparent genus nouns");
  run_cmd->add_option("--portion-heads", run.portion_heads,
                      "Comma-separated portion nouns for MATERIAL");
  run_cmd->add_option("--substances", run.substances,
                      "Comma-separated substance seeds for MATERIAL");
  run_cmd->add_option("--weights", run.weights,
                      "Similarity weights PAIR,TEXT (default 2,1)");
  run_cmd->add_option("--format", run.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv"}))
      ->capture_default_str();
  run_cmd->add_flag("--hide-unresolved", run.hide_unresolved,
                    "Do not report unresolved sites");

  std::string lkb_path, lemma, label, dict_path, selector;
  CLI::App *query_cmd = app.add_subcommand("query", "Triples of one lemma");
  query_cmd->add_option("lkb", lkb_path, "LKB dump")->required();
  query_cmd->add_option("lemma", lemma, "Source lemma")->required();
  query_cmd->add_option("--label", label, "Only this relation");

  CLI::App *explain_cmd =
      app.add_subcommand("explain", "Trace the analysis of one sense");
  explain_cmd->add_option("dict", dict_path, "Dictionary TSV file")->required();
  explain_cmd->add_option("lkb", lkb_path, "LKB dump")->required();
  explain_cmd->add_option("sense", selector, "lemma[/pos[/sense]]")->required();

  std::size_t dump_pass = 0;
  CLI::App *dump_cmd = app.add_subcommand("dump", "Print an LKB dump");
  dump_cmd->add_option("lkb", lkb_path, "LKB dump")->required();
  auto *dump_pass_opt = dump_cmd->add_option(
      "--pass", dump_pass, "Only triples found by this pass");

  CLI::App *stats_cmd =
      app.add_subcommand("stats", "Triple counts per label and pass");
  stats_cmd->add_option("lkb", lkb_path, "LKB dump")->required();

  std::vector<std::string> argv_storage = {"lexboot"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const std::string &a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    return {CommandStatus::kOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp &) {
    return {CommandStatus::kOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError &e) {
    return {CommandStatus::kUsageError, "", e.what()};
  }

  try {
    if (*run_cmd) return CmdRun(run);
    if (*query_cmd) return CmdQuery(lkb_path, lemma, label);
    if (*explain_cmd) {
      Corpus corpus = LoadDictionary(dict_path);
      LkbSnapshot lkb = LoadDump(lkb_path);
      return {CommandStatus::kOk, Explain(corpus, lkb, selector, RunConfig{}),
              ""};
    }
    if (*dump_cmd) {
      return CmdDump(lkb_path, dump_pass_opt->count() > 0
                                   ? std::optional<std::size_t>(dump_pass)
                                   : std::nullopt);
    }
    if (*stats_cmd) return CmdStats(lkb_path);
  } catch (const UsageError &e) {
    return {CommandStatus::kUsageError, "", e.reason};
  } catch (const Error &e) {
    return {CommandStatus::kDataError, "", e.what()};
  }
  return {CommandStatus::kUsageError, "", "no subcommand"};
}

}  // namespace lexboot
