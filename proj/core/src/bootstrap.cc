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

#include "lexboot/bootstrap.h"

#include <algorithm>
#include <iterator>
#include <set>
#include <tuple>

#include "lexboot/errors.h"

namespace lexboot {

void RunConfig::Validate() const {
  if (max_passes == 0) throw Error("max_passes must be at least 1");
  if (weights.pair < 0 || weights.text < 0) {
    throw Error("similarity weights must be non-negative");
  }
}

std::vector<Reattachment> ResolveCoordination(Sketch &sketch,
                                              const LkbSnapshot &snapshot,
                                              const Corpus &corpus,
                                              const RunConfig &config) {
  std::vector<Reattachment> decisions;
  for (const AmbiguitySite &site : sketch.sites()) {
    if (site.kind != SiteKind::kCoordScope) continue;
    const std::string &other = sketch.HeadLemma(site.movable);
    std::vector<int> scores;
    for (NodeId c : site.candidates) {
      scores.push_back(Similarity(snapshot, corpus, sketch.HeadLemma(c),
                                  other, config.weights));
    }
    std::size_t best = site.chosen;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] > scores[best]) best = i;
    }
    if (best == site.chosen) continue;
    NodeId from = site.candidates[site.chosen];
    NodeId to = site.candidates[best];
    Reattachment r;
    r.entry = sketch.entry();
    r.site_id = site.site_id;
    r.kind = site.kind;
    r.movable = site.movable;
    r.from = from;
    r.to = to;
    r.to_index = best;
    r.resolver = std::string(pattern::kCoordResolver);
    r.evidence = "similarity(" + sketch.HeadLemma(to) + ", " + other +
                 ") = " + std::to_string(scores[best]) + " > similarity(" +
                 sketch.HeadLemma(from) + ", " + other + ") = " +
                 std::to_string(scores[site.chosen]);
    decisions.push_back(std::move(r));
  }
  for (const Reattachment &r : decisions) {
    sketch = Reattach(sketch, r.site_id, r.to_index);
  }
  return decisions;
}

EntryResult ProcessEntry(const DictEntry &entry, const LkbSnapshot &snapshot,
                         const Corpus &corpus, const RunConfig &config) {
  const std::size_t pass = snapshot.pass_completed() + 1;
  EntryResult result;
  result.default_sketch = ParseDefinition(
      entry, Tokenize(entry.definition), config.patterns.transparent_heads);
  Sketch sketch = result.default_sketch;
  if (pass >= 2) {
    result.decisions = ResolveCoordination(sketch, snapshot, corpus, config);
  }
  PatternResult patterns = RunPatterns(sketch, snapshot, pass, config.patterns);
  for (Reattachment &r : patterns.decisions) {
    result.decisions.push_back(std::move(r));
  }
  std::sort(result.decisions.begin(), result.decisions.end(),
            [](const Reattachment &a, const Reattachment &b) {
              return a.site_id < b.site_id;
            });
  result.final_sketch = std::move(patterns.sketch);
  result.triples = std::move(patterns.triples);
  if (config.emit_unresolved) result.unresolved = std::move(patterns.unresolved);
  return result;
}

namespace {

auto DecisionKey(const Reattachment &r) {
  return std::make_tuple(r.entry, r.site_id, r.to_index);
}

}  // namespace

PassOutcome RunPass(const Corpus &corpus, const LkbSnapshot &snapshot,
                    const RunConfig &config, const PassReport *previous) {
  config.Validate();
  const std::size_t pass = snapshot.pass_completed() + 1;
  PassReport report;
  report.pass = pass;
  std::vector<RelationTriple> fresh;
  for (const DictEntry &entry : corpus.entries()) {
    EntryResult r = ProcessEntry(entry, snapshot, corpus, config);
    if (r.default_sketch.fallback()) report.fallback_entries.push_back(entry.id);
    for (RelationTriple &t : r.triples) {
      if (!snapshot.Contains(TripleKey::Of(t))) fresh.push_back(std::move(t));
    }
    for (Reattachment &d : r.decisions) report.decisions.push_back(std::move(d));
    for (UnresolvedSite &u : r.unresolved) {
      report.unresolved.push_back(std::move(u));
    }
  }
  PassOutcome out;
  out.snapshot = Merge(snapshot, fresh);
  for (const auto &[key, t] : out.snapshot.triples()) {
    if (t.pass == pass) report.delta.push_back(t);
  }
  report.new_triples = report.delta.size();

  // Reports are independent of corpus order.
  std::sort(report.decisions.begin(), report.decisions.end(),
            [](const Reattachment &a, const Reattachment &b) {
              return DecisionKey(a) < DecisionKey(b);
            });
  std::sort(report.unresolved.begin(), report.unresolved.end(),
            [](const UnresolvedSite &a, const UnresolvedSite &b) {
              return std::tie(a.entry, a.node) < std::tie(b.entry, b.node);
            });
  std::sort(report.fallback_entries.begin(), report.fallback_entries.end());
  report.reattachments = report.decisions.size();

  std::set<std::tuple<SenseId, std::size_t, std::size_t>> before;
  if (previous) {
    for (const Reattachment &d : previous->decisions) {
      before.insert(DecisionKey(d));
    }
  }
  std::set<std::tuple<SenseId, std::size_t, std::size_t>> now;
  for (const Reattachment &d : report.decisions) now.insert(DecisionKey(d));
  std::vector<std::tuple<SenseId, std::size_t, std::size_t>> diff;
  std::set_symmetric_difference(before.begin(), before.end(), now.begin(),
                                now.end(), std::back_inserter(diff));
  report.reattachment_changes = diff.size();
  out.report = std::move(report);
  return out;
}

RunOutcome RunPasses(const Corpus &corpus, std::size_t passes,
                     const RunConfig &config) {
  RunOutcome out;
  for (std::size_t k = 0; k < passes; ++k) {
    PassOutcome p = RunPass(corpus, out.snapshot, config,
                            out.reports.empty() ? nullptr : &out.reports.back());
    out.snapshot = std::move(p.snapshot);
    out.reports.push_back(std::move(p.report));
  }
  const PassReport *last = out.reports.empty() ? nullptr : &out.reports.back();
  out.converged =
      last && last->new_triples == 0 && last->reattachment_changes == 0;
  return out;
}

RunOutcome RunUntilConverged(const Corpus &corpus, const RunConfig &config) {
  config.Validate();
  RunOutcome out;
  while (out.reports.size() < config.max_passes) {
    PassOutcome p = RunPass(corpus, out.snapshot, config,
                            out.reports.empty() ? nullptr : &out.reports.back());
    out.snapshot = std::move(p.snapshot);
    out.reports.push_back(std::move(p.report));
    const PassReport &r = out.reports.back();
    if (r.new_triples == 0 && r.reattachment_changes == 0) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace lexboot
