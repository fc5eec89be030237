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

#include "lexboot/patterns.h"

#include <algorithm>
#include <deque>
#include <set>

namespace lexboot {

const std::vector<std::string> &PatternConfig::DefaultPortionHeads() {
  static const std::vector<std::string> heads = {
      "bar", "piece", "sheet", "block", "lump", "strip", "mass"};
  return heads;
}

const std::vector<std::string> &PatternConfig::DefaultSubstanceSeeds() {
  static const std::vector<std::string> seeds = {
      "gold", "silver", "metal", "plastic", "wood", "stone", "glass", "water"};
  return seeds;
}

std::string_view UnresolvedReasonName(UnresolvedReason reason) {
  return reason == UnresolvedReason::kRelationAmbiguous ? "relation-ambiguous"
                                                        : "no-lkb-evidence";
}

std::vector<NodeId> Conjuncts(const Sketch &sketch, const TreeView &view,
                              NodeId node) {
  if (sketch.node(node).kind != NodeKind::kCoordGroup) return {node};
  std::vector<NodeId> out;
  for (NodeId c : view.children[node]) {
    for (NodeId x : Conjuncts(sketch, view, c)) out.push_back(x);
  }
  return out;
}

bool IsSubstance(const LkbSnapshot &lkb, std::string_view lemma,
                 const std::vector<std::string> &seeds) {
  std::set<std::string, std::less<>> seen;
  std::deque<std::string> queue = {std::string(lemma)};
  while (!queue.empty()) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    if (std::find(seeds.begin(), seeds.end(), w) != seeds.end()) return true;
    if (!seen.insert(w).second) continue;
    for (std::string &t : lkb.Targets(w, RelationLabel::kHypernym)) {
      queue.push_back(std::move(t));
    }
  }
  return false;
}

namespace {

bool In(const std::vector<std::string> &list, std::string_view w) {
  return std::find(list.begin(), list.end(), w) != list.end();
}

// Collects triples for one sketch, dropping repeats.
class Emitter {
 public:
  Emitter(const Sketch &sketch, std::size_t pass,
          std::vector<RelationTriple> &out)
      : sketch_(sketch), pass_(pass), out_(out) {
    for (const RelationTriple &t : out_) seen_.insert(TripleKey::Of(t));
  }

  void Emit(RelationLabel label, const std::string &target,
            std::string_view pattern,
            std::optional<std::size_t> site = std::nullopt) {
    if (target.empty()) return;
    RelationTriple t;
    t.source = sketch_.entry();
    t.label = label;
    t.target = target;
    t.pass = pass_;
    t.pattern = std::string(pattern);
    t.site = site;
    if (seen_.insert(TripleKey::Of(t)).second) out_.push_back(std::move(t));
  }

 private:
  const Sketch &sketch_;
  std::size_t pass_;
  std::vector<RelationTriple> &out_;
  std::set<TripleKey> seen_;
};

// Site whose movable constituent is `node`, if any.
std::optional<std::size_t> SiteOf(const Sketch &sketch, NodeId node) {
  for (const AmbiguitySite &s : sketch.sites()) {
    if (s.movable == node) return s.site_id;
  }
  return std::nullopt;
}

// Site id a node depends on: its own, or the nearest one above it.
std::optional<std::size_t> DependentSite(const Sketch &sketch,
                                         const TreeView &view, NodeId node) {
  for (std::optional<NodeId> n = node; n; n = view.parent[*n]) {
    if (auto s = SiteOf(sketch, *n)) return s;
  }
  return std::nullopt;
}

std::optional<NodeId> FirstChild(const Sketch &sketch, const TreeView &view,
                                 NodeId node, NodeKind kind,
                                 std::string_view prep = {}) {
  for (NodeId c : view.children[node]) {
    const SketchNode &n = sketch.node(c);
    if (n.kind == kind && (prep.empty() || n.prep == prep)) return c;
  }
  return std::nullopt;
}

// NP nodes standing for the genus: the genus itself, or every conjunct when
// the genus is coordinated.
std::vector<NodeId> GenusNodes(const Sketch &sketch, const TreeView &view) {
  NodeId g = sketch.genus();
  if (auto p = view.parent[g];
      p && sketch.node(*p).kind == NodeKind::kCoordGroup) {
    return Conjuncts(sketch, view, *p);
  }
  return {g};
}

// Genus nodes plus, for a transparent genus, its of-complement conjuncts.
std::vector<NodeId> HostNodes(const Sketch &sketch, const TreeView &view,
                              const PatternConfig &config) {
  std::vector<NodeId> hosts = GenusNodes(sketch, view);
  NodeId e = sketch.EffectiveGenus(config.transparent_heads);
  if (e != sketch.genus()) {
    for (NodeId c : Conjuncts(sketch, view, e)) hosts.push_back(c);
  }
  return hosts;
}

bool IsNP(const Sketch &sketch, NodeId n) {
  return sketch.node(n).kind == NodeKind::kNP;
}

std::string Lemmas(const Sketch &sketch, const std::vector<NodeId> &nodes) {
  std::string out;
  for (NodeId n : nodes) {
    if (!out.empty()) out += ", ";
    out += sketch.HeadLemma(n);
  }
  return out;
}

void GenusHypernym(const Sketch &sketch, const TreeView &view,
                   const PatternConfig &config, Emitter &emit) {
  if (sketch.fallback()) {
    const SketchNode &g = sketch.node(sketch.genus());
    Cat want = sketch.entry().pos == Pos::kVerb ? Cat::kVerb : Cat::kNoun;
    if (g.head != kNoToken && sketch.tokens()[g.head].cat == want) {
      emit.Emit(RelationLabel::kHypernym, sketch.HeadLemma(sketch.genus()),
                pattern::kGenusHypernym);
    }
    return;
  }
  if (sketch.node(sketch.genus()).kind == NodeKind::kVP) {
    emit.Emit(RelationLabel::kHypernym, sketch.HeadLemma(sketch.genus()),
              pattern::kGenusHypernym);
    return;
  }
  for (NodeId g : GenusNodes(sketch, view)) {
    emit.Emit(RelationLabel::kHypernym, sketch.HeadLemma(g),
              pattern::kGenusHypernym);
  }
  NodeId g = sketch.genus();
  NodeId e = sketch.EffectiveGenus(config.transparent_heads);
  if (e != g) {
    for (NodeId c : Conjuncts(sketch, view, e)) {
      if (IsNP(sketch, c)) {
        emit.Emit(RelationLabel::kHypernym, sketch.HeadLemma(c),
                  pattern::kGenusHypernym);
      }
    }
    return;
  }
  // "the sport of catching fish": the activity named by the gerund.
  if (auto of = FirstChild(sketch, view, g, NodeKind::kPP, "of")) {
    NodeId comp = view.children[*of].front();
    if (sketch.node(comp).kind == NodeKind::kVP) {
      emit.Emit(RelationLabel::kHypernym, sketch.HeadLemma(comp),
                pattern::kGenusHypernym);
    }
  }
}

void PartOfLiteral(const Sketch &sketch, const TreeView &view, Emitter &emit) {
  NodeId g = sketch.genus();
  if (!IsNP(sketch, g) || sketch.HeadLemma(g) != "part") return;
  auto of = FirstChild(sketch, view, g, NodeKind::kPP, "of");
  if (!of) return;
  for (NodeId c : Conjuncts(sketch, view, view.children[*of].front())) {
    if (IsNP(sketch, c)) {
      emit.Emit(RelationLabel::kPartOf, sketch.HeadLemma(c),
                pattern::kPartOfLiteral, DependentSite(sketch, view, c));
    }
  }
}

void ThatHasPart(const Sketch &sketch, const TreeView &view,
                 const PatternConfig &config, Emitter &emit) {
  for (NodeId host : HostNodes(sketch, view, config)) {
    for (NodeId rc : view.children[host]) {
      const SketchNode &r = sketch.node(rc);
      if (r.kind != NodeKind::kRelClause) continue;
      if (r.rel_word != "that" && r.rel_word != "which") continue;
      for (NodeId vp : view.children[rc]) {
        if (sketch.node(vp).kind != NodeKind::kVP) continue;
        if (sketch.HeadLemma(vp) != "have") continue;
        for (NodeId obj : view.children[vp]) {
          NodeKind k = sketch.node(obj).kind;
          if (k != NodeKind::kNP && k != NodeKind::kCoordGroup) continue;
          for (NodeId c : Conjuncts(sketch, view, obj)) {
            emit.Emit(RelationLabel::kPart, sketch.HeadLemma(c),
                      pattern::kThatHasPart, DependentSite(sketch, view, c));
          }
        }
      }
    }
  }
}

void WithNounPart(const Sketch &sketch, const TreeView &view,
                  const PatternConfig &config, Emitter &emit) {
  for (NodeId host : HostNodes(sketch, view, config)) {
    if (!IsNP(sketch, host)) continue;
    for (NodeId pp : view.children[host]) {
      const SketchNode &p = sketch.node(pp);
      if (p.kind != NodeKind::kPP || p.prep != "with") continue;
      for (NodeId c : Conjuncts(sketch, view, view.children[pp].front())) {
        if (IsNP(sketch, c)) {
          emit.Emit(RelationLabel::kPart, sketch.HeadLemma(c),
                    pattern::kWithNounPart, DependentSite(sketch, view, c));
        }
      }
    }
  }
}

void ForGerundInstrument(const Sketch &sketch, const TreeView &view,
                         const PatternConfig &config, Emitter &emit) {
  auto fire = [&](NodeId parent) {
    for (NodeId pp : view.children[parent]) {
      const SketchNode &p = sketch.node(pp);
      if (p.kind != NodeKind::kPP || p.prep != "for") continue;
      NodeId comp = view.children[pp].front();
      if (sketch.node(comp).kind != NodeKind::kVP) continue;
      emit.Emit(RelationLabel::kInstrument, sketch.HeadLemma(comp),
                pattern::kForGerundInstrument,
                DependentSite(sketch, view, comp));
    }
  };
  for (NodeId host : HostNodes(sketch, view, config)) {
    if (!IsNP(sketch, host)) continue;
    fire(host);
    // "..., used for cutting wood"
    for (NodeId pc : view.children[host]) {
      if (sketch.node(pc).kind == NodeKind::kPartClause &&
          sketch.HeadLemma(pc) == "use") {
        fire(pc);
      }
    }
  }
}

}  // namespace

std::vector<RelationTriple> ExtractStructural(const Sketch &sketch,
                                              std::size_t pass,
                                              const PatternConfig &config) {
  std::vector<RelationTriple> out;
  if (sketch.nodes().empty()) return out;
  TreeView view = sketch.Materialize();
  Emitter emit(sketch, pass, out);
  GenusHypernym(sketch, view, config, emit);
  if (sketch.fallback()) return out;
  PartOfLiteral(sketch, view, emit);
  ThatHasPart(sketch, view, config, emit);
  WithNounPart(sketch, view, config, emit);
  ForGerundInstrument(sketch, view, config, emit);
  return out;
}

void ResolveOfPp(const Sketch &sketch, const LkbSnapshot &lkb, std::size_t pass,
                 const PatternConfig &config, PatternResult &out) {
  if (sketch.nodes().empty() || sketch.fallback()) return;
  NodeId g = sketch.genus();
  if (!IsNP(sketch, g)) return;
  const std::string &head = sketch.HeadLemma(g);
  if (head == "part" || In(config.transparent_heads, head)) return;
  TreeView view = sketch.Materialize();
  auto of = FirstChild(sketch, view, g, NodeKind::kPP, "of");
  if (!of) return;
  NodeId comp = view.children[*of].front();
  if (sketch.node(comp).kind == NodeKind::kVP) return;

  std::vector<NodeId> conjuncts;
  for (NodeId c : Conjuncts(sketch, view, comp)) {
    if (IsNP(sketch, c)) conjuncts.push_back(c);
  }
  if (conjuncts.empty()) return;
  Emitter emit(sketch, pass, out.triples);

  // (a) the modified noun is PART-OF the complement, or (b) the complement
  // has the modified noun as a PART.
  std::vector<NodeId> part_of;
  for (NodeId c : conjuncts) {
    const std::string &w = sketch.HeadLemma(c);
    std::vector<std::string> a = lkb.Targets(head, RelationLabel::kPartOf);
    std::vector<std::string> b = lkb.Targets(w, RelationLabel::kPart);
    if (std::binary_search(a.begin(), a.end(), w) ||
        std::binary_search(b.begin(), b.end(), head)) {
      part_of.push_back(c);
    }
  }
  if (!part_of.empty()) {
    for (NodeId c : part_of) {
      emit.Emit(RelationLabel::kPartOf, sketch.HeadLemma(c),
                pattern::kOfPpResolver, DependentSite(sketch, view, c));
    }
    return;
  }

  if (In(config.portion_heads, head) &&
      std::all_of(conjuncts.begin(), conjuncts.end(), [&](NodeId c) {
        return IsSubstance(lkb, sketch.HeadLemma(c), config.substance_seeds);
      })) {
    for (NodeId c : conjuncts) {
      emit.Emit(RelationLabel::kMaterial, sketch.HeadLemma(c),
                pattern::kOfPpResolver, DependentSite(sketch, view, c));
    }
    return;
  }

  UnresolvedSite u;
  u.entry = sketch.entry();
  u.node = *of;
  u.site_id = SiteOf(sketch, *of);
  u.reason = UnresolvedReason::kRelationAmbiguous;
  u.description = sketch.Label(*of) + " on " + sketch.Label(g) +
                  ": no relation established for " +
                  Lemmas(sketch, conjuncts);
  out.unresolved.push_back(std::move(u));
}

void ResolveWithPp(const LkbSnapshot &lkb, std::size_t pass,
                   PatternResult &out) {
  const Sketch sketch = out.sketch;
  if (sketch.nodes().empty() || sketch.fallback()) return;
  TreeView view = sketch.Materialize();
  Emitter emit(sketch, pass, out.triples);

  // First conjunct naming `verb` as its INSTRUMENT, if any.
  auto evidence = [&](const std::vector<NodeId> &conjuncts,
                      const std::string &verb) -> std::optional<NodeId> {
    for (NodeId c : conjuncts) {
      std::vector<std::string> t =
          lkb.Targets(sketch.HeadLemma(c), RelationLabel::kInstrument);
      if (std::binary_search(t.begin(), t.end(), verb)) return c;
    }
    return std::nullopt;
  };
  auto conjuncts_of = [&](NodeId pp) {
    std::vector<NodeId> out_nodes;
    for (NodeId c : Conjuncts(sketch, view, view.children[pp].front())) {
      if (IsNP(sketch, c)) out_nodes.push_back(c);
    }
    return out_nodes;
  };
  auto unresolved = [&](NodeId pp, std::optional<std::size_t> site,
                        const std::vector<NodeId> &verbs,
                        const std::vector<NodeId> &conjuncts) {
    UnresolvedSite u;
    u.entry = sketch.entry();
    u.node = pp;
    u.site_id = site;
    u.reason = UnresolvedReason::kNoLkbEvidence;
    u.description = sketch.Label(pp) + ": no INSTRUMENT link from " +
                    Lemmas(sketch, conjuncts) + " to " +
                    Lemmas(sketch, verbs);
    out.unresolved.push_back(std::move(u));
  };

  for (const AmbiguitySite &site : sketch.sites()) {
    if (site.kind != SiteKind::kPpAttach) continue;
    if (sketch.node(site.movable).prep != "with") continue;
    std::vector<NodeId> verbs;
    for (NodeId c : site.candidates) {
      NodeKind k = sketch.node(c).kind;
      if (k == NodeKind::kVP || k == NodeKind::kPartClause) verbs.push_back(c);
    }
    if (verbs.empty()) continue;
    std::vector<NodeId> conjuncts = conjuncts_of(site.movable);
    bool done = false;
    for (NodeId v : verbs) {
      auto hit = evidence(conjuncts, sketch.HeadLemma(v));
      if (!hit) continue;
      std::size_t index = static_cast<std::size_t>(
          std::find(site.candidates.begin(), site.candidates.end(), v) -
          site.candidates.begin());
      if (index != site.chosen) {
        Reattachment r;
        r.entry = sketch.entry();
        r.site_id = site.site_id;
        r.kind = site.kind;
        r.movable = site.movable;
        r.from = site.candidates[site.chosen];
        r.to = v;
        r.to_index = index;
        r.resolver = std::string(pattern::kWithPpResolver);
        r.evidence = sketch.HeadLemma(*hit) + " INSTRUMENT " +
                     sketch.HeadLemma(v);
        out.decisions.push_back(std::move(r));
        out.sketch = Reattach(out.sketch, site.site_id, index);
      }
      for (NodeId c : conjuncts) {
        emit.Emit(RelationLabel::kInstrument, sketch.HeadLemma(c),
                  pattern::kWithPpResolver, site.site_id);
      }
      done = true;
      break;
    }
    if (!done) unresolved(site.movable, site.site_id, verbs, conjuncts);
  }

  // With-PPs fixed on a verb ("to fish with a hook and line").
  for (NodeId id = 0; id < sketch.nodes().size(); ++id) {
    const SketchNode &n = sketch.node(id);
    if (n.kind != NodeKind::kVP && n.kind != NodeKind::kPartClause) continue;
    for (NodeId pp : n.children) {
      const SketchNode &p = sketch.node(pp);
      if (p.kind != NodeKind::kPP || p.prep != "with") continue;
      std::vector<NodeId> conjuncts = conjuncts_of(pp);
      if (evidence(conjuncts, sketch.HeadLemma(id))) {
        for (NodeId c : conjuncts) {
          emit.Emit(RelationLabel::kInstrument, sketch.HeadLemma(c),
                    pattern::kWithPpResolver);
        }
      } else {
        unresolved(pp, std::nullopt, {id}, conjuncts);
      }
    }
  }
}

PatternResult RunPatterns(const Sketch &sketch, const LkbSnapshot &lkb,
                          std::size_t pass, const PatternConfig &config) {
  PatternResult out;
  out.sketch = sketch;
  if (pass >= 2) {
    ResolveWithPp(lkb, pass, out);
  }
  std::vector<RelationTriple> structural =
      ExtractStructural(out.sketch, pass, config);
  std::set<TripleKey> seen;
  for (const RelationTriple &t : out.triples) seen.insert(TripleKey::Of(t));
  for (RelationTriple &t : structural) {
    if (seen.insert(TripleKey::Of(t)).second) out.triples.push_back(std::move(t));
  }
  // Pass 1 reads the empty snapshot so that only unconditional outcomes
  // (portion-of-substance by seed) can fire.
  static const LkbSnapshot kEmpty;
  ResolveOfPp(out.sketch, pass == 1 ? kEmpty : lkb, pass, config, out);
  return out;
}

}  // namespace lexboot
