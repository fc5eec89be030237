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

#include <algorithm>
#include <functional>

#include "lexboot/errors.h"

namespace lexboot {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kNP: return "NP";
    case NodeKind::kPP: return "PP";
    case NodeKind::kVP: return "VP";
    case NodeKind::kRelClause: return "RelClause";
    case NodeKind::kPartClause: return "PartClause";
    case NodeKind::kCoordGroup: return "CoordGroup";
    case NodeKind::kTail: return "Tail";
  }
  return "?";
}

std::string_view SiteKindName(SiteKind kind) {
  return kind == SiteKind::kPpAttach ? "pp-attach" : "coord-scope";
}

const std::vector<std::string> &DefaultTransparentHeads() {
  static const std::vector<std::string> heads = {
      "type", "kind", "sort", "variety", "form", "ceremony"};
  return heads;
}

const std::string &Sketch::HeadLemma(NodeId id) const {
  static const std::string kEmpty;
  const SketchNode &n = nodes_.at(id);
  if (n.head == kNoToken || n.head >= tokens_.size()) return kEmpty;
  return tokens_[n.head].lemma;
}

std::string Sketch::Phrase(NodeId id) const {
  const SketchNode &n = nodes_.at(id);
  std::string out;
  for (std::size_t i = n.first_token; i <= n.last_token && i < tokens_.size();
       ++i) {
    if (!out.empty()) out += ' ';
    out += tokens_[i].surface;
  }
  return out;
}

std::string Sketch::Label(NodeId id) const {
  const SketchNode &n = nodes_.at(id);
  std::string inner;
  switch (n.kind) {
    case NodeKind::kPP: inner = n.prep; break;
    case NodeKind::kRelClause: inner = n.rel_word; break;
    case NodeKind::kCoordGroup: inner = n.conj; break;
    default: inner = HeadLemma(id); break;
  }
  return std::string(NodeKindName(n.kind)) + "(" + inner + ")";
}

NodeId Sketch::EffectiveGenus(
    const std::vector<std::string> &transparent_heads) const {
  if (nodes_.empty()) return genus_;
  const SketchNode &g = nodes_[genus_];
  if (g.kind != NodeKind::kNP) return genus_;
  if (std::find(transparent_heads.begin(), transparent_heads.end(),
                HeadLemma(genus_)) == transparent_heads.end()) {
    return genus_;
  }
  for (NodeId c : g.children) {
    const SketchNode &pp = nodes_[c];
    if (pp.kind != NodeKind::kPP) continue;
    if (pp.prep != "of" || pp.children.empty()) return genus_;
    NodeId comp = pp.children.front();
    NodeKind k = nodes_[comp].kind;
    if (k == NodeKind::kNP || k == NodeKind::kCoordGroup) return comp;
    return genus_;
  }
  return genus_;
}

TreeView Sketch::Materialize() const {
  TreeView view;
  view.root = root_;
  view.children.resize(nodes_.size());
  view.parent.assign(nodes_.size(), std::nullopt);
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    view.children[id] = nodes_[id].children;
    for (NodeId c : nodes_[id].children) view.parent[c] = id;
  }
  for (const AmbiguitySite &site : sites_) {
    NodeId host = site.candidates.at(site.chosen);
    if (site.kind == SiteKind::kPpAttach) {
      view.children[host].push_back(site.movable);
      view.parent[site.movable] = host;
      continue;
    }
    NodeId group = site.group;
    if (auto p = view.parent[host]) {
      std::replace(view.children[*p].begin(), view.children[*p].end(), host,
                   group);
      view.parent[group] = *p;
    } else {
      view.root = group;
      view.parent[group] = std::nullopt;
    }
    view.children[group] = {host, site.movable};
    view.parent[host] = group;
    view.parent[site.movable] = group;
  }
  // Children in text order; a coordination group sorts by its first conjunct.
  std::function<std::size_t(NodeId)> key = [&](NodeId n) -> std::size_t {
    if (nodes_[n].kind == NodeKind::kCoordGroup && !view.children[n].empty()) {
      return key(view.children[n].front());
    }
    return nodes_[n].first_token;
  };
  for (auto &kids : view.children) {
    std::stable_sort(kids.begin(), kids.end(),
                     [&](NodeId a, NodeId b) { return key(a) < key(b); });
  }
  return view;
}

std::vector<std::size_t> Sketch::Choices() const {
  std::vector<std::size_t> out;
  out.reserve(sites_.size());
  for (const AmbiguitySite &s : sites_) out.push_back(s.chosen);
  return out;
}

namespace {

struct ChunkError {};

bool IsParticiple(const Token &t) {
  return t.cat == Cat::kAdj && t.surface.size() >= 4 &&
         t.surface.compare(t.surface.size() - 2, 2, "ed") == 0;
}

}  // namespace

// Deterministic definition chunker. Keeps a right frontier (the path from
// the root to the most recent constituent); new post-modifiers attach to a
// head on that frontier.
class SketchBuilder {
 public:
  SketchBuilder(const DictEntry &entry, const std::vector<Token> &tokens,
                const std::vector<std::string> &transparent)
      : transparent_(transparent) {
    sk_.entry_ = entry.id;
    sk_.tokens_ = tokens;
  }

  Sketch Build() {
    if (sk_.entry_.pos == Pos::kVerb) {
      ParseVerbDefinition();
    } else {
      ParseNounDefinition();
    }
    return std::move(sk_);
  }

  Sketch Flat() {
    sk_.nodes_.clear();
    sk_.sites_.clear();
    sk_.fallback_ = true;
    const auto &toks = sk_.tokens_;
    std::size_t head = kNoToken;
    if (sk_.entry_.pos == Pos::kVerb) {
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].cat == Cat::kVerb) {
          head = i;
          break;
        }
      }
      if (head == kNoToken) {
        for (std::size_t i = 0; i < toks.size(); ++i) {
          if (toks[i].IsWord() && toks[i].lemma != "to") {
            head = i;
            break;
          }
        }
      }
    } else {
      for (std::size_t i = 0; i < toks.size(); ++i) {
        if (toks[i].cat == Cat::kPrep) break;
        if (toks[i].cat == Cat::kNoun) head = i;
      }
      if (head == kNoToken) {
        for (std::size_t i = 0; i < toks.size(); ++i) {
          if (IsContentCat(toks[i].cat)) {
            head = i;
            break;
          }
        }
      }
    }
    if (head == kNoToken) head = 0;
    NodeId root = NewNode(sk_.entry_.pos == Pos::kVerb ? NodeKind::kVP
                                                       : NodeKind::kNP,
                          head);
    sk_.nodes_[root].first_token = 0;
    sk_.nodes_[root].last_token = head;
    sk_.root_ = sk_.genus_ = root;
    if (head + 1 < toks.size()) {
      NodeId tail = NewNode(NodeKind::kTail, head + 1);
      sk_.nodes_[tail].first_token = head + 1;
      sk_.nodes_[tail].last_token = toks.size() - 1;
      sk_.nodes_[root].children.push_back(tail);
    }
    return std::move(sk_);
  }

 private:
  // --- token access -------------------------------------------------------

  bool AtEnd() const { return pos_ >= sk_.tokens_.size(); }
  bool Has(std::size_t k) const { return pos_ + k < sk_.tokens_.size(); }
  const Token &Peek(std::size_t k = 0) const { return sk_.tokens_[pos_ + k]; }
  bool PeekSurface(std::size_t k, std::string_view s) const {
    return Has(k) && Peek(k).surface == s;
  }
  bool PeekCat(std::size_t k, Cat cat) const {
    return Has(k) && Peek(k).cat == cat;
  }

  void Retag(std::size_t index, Cat cat) {
    Token &t = sk_.tokens_[index];
    t.cat = cat;
    t.lemma = Lemmatize(t.surface, cat);
  }

  bool IsContentAt(std::size_t index) const {
    if (index >= sk_.tokens_.size()) return false;
    Cat c = sk_.tokens_[index].cat;
    return c == Cat::kNoun || c == Cat::kAdj;
  }

  bool StartsNP(std::size_t index) const {
    const auto &toks = sk_.tokens_;
    if (index >= toks.size()) return false;
    switch (toks[index].cat) {
      case Cat::kDet:
      case Cat::kAdj:
      case Cat::kNoun:
        return true;
      case Cat::kGerund:
        return IsContentAt(index + 1);
      case Cat::kOther:
        return toks[index].IsWord() && StartsNP(index + 1);
      default:
        return false;
    }
  }

  // Index one past a noun phrase starting at `index`, or kNoToken.
  std::size_t NPEnd(std::size_t index) const {
    std::size_t saved = pos_;
    auto *self = const_cast<SketchBuilder *>(this);
    self->pos_ = index;
    std::size_t end = kNoToken;
    std::size_t head = self->ScanNP();
    if (head != kNoToken) end = pos_;
    self->pos_ = saved;
    return end;
  }

  // --- node construction --------------------------------------------------

  NodeId NewNode(NodeKind kind, std::size_t head) {
    SketchNode n;
    n.kind = kind;
    n.head = head;
    if (head != kNoToken) n.first_token = n.last_token = head;
    sk_.nodes_.push_back(std::move(n));
    parent_.push_back(std::nullopt);
    post_head_.push_back(0);
    return sk_.nodes_.size() - 1;
  }

  SketchNode &N(NodeId id) { return sk_.nodes_[id]; }

  // Advances over an NP and returns its head token, or kNoToken if there is
  // no content word (pos_ is then unspecified).
  std::size_t ScanNP() {
    while (!AtEnd() && Peek().cat == Cat::kDet) ++pos_;
    std::size_t head = kNoToken;
    bool last_was_noun = false;
    while (!AtEnd()) {
      const Token &t = Peek();
      if (t.cat == Cat::kOther && t.IsWord() && StartsNP(pos_ + 1) &&
          head == kNoToken) {
        ++pos_;
        continue;
      }
      if (t.cat == Cat::kAdj) {
        if (head != kNoToken && last_was_noun && IsParticiple(t)) break;
        head = pos_++;
        last_was_noun = false;
        continue;
      }
      if (t.cat == Cat::kNoun) {
        head = pos_++;
        last_was_noun = true;
        continue;
      }
      if (t.cat == Cat::kGerund && head == kNoToken && IsContentAt(pos_ + 1)) {
        ++pos_;
        continue;
      }
      break;
    }
    return head;
  }

  NodeId ParseNP() {
    std::size_t start = pos_;
    std::size_t head = ScanNP();
    if (head == kNoToken) throw ChunkError{};
    if (sk_.tokens_[head].cat != Cat::kNoun) {
      // Nominal use of an adjective ("the rich"): treat as noun.
      Retag(head, Cat::kNoun);
    }
    NodeId np = NewNode(NodeKind::kNP, head);
    N(np).first_token = start;
    N(np).last_token = head;
    return np;
  }

  // VP headed by a gerund or verb at pos_, with an optional object NP.
  NodeId ParseVerbPhrase(NodeKind kind, Cat cat) {
    std::size_t head = pos_++;
    Retag(head, cat);
    NodeId vp = NewNode(kind, head);
    if (StartsNP(pos_)) {
      NodeId obj = ParseNP();
      AddChild(vp, obj);
    }
    return vp;
  }

  // PP at pos_, or nullopt when the preposition has no complement (the
  // caller turns the rest into a tail).
  std::optional<NodeId> ParsePP() {
    std::size_t start = pos_;
    std::size_t head = pos_++;
    std::string prep = sk_.tokens_[head].lemma;
    if (PeekSurface(0, "to") && prep != "to") {
      prep += " to";
      ++pos_;
    }
    std::optional<NodeId> comp;
    // A gerund right after a preposition heads a verb phrase ("of catching
    // fish"); it is never read as a premodifier here.
    if (!AtEnd() && Peek().cat == Cat::kGerund) {
      comp = ParseVerbPhrase(NodeKind::kVP, Cat::kGerund);
    } else if (StartsNP(pos_)) {
      comp = ParseNP();
    }
    if (!comp) {
      pos_ = start;
      return std::nullopt;
    }
    NodeId pp = NewNode(NodeKind::kPP, head);
    N(pp).prep = prep;
    N(pp).last_token = head + (prep.find(' ') != std::string::npos ? 1 : 0);
    AddChild(pp, *comp);
    return pp;
  }

  NodeId ParseRelClause() {
    std::size_t head = pos_++;
    NodeId rc = NewNode(NodeKind::kRelClause, head);
    N(rc).rel_word = sk_.tokens_[head].lemma;
    if (AtEnd() || !Peek().IsWord() || Peek().cat == Cat::kDet) {
      throw ChunkError{};
    }
    NodeId vp = ParseVerbPhrase(NodeKind::kVP, Cat::kVerb);
    AddChild(rc, vp);
    return rc;
  }

  NodeId ParsePartClause() {
    return ParseVerbPhrase(NodeKind::kPartClause, Cat::kGerund);
  }

  NodeId TailUntil(std::function<bool(const Token &)> stop) {
    std::size_t start = pos_;
    NodeId tail = NewNode(NodeKind::kTail, start);
    ++pos_;
    while (!AtEnd() && !stop(Peek())) ++pos_;
    N(tail).first_token = start;
    N(tail).last_token = pos_ - 1;
    N(sk_.root_).children.push_back(tail);
    parent_[tail] = sk_.root_;
    return tail;
  }

  void TailToEnd() {
    TailUntil([](const Token &) { return false; });
  }

  // --- attachment ---------------------------------------------------------

  void AddChild(NodeId parent, NodeId child) {
    N(parent).children.push_back(child);
    parent_[child] = parent;
    if (N(child).kind != NodeKind::kTail) ++post_head_[parent];
  }

  std::size_t FrontierIndex(NodeId id) const {
    for (std::size_t i = frontier_.size(); i-- > 0;) {
      if (frontier_[i] == id) return i;
    }
    throw ChunkError{};
  }

  void PushSpine(NodeId n) {
    frontier_.push_back(n);
    while (!N(n).children.empty()) {
      n = N(n).children.back();
      frontier_.push_back(n);
    }
  }

  void AttachFixed(NodeId host, NodeId child) {
    std::size_t idx = FrontierIndex(host);
    AddChild(host, child);
    frontier_.resize(idx + 1);
    PushSpine(child);
  }

  NodeId Effective() const { return sk_.EffectiveGenus(transparent_); }

  bool IsClause(NodeId n) const {
    NodeKind k = sk_.nodes_[n].kind;
    return k == NodeKind::kVP || k == NodeKind::kPartClause;
  }

  NodeId NearestNP() const {
    if (frontier_.empty() || sk_.nodes_[frontier_.back()].kind != NodeKind::kNP) {
      throw ChunkError{};
    }
    return frontier_.back();
  }

  // Closest-head PP attachment. The candidates are the NP and verb heads on
  // the frontier within the current clause, nearest first; a transparent
  // genus is represented by its of-complement. The PP is ambiguous unless
  // it is the first post-head constituent of the clause head.
  void AttachPP(NodeId pp) {
    std::vector<NodeId> candidates;
    NodeId clause_head = sk_.root_;
    for (std::size_t i = frontier_.size(); i-- > 0;) {
      NodeId n = frontier_[i];
      NodeKind k = sk_.nodes_[n].kind;
      if (k == NodeKind::kNP || k == NodeKind::kVP ||
          k == NodeKind::kPartClause) {
        candidates.push_back(n);
      }
      if (IsClause(n)) {
        clause_head = n;
        break;
      }
    }
    NodeId effective = Effective();
    if (effective != sk_.genus_) {
      std::erase(candidates, sk_.genus_);
    }
    if (candidates.empty()) throw ChunkError{};

    if (post_head_[clause_head] == 0) {
      AttachFixed(candidates.front(), pp);
      return;
    }
    AmbiguitySite site;
    site.site_id = sk_.sites_.size();
    site.kind = SiteKind::kPpAttach;
    site.movable = pp;
    site.candidates = candidates;
    sk_.sites_.push_back(site);
    std::size_t idx = FrontierIndex(candidates.front());
    ++post_head_[candidates.front()];
    frontier_.resize(idx + 1);
    PushSpine(pp);
  }

  void AttachToGenus(NodeId child) {
    NodeId host = Effective();
    if (std::find(frontier_.begin(), frontier_.end(), host) == frontier_.end()) {
      host = sk_.root_;
    }
    AttachFixed(host, child);
  }

  bool InRelClause() const {
    return std::any_of(frontier_.begin(), frontier_.end(), [&](NodeId n) {
      return sk_.nodes_[n].kind == NodeKind::kRelClause;
    });
  }

  // Coordination of the NP at pos_ with an NP on the frontier. The nearest
  // NP is always a candidate; each participle or relative clause between it
  // and the genus adds the NP that clause modifies.
  void Coordinate(const std::string &conj) {
    NodeId nearest = NearestNP();
    NodeId effective = Effective();
    std::size_t idx = FrontierIndex(nearest);

    std::vector<NodeId> candidates = {nearest};
    if (nearest != effective) {
      for (std::size_t i = idx; i-- > 1;) {
        NodeId n = frontier_[i];
        if (n == effective) break;
        NodeKind k = sk_.nodes_[n].kind;
        if (k != NodeKind::kRelClause && k != NodeKind::kPartClause) continue;
        NodeId host = frontier_[i - 1];
        if (host == effective || host == sk_.root_) break;
        if (sk_.nodes_[host].kind == NodeKind::kNP) candidates.push_back(host);
      }
    }

    NodeId conjunct = ParseNP();

    if (candidates.size() == 1) {
      auto parent = parent_[nearest];
      bool is_site_conjunct = std::any_of(
          sk_.sites_.begin(), sk_.sites_.end(),
          [&](const AmbiguitySite &s) { return s.movable == nearest; });
      if (is_site_conjunct) throw ChunkError{};
      NodeId group;
      if (parent && N(*parent).kind == NodeKind::kCoordGroup) {
        group = *parent;
        if (!conj.empty()) N(group).conj = conj;
      } else {
        group = NewNode(NodeKind::kCoordGroup, kNoToken);
        N(group).conj = conj.empty() ? "and" : conj;
        N(group).first_token = N(nearest).first_token;
        if (parent) {
          auto &kids = N(*parent).children;
          std::replace(kids.begin(), kids.end(), nearest, group);
          parent_[group] = parent;
        } else {
          sk_.root_ = group;
        }
        N(group).children.push_back(nearest);
        parent_[nearest] = group;
        std::size_t nidx = FrontierIndex(nearest);
        frontier_[nidx] = group;
      }
      N(group).children.push_back(conjunct);
      parent_[conjunct] = group;
      N(group).last_token = N(conjunct).last_token;
      frontier_.resize(FrontierIndex(group) + 1);
      frontier_.push_back(conjunct);
      return;
    }

    NodeId group = NewNode(NodeKind::kCoordGroup, kNoToken);
    N(group).conj = conj.empty() ? "and" : conj;
    N(group).first_token = N(nearest).first_token;
    N(group).last_token = N(conjunct).last_token;
    AmbiguitySite site;
    site.site_id = sk_.sites_.size();
    site.kind = SiteKind::kCoordScope;
    site.movable = conjunct;
    site.candidates = candidates;
    site.group = group;
    sk_.sites_.push_back(site);
    frontier_.resize(idx);
    frontier_.push_back(group);
    frontier_.push_back(conjunct);
  }

  void ConjunctionAt() {
    std::size_t conj_token = pos_++;
    std::string conj = sk_.tokens_[conj_token].lemma;
    if (!StartsNP(pos_) || frontier_.empty() ||
        sk_.nodes_[frontier_.back()].kind != NodeKind::kNP) {
      pos_ = conj_token;
      TailToEnd();
      return;
    }
    Coordinate(conj);
  }

  // ", and grows ..." inside a relative clause: another verb of the clause.
  void VerbCoordination() {
    ++pos_;  // conjunction
    NodeId rel = kNoToken;
    for (std::size_t i = frontier_.size(); i-- > 0;) {
      if (sk_.nodes_[frontier_[i]].kind == NodeKind::kRelClause) {
        rel = frontier_[i];
        break;
      }
    }
    if (rel == kNoToken) throw ChunkError{};
    NodeId vp = ParseVerbPhrase(NodeKind::kVP, Cat::kVerb);
    AttachFixed(rel, vp);
  }

  void HandleComma() {
    std::size_t comma = pos_++;
    if (AtEnd()) return;
    const Token &t = Peek();
    if (t.surface == "...") {
      TailToEnd();
      return;
    }
    if (t.surface == "etc.") {
      ++pos_;
      return;
    }
    if (t.cat == Cat::kConj) {
      if (InRelClause() && Has(1) && Peek(1).IsWord() &&
          Peek(1).cat != Cat::kDet && !StartsNPListItem(pos_ + 1)) {
        VerbCoordination();
      } else {
        ConjunctionAt();
      }
      return;
    }
    if (t.cat == Cat::kRelPron) {
      AttachToGenus(ParseRelClause());
      return;
    }
    if (t.cat == Cat::kPrep) {
      if (auto pp = ParsePP()) {
        AttachToGenus(*pp);
      } else {
        TailToEnd();
      }
      return;
    }
    if (t.cat == Cat::kGerund) {
      AttachToGenus(ParsePartClause());
      return;
    }
    if (t.lemma == "used") {
      if (PeekCat(1, Cat::kPrep)) {
        AttachToGenus(ParsePartClause());
      } else {
        TailToEnd();
      }
      return;
    }
    if (t.cat == Cat::kOther && t.IsWord()) {
      TailUntil([](const Token &tok) { return tok.surface == ","; });
      return;
    }
    if (StartsNP(pos_) && !frontier_.empty() &&
        sk_.nodes_[frontier_.back()].kind == NodeKind::kNP) {
      std::size_t end = NPEnd(pos_);
      if (end != kNoToken && end < sk_.tokens_.size()) {
        const Token &after = sk_.tokens_[end];
        if (after.surface == "," || after.cat == Cat::kConj ||
            after.surface == "etc.") {
          Coordinate("");
          return;
        }
      }
    }
    pos_ = comma + 1;
    TailToEnd();
  }

  // True when the tokens at `index` read as a list item that continues a
  // noun coordination (a bare noun followed by more list material).
  bool StartsNPListItem(std::size_t index) const {
    if (!StartsNP(index)) return false;
    const auto &toks = sk_.tokens_;
    if (toks[index].cat == Cat::kDet) return true;
    std::size_t end = NPEnd(index);
    return end != kNoToken &&
           (end >= toks.size() || toks[end].surface == "," ||
            toks[end].cat == Cat::kConj);
  }

  void ParseModifiers() {
    while (!AtEnd()) {
      const Token &t = Peek();
      if (t.surface == "...") {
        TailToEnd();
        break;
      }
      if (t.surface == "." && pos_ + 1 == sk_.tokens_.size()) {
        ++pos_;
        break;
      }
      switch (t.cat) {
        case Cat::kPrep: {
          if (auto pp = ParsePP()) {
            AttachPP(*pp);
          } else {
            TailToEnd();
          }
          break;
        }
        case Cat::kRelPron: {
          NodeId host = NearestNP();
          AttachFixed(host, ParseRelClause());
          break;
        }
        case Cat::kGerund: {
          if (frontier_.empty() ||
              sk_.nodes_[frontier_.back()].kind != NodeKind::kNP) {
            TailToEnd();
            break;
          }
          NodeId host = frontier_.back();
          AttachFixed(host, ParsePartClause());
          break;
        }
        case Cat::kConj:
          ConjunctionAt();
          break;
        case Cat::kPunct:
          if (t.surface == ",") {
            HandleComma();
          } else if (t.surface == "(") {
            TailUntil([](const Token &tok) { return tok.surface == ")"; });
            if (!AtEnd()) {
              ++pos_;
              N(sk_.nodes_.size() - 1).last_token = pos_ - 1;
            }
          } else {
            TailToEnd();
          }
          break;
        case Cat::kOther:
          if (t.IsWord()) {
            ++pos_;  // adverbs such as "usu." are ignored
          } else {
            TailToEnd();
          }
          break;
        case Cat::kAdj:
          if (IsParticiple(t) && PeekCat(1, Cat::kPrep) && !frontier_.empty() &&
              sk_.nodes_[frontier_.back()].kind == NodeKind::kNP) {
            NodeId host = frontier_.back();
            AttachFixed(host, ParsePartClause());
          } else {
            TailToEnd();
          }
          break;
        default:
          TailToEnd();
          break;
      }
    }
  }

  void ParseNounDefinition() {
    NodeId genus = ParseNP();
    sk_.root_ = sk_.genus_ = genus;
    frontier_ = {genus};
    ParseModifiers();
  }

  void ParseVerbDefinition() {
    if (!AtEnd() && Peek().lemma == "to") ++pos_;
    if (AtEnd() || !Peek().IsWord() || Peek().cat == Cat::kDet ||
        Peek().cat == Cat::kPrep) {
      throw ChunkError{};
    }
    std::size_t head = pos_++;
    Retag(head, Cat::kVerb);
    NodeId vp = NewNode(NodeKind::kVP, head);
    N(vp).first_token = 0;
    sk_.root_ = sk_.genus_ = vp;
    frontier_ = {vp};
    if (PeekSurface(0, "(") && StartsNP(pos_ + 1)) {
      ++pos_;
      NodeId obj = ParseNP();
      if (!PeekSurface(0, ")")) throw ChunkError{};
      ++pos_;
      N(obj).optional = true;
      AttachFixed(vp, obj);
    } else if (StartsNP(pos_)) {
      AttachFixed(vp, ParseNP());
    }
    ParseModifiers();
  }

  const std::vector<std::string> &transparent_;
  Sketch sk_;
  std::size_t pos_ = 0;
  std::vector<NodeId> frontier_;
  std::vector<std::optional<NodeId>> parent_;
  std::vector<int> post_head_;
};

Sketch ParseDefinition(const DictEntry &entry, const std::vector<Token> &tokens,
                       const std::vector<std::string> &transparent_heads) {
  try {
    SketchBuilder builder(entry, tokens, transparent_heads);
    return builder.Build();
  } catch (const ChunkError &) {
    SketchBuilder builder(entry, tokens, transparent_heads);
    return builder.Flat();
  }
}

std::vector<std::vector<std::size_t>> EnumerateAttachments(
    const Sketch &sketch) {
  std::vector<std::vector<std::size_t>> out = {{}};
  for (const AmbiguitySite &site : sketch.sites()) {
    std::vector<std::vector<std::size_t>> next;
    next.reserve(out.size() * site.candidates.size());
    for (const auto &prefix : out) {
      for (std::size_t c = 0; c < site.candidates.size(); ++c) {
        auto v = prefix;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

Sketch Reattach(const Sketch &sketch, std::size_t site_id,
                std::size_t candidate_index) {
  if (site_id >= sketch.sites_.size()) throw NoSuchSite(site_id);
  if (candidate_index >= sketch.sites_[site_id].candidates.size()) {
    throw NoSuchCandidate(site_id, candidate_index);
  }
  Sketch out = sketch;
  out.sites_[site_id].chosen = candidate_index;
  return out;
}

Sketch ApplyChoices(const Sketch &sketch,
                    const std::vector<std::size_t> &choices) {
  if (choices.size() != sketch.sites().size()) {
    throw Error("choice vector has " + std::to_string(choices.size()) +
                " entries for " + std::to_string(sketch.sites().size()) +
                " sites");
  }
  Sketch out = sketch;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    out = Reattach(out, i, choices[i]);
  }
  return out;
}

std::string SerializeSketch(const Sketch &sketch) {
  if (sketch.nodes().empty()) return "";
  TreeView view = sketch.Materialize();
  std::string out;
  std::function<void(NodeId, int)> visit = [&](NodeId n, int depth) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += sketch.Label(n);
    if (sketch.node(n).optional) out += " (optional)";
    for (const AmbiguitySite &s : sketch.sites()) {
      if (s.movable == n) {
        out += " [site " + std::to_string(s.site_id) + ": chosen " +
               std::to_string(s.chosen) + " of " +
               std::to_string(s.candidates.size()) + "]";
      }
    }
    out += '\n';
    for (NodeId c : view.children[n]) visit(c, depth + 1);
  };
  visit(view.root, 0);
  return out;
}

}  // namespace lexboot
