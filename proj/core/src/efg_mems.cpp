#include "graphmems/efg_mems.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gm {
namespace {

WalkCase classify(const EfgIndex& idx, const SuffixTree::Locus& l) {
  if (l.depth == 0) return WalkCase::NoDelimiter;
  auto z = idx.tree().descend(l, sym::kZero);
  if (!z) return WalkCase::NoDelimiter;
  const auto& loc = idx.leafLocation(idx.designatedLeaf(z->node));
  return loc && loc->node_in_path == 0 ? WalkCase::Decomposable : WalkCase::TwoNodes;
}

}  // namespace

WalkResult walkMaximalPrefix(const EfgIndex& idx, const SymbolString& q, std::size_t x_hat) {
  if (x_hat < 1 || x_hat > q.size()) throw std::out_of_range("walk start outside the query");
  const SuffixTree& st = idx.tree();
  WalkResult r;
  r.locus = st.rootLocus();
  std::size_t p = x_hat - 1;
  while (p < q.size()) {
    ++r.consumed;
    auto next = st.descend(r.locus, q[p]);
    if (!next) break;
    r.locus = *next;
    ++p;
  }
  r.y = p;
  r.case_tag = classify(idx, r.locus);
  idx.marksAbove(r.locus, r.marks);
  return r;
}

std::vector<EdgeOccurrence> findEdgeOccurrences(const EfgIndex& idx, const SymbolString& q, EfgScanStats* stats) {
  const SuffixTree& st = idx.tree();
  std::vector<EdgeOccurrence> out;
  std::vector<MarkedEdge> marks;
  SuffixTree::Locus locus = st.rootLocus();
  std::size_t consumed = 0, hops = 0;
  for (std::size_t p = 0; p < q.size(); ++p) {
    // locus spells q[p .. p + depth)
    while (p + locus.depth < q.size()) {
      ++consumed;
      auto next = st.descend(locus, q[p + locus.depth]);
      if (!next) break;
      locus = *next;
    }
    if (stats) ++stats->cases[static_cast<std::size_t>(classify(idx, locus)) - 1];
    idx.marksAbove(locus, marks);
    for (const auto& m : marks) out.push_back({p + 1, m.u, m.v});
    if (locus.depth > 0) locus = st.suffixLink(locus, &hops);
  }
  std::sort(out.begin(), out.end());
  if (stats) {
    stats->consumed += consumed;
    stats->hops += hops;
    stats->occurrences += out.size();
  }
  return out;
}

std::vector<LeftEntry> collectLeftEntries(const EfgIndex& idx, const SymbolString& q, NodeIndex node,
                                          std::size_t pos) {
  const LabeledGraph& g = idx.graph();
  std::vector<std::pair<NodeIndex, std::size_t>> suffixes;
  idx.trie(node).commonSuffixes(q, pos - 1, suffixes);
  std::vector<LeftEntry> out;
  for (auto [u, alpha] : suffixes) {
    if (alpha == 0) continue;
    const std::size_t len = g.labelLength(u);
    const std::size_t x = pos - alpha;
    // a full label stays maximal unless the single symbol before it matches
    if (alpha == len && x > 1 && g.leftExtensionSymbol(u) == q[x - 2]) continue;
    out.push_back({u, len - alpha + 1, alpha});
  }
  return out;
}

std::vector<RightEntry> collectRightEntries(const EfgIndex& idx, const SymbolString& q, NodeIndex prev,
                                            NodeIndex node, std::size_t end) {
  const LabeledGraph& g = idx.graph();
  std::vector<RightEntry> out;
  auto locus = idx.markedLocus(prev, node);
  if (!locus || end >= q.size()) return out;
  const SuffixTree& st = idx.tree();
  const SymbolString& text = idx.text().text();
  std::set<NodeIndex> seen;
  for (std::size_t k = st.lb(locus->node); k <= st.rb(locus->node); ++k) {
    const auto& loc = idx.leafLocation(st.leafOfRank(k));
    if (!loc || loc->node_in_path != 0 || loc->offset != 0) continue;
    const PathChunk& chunk = idx.text().chunks()[loc->chunk];
    if (chunk.path[0] != prev || chunk.path[1] != node) continue;
    const NodeIndex w = chunk.path[2];
    if (!seen.insert(w).second) continue;
    const std::size_t len = g.labelLength(w);
    std::size_t gamma = 0;
    while (gamma < len && end + gamma < q.size() && text[chunk.node_starts[2] + gamma] == q[end + gamma]) ++gamma;
    if (gamma == 0) continue;
    const std::size_t y = end + gamma;
    if (gamma == len && y < q.size() && g.rightExtensionSymbol(w) == q[y]) continue;
    out.push_back({w, gamma});
  }
  return out;
}

std::vector<CompactMemEncoding> buildEncodings(const EfgIndex& idx, const SymbolString& q, std::size_t query_id,
                                               const std::vector<EdgeOccurrence>& occurrences,
                                               EfgScanStats* stats) {
  const LabeledGraph& g = idx.graph();
  // successors of occurrence (p, u, v) start with v at p + |l(u)|
  std::map<std::pair<std::size_t, NodeIndex>, std::vector<std::size_t>> by_start;
  for (std::size_t k = 0; k < occurrences.size(); ++k)
    by_start[{occurrences[k].pos, occurrences[k].u}].push_back(k);
  std::vector<std::vector<std::size_t>> next(occurrences.size());
  std::vector<bool> has_pred(occurrences.size(), false);
  for (std::size_t k = 0; k < occurrences.size(); ++k) {
    const auto& o = occurrences[k];
    auto it = by_start.find({o.pos + g.labelLength(o.u), o.v});
    if (it == by_start.end()) continue;
    next[k] = it->second;
    for (std::size_t s : it->second) has_pred[s] = true;
  }

  std::map<std::pair<std::size_t, NodeIndex>, std::vector<LeftEntry>> left_memo;
  std::map<std::tuple<std::size_t, NodeIndex, NodeIndex>, std::vector<RightEntry>> right_memo;
  auto leftAt = [&](NodeIndex node, std::size_t pos) -> const std::vector<LeftEntry>& {
    auto [it, fresh] = left_memo.try_emplace({pos, node});
    if (fresh) it->second = collectLeftEntries(idx, q, node, pos);
    return it->second;
  };
  auto rightAt = [&](NodeIndex prev, NodeIndex node, std::size_t end) -> const std::vector<RightEntry>& {
    auto [it, fresh] = right_memo.try_emplace({end, prev, node});
    if (fresh) it->second = collectRightEntries(idx, q, prev, node, end);
    return it->second;
  };

  std::vector<CompactMemEncoding> out;
  auto emit = [&](const std::vector<std::size_t>& chain) {
    CompactMemEncoding enc;
    enc.query = query_id;
    const auto& first = occurrences[chain.front()];
    enc.spine.push_back(first.u);
    enc.spine_pos.push_back(first.pos);
    for (std::size_t k : chain) {
      enc.spine.push_back(occurrences[k].v);
      enc.spine_pos.push_back(occurrences[k].pos + g.labelLength(occurrences[k].u));
    }
    const std::size_t K = enc.spine.size();
    enc.u_lt.resize(K);
    enc.right.resize(K);
    for (std::size_t a = 0; a + 1 < K; ++a) {
      const auto& entries = leftAt(enc.spine[a], enc.spine_pos[a]);
      if (a == 0)
        enc.u1 = entries;
      else
        enc.u_lt[a] = entries;
    }
    for (std::size_t b = 1; b < K; ++b)
      enc.right[b] = rightAt(enc.spine[b - 1], enc.spine[b], enc.spine_pos[b] + g.labelLength(enc.spine[b]) - 1);
    out.push_back(std::move(enc));
  };

  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self, std::size_t k) -> void {
    chain.push_back(k);
    if (next[k].empty()) emit(chain);
    for (std::size_t s : next[k]) self(self, s);
    chain.pop_back();
  };
  for (std::size_t k = 0; k < occurrences.size(); ++k)
    if (!has_pred[k]) extend(extend, k);
  if (stats) stats->encodings += out.size();
  return out;
}

std::vector<MemRecord> expandEncoding(const CompactMemEncoding& enc, const LabeledGraph& g, std::size_t kappa) {
  std::vector<MemRecord> out;
  const std::size_t K = enc.spine.size();
  for (std::size_t a = 0; a + 1 < K; ++a) {
    const auto& lefts = a == 0 ? enc.u1 : enc.u_lt[a];
    if (lefts.empty()) continue;
    for (std::size_t b = a + 1; b < K; ++b) {
      const std::size_t spine_end = enc.spine_pos[b] + g.labelLength(enc.spine[b]) - 1;
      const std::size_t spine_len = spine_end - enc.spine_pos[a] + 1;
      for (const auto& l : lefts)
        for (const auto& r : enc.right[b]) {
          if (l.alpha + spine_len + r.j < kappa) continue;
          MemRecord rec;
          rec.query = enc.query;
          rec.x = enc.spine_pos[a] - l.alpha;
          rec.y = spine_end + r.j;
          rec.location.start = l.i;
          rec.location.path.push_back(l.node);
          rec.location.path.insert(rec.location.path.end(), enc.spine.begin() + a, enc.spine.begin() + b + 1);
          rec.location.path.push_back(r.node);
          rec.location.end = r.j;
          rec.category = MemCategory::Efg4Plus;
          out.push_back(std::move(rec));
        }
    }
  }
  return out;
}

std::vector<MemRecord> findEfg4PlusMems(const EfgIndex& idx, const QuerySet& queries, std::size_t kappa,
                                        EfgScanStats* stats) {
  validateKappa(kappa);
  std::vector<MemRecord> out;
  for (std::size_t qi = 0; qi < queries.size(); ++qi) {
    const auto begin = queries.text().begin() + static_cast<std::ptrdiff_t>(queries.position(qi, 1));
    SymbolString q(begin, begin + static_cast<std::ptrdiff_t>(queries.query(qi).size()));
    auto occurrences = findEdgeOccurrences(idx, q, stats);
    for (const auto& enc : buildEncodings(idx, q, qi, occurrences, stats)) {
      auto records = expandEncoding(enc, idx.graph(), kappa);
      out.insert(out.end(), records.begin(), records.end());
    }
  }
  canonicalize(idx.graph(), out);
  if (stats) stats->records += out.size();
  return out;
}

std::vector<MemRecord> findEfgMems(const EfgIndex& idx, const QuerySet& queries, std::size_t kappa,
                                   const FinderOptions& options, EfgScanStats* stats) {
  std::vector<MemRecord> out = findAllMemsGeneric(idx.graph(), queries, kappa, 3, options);
  auto longer = findEfg4PlusMems(idx, queries, kappa, stats);
  out.insert(out.end(), longer.begin(), longer.end());
  canonicalize(idx.graph(), out);
  return out;
}

std::vector<MemRecord> findEfgMems(const LabeledGraph& g, const EfgStructure& efg, const QuerySet& queries,
                                   std::size_t kappa, const FinderOptions& options, EfgScanStats* stats) {
  return findEfgMems(buildEfgIndex(g, efg), queries, kappa, options, stats);
}

}  // namespace gm
