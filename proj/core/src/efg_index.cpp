#include "graphmems/efg_index.hpp"

#include <algorithm>

#include "graphmems/efg.hpp"

namespace gm {

ReverseLabelTrie::ReverseLabelTrie(const LabeledGraph& g, NodeIndex v) : in_(g.in(v).begin(), g.in(v).end()) {
  nodes_.emplace_back();
  for (std::uint32_t slot = 0; slot < in_.size(); ++slot) {
    const SymbolString& label = g.encodedLabel(in_[slot]);
    std::uint32_t cur = 0;
    nodes_[cur].labels.push_back(slot);
    for (auto it = label.rbegin(); it != label.rend(); ++it) {
      auto found = nodes_[cur].children.find(*it);
      if (found == nodes_[cur].children.end()) {
        auto next = static_cast<std::uint32_t>(nodes_.size());
        nodes_[cur].children.emplace(*it, next);
        TrieNode node;
        node.depth = nodes_[cur].depth + 1;
        nodes_.push_back(std::move(node));
        cur = next;
      } else {
        cur = found->second;
      }
      nodes_[cur].labels.push_back(slot);
    }
  }
}

void ReverseLabelTrie::commonSuffixes(const SymbolString& q, std::size_t end,
                                      std::vector<std::pair<NodeIndex, std::size_t>>& out) const {
  out.clear();
  if (in_.empty()) return;
  std::vector<std::uint32_t> path{0};
  for (std::size_t k = end; k-- > 0;) {
    auto it = nodes_[path.back()].children.find(q[k]);
    if (it == nodes_[path.back()].children.end()) break;
    path.push_back(it->second);
  }
  std::vector<std::size_t> alpha(in_.size(), 0);
  std::vector<bool> done(in_.size(), false);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    for (std::uint32_t slot : nodes_[*it].labels)
      if (!done[slot]) {
        done[slot] = true;
        alpha[slot] = nodes_[*it].depth;
      }
  for (std::size_t s = 0; s < in_.size(); ++s) out.emplace_back(in_[s], alpha[s]);
}

const std::vector<MarkedEdge>& EfgIndex::marks(SuffixTree::NodeId node) const { return marks_[node]; }

std::optional<SuffixTree::Locus> EfgIndex::markedLocus(NodeIndex u, NodeIndex v) const {
  auto it = edge_locus_.find({u, v});
  if (it == edge_locus_.end()) return std::nullopt;
  return it->second;
}

void EfgIndex::marksAbove(const SuffixTree::Locus& l, std::vector<MarkedEdge>& out) const {
  out.clear();
  for (const auto& m : marks_[l.node]) {
    if (m.depth > l.depth) break;
    out.push_back(m);
  }
  for (auto a = marked_ancestor_[l.node]; a != SuffixTree::kNone; a = marked_ancestor_[a])
    out.insert(out.end(), marks_[a].rbegin(), marks_[a].rend());
}

EfgIndex buildEfgIndex(const LabeledGraph& g, const EfgStructure& efg) {
  auto report = validateSemiRepeatFree(g, efg);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw GraphError("block graph is not semi-repeat-free: label of " + g.id(v.node) + " occurs at offset " +
                     std::to_string(v.offset) + " of " + g.id(v.witness));
  }
  EfgIndex idx;
  idx.graph_ = &g;
  idx.efg_ = efg;
  idx.text_ = buildEfg3Text(g);
  idx.tree_ = SuffixTree(idx.text_.text(), g.alphabet().codeCount());
  const SuffixTree& st = idx.tree_;
  const auto& sa = st.index().sa();
  const auto& isa = st.index().isa();

  idx.marks_.assign(st.nodeCount(), {});
  auto mark = [&](std::size_t pos, NodeIndex u, NodeIndex v) {
    if (idx.edge_locus_.count({u, v})) return;
    const std::size_t depth = g.labelLength(u) + g.labelLength(v);
    SuffixTree::NodeId node = st.leafOfRank(isa[pos]);
    while (st.parent(node) != SuffixTree::kNone && st.depth(st.parent(node)) >= depth) node = st.parent(node);
    idx.edge_locus_.emplace(std::make_pair(u, v), SuffixTree::Locus{node, depth});
    idx.marks_[node].push_back({depth, u, v});
    ++idx.mark_count_;
  };
  for (const auto& chunk : idx.text_.chunks()) {
    mark(chunk.node_starts[0], chunk.path[0], chunk.path[1]);
    mark(chunk.node_starts[1], chunk.path[1], chunk.path[2]);
  }
  for (auto& m : idx.marks_)
    std::sort(m.begin(), m.end(), [](const MarkedEdge& a, const MarkedEdge& b) { return a.depth < b.depth; });

  idx.marked_ancestor_.assign(st.nodeCount(), SuffixTree::kNone);
  std::vector<SuffixTree::NodeId> stack{st.root()};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    auto inherited = idx.marks_[v].empty() ? idx.marked_ancestor_[v] : v;
    for (auto c = st.firstChild(v); c != SuffixTree::kNone; c = st.nextSibling(c)) {
      idx.marked_ancestor_[c] = inherited;
      stack.push_back(c);
    }
  }

  idx.leaf_loc_.resize(st.leafCount());
  for (std::size_t r = 0; r < st.leafCount(); ++r) idx.leaf_loc_[r] = idx.text_.locate(sa[r]);

  idx.tries_.reserve(g.nodeCount());
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) idx.tries_.emplace_back(g, v);
  return idx;
}

}  // namespace gm
