#pragma once

#include <map>
#include <optional>
#include <vector>

#include "graphmems/graph.hpp"
#include "graphmems/path_text.hpp"
#include "graphmems/suffix_tree.hpp"

namespace gm {

// Locus spelling l(u)l(v) for an edge (u, v).
struct MarkedEdge {
  std::size_t depth;
  NodeIndex u;
  NodeIndex v;
};

// Trie over reverse(l(u)) for the in-neighbors u of one node.
class ReverseLabelTrie {
 public:
  ReverseLabelTrie() = default;
  ReverseLabelTrie(const LabeledGraph& g, NodeIndex v);

  std::size_t size() const { return nodes_.size(); }
  // For every in-neighbor u: the length of the longest common suffix of
  // l(u) and q[0..end), in in-neighbor order.
  void commonSuffixes(const SymbolString& q, std::size_t end,
                      std::vector<std::pair<NodeIndex, std::size_t>>& out) const;

 private:
  struct TrieNode {
    std::map<Symbol, std::uint32_t> children;
    std::size_t depth = 0;
    std::vector<std::uint32_t> labels;  // in-neighbor slots in this subtree
  };
  std::vector<TrieNode> nodes_;
  std::vector<NodeIndex> in_;
};

// Suffix tree of T_3 augmented with edge marks, leaf metadata and reverse
// label tries. Keeps a pointer to the graph, which must outlive the index.
class EfgIndex {
 public:
  const LabeledGraph& graph() const { return *graph_; }
  const EfgStructure& efg() const { return efg_; }
  const PathText& text() const { return text_; }
  const SuffixTree& tree() const { return tree_; }
  const ReverseLabelTrie& trie(NodeIndex v) const { return tries_[v]; }

  // Marks on the edge into tree node `node`, by increasing depth.
  const std::vector<MarkedEdge>& marks(SuffixTree::NodeId node) const;
  std::size_t markCount() const { return mark_count_; }
  // Marked locus of edge (u, v); nullopt when the edge lies on no 3-node walk.
  std::optional<SuffixTree::Locus> markedLocus(NodeIndex u, NodeIndex v) const;
  // Marks spelled by prefixes of the locus, shallowest last.
  void marksAbove(const SuffixTree::Locus& l, std::vector<MarkedEdge>& out) const;

  // Lexicographically smallest leaf below a tree node.
  SuffixTree::NodeId designatedLeaf(SuffixTree::NodeId v) const { return tree_.leafOfRank(tree_.lb(v)); }
  // Chunk and offset of a leaf's suffix; nullopt when it starts on a delimiter.
  const std::optional<TextLocation>& leafLocation(SuffixTree::NodeId leaf) const { return leaf_loc_[leaf]; }

  friend EfgIndex buildEfgIndex(const LabeledGraph& g, const EfgStructure& efg);

 private:
  const LabeledGraph* graph_ = nullptr;
  EfgStructure efg_;
  PathText text_;
  SuffixTree tree_;
  std::vector<std::vector<MarkedEdge>> marks_;
  std::vector<SuffixTree::NodeId> marked_ancestor_;  // nearest proper ancestor with marks
  std::map<std::pair<NodeIndex, NodeIndex>, SuffixTree::Locus> edge_locus_;
  std::size_t mark_count_ = 0;
  std::vector<std::optional<TextLocation>> leaf_loc_;
  std::vector<ReverseLabelTrie> tries_;
};

// Throws GraphError unless the block graph is semi-repeat-free.
EfgIndex buildEfgIndex(const LabeledGraph& g, const EfgStructure& efg);

}  // namespace gm
