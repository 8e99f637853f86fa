#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphmems/suffix_array.hpp"

namespace gm {

// Compact trie of all suffixes of T . END built bottom-up from the suffix and
// LCP arrays. Leaves are numbered by suffix rank (leaf k covers rank k);
// internal nodes follow. Every node covers the contiguous rank range
// [lb, rb] of its leaves.
class SuffixTree {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNone = 0xFFFFFFFFu;

  // Position in the tree: `depth` symbols spelled, ending on the edge into
  // `node` (or exactly at `node` when depth equals its string depth).
  struct Locus {
    NodeId node = 0;
    std::size_t depth = 0;
    bool operator==(const Locus&) const = default;
  };

  SuffixTree() = default;
  SuffixTree(SymbolString text, std::size_t code_count);

  const SuffixArrayIndex& index() const { return sa_; }
  const SymbolString& text() const { return sa_.text(); }

  NodeId root() const { return root_; }
  std::size_t leafCount() const { return sa_.size(); }
  std::size_t nodeCount() const { return nodes_.size(); }
  bool isLeaf(NodeId v) const { return v < leafCount(); }
  std::size_t depth(NodeId v) const { return nodes_[v].depth; }
  std::size_t lb(NodeId v) const { return nodes_[v].lb; }
  std::size_t rb(NodeId v) const { return nodes_[v].rb; }
  NodeId parent(NodeId v) const { return nodes_[v].parent; }
  NodeId firstChild(NodeId v) const { return nodes_[v].first_child; }
  NodeId nextSibling(NodeId v) const { return nodes_[v].next_sibling; }
  // Suffix link of an internal non-root node.
  NodeId link(NodeId v) const { return nodes_[v].link; }
  NodeId leafOfRank(std::size_t rank) const { return static_cast<NodeId>(rank); }
  // Text position of the suffix spelled by leaf `v`.
  std::size_t suffixStart(NodeId v) const { return sa_.sa()[nodes_[v].lb]; }

  // k-th (0-based) symbol of the string spelled from the root to v.
  Symbol symbolAt(NodeId v, std::size_t k) const { return text()[sa_.sa()[nodes_[v].lb] + k]; }
  NodeId child(NodeId v, Symbol a) const;

  Locus rootLocus() const { return {root_, 0}; }
  bool isExplicit(const Locus& l) const { return l.depth == nodes_[l.node].depth; }
  // Locus of spelling(l) . a, or nullopt when it does not occur.
  std::optional<Locus> descend(const Locus& l, Symbol a) const;
  // Locus of spelling(l) without its first symbol; requires l.depth >= 1.
  // Adds the number of child hops spent re-descending to *hops.
  Locus suffixLink(const Locus& l, std::size_t* hops = nullptr) const;

  // String spelled by a locus, for tests and diagnostics.
  SymbolString spell(const Locus& l) const;

 private:
  struct Node {
    std::uint32_t depth = 0;
    std::uint32_t lb = 0;
    std::uint32_t rb = 0;
    NodeId parent = kNone;
    NodeId first_child = kNone;
    NodeId next_sibling = kNone;
    NodeId link = kNone;
  };

  void buildTopology();
  void buildSuffixLinks();

  SuffixArrayIndex sa_;
  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

}  // namespace gm
