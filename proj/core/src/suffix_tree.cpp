#include "graphmems/suffix_tree.hpp"

#include <stdexcept>
#include <unordered_map>

#include "graphmems/rmq.hpp"

namespace gm {

SuffixTree::SuffixTree(SymbolString text, std::size_t code_count) : sa_(std::move(text), code_count) {
  buildTopology();
  buildSuffixLinks();
}

void SuffixTree::buildTopology() {
  const std::size_t n = sa_.size();
  const auto sa = sa_.sa();
  const auto lcp = sa_.lcp();
  nodes_.assign(n, {});
  for (std::size_t r = 0; r < n; ++r) {
    nodes_[r].depth = static_cast<std::uint32_t>(n - sa[r]);
    nodes_[r].lb = nodes_[r].rb = static_cast<std::uint32_t>(r);
  }

  struct Open {
    std::uint32_t depth;
    std::uint32_t lb;
    std::vector<NodeId> children;
  };
  auto close = [&](Open& open, std::size_t rb) {
    NodeId id = static_cast<NodeId>(nodes_.size());
    Node node;
    node.depth = open.depth;
    node.lb = open.lb;
    node.rb = static_cast<std::uint32_t>(rb);
    nodes_.push_back(node);
    NodeId prev = kNone;
    for (NodeId c : open.children) {
      nodes_[c].parent = id;
      if (prev == kNone)
        nodes_[id].first_child = c;
      else
        nodes_[prev].next_sibling = c;
      prev = c;
    }
    return id;
  };

  std::vector<Open> stack;
  stack.push_back({0, 0, {}});
  for (std::size_t i = 0; i < n; ++i) {
    NodeId last = static_cast<NodeId>(i);
    std::uint32_t h = i + 1 < n ? lcp[i + 1] : 0;
    std::uint32_t lb = static_cast<std::uint32_t>(i);
    while (stack.back().depth > h) {
      Open open = std::move(stack.back());
      stack.pop_back();
      open.children.push_back(last);
      lb = open.lb;
      last = close(open, i);
    }
    if (stack.back().depth < h)
      stack.push_back({h, lb, {last}});
    else
      stack.back().children.push_back(last);
  }
  root_ = close(stack.back(), n - 1);
}

void SuffixTree::buildSuffixLinks() {
  const std::size_t n = sa_.size();
  const auto sa = sa_.sa();
  const auto isa = sa_.isa();
  const auto lcp = sa_.lcp();
  std::vector<std::int64_t> lcp_values(lcp.begin(), lcp.end());
  RmqStructure rmq(std::move(lcp_values));

  std::unordered_map<std::uint64_t, NodeId> by_range;
  by_range.reserve(nodes_.size() - n);
  auto key = [](std::size_t lb, std::size_t rb) { return (static_cast<std::uint64_t>(lb) << 32) | rb; };
  for (NodeId v = static_cast<NodeId>(n); v < nodes_.size(); ++v) by_range.emplace(key(nodes_[v].lb, nodes_[v].rb), v);

  // min lcp over ranks (a, b], i.e. lcp of suffixes of rank a and b
  auto lcpBetween = [&](std::size_t a, std::size_t b) {
    return a == b ? kInfinity : rmq[rmq.argmin(a + 1, b)];
  };

  for (NodeId v = static_cast<NodeId>(n); v < nodes_.size(); ++v) {
    if (v == root_) continue;
    const std::size_t d = nodes_[v].depth;
    if (d == 1) {
      nodes_[v].link = root_;
      continue;
    }
    const std::int64_t target = static_cast<std::int64_t>(d - 1);
    std::size_t lo = isa[sa[nodes_[v].lb] + 1];
    std::size_t hi = isa[sa[nodes_[v].rb] + 1];
    if (lo > hi) std::swap(lo, hi);
    // widen [lo, hi] to the maximal rank range sharing a prefix of length d - 1
    std::size_t a = 0, b = lo;  // smallest rank L with lcpBetween(L, lo) >= target lies in [a, b]
    while (a < b) {
      std::size_t mid = (a + b) / 2;
      if (lcpBetween(mid, lo) >= target)
        b = mid;
      else
        a = mid + 1;
    }
    std::size_t left = a;
    a = hi;
    b = n - 1;
    while (a < b) {
      std::size_t mid = (a + b + 1) / 2;
      if (lcpBetween(hi, mid) >= target)
        a = mid;
      else
        b = mid - 1;
    }
    auto it = by_range.find(key(left, a));
    if (it == by_range.end()) throw std::logic_error("suffix link target missing");
    nodes_[v].link = it->second;
  }
}

SuffixTree::NodeId SuffixTree::child(NodeId v, Symbol a) const {
  const std::size_t d = nodes_[v].depth;
  for (NodeId c = nodes_[v].first_child; c != kNone; c = nodes_[c].next_sibling)
    if (symbolAt(c, d) == a) return c;
  return kNone;
}

std::optional<SuffixTree::Locus> SuffixTree::descend(const Locus& l, Symbol a) const {
  const Node& node = nodes_[l.node];
  if (l.depth == node.depth) {
    if (isLeaf(l.node)) return std::nullopt;
    NodeId c = child(l.node, a);
    if (c == kNone) return std::nullopt;
    return Locus{c, l.depth + 1};
  }
  // suffix end reached on a leaf edge
  if (sa_.sa()[node.lb] + l.depth >= text().size()) return std::nullopt;
  if (symbolAt(l.node, l.depth) != a) return std::nullopt;
  return Locus{l.node, l.depth + 1};
}

SuffixTree::Locus SuffixTree::suffixLink(const Locus& l, std::size_t* hops) const {
  if (l.depth == 0) throw std::invalid_argument("suffix link of the root");
  const Node& node = nodes_[l.node];
  if (!isLeaf(l.node) && l.depth == node.depth) return {node.link, l.depth - 1};

  const std::size_t target = l.depth - 1;
  const std::size_t start = sa_.sa()[node.lb] + 1;
  NodeId p = node.parent;
  NodeId cur = p == root_ ? root_ : nodes_[p].link;
  while (nodes_[cur].depth < target) {
    NodeId c = child(cur, text()[start + nodes_[cur].depth]);
    if (hops) ++*hops;
    if (nodes_[c].depth >= target) return {c, target};
    cur = c;
  }
  return {cur, target};
}

SymbolString SuffixTree::spell(const Locus& l) const {
  SymbolString s;
  for (std::size_t k = 0; k < l.depth; ++k) s.push_back(symbolAt(l.node, k));
  return s;
}

}  // namespace gm
