#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphmems/alphabet.hpp"

namespace gm {

using NodeIndex = std::uint32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NodeSpec {
  std::string id;
  std::string label;
};

// Directed graph with nonempty string labels on nodes. Node order is the
// construction order; ids are the stable external names.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  // Throws GraphError on empty labels, reserved bytes, duplicate ids,
  // dangling or duplicate edges.
  LabeledGraph(std::vector<NodeSpec> nodes, const std::vector<std::pair<std::string, std::string>>& edges);
  LabeledGraph(std::vector<NodeSpec> nodes, const std::vector<std::pair<NodeIndex, NodeIndex>>& edges);

  std::size_t nodeCount() const { return ids_.size(); }
  std::size_t edgeCount() const { return edge_count_; }
  const std::string& id(NodeIndex v) const { return ids_[v]; }
  const std::string& label(NodeIndex v) const { return labels_[v]; }
  std::size_t labelLength(NodeIndex v) const { return labels_[v].size(); }
  const SymbolString& encodedLabel(NodeIndex v) const { return encoded_[v]; }
  std::span<const NodeIndex> out(NodeIndex v) const { return out_[v]; }
  std::span<const NodeIndex> in(NodeIndex v) const { return in_[v]; }
  bool hasEdge(NodeIndex u, NodeIndex v) const;
  std::optional<NodeIndex> find(const std::string& id) const;

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t totalLabelLength() const { return total_length_; }
  // Maximum in- or out-degree.
  std::size_t maxDegree() const;
  bool isAcyclic() const;
  std::vector<std::pair<NodeIndex, NodeIndex>> edges() const;

  // Single symbol preceding/following every occurrence of the node label in
  // the graph, or sym::kHash when the in/out-neighbor set is empty or
  // disagrees.
  Symbol leftExtensionSymbol(NodeIndex v) const { return left_ext_[v]; }
  Symbol rightExtensionSymbol(NodeIndex v) const { return right_ext_[v]; }

 private:
  void init(std::vector<NodeSpec> nodes, const std::vector<std::pair<NodeIndex, NodeIndex>>& edges);

  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  std::vector<SymbolString> encoded_;
  std::vector<std::vector<NodeIndex>> out_;
  std::vector<std::vector<NodeIndex>> in_;
  std::vector<Symbol> left_ext_;
  std::vector<Symbol> right_ext_;
  std::unordered_map<std::string, NodeIndex> index_;
  Alphabet alphabet_;
  std::size_t edge_count_ = 0;
  std::size_t total_length_ = 0;
};

// Ordered partition of the nodes into blocks V_1..V_k.
struct EfgStructure {
  std::vector<std::vector<NodeIndex>> blocks;
  // block index of every node
  std::vector<std::size_t> block_of;

  std::size_t height() const;
  // Throws GraphError unless blocks partition the nodes and every edge goes
  // from one block to the next.
  static EfgStructure fromBlocks(const LabeledGraph& g, std::vector<std::vector<NodeIndex>> blocks);
};

// (i, P, j): the path P read from offset i of its first node to offset j of
// its last node. Offsets are 1-based.
struct GraphSubstring {
  std::size_t start = 1;
  std::vector<NodeIndex> path;
  std::size_t end = 1;

  bool operator==(const GraphSubstring&) const = default;
};

bool isValidSubstring(const LabeledGraph& g, const GraphSubstring& s);
std::string spelled(const LabeledGraph& g, const GraphSubstring& s);
std::size_t spelledLength(const LabeledGraph& g, const GraphSubstring& s);

std::set<char> leftExtension(const LabeledGraph& g, const GraphSubstring& s);
std::set<char> rightExtension(const LabeledGraph& g, const GraphSubstring& s);

}  // namespace gm
