#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphmems/bitvector.hpp"
#include "graphmems/graph.hpp"
#include "graphmems/suffix_array.hpp"

namespace gm {

enum class PathTextKind { Nodes, Paths, Efg3 };

// One delimited chunk of a path text: the path it spells and the text
// position where each node label starts.
struct PathChunk {
  std::vector<NodeIndex> path;
  std::vector<std::size_t> node_starts;
  std::size_t end = 0;  // one past the last label symbol
};

// Where a text position falls inside the registered paths.
struct TextLocation {
  std::size_t chunk;
  std::size_t node_in_path;  // index into the chunk's path
  std::size_t offset;        // 0-based offset inside that node label
};

// Sentinel-delimited concatenation of node or path labels:
//   Nodes:  prod_v 0 l(v)
//   Paths:  0 prod_P (c l(u_1)...l(u_L) d 0), c/d the unique extension symbols or #
//   Efg3:   0 prod_(u,v,w) (l(u) l(v) l(w) 0)
class PathText {
 public:
  PathTextKind kind() const { return kind_; }
  // Nodes per chunk (1 for Nodes, 3 for Efg3).
  std::size_t pathLength() const { return path_length_; }
  const SymbolString& text() const { return text_; }
  const RankSelectBitvector& boundaries() const { return boundaries_; }
  const std::vector<PathChunk>& chunks() const { return chunks_; }
  std::size_t chunkOf(std::size_t pos) const { return boundaries_.rank(pos + 1) - 1; }

  // nullopt for delimiters, extension symbols and positions past the text.
  std::optional<TextLocation> locate(std::size_t pos) const;

  friend PathText buildNodesText(const LabeledGraph& g);
  friend PathText buildPathsText(const LabeledGraph& g, std::size_t node_count);
  friend PathText buildEfg3Text(const LabeledGraph& g);

 private:
  PathTextKind kind_ = PathTextKind::Nodes;
  std::size_t path_length_ = 1;
  SymbolString text_;
  RankSelectBitvector boundaries_;
  std::vector<PathChunk> chunks_;
};

PathText buildNodesText(const LabeledGraph& g);
// Throws std::invalid_argument when node_count < 1. Walks may repeat nodes.
PathText buildPathsText(const LabeledGraph& g, std::size_t node_count);
PathText buildEfg3Text(const LabeledGraph& g);

// All walks with exactly `node_count` nodes, DFS from nodes in load order
// with neighbors in adjacency order.
std::vector<std::vector<NodeIndex>> enumerateWalks(const LabeledGraph& g, std::size_t node_count);

// Upper bound n * L * d^(L-1) on the summed label length of all L-node walks.
double estimatePathsTextSize(const LabeledGraph& g, std::size_t node_count);

// Per suffix rank k (over text . END): the distance from the symbol after
// the k-th suffix's first symbol to the start of the last node of its path,
// i.e. |l(P)| - |l(u_L)| - i + 2 for a successor at 1-based offset i in the
// first node; kInfinity when the successor is not inside the first node.
// Throws std::invalid_argument unless pt is a Paths text indexed by sa.
std::vector<std::int64_t> buildDArray(const PathText& pt, const SuffixArrayIndex& sa);

}  // namespace gm
