#include "graphmems/efg.hpp"

#include <algorithm>
#include <unordered_map>

namespace gm {

NaiveEfg buildNaiveEfg(const std::vector<std::string>& rows, const std::vector<std::size_t>& boundaries) {
  if (rows.empty()) throw GraphError("MSA has no rows");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != width) throw GraphError("MSA rows differ in length");
  if (width == 0) throw GraphError("MSA rows are empty");

  std::vector<std::size_t> cuts{0};
  for (std::size_t b : boundaries) {
    if (b <= cuts.back() || b >= width)
      throw GraphError("block boundary " + std::to_string(b) + " out of range");
    cuts.push_back(b);
  }
  cuts.push_back(width);

  std::vector<NodeSpec> nodes;
  std::vector<std::vector<NodeIndex>> blocks;
  // node of each row in the previous block
  std::vector<NodeIndex> previous(rows.size());
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;

  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    std::unordered_map<std::string, NodeIndex> slice_node;
    std::vector<NodeIndex> block;
    std::vector<NodeIndex> current(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::string slice;
      for (std::size_t c = cuts[b]; c < cuts[b + 1]; ++c)
        if (rows[r][c] != kGapSymbol) slice.push_back(rows[r][c]);
      if (slice.empty())
        throw GraphError("row " + std::to_string(r + 1) + " has only gaps in block " + std::to_string(b + 1));
      auto [it, inserted] = slice_node.emplace(slice, static_cast<NodeIndex>(nodes.size()));
      if (inserted) {
        nodes.push_back({"b" + std::to_string(b + 1) + "." + std::to_string(block.size() + 1), slice});
        block.push_back(it->second);
      }
      current[r] = it->second;
      if (b > 0) {
        std::pair<NodeIndex, NodeIndex> e{previous[r], current[r]};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
    }
    blocks.push_back(std::move(block));
    previous = std::move(current);
  }

  NaiveEfg out;
  out.graph = LabeledGraph(std::move(nodes), edges);
  out.efg = EfgStructure::fromBlocks(out.graph, std::move(blocks));
  return out;
}

namespace {

struct Position {
  NodeIndex node;
  std::size_t offset;  // 0-based
  bool operator==(const Position&) const = default;
};

// Does `pattern` occur in some path label starting at `start`?
bool occursAt(const LabeledGraph& g, const std::string& pattern, Position start) {
  std::vector<Position> frontier{start};
  std::vector<Position> next;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    next.clear();
    for (Position p : frontier) {
      if (g.label(p.node)[p.offset] != pattern[k]) continue;
      if (k + 1 == pattern.size()) return true;
      auto push = [&](Position q) {
        if (std::find(next.begin(), next.end(), q) == next.end()) next.push_back(q);
      };
      if (p.offset + 1 < g.labelLength(p.node)) {
        push({p.node, p.offset + 1});
      } else {
        for (NodeIndex w : g.out(p.node)) push({w, 0});
      }
    }
    if (next.empty()) return false;
    std::swap(frontier, next);
  }
  return false;
}

}  // namespace

SemiRepeatFreeReport validateSemiRepeatFree(const LabeledGraph& g, const EfgStructure& efg) {
  SemiRepeatFreeReport report;
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) {
    const std::string& pattern = g.label(v);
    for (NodeIndex w = 0; w < g.nodeCount(); ++w) {
      for (std::size_t o = 0; o < g.labelLength(w); ++o) {
        if (o == 0 && efg.block_of[w] == efg.block_of[v]) continue;
        if (occursAt(g, pattern, {w, o})) {
          report.ok = false;
          report.violations.push_back({v, w, o + 1});
        }
      }
    }
  }
  return report;
}

}  // namespace gm
