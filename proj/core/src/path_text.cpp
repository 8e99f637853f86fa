#include "graphmems/path_text.hpp"

#include <cmath>
#include <stdexcept>

#include "graphmems/rmq.hpp"

namespace gm {
namespace {

class Builder {
 public:
  explicit Builder(const LabeledGraph& g) : g_(g) {}

  void delimiter() {
    text_.push_back(sym::kZero);
    bits_.push_back(true);
  }
  void symbol(Symbol s) {
    text_.push_back(s);
    bits_.push_back(false);
  }
  void path(const std::vector<NodeIndex>& p, std::vector<PathChunk>& chunks) {
    PathChunk chunk;
    chunk.path = p;
    for (NodeIndex v : p) {
      chunk.node_starts.push_back(text_.size());
      for (Symbol s : g_.encodedLabel(v)) symbol(s);
    }
    chunk.end = text_.size();
    chunks.push_back(std::move(chunk));
  }
  void finish(PathText& pt, SymbolString& text, RankSelectBitvector& bits) {
    text = std::move(text_);
    bits = RankSelectBitvector(bits_);
    (void)pt;
  }

 private:
  const LabeledGraph& g_;
  SymbolString text_;
  std::vector<bool> bits_;
};

}  // namespace

std::vector<std::vector<NodeIndex>> enumerateWalks(const LabeledGraph& g, std::size_t node_count) {
  std::vector<std::vector<NodeIndex>> walks;
  if (node_count == 0) return walks;
  std::vector<NodeIndex> walk;
  std::vector<std::size_t> next;  // next neighbor index to try per depth
  for (NodeIndex s = 0; s < g.nodeCount(); ++s) {
    walk.assign(1, s);
    next.assign(1, 0);
    while (!walk.empty()) {
      if (walk.size() == node_count) {
        walks.push_back(walk);
        walk.pop_back();
        next.pop_back();
        continue;
      }
      auto out = g.out(walk.back());
      if (next.back() == out.size()) {
        walk.pop_back();
        next.pop_back();
        continue;
      }
      walk.push_back(out[next.back()++]);
      next.push_back(0);
    }
  }
  return walks;
}

double estimatePathsTextSize(const LabeledGraph& g, std::size_t node_count) {
  double d = static_cast<double>(std::max<std::size_t>(g.maxDegree(), 1));
  return static_cast<double>(g.totalLabelLength()) * static_cast<double>(node_count) *
         std::pow(d, static_cast<double>(node_count) - 1.0);
}

PathText buildNodesText(const LabeledGraph& g) {
  PathText pt;
  pt.kind_ = PathTextKind::Nodes;
  pt.path_length_ = 1;
  Builder b(g);
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) {
    b.delimiter();
    b.path({v}, pt.chunks_);
  }
  b.finish(pt, pt.text_, pt.boundaries_);
  return pt;
}

PathText buildPathsText(const LabeledGraph& g, std::size_t node_count) {
  if (node_count < 1) throw std::invalid_argument("paths text needs at least one node per path");
  PathText pt;
  pt.kind_ = PathTextKind::Paths;
  pt.path_length_ = node_count;
  Builder b(g);
  b.delimiter();
  for (const auto& walk : enumerateWalks(g, node_count)) {
    b.symbol(g.leftExtensionSymbol(walk.front()));
    b.path(walk, pt.chunks_);
    b.symbol(g.rightExtensionSymbol(walk.back()));
    b.delimiter();
  }
  b.finish(pt, pt.text_, pt.boundaries_);
  return pt;
}

PathText buildEfg3Text(const LabeledGraph& g) {
  PathText pt;
  pt.kind_ = PathTextKind::Efg3;
  pt.path_length_ = 3;
  Builder b(g);
  b.delimiter();
  for (const auto& walk : enumerateWalks(g, 3)) {
    b.path(walk, pt.chunks_);
    b.delimiter();
  }
  b.finish(pt, pt.text_, pt.boundaries_);
  return pt;
}

std::optional<TextLocation> PathText::locate(std::size_t pos) const {
  if (pos >= text_.size() || text_[pos] == sym::kZero) return std::nullopt;
  const std::size_t chunk = chunkOf(pos);
  const PathChunk& c = chunks_[chunk];
  // extension symbols sit just outside the labels
  if (pos < c.node_starts.front() || pos >= c.end) return std::nullopt;
  std::size_t k = c.path.size() - 1;
  while (pos < c.node_starts[k]) --k;
  return TextLocation{chunk, k, pos - c.node_starts[k]};
}

std::vector<std::int64_t> buildDArray(const PathText& pt, const SuffixArrayIndex& sa) {
  if (pt.kind() != PathTextKind::Paths) throw std::invalid_argument("D array needs a paths text");
  if (sa.size() != pt.text().size() + 1) throw std::invalid_argument("index does not match the text");
  std::vector<std::int64_t> d(sa.size(), kInfinity);
  for (std::size_t k = 0; k < sa.size(); ++k) {
    std::size_t succ = sa.sa()[k] + 1;
    if (succ >= pt.text().size()) continue;
    auto loc = pt.locate(succ);
    if (!loc || loc->node_in_path != 0) continue;
    const PathChunk& c = pt.chunks()[loc->chunk];
    // node_starts.back() - node_starts.front() == |l(P)| - |l(u_L)|
    auto before_last = static_cast<std::int64_t>(c.node_starts.back() - c.node_starts.front());
    auto i = static_cast<std::int64_t>(loc->offset + 1);
    d[k] = before_last - i + 2;
  }
  return d;
}

}  // namespace gm
