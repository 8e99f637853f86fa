#include "graphmems/graph.hpp"

#include <algorithm>

namespace gm {

LabeledGraph::LabeledGraph(std::vector<NodeSpec> nodes,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, NodeIndex> ids;
  for (NodeIndex v = 0; v < nodes.size(); ++v) ids.emplace(nodes[v].id, v);
  std::vector<std::pair<NodeIndex, NodeIndex>> resolved;
  resolved.reserve(edges.size());
  for (const auto& [from, to] : edges) {
    auto a = ids.find(from);
    auto b = ids.find(to);
    if (a == ids.end() || b == ids.end())
      throw GraphError("dangling edge " + from + " -> " + to);
    resolved.emplace_back(a->second, b->second);
  }
  init(std::move(nodes), resolved);
}

LabeledGraph::LabeledGraph(std::vector<NodeSpec> nodes,
                           const std::vector<std::pair<NodeIndex, NodeIndex>>& edges) {
  init(std::move(nodes), edges);
}

void LabeledGraph::init(std::vector<NodeSpec> nodes,
                        const std::vector<std::pair<NodeIndex, NodeIndex>>& edges) {
  const std::size_t n = nodes.size();
  ids_.reserve(n);
  labels_.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) {
    auto& node = nodes[v];
    if (node.label.empty()) throw GraphError("empty label on node " + node.id);
    for (unsigned char c : node.label)
      if (Alphabet::isReservedByte(c))
        throw GraphError("reserved byte in label of node " + node.id);
    if (!index_.emplace(node.id, v).second) throw GraphError("duplicate node id " + node.id);
    total_length_ += node.label.size();
    ids_.push_back(std::move(node.id));
    labels_.push_back(std::move(node.label));
  }
  alphabet_ = Alphabet::fromStrings(labels_);
  encoded_.reserve(n);
  for (const auto& l : labels_) encoded_.push_back(alphabet_.encode(l));

  out_.assign(n, {});
  in_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("dangling edge");
    if (std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end())
      throw GraphError("duplicate edge " + ids_[u] + " -> " + ids_[v]);
    out_[u].push_back(v);
    in_[v].push_back(u);
    ++edge_count_;
  }

  left_ext_.assign(n, sym::kHash);
  right_ext_.assign(n, sym::kHash);
  for (NodeIndex v = 0; v < n; ++v) {
    if (!in_[v].empty()) {
      Symbol s = encoded_[in_[v].front()].back();
      bool unique = std::all_of(in_[v].begin(), in_[v].end(),
                                [&](NodeIndex u) { return encoded_[u].back() == s; });
      if (unique) left_ext_[v] = s;
    }
    if (!out_[v].empty()) {
      Symbol s = encoded_[out_[v].front()].front();
      bool unique = std::all_of(out_[v].begin(), out_[v].end(),
                                [&](NodeIndex w) { return encoded_[w].front() == s; });
      if (unique) right_ext_[v] = s;
    }
  }
}

bool LabeledGraph::hasEdge(NodeIndex u, NodeIndex v) const {
  return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
}

std::optional<NodeIndex> LabeledGraph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LabeledGraph::maxDegree() const {
  std::size_t d = 0;
  for (NodeIndex v = 0; v < nodeCount(); ++v) d = std::max({d, out_[v].size(), in_[v].size()});
  return d;
}

bool LabeledGraph::isAcyclic() const {
  std::vector<std::size_t> indeg(nodeCount());
  for (NodeIndex v = 0; v < nodeCount(); ++v) indeg[v] = in_[v].size();
  std::vector<NodeIndex> stack;
  for (NodeIndex v = 0; v < nodeCount(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    NodeIndex v = stack.back();
    stack.pop_back();
    ++seen;
    for (NodeIndex w : out_[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == nodeCount();
}

std::vector<std::pair<NodeIndex, NodeIndex>> LabeledGraph::edges() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> e;
  e.reserve(edge_count_);
  for (NodeIndex u = 0; u < nodeCount(); ++u)
    for (NodeIndex v : out_[u]) e.emplace_back(u, v);
  return e;
}

std::size_t EfgStructure::height() const {
  std::size_t h = 0;
  for (const auto& b : blocks) h = std::max(h, b.size());
  return h;
}

EfgStructure EfgStructure::fromBlocks(const LabeledGraph& g, std::vector<std::vector<NodeIndex>> blocks) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  EfgStructure efg;
  efg.block_of.assign(g.nodeCount(), kUnassigned);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw GraphError("empty block " + std::to_string(b + 1));
    for (NodeIndex v : blocks[b]) {
      if (v >= g.nodeCount()) throw GraphError("block refers to unknown node");
      if (efg.block_of[v] != kUnassigned) throw GraphError("node " + g.id(v) + " in two blocks");
      efg.block_of[v] = b;
    }
  }
  for (NodeIndex v = 0; v < g.nodeCount(); ++v)
    if (efg.block_of[v] == kUnassigned) throw GraphError("node " + g.id(v) + " in no block");
  for (auto [u, v] : g.edges())
    if (efg.block_of[v] != efg.block_of[u] + 1)
      throw GraphError("edge " + g.id(u) + " -> " + g.id(v) + " does not join consecutive blocks");
  efg.blocks = std::move(blocks);
  return efg;
}

bool isValidSubstring(const LabeledGraph& g, const GraphSubstring& s) {
  if (s.path.empty()) return false;
  for (NodeIndex v : s.path)
    if (v >= g.nodeCount()) return false;
  for (std::size_t k = 1; k < s.path.size(); ++k)
    if (!g.hasEdge(s.path[k - 1], s.path[k])) return false;
  if (s.start < 1 || s.start > g.labelLength(s.path.front())) return false;
  if (s.end < 1 || s.end > g.labelLength(s.path.back())) return false;
  return s.path.size() > 1 || s.start <= s.end;
}

std::size_t spelledLength(const LabeledGraph& g, const GraphSubstring& s) {
  std::size_t len = 0;
  for (NodeIndex v : s.path) len += g.labelLength(v);
  return len - (s.start - 1) - (g.labelLength(s.path.back()) - s.end);
}

std::string spelled(const LabeledGraph& g, const GraphSubstring& s) {
  std::string out;
  for (NodeIndex v : s.path) out += g.label(v);
  out.erase(out.size() - (g.labelLength(s.path.back()) - s.end));
  out.erase(0, s.start - 1);
  return out;
}

std::set<char> leftExtension(const LabeledGraph& g, const GraphSubstring& s) {
  NodeIndex first = s.path.front();
  if (s.start > 1) return {g.label(first)[s.start - 2]};
  std::set<char> ext;
  for (NodeIndex u : g.in(first)) ext.insert(g.label(u).back());
  return ext;
}

std::set<char> rightExtension(const LabeledGraph& g, const GraphSubstring& s) {
  NodeIndex last = s.path.back();
  if (s.end < g.labelLength(last)) return {g.label(last)[s.end]};
  std::set<char> ext;
  for (NodeIndex w : g.out(last)) ext.insert(g.label(w).front());
  return ext;
}

}  // namespace gm
