#pragma once

// Seeded random instances shared by property tests and the acceptance run.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "graphmems/efg.hpp"
#include "graphmems/graph.hpp"

namespace gm::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::string randomString(Rng& rng, std::size_t len, const std::string& alphabet) {
  std::string s(len, ' ');
  for (auto& c : s) c = alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return s;
}

struct GraphShape {
  std::size_t max_nodes = 25;
  std::size_t max_label = 6;
  std::size_t max_degree = 3;
  std::string alphabet = "ACGT";
};

// Random digraph, cycles and self-loops allowed, in- and out-degree capped.
inline LabeledGraph randomGraph(Rng& rng, const GraphShape& shape) {
  std::size_t n = uniform(rng, 1, shape.max_nodes);
  std::vector<NodeSpec> nodes;
  for (std::size_t v = 0; v < n; ++v)
    nodes.push_back({"n" + std::to_string(v + 1), randomString(rng, uniform(rng, 1, shape.max_label), shape.alphabet)});
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  std::vector<std::pair<NodeIndex, NodeIndex>> edges;
  std::size_t attempts = uniform(rng, 0, 2 * n);
  for (std::size_t t = 0; t < attempts; ++t) {
    NodeIndex u = static_cast<NodeIndex>(uniform(rng, 0, n - 1));
    NodeIndex v = static_cast<NodeIndex>(uniform(rng, 0, n - 1));
    if (outdeg[u] >= shape.max_degree || indeg[v] >= shape.max_degree) continue;
    if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end()) continue;
    edges.emplace_back(u, v);
    ++outdeg[u], ++indeg[v];
  }
  return LabeledGraph(std::move(nodes), edges);
}

// Concatenated labels along a random walk, lightly mutated, with random
// flanks; keeps long matches likely.
inline std::string randomQuery(Rng& rng, const LabeledGraph& g, std::size_t max_len, const std::string& alphabet) {
  std::string q;
  std::size_t target = uniform(rng, 1, max_len);
  while (q.size() < target) {
    if (uniform(rng, 0, 3) == 0) {
      q += randomString(rng, uniform(rng, 1, 4), alphabet);
      continue;
    }
    NodeIndex v = static_cast<NodeIndex>(uniform(rng, 0, g.nodeCount() - 1));
    std::string s = g.label(v).substr(uniform(rng, 0, g.labelLength(v) - 1));
    for (std::size_t step = 0; step < 6 && !g.out(v).empty(); ++step) {
      v = g.out(v)[uniform(rng, 0, g.out(v).size() - 1)];
      s += g.label(v);
    }
    if (uniform(rng, 0, 2) == 0) s[uniform(rng, 0, s.size() - 1)] = alphabet[uniform(rng, 0, alphabet.size() - 1)];
    q += s;
  }
  q.resize(target);
  return q;
}

struct EfgShape {
  std::size_t max_blocks = 5;
  std::size_t max_height = 4;
  std::size_t max_label = 6;
  std::string alphabet = "ACGT";
};

// Random block graph grown one block at a time; a block is redrawn until
// the graph so far stays semi-repeat-free. Each node has an in-edge from
// the previous block and an out-edge to the next.
inline NaiveEfg randomEfg(Rng& rng, const EfgShape& shape) {
  for (;;) {
    const std::size_t k = uniform(rng, 1, shape.max_blocks);
    std::vector<NodeSpec> nodes;
    std::vector<std::vector<NodeIndex>> blocks;
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    std::optional<NaiveEfg> result;
    for (std::size_t b = 0; b < k; ++b) {
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        auto try_nodes = nodes;
        auto try_blocks = blocks;
        auto try_edges = edges;
        std::vector<NodeIndex> block;
        std::vector<std::string> seen;
        const std::size_t h = uniform(rng, 1, shape.max_height);
        for (std::size_t t = 0; t < h; ++t) {
          std::string s = randomString(rng, uniform(rng, 1, shape.max_label), shape.alphabet);
          if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
          seen.push_back(s);
          block.push_back(static_cast<NodeIndex>(try_nodes.size()));
          try_nodes.push_back({"b" + std::to_string(b + 1) + "." + std::to_string(seen.size()), s});
        }
        if (b > 0) {
          const auto& prev = try_blocks.back();
          std::vector<bool> has_out(try_nodes.size(), false), has_in(try_nodes.size(), false);
          for (NodeIndex u : prev)
            for (NodeIndex v : block)
              if (uniform(rng, 0, 2) != 0) {
                try_edges.emplace_back(u, v);
                has_out[u] = has_in[v] = true;
              }
          for (NodeIndex u : prev)
            if (!has_out[u]) {
              NodeIndex v = block[uniform(rng, 0, block.size() - 1)];
              try_edges.emplace_back(u, v);
              has_in[v] = true;
            }
          for (NodeIndex v : block)
            if (!has_in[v]) try_edges.emplace_back(prev[uniform(rng, 0, prev.size() - 1)], v);
        }
        try_blocks.push_back(block);
        LabeledGraph g(try_nodes, try_edges);
        EfgStructure efg = EfgStructure::fromBlocks(g, try_blocks);
        if (!validateSemiRepeatFree(g, efg).ok) continue;
        placed = true;
        nodes = std::move(try_nodes);
        blocks = std::move(try_blocks);
        edges = std::move(try_edges);
        if (b + 1 == k) result = NaiveEfg{std::move(g), std::move(efg)};
      }
      if (!placed) break;
    }
    if (result) return std::move(*result);
  }
}

}  // namespace gm::testing
