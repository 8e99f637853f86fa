#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graphmems/graph.hpp"
#include "graphmems/mem.hpp"

namespace gm {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleConfig {
  // Largest |P| considered; 0 means every walk of an acyclic graph.
  std::size_t max_walk_nodes = 3;
  std::size_t max_walks = 2'000'000;
};

// Every kappa-MEM whose walk has at most max_walk_nodes nodes, by
// exhaustive alignment of each query against each walk. Records are
// canonicalized; categories follow |P| (EXACT_L below 4 nodes, EFG_4PLUS
// from 4). Throws OracleLimitError when the walk cap is exceeded or when
// max_walk_nodes is 0 on a cyclic graph.
std::vector<MemRecord> oracleAllMems(const LabeledGraph& g, const std::vector<std::string>& queries,
                                     std::size_t kappa, const OracleConfig& config = {});

// (x1, x2, len), 1-based: S1[x1..] and S2[x2..] agree for len symbols and
// the match cannot be extended on either side. Sorted.
std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> oracleStringMems(const std::string& s1,
                                                                                const std::string& s2,
                                                                                std::size_t kappa);

}  // namespace gm
