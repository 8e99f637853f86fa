#pragma once

#include <string>
#include <vector>

#include "graphmems/graph.hpp"

namespace gm {

inline constexpr char kGapSymbol = '-';

struct NaiveEfg {
  LabeledGraph graph;
  EfgStructure efg;
};

// Block graph of an MSA cut at the given column boundaries. Each block holds
// the distinct gap-stripped row slices of its column range (in order of first
// appearance); consecutive slices of a row are joined by an edge. Node ids
// are "b<block>.<k>", both 1-based. Throws GraphError when a boundary is out
// of range or a row slice consists of gaps only.
NaiveEfg buildNaiveEfg(const std::vector<std::string>& rows, const std::vector<std::size_t>& boundaries);

struct SemiRepeatFreeViolation {
  NodeIndex node;         // v whose label occurs out of place
  NodeIndex witness;      // node where the offending occurrence starts
  std::size_t offset;     // 1-based start offset inside the witness label
};

struct SemiRepeatFreeReport {
  bool ok = true;
  std::vector<SemiRepeatFreeViolation> violations;
};

// Checks that every occurrence of every label l(v), v in V_i, starts at
// offset 1 of some node of V_i. Requires an acyclic graph.
SemiRepeatFreeReport validateSemiRepeatFree(const LabeledGraph& g, const EfgStructure& efg);

}  // namespace gm
