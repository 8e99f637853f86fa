#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphmems/graph.hpp"

namespace gm {

// GFA subset: tab-separated S (segment) and L (link) records, optional H
// header and '#' comment lines. Links must declare a zero overlap ("0M" or
// "*"). A segment may carry a block tag "BK:i:<1-based block>".
struct GfaDocument {
  LabeledGraph graph;
  std::optional<EfgStructure> efg;  // present when every segment has a block tag
};

GfaDocument readGfa(std::istream& in);
GfaDocument readGfaFile(const std::string& path);
LabeledGraph loadGfa(const std::string& path);
void writeGfa(std::ostream& out, const LabeledGraph& g, const EfgStructure* efg = nullptr);

// Blocks sidecar: one line per block, whitespace-separated node ids.
EfgStructure readBlocks(std::istream& in, const LabeledGraph& g);
EfgStructure loadBlocks(const std::string& path, const LabeledGraph& g);

struct FastaRecord {
  std::string name;
  std::string sequence;
};

// Multi-record FASTA; sequence lines are concatenated.
std::vector<FastaRecord> readFasta(std::istream& in);
std::vector<FastaRecord> loadFasta(const std::string& path);
void writeFasta(std::ostream& out, const std::vector<FastaRecord>& records);

}  // namespace gm
