#include "graphmems/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace gm {
namespace {

std::vector<std::string> splitTabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw GraphError("line " + std::to_string(line) + ": " + what);
}

std::ifstream openOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return in;
}

}  // namespace

GfaDocument readGfa(std::istream& in) {
  std::vector<NodeSpec> nodes;
  std::vector<long> block_tags;
  std::unordered_map<std::string, std::size_t> seen;
  std::vector<std::pair<std::string, std::string>> links;
  std::vector<std::size_t> link_lines;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto f = splitTabs(line);
    if (f[0] == "H") continue;
    if (f[0] == "S") {
      if (f.size() < 3) fail(lineno, "segment record needs an id and a sequence");
      if (f[2].empty() || f[2] == "*") fail(lineno, "empty label on segment " + f[1]);
      if (!seen.emplace(f[1], nodes.size()).second) fail(lineno, "duplicate segment id " + f[1]);
      long block = 0;
      for (std::size_t k = 3; k < f.size(); ++k) {
        if (f[k].rfind("BK:i:", 0) == 0) {
          try {
            block = std::stol(f[k].substr(5));
          } catch (const std::exception&) {
            fail(lineno, "malformed block tag " + f[k]);
          }
          if (block < 1) fail(lineno, "block tags are 1-based");
        }
      }
      for (unsigned char c : f[2])
        if (Alphabet::isReservedByte(c)) fail(lineno, "reserved byte in segment " + f[1]);
      nodes.push_back({f[1], f[2]});
      block_tags.push_back(block);
    } else if (f[0] == "L") {
      if (f.size() < 5) fail(lineno, "link record needs from, orientation, to, orientation");
      if (f[2] != "+" || f[4] != "+") fail(lineno, "only forward orientations are supported");
      if (f.size() >= 6 && f[5] != "0M" && f[5] != "*" && f[5] != "0")
        fail(lineno, "links must have zero overlap");
      links.emplace_back(f[1], f[3]);
      link_lines.push_back(lineno);
    } else {
      fail(lineno, "unsupported record type " + f[0]);
    }
  }
  for (std::size_t k = 0; k < links.size(); ++k) {
    if (!seen.count(links[k].first) || !seen.count(links[k].second))
      fail(link_lines[k], "dangling edge " + links[k].first + " -> " + links[k].second);
  }

  GfaDocument doc;
  doc.graph = LabeledGraph(nodes, links);
  bool all_tagged = !block_tags.empty();
  for (long b : block_tags) all_tagged = all_tagged && b > 0;
  if (all_tagged) {
    std::size_t count = 0;
    for (long b : block_tags) count = std::max<std::size_t>(count, b);
    std::vector<std::vector<NodeIndex>> blocks(count);
    for (NodeIndex v = 0; v < block_tags.size(); ++v) blocks[block_tags[v] - 1].push_back(v);
    doc.efg = EfgStructure::fromBlocks(doc.graph, std::move(blocks));
  }
  return doc;
}

GfaDocument readGfaFile(const std::string& path) {
  auto in = openOrThrow(path);
  return readGfa(in);
}

LabeledGraph loadGfa(const std::string& path) { return readGfaFile(path).graph; }

void writeGfa(std::ostream& out, const LabeledGraph& g, const EfgStructure* efg) {
  out << "H\tVN:Z:1.0\n";
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) {
    out << "S\t" << g.id(v) << '\t' << g.label(v);
    if (efg) out << "\tBK:i:" << efg->block_of[v] + 1;
    out << '\n';
  }
  for (auto [u, v] : g.edges()) out << "L\t" << g.id(u) << "\t+\t" << g.id(v) << "\t+\t0M\n";
}

EfgStructure readBlocks(std::istream& in, const LabeledGraph& g) {
  std::vector<std::vector<NodeIndex>> blocks;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<NodeIndex> block;
    std::string id;
    while (fields >> id) {
      auto v = g.find(id);
      if (!v) fail(lineno, "unknown node id " + id);
      block.push_back(*v);
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return EfgStructure::fromBlocks(g, std::move(blocks));
}

EfgStructure loadBlocks(const std::string& path, const LabeledGraph& g) {
  auto in = openOrThrow(path);
  return readBlocks(in, g);
}

std::vector<FastaRecord> readFasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      records.push_back({line.substr(1), {}});
      auto space = records.back().name.find_first_of(" \t");
      if (space != std::string::npos) records.back().name.erase(space);
    } else {
      if (records.empty()) fail(lineno, "sequence before the first FASTA header");
      records.back().sequence += line;
    }
  }
  return records;
}

std::vector<FastaRecord> loadFasta(const std::string& path) {
  auto in = openOrThrow(path);
  return readFasta(in);
}

void writeFasta(std::ostream& out, const std::vector<FastaRecord>& records) {
  for (const auto& r : records) out << '>' << r.name << '\n' << r.sequence << '\n';
}

}  // namespace gm
