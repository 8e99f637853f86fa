#pragma once

#include <array>
#include <compare>
#include <vector>

#include "graphmems/efg_index.hpp"
#include "graphmems/mem.hpp"
#include "graphmems/mem_finder.hpp"

namespace gm {

// How a maximal descent from the root ends.
enum class WalkCase : std::uint8_t {
  NoDelimiter = 1,   // the match never reaches the end of a chunk
  TwoNodes = 2,      // it reaches a chunk end but starts in the second node
  Decomposable = 3,  // it reads suffix(l(u1)) l(u2) l(u3) up to a chunk end
};

struct WalkResult {
  std::size_t y = 0;  // last matched query position (x_hat - 1 when nothing matched)
  WalkCase case_tag = WalkCase::NoDelimiter;
  SuffixTree::Locus locus;
  std::vector<MarkedEdge> marks;  // edge spellings that prefix Q[x_hat..y]
  std::size_t consumed = 0;       // query symbols compared
};

// Descends from the root reading q from 1-based x_hat until blocked.
WalkResult walkMaximalPrefix(const EfgIndex& idx, const SymbolString& q, std::size_t x_hat);

// l(u) l(v) occurs at 1-based query position pos and (u, v) lies on a
// 3-node walk.
struct EdgeOccurrence {
  std::size_t pos;
  NodeIndex u;
  NodeIndex v;
  auto operator<=>(const EdgeOccurrence&) const = default;
};

struct EfgScanStats {
  std::size_t consumed = 0;  // symbols compared while descending
  std::size_t hops = 0;      // child hops spent resolving suffix links
  std::array<std::size_t, 3> cases{};
  std::size_t occurrences = 0;
  std::size_t encodings = 0;
  std::size_t records = 0;
};

// Left-to-right matching-statistics scan over the suffix tree of T_3.
// Every query position contributes the marks above its longest match.
std::vector<EdgeOccurrence> findEdgeOccurrences(const EfgIndex& idx, const SymbolString& q,
                                                EfgScanStats* stats = nullptr);

// (i, u): the match enters the spine from u at 1-based offset i, after
// reading alpha = |l(u)| - i + 1 symbols of it.
struct LeftEntry {
  NodeIndex node;
  std::size_t i;
  std::size_t alpha;
  bool operator==(const LeftEntry&) const = default;
};

// (v, j): the match leaves the spine into v and ends at offset j of v.
struct RightEntry {
  NodeIndex node;
  std::size_t j;
  bool operator==(const RightEntry&) const = default;
};

// In-neighbors u of `node` that can start a MEM entering `node` at 1-based
// query position pos: alpha >= 1 and the left side is maximal or has a
// non-singleton extension.
std::vector<LeftEntry> collectLeftEntries(const EfgIndex& idx, const SymbolString& q, NodeIndex node,
                                          std::size_t pos);

// Out-neighbors v of `node` that can end a MEM after the spine edge
// (prev, node), with l(node) ending at 1-based query position end. Found
// from the leaves below the marked locus of the edge.
std::vector<RightEntry> collectRightEntries(const EfgIndex& idx, const SymbolString& q, NodeIndex prev,
                                            NodeIndex node, std::size_t end);

// Compact encoding of all 4+-node MEMs along one maximal chain of edge
// occurrences. The spine u_2..u_{L-1} is read fully at spine_pos. U_1 holds
// the entries before spine[0]; u_lt[a] the left-shortened variants entering
// at spine node a >= 1. right[b] holds the exits after spine node b >= 1:
// at b = K-1 these form E_L, earlier ones are the right-shortened variants
// U_RT, and an exit into spine[b+1] read in full plays the role of u_L.
struct CompactMemEncoding {
  std::size_t query = 0;
  std::vector<NodeIndex> spine;
  std::vector<std::size_t> spine_pos;
  std::vector<LeftEntry> u1;
  std::vector<std::vector<LeftEntry>> u_lt;
  std::vector<std::vector<RightEntry>> right;
};

// One encoding per maximal chain; chains sharing a prefix share entries.
std::vector<CompactMemEncoding> buildEncodings(const EfgIndex& idx, const SymbolString& q, std::size_t query_id,
                                               const std::vector<EdgeOccurrence>& occurrences,
                                               EfgScanStats* stats = nullptr);

// Every (left entry at a) x (right entry at b) with a < b and length >= kappa.
// Chains that share a prefix yield the same record more than once; callers
// canonicalize.
std::vector<MemRecord> expandEncoding(const CompactMemEncoding& enc, const LabeledGraph& g, std::size_t kappa);

// MEMs spanning at least four nodes.
std::vector<MemRecord> findEfg4PlusMems(const EfgIndex& idx, const QuerySet& queries, std::size_t kappa,
                                        EfgScanStats* stats = nullptr);

// All MEMs: exact 1-, 2- and 3-node MEMs from the path texts plus the 4+
// engine, canonicalized.
std::vector<MemRecord> findEfgMems(const EfgIndex& idx, const QuerySet& queries, std::size_t kappa,
                                   const FinderOptions& options = {}, EfgScanStats* stats = nullptr);
std::vector<MemRecord> findEfgMems(const LabeledGraph& g, const EfgStructure& efg, const QuerySet& queries,
                                   std::size_t kappa, const FinderOptions& options = {},
                                   EfgScanStats* stats = nullptr);

}  // namespace gm
