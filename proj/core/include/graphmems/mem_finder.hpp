#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphmems/bidirectional_index.hpp"
#include "graphmems/graph.hpp"
#include "graphmems/mem.hpp"
#include "graphmems/path_text.hpp"
#include "graphmems/rmq.hpp"

namespace gm {

// Raised when a path text would exceed the configured size limit.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A candidate MEM string W tracked in the text index and the query index.
struct MemCandidateState {
  BiState text;
  BiState query;
  std::size_t length() const { return text.length; }
};

// A string match: W occurs at 0-based text position `text_pos` and query
// position `query_pos`.
struct StringMatch {
  std::size_t text_pos;
  std::size_t query_pos;
  std::size_t length;
  bool operator==(const StringMatch&) const = default;
};

struct ExplorationStats {
  std::size_t visited = 0;       // states popped during the traversal
  std::size_t candidates = 0;    // emitted MEM strings
  std::size_t matches = 0;       // reported string matches
  std::size_t argmin_calls = 0;  // range-minimum queries for the D filter
  std::size_t filtered_ranks = 0;
};

// Visits every W over the matchable symbols with |W| >= kappa that occurs
// in both texts and is maximal in the combined sense on both sides: it is
// not the case that both texts extend W only by the same matchable symbol.
void exploreMemStrings(const BidirectionalIndex& text, const BidirectionalIndex& query, std::size_t kappa,
                       const std::function<void(const MemCandidateState&)>& emit,
                       ExplorationStats* stats = nullptr);

struct CrossProductOptions {
  // Delimiters (ZERO, END) are not valid text-side extensions; every
  // occurrence must be bounded by label or extension symbols.
  bool text_delimiters_bound = true;
  // Keep only occurrences reaching the last node of their path.
  const RmqStructure* d_filter = nullptr;
};

// All (text occurrence, query occurrence) pairs of W whose extension
// symbols differ on both sides, where boundary symbols never match.
void crossProduct(const BidirectionalIndex& text, const BidirectionalIndex& query, const MemCandidateState& w,
                  const CrossProductOptions& options, std::vector<StringMatch>& out,
                  ExplorationStats* stats = nullptr);

// Path text with its bidirectional index and, for multi-node paths, the
// range-minimum structure over the D array.
class PathIndex {
 public:
  PathIndex(const LabeledGraph& g, PathText text);

  const PathText& text() const { return text_; }
  const BidirectionalIndex& index() const { return index_; }
  const RmqStructure* dFilter() const { return d_rmq_ ? &*d_rmq_ : nullptr; }

 private:
  PathText text_;
  BidirectionalIndex index_;
  std::optional<RmqStructure> d_rmq_;
};

struct FinderOptions {
  // Upper bound on the estimated path text size, in symbols.
  double max_text_size = 5e8;
  ExplorationStats* stats = nullptr;
};

// MEMs inside single node labels, maximal only with respect to the label
// string, so a label end counts as a mismatch. Category Node.
std::vector<MemRecord> findNodeMems(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                    const FinderOptions& options = {});

// MEMs spanning exactly `node_count` nodes, starting in the first and ending
// in the last. Throws GuardError when the path text would be too large.
std::vector<MemRecord> findExactLMems(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                      std::size_t node_count, const FinderOptions& options = {});

// Same, against a prebuilt path index.
std::vector<MemRecord> findExactLMems(const LabeledGraph& g, const PathIndex& index, const QuerySet& queries,
                                      std::size_t kappa, const FinderOptions& options = {});

// Union over 1..max_nodes of exact-length MEMs, canonicalized.
std::vector<MemRecord> findAllMemsGeneric(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                          std::size_t max_nodes, const FinderOptions& options = {});

// Plain string MEMs between a text and a query over shared codes.
std::vector<StringMatch> findStringMems(const SymbolString& text, const SymbolString& query, std::size_t code_count,
                                        std::size_t kappa);

}  // namespace gm
