#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphmems/alphabet.hpp"
#include "graphmems/graph.hpp"

namespace gm {

class QueryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class MemCategory : std::uint8_t { Node = 0, ExactL = 1, Efg4Plus = 2 };

// ([x..y], (i, P, j)) for query number `query`; x and y are 1-based and
// inclusive within that query.
struct MemRecord {
  std::size_t query = 0;
  std::size_t x = 1;
  std::size_t y = 1;
  GraphSubstring location;
  MemCategory category = MemCategory::ExactL;

  std::size_t length() const { return y - x + 1; }
  bool sameMatch(const MemRecord& o) const {
    return query == o.query && x == o.x && y == o.y && location == o.location;
  }
};

// "NODE", "EXACT_L(<|P|>)" or "EFG_4PLUS".
std::string categoryName(const MemRecord& r);

// Order by (query, x, y, path by node ids, i, j); ignores the category.
bool canonicalLess(const LabeledGraph& g, const MemRecord& a, const MemRecord& b);

// Sorts canonically and drops repeated matches, keeping the lowest category.
void canonicalize(const LabeledGraph& g, std::vector<MemRecord>& records);

// Re-checks a record against the graph MEM definition using only the
// extension sets of the graph: the spelled string equals the query
// substring, the length is at least kappa, and each side is maximal or has
// a non-singleton extension set.
bool satisfiesMemDefinition(const LabeledGraph& g, const std::string& query, const MemRecord& r,
                            std::size_t kappa);

// Concatenation Q_1 SEP Q_2 SEP ... SEP Q_t over an alphabet. Query bytes
// outside the alphabet are encoded as the separator since they never match.
class QuerySet {
 public:
  // Throws QueryError for reserved bytes or an empty query.
  QuerySet(const std::vector<std::string>& queries, const Alphabet& alphabet);

  const SymbolString& text() const { return text_; }
  std::size_t size() const { return starts_.size(); }
  const std::string& query(std::size_t q) const { return queries_[q]; }
  const std::vector<std::string>& queries() const { return queries_; }
  // Concatenation position of 1-based offset x in query q.
  std::size_t position(std::size_t q, std::size_t x) const { return starts_[q] + x - 1; }
  // (query, 1-based offset) of a concatenation position that is not a separator.
  std::pair<std::size_t, std::size_t> locate(std::size_t pos) const;

 private:
  std::vector<std::string> queries_;
  SymbolString text_;
  std::vector<std::size_t> starts_;
};

void validateKappa(std::size_t kappa);

}  // namespace gm
