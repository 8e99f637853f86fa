#include "graphmems/mem.hpp"

#include <algorithm>
#include <tuple>

namespace gm {

std::string categoryName(const MemRecord& r) {
  switch (r.category) {
    case MemCategory::Node: return "NODE";
    case MemCategory::ExactL: return "EXACT_L(" + std::to_string(r.location.path.size()) + ")";
    case MemCategory::Efg4Plus: return "EFG_4PLUS";
  }
  return "UNKNOWN";
}

bool canonicalLess(const LabeledGraph& g, const MemRecord& a, const MemRecord& b) {
  if (std::tie(a.query, a.x, a.y) != std::tie(b.query, b.x, b.y))
    return std::tie(a.query, a.x, a.y) < std::tie(b.query, b.x, b.y);
  if (a.location.path != b.location.path)
    return std::lexicographical_compare(a.location.path.begin(), a.location.path.end(), b.location.path.begin(),
                                        b.location.path.end(),
                                        [&](NodeIndex u, NodeIndex v) { return g.id(u) < g.id(v); });
  return std::tie(a.location.start, a.location.end) < std::tie(b.location.start, b.location.end);
}

void canonicalize(const LabeledGraph& g, std::vector<MemRecord>& records) {
  std::sort(records.begin(), records.end(), [&](const MemRecord& a, const MemRecord& b) {
    if (canonicalLess(g, a, b)) return true;
    if (canonicalLess(g, b, a)) return false;
    return a.category < b.category;
  });
  records.erase(std::unique(records.begin(), records.end(),
                            [](const MemRecord& a, const MemRecord& b) { return a.sameMatch(b); }),
                records.end());
}

bool satisfiesMemDefinition(const LabeledGraph& g, const std::string& query, const MemRecord& r,
                            std::size_t kappa) {
  if (!isValidSubstring(g, r.location)) return false;
  if (r.x < 1 || r.y < r.x || r.y > query.size()) return false;
  if (r.length() < kappa) return false;
  if (spelled(g, r.location) != query.substr(r.x - 1, r.length())) return false;
  auto left = leftExtension(g, r.location);
  auto right = rightExtension(g, r.location);
  bool left_max = r.x == 1 || left.empty() || !left.count(query[r.x - 2]);
  bool right_max = r.y == query.size() || right.empty() || !right.count(query[r.y]);
  return (left_max || left.size() >= 2) && (right_max || right.size() >= 2);
}

QuerySet::QuerySet(const std::vector<std::string>& queries, const Alphabet& alphabet) : queries_(queries) {
  for (std::size_t q = 0; q < queries_.size(); ++q) {
    const auto& s = queries_[q];
    if (s.empty()) throw QueryError("query " + std::to_string(q + 1) + " is empty");
    for (unsigned char c : s)
      if (Alphabet::isReservedByte(c)) throw QueryError("query " + std::to_string(q + 1) + " contains a reserved byte");
    if (q > 0) text_.push_back(sym::kSep);
    starts_.push_back(text_.size());
    for (char c : s) text_.push_back(alphabet.encode(c));
  }
}

std::pair<std::size_t, std::size_t> QuerySet::locate(std::size_t pos) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
  std::size_t q = static_cast<std::size_t>(it - starts_.begin()) - 1;
  return {q, pos - starts_[q] + 1};
}

void validateKappa(std::size_t kappa) {
  if (kappa < 1) throw QueryError("kappa must be at least 1");
}

}  // namespace gm
