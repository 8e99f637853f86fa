#include "graphmems/mem_finder.hpp"

#include <sstream>
#include <stdexcept>

namespace gm {
namespace {

using SymbolCounts = std::vector<std::pair<Symbol, std::size_t>>;

bool matchable(Symbol s) { return s >= sym::kFirst; }
bool delimiter(Symbol s) { return s == sym::kZero || s == sym::kEnd; }

// False only when both sides extend by the same single matchable symbol.
bool combinedMaximal(const SymbolCounts& t, const SymbolCounts& q) {
  return !(t.size() == 1 && q.size() == 1 && t[0].first == q[0].first && matchable(t[0].first));
}

// Start of the occurrence of the pattern after the extension symbol that
// prefixes the k-th suffix.
std::size_t successorOf(const BidirectionalIndex& idx, std::size_t k) {
  return (idx.positionOf(k) + 1) % idx.forward().size();
}

}  // namespace

void exploreMemStrings(const BidirectionalIndex& text, const BidirectionalIndex& query, std::size_t kappa,
                       const std::function<void(const MemCandidateState&)>& emit, ExplorationStats* stats) {
  std::vector<MemCandidateState> stack{{text.whole(), query.whole()}};
  SymbolCounts lt, lq, rt, rq;
  while (!stack.empty()) {
    MemCandidateState s = stack.back();
    stack.pop_back();
    if (stats) ++stats->visited;
    text.leftSymbols(s.text, lt);
    query.leftSymbols(s.query, lq);
    if (s.length() >= kappa && combinedMaximal(lt, lq)) {
      if (stats) ++stats->candidates;
      emit(s);
    }
    // both lists are sorted by symbol
    std::size_t i = 0, j = 0;
    while (i < lt.size() && j < lq.size()) {
      if (lt[i].first < lq[j].first) { ++i; continue; }
      if (lq[j].first < lt[i].first) { ++j; continue; }
      Symbol a = lt[i].first;
      ++i, ++j;
      if (!matchable(a)) continue;
      MemCandidateState child{text.extendLeft(s.text, a), query.extendLeft(s.query, a)};
      text.rightSymbols(child.text, rt);
      query.rightSymbols(child.query, rq);
      if (combinedMaximal(rt, rq)) stack.push_back(child);
    }
  }
}

void crossProduct(const BidirectionalIndex& text, const BidirectionalIndex& query, const MemCandidateState& w,
                  const CrossProductOptions& options, std::vector<StringMatch>& out, ExplorationStats* stats) {
  SymbolCounts lt, lq, rt, rq;
  std::vector<std::size_t> ranks;
  text.leftSymbols(w.text, lt);
  query.leftSymbols(w.query, lq);
  const std::size_t len = w.length();
  for (auto [a, ca] : lt) {
    if (options.text_delimiters_bound && delimiter(a)) continue;
    BiState ta = text.extendLeft(w.text, a);
    text.rightSymbols(ta, rt);
    for (auto [b, cb] : rt) {
      if (options.text_delimiters_bound && delimiter(b)) continue;
      BiState tab = text.extendRight(ta, b);
      ranks.clear();
      if (options.d_filter) {
        std::size_t calls = options.d_filter->listAtMost(tab.fwd, tab.fwd + tab.size - 1,
                                                          static_cast<std::int64_t>(len), ranks);
        if (stats) {
          stats->argmin_calls += calls;
          stats->filtered_ranks += ranks.size();
        }
      } else {
        for (std::size_t k = tab.fwd; k < tab.fwd + tab.size; ++k) ranks.push_back(k);
      }
      if (ranks.empty()) continue;
      for (auto [c, cc] : lq) {
        if (c == a && matchable(a)) continue;
        BiState qc = query.extendLeft(w.query, c);
        query.rightSymbols(qc, rq);
        for (auto [d, cd] : rq) {
          if (d == b && matchable(b)) continue;
          BiState qcd = query.extendRight(qc, d);
          for (std::size_t k : ranks) {
            std::size_t tp = successorOf(text, k);
            for (std::size_t k2 = qcd.fwd; k2 < qcd.fwd + qcd.size; ++k2) {
              out.push_back({tp, successorOf(query, k2), len});
              if (stats) ++stats->matches;
            }
          }
        }
      }
    }
  }
}

PathIndex::PathIndex(const LabeledGraph& g, PathText text)
    : text_(std::move(text)), index_(text_.text(), g.alphabet().codeCount()) {
  if (text_.kind() == PathTextKind::Paths && text_.pathLength() > 1)
    d_rmq_.emplace(buildDArray(text_, index_.forward()));
}

namespace {

std::vector<StringMatch> stringMatches(const PathIndex& pidx, const BidirectionalIndex& qidx, std::size_t kappa,
                                       bool delimiters_bound, ExplorationStats* stats) {
  std::vector<StringMatch> matches;
  CrossProductOptions opts{delimiters_bound, pidx.dFilter()};
  exploreMemStrings(
      pidx.index(), qidx, kappa,
      [&](const MemCandidateState& w) { crossProduct(pidx.index(), qidx, w, opts, matches, stats); }, stats);
  return matches;
}

MemRecord toRecord(const PathText& pt, const QuerySet& queries, const StringMatch& m, MemCategory category) {
  auto first = pt.locate(m.text_pos);
  auto last = pt.locate(m.text_pos + m.length - 1);
  const std::size_t nodes = pt.pathLength();
  if (!first || !last || first->chunk != last->chunk || first->node_in_path != 0 ||
      last->node_in_path != nodes - 1) {
    std::ostringstream msg;
    msg << "match at text position " << m.text_pos << " of length " << m.length
        << " does not span a registered path";
    throw std::logic_error(msg.str());
  }
  MemRecord r;
  auto [q, x] = queries.locate(m.query_pos);
  r.query = q;
  r.x = x;
  r.y = x + m.length - 1;
  r.location.path = pt.chunks()[first->chunk].path;
  r.location.start = first->offset + 1;
  r.location.end = last->offset + 1;
  r.category = category;
  return r;
}

}  // namespace

std::vector<MemRecord> findNodeMems(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                    const FinderOptions& options) {
  validateKappa(kappa);
  PathIndex pidx(g, buildNodesText(g));
  BidirectionalIndex qidx(queries.text(), g.alphabet().codeCount());
  std::vector<MemRecord> out;
  for (const auto& m : stringMatches(pidx, qidx, kappa, false, options.stats))
    out.push_back(toRecord(pidx.text(), queries, m, MemCategory::Node));
  canonicalize(g, out);
  return out;
}

std::vector<MemRecord> findExactLMems(const LabeledGraph& g, const PathIndex& index, const QuerySet& queries,
                                      std::size_t kappa, const FinderOptions& options) {
  validateKappa(kappa);
  BidirectionalIndex qidx(queries.text(), g.alphabet().codeCount());
  std::vector<MemRecord> out;
  for (const auto& m : stringMatches(index, qidx, kappa, true, options.stats))
    out.push_back(toRecord(index.text(), queries, m, MemCategory::ExactL));
  canonicalize(g, out);
  return out;
}

std::vector<MemRecord> findExactLMems(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                      std::size_t node_count, const FinderOptions& options) {
  validateKappa(kappa);
  if (node_count < 1) throw std::invalid_argument("path length must be at least 1");
  double estimate = estimatePathsTextSize(g, node_count);
  if (estimate > options.max_text_size) {
    std::ostringstream msg;
    msg << "text for " << node_count << "-node paths estimated at " << estimate << " symbols exceeds limit "
        << options.max_text_size;
    throw GuardError(msg.str());
  }
  PathIndex pidx(g, buildPathsText(g, node_count));
  return findExactLMems(g, pidx, queries, kappa, options);
}

std::vector<MemRecord> findAllMemsGeneric(const LabeledGraph& g, const QuerySet& queries, std::size_t kappa,
                                          std::size_t max_nodes, const FinderOptions& options) {
  std::vector<MemRecord> out;
  for (std::size_t L = 1; L <= max_nodes; ++L) {
    auto part = findExactLMems(g, queries, kappa, L, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  canonicalize(g, out);
  return out;
}

std::vector<StringMatch> findStringMems(const SymbolString& text, const SymbolString& query, std::size_t code_count,
                                        std::size_t kappa) {
  validateKappa(kappa);
  BidirectionalIndex tidx(text, code_count), qidx(query, code_count);
  std::vector<StringMatch> matches;
  CrossProductOptions opts{false, nullptr};
  exploreMemStrings(tidx, qidx, kappa,
                    [&](const MemCandidateState& w) { crossProduct(tidx, qidx, w, opts, matches); });
  return matches;
}

}  // namespace gm
