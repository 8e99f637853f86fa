#include "graphmems/oracle.hpp"

#include <algorithm>
#include <set>

namespace gm {
namespace {

struct Walker {
  const LabeledGraph& g;
  const std::vector<std::string>& queries;
  std::size_t kappa;
  std::size_t max_nodes;
  std::size_t max_walks;
  std::size_t walks = 0;
  std::vector<MemRecord> out;

  std::set<char> leftext(const std::vector<NodeIndex>& p, std::size_t i) const {
    const std::string& first = g.label(p.front());
    if (i > 1) return {first[i - 2]};
    std::set<char> s;
    for (NodeIndex v : g.in(p.front())) s.insert(g.label(v).back());
    return s;
  }

  std::set<char> rightext(const std::vector<NodeIndex>& p, std::size_t j) const {
    const std::string& last = g.label(p.back());
    if (j < last.size()) return {last[j]};
    std::set<char> s;
    for (NodeIndex w : g.out(p.back())) s.insert(g.label(w).front());
    return s;
  }

  void alignAll(const std::vector<NodeIndex>& p) {
    std::string text;
    for (NodeIndex v : p) text += g.label(v);
    const std::size_t last_start = text.size() - g.label(p.back()).size();  // 0-based
    const std::size_t first_len = g.label(p.front()).size();
    for (std::size_t q = 0; q < queries.size(); ++q) {
      const std::string& Q = queries[q];
      for (std::size_t i = 1; i <= first_len; ++i) {
        auto left = leftext(p, i);
        for (std::size_t x = 1; x <= Q.size(); ++x) {
          std::size_t lcp = 0;
          while (i - 1 + lcp < text.size() && x - 1 + lcp < Q.size() && text[i - 1 + lcp] == Q[x - 1 + lcp]) ++lcp;
          bool left_max = x == 1 || left.empty() || !left.count(Q[x - 2]);
          for (std::size_t len = std::max<std::size_t>(kappa, 1); len <= lcp; ++len) {
            std::size_t e = i - 1 + len - 1;  // 0-based end in text
            if (e < last_start) continue;
            // ending in the last node but starting past the first one is impossible here
            std::size_t j = e - last_start + 1;
            std::size_t y = x + len - 1;
            auto right = rightext(p, j);
            bool right_max = y == Q.size() || right.empty() || !right.count(Q[y]);
            if ((left_max || left.size() >= 2) && (right_max || right.size() >= 2)) {
              MemRecord r;
              r.query = q;
              r.x = x;
              r.y = y;
              r.location = {i, p, j};
              r.category = p.size() >= 4 ? MemCategory::Efg4Plus : MemCategory::ExactL;
              out.push_back(std::move(r));
            }
          }
        }
      }
    }
  }

  void dfs(std::vector<NodeIndex>& p) {
    if (++walks > max_walks) throw OracleLimitError("oracle walk cap exceeded");
    alignAll(p);
    if (p.size() == max_nodes) return;
    for (NodeIndex w : g.out(p.back())) {
      p.push_back(w);
      dfs(p);
      p.pop_back();
    }
  }
};

}  // namespace

std::vector<MemRecord> oracleAllMems(const LabeledGraph& g, const std::vector<std::string>& queries,
                                     std::size_t kappa, const OracleConfig& config) {
  if (kappa < 1) throw std::invalid_argument("kappa must be at least 1");
  std::size_t max_nodes = config.max_walk_nodes;
  if (max_nodes == 0) {
    if (!g.isAcyclic()) throw OracleLimitError("unbounded walks requested on a cyclic graph");
    max_nodes = g.nodeCount();
  }
  Walker w{g, queries, kappa, max_nodes, config.max_walks, 0, {}};
  std::vector<NodeIndex> p;
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) {
    p.assign(1, v);
    w.dfs(p);
  }
  canonicalize(g, w.out);
  return std::move(w.out);
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> oracleStringMems(const std::string& s1,
                                                                                const std::string& s2,
                                                                                std::size_t kappa) {
  const std::size_t n = s1.size(), m = s2.size();
  // next[j] = common prefix length of s1[i+1..] and s2[j..]
  std::vector<std::size_t> next(m + 1, 0), cur(m + 1, 0);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      cur[j] = s1[i] == s2[j] ? next[j + 1] + 1 : 0;
      if (cur[j] >= std::max<std::size_t>(kappa, 1) && (i == 0 || j == 0 || s1[i - 1] != s2[j - 1]))
        out.emplace_back(i + 1, j + 1, cur[j]);
    }
    std::swap(cur, next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gm
