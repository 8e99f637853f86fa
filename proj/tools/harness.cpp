#include "harness.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

#include "graphmems/efg.hpp"
#include "graphmems/efg_mems.hpp"
#include "graphmems/mem_finder.hpp"

namespace gm::tools {
namespace {

constexpr char kBases[] = "ACGT";

char otherBase(std::mt19937_64& rng, char c) {
  char d;
  do d = kBases[std::uniform_int_distribution<int>(0, 3)(rng)];
  while (d == c);
  return d;
}

}  // namespace

std::vector<std::string> syntheticMsa(std::size_t t, std::size_t length, double mutation_rate, MutationModel model,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> base(0, 3);
  std::string reference(length, 'A');
  for (auto& c : reference) c = kBases[base(rng)];
  auto mutated = [&](std::string s, double rate) {
    std::bernoulli_distribution mutate(std::min(rate, 1.0));
    for (auto& c : s)
      if (mutate(rng)) c = otherBase(rng, c);
    return s;
  };
  if (model == MutationModel::Independent) {
    std::vector<std::string> rows;
    for (std::size_t r = 0; r < t; ++r) rows.push_back(mutated(reference, mutation_rate));
    return rows;
  }

  // Kingman coalescent: while k lineages remain, wait Exp(k(k-1)/2), then
  // merge two of them. Times are measured from the leaves.
  struct TreeNode {
    double time = 0;
    std::size_t left = 0, right = 0;
    bool leaf = true;
  };
  std::vector<TreeNode> tree(t);
  std::vector<std::size_t> lineages(t);
  for (std::size_t r = 0; r < t; ++r) lineages[r] = r;
  double now = 0;
  while (lineages.size() > 1) {
    const double k = static_cast<double>(lineages.size());
    now += std::exponential_distribution<double>(k * (k - 1) / 2)(rng);
    std::shuffle(lineages.begin(), lineages.end(), rng);
    TreeNode parent{now, lineages[lineages.size() - 1], lineages[lineages.size() - 2], false};
    lineages.resize(lineages.size() - 2);
    lineages.push_back(tree.size());
    tree.push_back(parent);
  }
  const double height = std::max(tree[lineages.front()].time, 1e-12);
  std::vector<std::string> seq(tree.size());
  seq[lineages.front()] = reference;
  // parents are created after their children, so walk indices downwards
  for (std::size_t v = tree.size(); v-- > 0;) {
    if (tree[v].leaf) continue;
    for (std::size_t c : {tree[v].left, tree[v].right})
      seq[c] = mutated(seq[v], mutation_rate * (tree[v].time - tree[c].time) / height);
  }
  return {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(t)};
}

std::vector<std::string> sampleQueries(const std::vector<std::string>& rows, std::size_t count, std::size_t length,
                                       std::size_t mutations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::string& row = rows[std::uniform_int_distribution<std::size_t>(0, rows.size() - 1)(rng)];
    const std::size_t len = std::min(length, row.size());
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, row.size() - len)(rng);
    std::string q = row.substr(start, len);
    for (std::size_t m = 0; m < mutations; ++m) {
      auto& c = q[std::uniform_int_distribution<std::size_t>(0, q.size() - 1)(rng)];
      c = otherBase(rng, c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<std::size_t> uniformBoundaries(std::size_t length, std::size_t width) {
  std::vector<std::size_t> b;
  for (std::size_t c = width; c < length; c += width) b.push_back(c);
  return b;
}

HarnessRow runHarness(std::size_t t, const HarnessParams& params) {
  if (t == 0 || params.length == 0) throw std::invalid_argument("harness needs rows and columns");
  auto rows = syntheticMsa(t, params.length, params.mutation_rate, params.model, params.seed + t);
  auto queries = sampleQueries(rows, params.query_count, params.query_length, params.query_mutations,
                               params.seed * 7919 + t);

  HarnessRow row;
  row.t = t;
  for (std::size_t width = params.block_width;; width += params.block_width) {
    NaiveEfg naive = buildNaiveEfg(rows, uniformBoundaries(params.length, width));
    if (!validateSemiRepeatFree(naive.graph, naive.efg).ok) {
      if (width >= params.length) throw std::runtime_error("no semi-repeat-free segmentation found");
      continue;
    }
    row.block_width = width;
    QuerySet qs(queries, naive.graph.alphabet());
    for (const auto& r : findEfgMems(naive.graph, naive.efg, qs, params.kappa)) {
      const std::size_t nodes = r.location.path.size();
      if (nodes == 1)
        ++row.efg_nodes;
      else if (nodes == 2)
        ++row.efg_edges;
      else
        ++row.efg_paths;
      ++row.efg_total;
    }

    // rows joined by the separator; matches never cross it
    const Alphabet& alphabet = naive.graph.alphabet();
    SymbolString text;
    for (const auto& r : rows) {
      if (!text.empty()) text.push_back(sym::kSep);
      auto enc = alphabet.encode(r);
      text.insert(text.end(), enc.begin(), enc.end());
    }
    for (const auto& q : queries)
      row.string_mems += findStringMems(text, alphabet.encode(q), alphabet.codeCount(), params.kappa).size();
    return row;
  }
}

void writeHarnessHeader(std::ostream& out) { out << "t,string_mems,efg_nodes,efg_edges,efg_paths,efg_total\n"; }

void writeHarnessRow(std::ostream& out, const HarnessRow& row) {
  out << row.t << ',' << row.string_mems << ',' << row.efg_nodes << ',' << row.efg_edges << ',' << row.efg_paths
      << ',' << row.efg_total << '\n';
}

}  // namespace gm::tools
