#include <doctest.h>

#include <algorithm>

#include "graphmems/efg_index.hpp"
#include "graphmems/efg_mems.hpp"
#include "graphmems/oracle.hpp"
#include "support/sample_graph.hpp"
#include "support/instances.hpp"

using namespace gm;
using gm::testing::node;

namespace {

bool sameSet(const LabeledGraph& g, std::vector<MemRecord> a, std::vector<MemRecord> b) {
  canonicalize(g, a);
  canonicalize(g, b);
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](auto& l, auto& r) { return l.sameMatch(r); });
}

const std::string kQ2 = "CTCACCGTAGTGGAACCAT";

}  // namespace

TEST_CASE("index of the sample graph") {
  auto g = testing::sampleGraph();
  auto idx = buildEfgIndex(g, testing::sampleBlocks(g));
  CHECK(idx.markCount() == 7);
  CHECK(idx.text().chunks().size() == 8);
  for (auto [u, v] : g.edges()) {
    auto locus = idx.markedLocus(u, v);
    REQUIRE(locus.has_value());
    CHECK(idx.tree().spell(*locus) == g.alphabet().encode(g.label(u) + g.label(v)));
  }
  CHECK_FALSE(idx.markedLocus(node(g, "v1"), node(g, "v5")).has_value());

  std::vector<std::pair<NodeIndex, std::size_t>> common;
  auto q = g.alphabet().encode("GGCTC");
  idx.trie(node(g, "v4")).commonSuffixes(q, q.size(), common);
  REQUIRE(common.size() == 3);
  for (auto [u, len] : common) CHECK(len == (u == node(g, "v2") ? 4u : 0u));
}

TEST_CASE("index construction rejects repeats") {
  using Edges = std::vector<std::pair<std::string, std::string>>;
  LabeledGraph bad({{"x", "A"}, {"y", "AB"}, {"z", "CA"}}, Edges{{"x", "y"}});
  auto efg = EfgStructure::fromBlocks(bad, {{node(bad, "x"), node(bad, "z")}, {node(bad, "y")}});
  CHECK_THROWS_WITH_AS(buildEfgIndex(bad, efg), doctest::Contains("semi-repeat-free"), GraphError);
}

TEST_CASE("edge occurrences and walk cases on a four-node match") {
  auto g = testing::sampleGraph();
  auto idx = buildEfgIndex(g, testing::sampleBlocks(g));
  auto q = g.alphabet().encode(kQ2);
  EfgScanStats stats;
  auto occ = findEdgeOccurrences(idx, q, &stats);
  std::vector<EdgeOccurrence> expect{{4, node(g, "v4"), node(g, "v5")}, {10, node(g, "v5"), node(g, "v7")}};
  CHECK(occ == expect);
  CHECK(stats.consumed <= 2 * q.size());

  auto w = walkMaximalPrefix(idx, q, 1);
  // CTC ACCGTA GTGGAA reaches the end of the chunk v2 v4 v5.
  CHECK(w.y == 15);
  CHECK(w.case_tag == WalkCase::Decomposable);
  // the blocking comparison counts too
  CHECK(w.consumed == 16);
  auto w2 = walkMaximalPrefix(idx, q, 4);
  CHECK(w2.case_tag != WalkCase::NoDelimiter);

  auto encs = buildEncodings(idx, q, 0, occ);
  REQUIRE(encs.size() == 1);
  CHECK(encs[0].spine == std::vector<NodeIndex>{node(g, "v4"), node(g, "v5"), node(g, "v7")});
  auto recs = expandEncoding(encs[0], g, 5);
  MemRecord four{0, 1, 19, GraphSubstring{3, {node(g, "v2"), node(g, "v4"), node(g, "v5"), node(g, "v7")}, 4},
                 MemCategory::Efg4Plus};
  CHECK(std::any_of(recs.begin(), recs.end(), [&](auto& r) { return r.sameMatch(four); }));
}

TEST_CASE("left and right entries") {
  auto g = testing::sampleGraph();
  auto idx = buildEfgIndex(g, testing::sampleBlocks(g));
  auto q = g.alphabet().encode(kQ2);
  auto left = collectLeftEntries(idx, q, node(g, "v4"), 4);
  REQUIRE(left.size() == 1);
  CHECK(left[0] == LeftEntry{node(g, "v2"), 3, 3});
  auto right = collectRightEntries(idx, q, node(g, "v4"), node(g, "v5"), 15);
  // CCAT continues into v7 through the end of the query.
  CHECK(std::find(right.begin(), right.end(), RightEntry{node(g, "v7"), 4}) != right.end());
}

TEST_CASE("all MEMs on the sample graph match the oracle") {
  auto g = testing::sampleGraph();
  std::vector<std::string> queries{"CACCGTAT", kQ2, "AGCAAACCGTAGTGGATCC"};
  for (std::size_t kappa : {1, 5}) {
    auto got = findEfgMems(g, testing::sampleBlocks(g), QuerySet(queries, g.alphabet()), kappa);
    auto expect = oracleAllMems(g, queries, kappa, OracleConfig{0});
    CHECK(sameSet(g, got, expect));
    CHECK(std::any_of(got.begin(), got.end(), [](auto& r) { return r.category == MemCategory::Efg4Plus; }));
  }
}

TEST_CASE("EFG engine agrees with the unbounded oracle on random graphs") {
  testing::Rng rng(71);
  std::size_t four_plus = 0;
  for (int t = 0; t < 60; ++t) {
    auto e = testing::randomEfg(rng, {5, 4, 6, "ACGT"});
    std::vector<std::string> queries{testing::randomQuery(rng, e.graph, 150, "ACGT"),
                                     testing::randomQuery(rng, e.graph, 60, "ACGT")};
    std::size_t kappa = t % 2 ? 1 : 8;
    auto idx = buildEfgIndex(e.graph, e.efg);
    EfgScanStats stats;
    auto got = findEfgMems(idx, QuerySet(queries, e.graph.alphabet()), kappa, {}, &stats);
    auto expect = oracleAllMems(e.graph, queries, kappa, OracleConfig{0});
    REQUIRE(sameSet(e.graph, got, expect));
    REQUIRE(stats.consumed <= 2 * (queries[0].size() + queries[1].size()));
    for (const auto& r : got) {
      REQUIRE(satisfiesMemDefinition(e.graph, queries[r.query], r, kappa));
      REQUIRE((r.category == MemCategory::Efg4Plus) == (r.location.path.size() >= 4));
      four_plus += r.location.path.size() >= 4;
    }
  }
  CHECK(four_plus > 0);
}

TEST_CASE("a label that prefixes its sibling") {
  using Edges = std::vector<std::pair<std::string, std::string>>;
  LabeledGraph g({{"a", "GT"}, {"b", "C"}, {"c", "CA"}, {"d", "TT"}, {"e", "AG"}},
                 Edges{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
  auto efg = EfgStructure::fromBlocks(g, {{0}, {1, 2}, {3}, {4}});
  REQUIRE(validateSemiRepeatFree(g, efg).ok);
  std::vector<std::string> queries{"GTCTTAG", "GTCATTAG"};
  auto got = findEfgMems(g, efg, QuerySet(queries, g.alphabet()), 1);
  CHECK(sameSet(g, got, oracleAllMems(g, queries, 1, OracleConfig{0})));
  MemRecord through_b{0, 1, 7, GraphSubstring{1, {0, 1, 3, 4}, 2}, MemCategory::Efg4Plus};
  MemRecord through_c{1, 1, 8, GraphSubstring{1, {0, 2, 3, 4}, 2}, MemCategory::Efg4Plus};
  CHECK(std::any_of(got.begin(), got.end(), [&](auto& r) { return r.sameMatch(through_b); }));
  CHECK(std::any_of(got.begin(), got.end(), [&](auto& r) { return r.sameMatch(through_c); }));
}
