#include <doctest.h>

#include <functional>
#include <sstream>

#include "graphmems/efg.hpp"
#include "graphmems/graph.hpp"
#include "graphmems/graph_io.hpp"
#include "support/sample_graph.hpp"
#include "support/instances.hpp"

using namespace gm;
using gm::testing::node;

namespace {

GraphSubstring sub(const LabeledGraph& g, std::size_t i, std::vector<std::string> ids, std::size_t j) {
  GraphSubstring s{i, {}, j};
  for (const auto& id : ids) s.path.push_back(node(g, id));
  return s;
}

// Occurrences of l(v) found by spelling every walk from every node.
bool bruteSemiRepeatFree(const LabeledGraph& g, const EfgStructure& efg) {
  for (NodeIndex v = 0; v < g.nodeCount(); ++v) {
    const std::string& pat = g.label(v);
    for (NodeIndex w = 0; w < g.nodeCount(); ++w) {
      std::function<bool(NodeIndex, std::string)> reads = [&](NodeIndex x, std::string acc) {
        acc += g.label(x);
        for (std::size_t o = 0; o < g.labelLength(w); ++o)
          if (acc.size() >= o + pat.size() && acc.compare(o, pat.size(), pat) == 0 &&
              (o != 0 || efg.block_of[w] != efg.block_of[v]))
            return true;
        if (acc.size() >= g.labelLength(w) - 1 + pat.size()) return false;
        for (NodeIndex y : g.out(x))
          if (reads(y, acc)) return true;
        return false;
      };
      if (reads(w, "")) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("graph construction validates its invariants") {
  auto g = testing::sampleGraph();
  CHECK(g.nodeCount() == 7);
  CHECK(g.edgeCount() == 7);
  CHECK(g.totalLabelLength() == 37);
  CHECK(g.in(node(g, "v4")).size() == 3);
  CHECK(g.out(node(g, "v4")).size() == 2);
  CHECK(g.isAcyclic());

  using Edges = std::vector<std::pair<std::string, std::string>>;
  CHECK_THROWS_WITH_AS(LabeledGraph({{"a", ""}}, Edges{}), doctest::Contains("empty label"), GraphError);
  CHECK_THROWS_AS(LabeledGraph({{"a", "A"}, {"a", "C"}}, Edges{}), GraphError);
  CHECK_THROWS_AS(LabeledGraph({{"a", "A"}}, Edges{{"a", "b"}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph({{"a", "A"}, {"b", "C"}}, Edges{{"a", "b"}, {"a", "b"}}), GraphError);
  CHECK_THROWS_AS(LabeledGraph({{"a", "A#"}}, Edges{}), GraphError);
  CHECK_THROWS_AS(LabeledGraph({{"a", "A C"}}, Edges{}), GraphError);
}

TEST_CASE("extension sets follow their definitions on the sample graph") {
  auto g = testing::sampleGraph();
  CHECK(leftExtension(g, sub(g, 1, {"v4"}, 6)) == std::set<char>{'A', 'C'});
  CHECK(rightExtension(g, sub(g, 1, {"v4"}, 6)) == std::set<char>{'G'});
  CHECK(spelled(g, sub(g, 3, {"v5", "v7"}, 2)) == "GGAACC");
  CHECK(leftExtension(g, sub(g, 3, {"v5", "v7"}, 2)) == std::set<char>{'T'});
  CHECK(rightExtension(g, sub(g, 3, {"v5", "v7"}, 2)) == std::set<char>{'A'});
  CHECK(leftExtension(g, sub(g, 1, {"v1"}, 2)).empty());
  CHECK(rightExtension(g, sub(g, 1, {"v7"}, 2)) == std::set<char>{'A'});
  CHECK(rightExtension(g, sub(g, 1, {"v7"}, 4)).empty());
}

TEST_CASE("substring validity and spelled length") {
  auto g = testing::sampleGraph();
  CHECK(isValidSubstring(g, sub(g, 5, {"v2", "v4"}, 6)));
  CHECK(spelledLength(g, sub(g, 5, {"v2", "v4"}, 6)) == 7);
  CHECK(spelled(g, sub(g, 5, {"v2", "v4"}, 6)) == "CACCGTA");
  CHECK_FALSE(isValidSubstring(g, sub(g, 1, {"v1", "v2"}, 1)));
  CHECK_FALSE(isValidSubstring(g, sub(g, 4, {"v4"}, 3)));
  CHECK_FALSE(isValidSubstring(g, sub(g, 1, {"v4"}, 7)));
  CHECK_FALSE(isValidSubstring(g, sub(g, 0, {"v4"}, 2)));
}

TEST_CASE("extension symbols are the unique neighbor symbol or #") {
  auto g = testing::sampleGraph();
  CHECK(g.leftExtensionSymbol(node(g, "v4")) == sym::kHash);
  CHECK(g.rightExtensionSymbol(node(g, "v4")) == g.alphabet().encode('G'));
  CHECK(g.leftExtensionSymbol(node(g, "v1")) == sym::kHash);
  CHECK(g.leftExtensionSymbol(node(g, "v7")) == sym::kHash);
  CHECK(g.leftExtensionSymbol(node(g, "v5")) == g.alphabet().encode('A'));
}

TEST_CASE("GFA subset reading") {
  SUBCASE("minimal file") {
    std::istringstream in("S\tv\tA\nS\tw\tB\nL\tv\t+\tw\t+\t0M\n");
    auto doc = readGfa(in);
    CHECK(doc.graph.nodeCount() == 2);
    CHECK(doc.graph.edgeCount() == 1);
    CHECK_FALSE(doc.efg.has_value());
  }
  SUBCASE("sample graph with block tags") {
    auto doc = readGfaFile(std::string(GRAPHMEMS_TEST_DATA) + "/sample.gfa");
    CHECK(doc.graph.nodeCount() == 7);
    CHECK(doc.graph.in(node(doc.graph, "v4")).size() == 3);
    CHECK(doc.graph.out(node(doc.graph, "v4")).size() == 2);
    REQUIRE(doc.efg.has_value());
    CHECK(doc.efg->blocks.size() == 4);
    CHECK(doc.efg->height() == 3);
  }
  SUBCASE("errors carry line numbers") {
    std::istringstream empty_label("S\tv\tA\nS\tw\t\n");
    CHECK_THROWS_WITH_AS(readGfa(empty_label), doctest::Contains("line 2"), GraphError);
    std::istringstream dangling("S\tv\tA\nL\tv\t+\tx\t+\t0M\n");
    CHECK_THROWS_WITH_AS(readGfa(dangling), doctest::Contains("line 2"), GraphError);
    std::istringstream duplicate("S\tv\tA\nS\tv\tC\n");
    CHECK_THROWS_AS(readGfa(duplicate), GraphError);
    std::istringstream overlap("S\tv\tA\nS\tw\tC\nL\tv\t+\tw\t+\t3M\n");
    CHECK_THROWS_WITH_AS(readGfa(overlap), doctest::Contains("line 3"), GraphError);
  }
  SUBCASE("write then read round-trips") {
    auto g = testing::sampleGraph();
    auto efg = testing::sampleBlocks(g);
    std::stringstream ss;
    writeGfa(ss, g, &efg);
    auto doc = readGfa(ss);
    CHECK(doc.graph.nodeCount() == g.nodeCount());
    CHECK(doc.graph.edges() == g.edges());
    REQUIRE(doc.efg.has_value());
    CHECK(doc.efg->blocks == efg.blocks);
  }
  SUBCASE("blocks sidecar") {
    auto g = testing::sampleGraph();
    std::istringstream in("v1 v2 v3\nv4\nv5 v6\nv7\n");
    auto efg = readBlocks(in, g);
    CHECK(efg.blocks.size() == 4);
    std::istringstream bad("v1 v2 v3 v4\nv5 v6\nv7\n");
    CHECK_THROWS_AS(readBlocks(bad, g), GraphError);
  }
}

TEST_CASE("FASTA reading joins sequence lines") {
  std::istringstream in(">a desc\nAC\nGT\n\n>b\nTT\n");
  auto recs = readFasta(in);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].name == "a");
  CHECK(recs[0].sequence == "ACGT");
  CHECK(recs[1].sequence == "TT");
}

TEST_CASE("naive founder graphs") {
  SUBCASE("identical rows") {
    auto e = buildNaiveEfg({"ACGT", "ACGT"}, {2});
    CHECK(e.efg.blocks.size() == 2);
    CHECK(e.graph.nodeCount() == 2);
    CHECK(e.graph.edgeCount() == 1);
  }
  SUBCASE("one block, two variants") {
    auto e = buildNaiveEfg({"AC", "AG"}, {});
    CHECK(e.efg.blocks.size() == 1);
    CHECK(e.graph.nodeCount() == 2);
    CHECK(e.graph.edgeCount() == 0);
  }
  SUBCASE("gaps are stripped and all-gap slices rejected") {
    auto e = buildNaiveEfg({"A-CG", "AT-G"}, {2});
    CHECK(e.graph.label(node(e.graph, "b1.1")) == "A");
    CHECK(e.graph.label(node(e.graph, "b1.2")) == "AT");
    CHECK_THROWS_AS(buildNaiveEfg({"A--G", "ATCG"}, {1, 3}), GraphError);
    CHECK_THROWS_AS(buildNaiveEfg({"ACGT"}, {4}), GraphError);
  }
  SUBCASE("random alignments always give block graphs") {
    gm::testing::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      std::vector<std::string> rows;
      std::string base = gm::testing::randomString(rng, 60, "ACGT");
      for (int r = 0; r < 5; ++r) {
        std::string row = base;
        for (auto& c : row)
          if (gm::testing::uniform(rng, 0, 9) == 0) c = "ACGT"[gm::testing::uniform(rng, 0, 3)];
        rows.push_back(row);
      }
      auto e = buildNaiveEfg(rows, {15, 30, 45});
      CHECK_NOTHROW(EfgStructure::fromBlocks(e.graph, e.efg.blocks));
      CHECK(validateSemiRepeatFree(e.graph, e.efg).ok == bruteSemiRepeatFree(e.graph, e.efg));
    }
  }
}

TEST_CASE("semi-repeat-free validation") {
  auto g = testing::sampleGraph();
  CHECK(validateSemiRepeatFree(g, testing::sampleBlocks(g)).ok);

  using Edges = std::vector<std::pair<std::string, std::string>>;
  LabeledGraph bad({{"x", "A"}, {"y", "AB"}, {"z", "CA"}}, Edges{{"x", "y"}});
  auto efg = EfgStructure::fromBlocks(bad, {{node(bad, "x"), node(bad, "z")}, {node(bad, "y")}});
  auto report = validateSemiRepeatFree(bad, efg);
  CHECK_FALSE(report.ok);
  REQUIRE_FALSE(report.violations.empty());
  CHECK(report.violations.front().node == node(bad, "x"));

  LabeledGraph single({{"s", "ACGT"}}, Edges{});
  CHECK(validateSemiRepeatFree(single, EfgStructure::fromBlocks(single, {{0}})).ok);
}

TEST_CASE("semi-repeat-free check agrees with brute force on random block graphs") {
  gm::testing::Rng rng(29);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t k = gm::testing::uniform(rng, 1, 4);
    std::vector<NodeSpec> nodes;
    std::vector<std::vector<NodeIndex>> blocks(k);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t h = gm::testing::uniform(rng, 1, 3); h-- > 0;) {
        blocks[b].push_back(static_cast<NodeIndex>(nodes.size()));
        nodes.push_back({"n" + std::to_string(nodes.size()),
                         gm::testing::randomString(rng, gm::testing::uniform(rng, 1, 4), "AC")});
      }
    std::vector<std::pair<NodeIndex, NodeIndex>> edges;
    for (std::size_t b = 0; b + 1 < k; ++b)
      for (NodeIndex u : blocks[b])
        for (NodeIndex v : blocks[b + 1])
          if (gm::testing::uniform(rng, 0, 1)) edges.emplace_back(u, v);
    LabeledGraph g(std::move(nodes), edges);
    auto efg = EfgStructure::fromBlocks(g, blocks);
    agree += validateSemiRepeatFree(g, efg).ok == bruteSemiRepeatFree(g, efg);
  }
  CHECK(agree == 200);
}
